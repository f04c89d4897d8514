#pragma once

#include "internal/oracles.hpp"

namespace testutil {

using namespace frobq;
using namespace frobq::oracle;

}  // namespace testutil
