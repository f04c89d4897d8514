#pragma once

#include <set>
#include <string>

#include "frobq/additive.hpp"

namespace frobq {

// Hands out variable names not used before.
class NameSupply {
 public:
  NameSupply() = default;
  explicit NameSupply(const AdditivePoly& f) { reserve(f); }
  void reserve(const std::string& name) { used_.insert(name); }
  void reserve(const AdditivePoly& f);
  std::string fresh(const std::string& prefix);

 private:
  std::set<std::string> used_;
};

// f o xi = fTilde + G, with fTilde over R-variables and G over F-variables.
struct NormalizationResult {
  ProperTransformation xi;
  AdditivePoly fTilde;
  AdditivePoly G;
};

// True when B = {b_i z^{j p^{s_i}} : 0 <= j < p^{s - s_i}} is independent in V_s(F_p).
bool is_p_free(const AdditivePoly& f);

// Each result checks f o xi = fTilde + G symbolically before returning and
// throws InvariantError otherwise. Inputs must be R-sorted.
NormalizationResult eliminate_dependence(const AdditivePoly& f, const Localization& L, NameSupply& names);
NormalizationResult equalize_degrees(const AdditivePoly& f, const Localization& L, NameSupply& names);
NormalizationResult strongly_normalize(const AdditivePoly& f, const Localization& L, NameSupply& names);
// h with fresh variables such that f + h is p-basic and strongly normalized.
AdditivePoly p_basic_completion(const AdditivePoly& f, NameSupply& names);

// All three stages. F-sorted variables of f are carried into G unchanged.
NormalizationResult normalize_full(const AdditivePoly& f, const Localization& L);
NormalizationResult normalize_full(const AdditivePoly& f, const Localization& L, NameSupply& names);

}  // namespace frobq
