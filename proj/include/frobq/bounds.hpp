#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobq/additive.hpp"
#include "frobq/independence.hpp"

namespace frobq {

// Delta z^i = sum_j e[i][j]^q b_j for 0 <= i < q, b_j the leading
// coefficients of f in the order of vars.
struct ChangeOfBasis {
  unsigned s = 0;
  std::vector<Var> vars;
  std::vector<Poly> b;
  Poly Delta;
  std::vector<std::vector<Poly>> e;
};

// Throws DomainError unless f is p-basic; checks the identity before returning.
ChangeOfBasis change_of_basis(const AdditivePoly& f);

struct SplittingExponents {
  unsigned m = 1;
  unsigned m0 = 0;
};

// m = lcm of the degrees of the distinct irreducible factors, m0 = least e
// with p^e >= every multiplicity. Delta = 1 gives (1, 0). Checks that Delta
// divides z^{p^{m+m0}} - z^{p^{m0}}.
SplittingExponents splitting_exponents(const Poly& Delta);

struct OrdBoundReport {
  ChangeOfBasis cob;
  unsigned m = 1;
  unsigned m0 = 0;
  long long Omega = 0;  // degree bound for the reduced polynomial part
  long long Eord = 0;   // max(ceil((p^m0 + q)/(p - 1)), Omega)
  long long C = 0;      // pole-order bound for denominators of degree 0
  RatFunc W;            // Wronskian of the leading coefficients
  EpsilonTuple eps;
};

OrdBoundReport e_ord(const AdditivePoly& f);

enum class SplitMode {
  Crt,        // a/Q^l = a(1-H)/Q^l + aH/Q^l with H = 1 mod (Delta without Q), Q | H
  Frobenius,  // via Q^{p^{m+m0}} - Q^{p^{m0}}; only for small degrees
};

struct ProgressStep {
  std::string place;
  long long before = 0;  // pole order at the place before the step
  long long after = 0;
};

struct ReductionWitness {
  RatFunc uPrime;
  Assignment xTilde;  // f(xTilde) = uPrime - u
  std::vector<ProgressStep> progress;
  bool cleanupAtInfinity = false;
};

ReductionWitness reduce_mod_image(const AdditivePoly& f, const RatFunc& u, const Localization& L,
                                  SplitMode mode = SplitMode::Crt);
ReductionWitness reduce_mod_image(const AdditivePoly& f, const RatFunc& u, const Localization& L,
                                  const OrdBoundReport& report, SplitMode mode = SplitMode::Crt);

// Violations of the witness invariants (empty when all hold): exactness,
// pole containment including infinity, pole orders at most Eord, and strict
// progress of every recorded step.
std::vector<std::string> check_reduction(const AdditivePoly& f, const RatFunc& u, const ReductionWitness& w,
                                         long long Eord);

struct ImageDecomposition {
  Assignment x;               // u = f(x) + (1/e^N) sum alpha_i z^i
  std::vector<Elem> alpha;    // i = 0 .. N (1 + deg e)
  unsigned N = 0;
  Poly e;
};

ImageDecomposition image_decomposition(const AdditivePoly& f, const RatFunc& u, const Localization& L);
RatFunc recombine(const AdditivePoly& f, const ImageDecomposition& d);

// Pole-order bound from leading coefficients b (independent over V_s(F)).
long long pole_order_bound(const std::vector<RatFunc>& b, unsigned s, long long denDeg);
long long pole_order_bound(const AdditivePoly& f, long long denDeg);

struct HeightBoundReport {
  long long C_finite = 0;  // bound at every finite place
  long long C_inf = 0;     // bound at infinity after z -> 1/(z - eta)
  Elem eta = 0;
  unsigned M = 0;
  long long h = 0;
};

HeightBoundReport height_bound(const AdditivePoly& f, long long ell, const Localization& L);

struct PreimageCaps {
  std::uint64_t maxCandidates = 1u << 20;  // per coordinate
  std::uint64_t maxTuples = 1u << 24;
};

// All x in R^n with f(x) = y, in canonical order. Throws ResourceError when
// the search space exceeds the caps.
std::vector<std::vector<RatFunc>> inverse_image(const AdditivePoly& f, const RatFunc& y, const Localization& L,
                                                const PreimageCaps& caps = {});

}  // namespace frobq
