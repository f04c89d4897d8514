#pragma once

#include <optional>

#include "frobq/ratfun.hpp"

namespace frobq {

// D_eps on F[z] by the monomial rule D_eps(z^j) = C(j, eps) z^{j-eps}.
Poly hasse_poly(const Poly& f, unsigned eps);

// D_eps(1/f) from the composition-sum quotient formula.
RatFunc hasse_inverse(const Poly& f, unsigned eps);

// D_eps on F(z): Leibniz on num * (1/den), with hasse_inverse for 1/den.
RatFunc hasse_derivative(const RatFunc& x, unsigned eps);

// D_eps(x^{p^m}) computed directly and through the p-th power rule.
// Returns the common value; throws InvariantError when they differ.
RatFunc check_p3(const RatFunc& x, unsigned m, unsigned eps);

// D_eps(g) through g = sum g_i^q z^i, valid for 1 <= eps < q = p^s.
RatFunc derivative_in_basis(const RatFunc& g, unsigned s, unsigned eps);

struct OrdInequalitySides {
  long long lhs;  // ord of D_eps(u) at the place
  long long rhs;  // ord of u at the place, minus eps
};

// Both sides of ord(D_eps u) >= ord(u) - eps. At a finite place Q must have
// degree 1. At infinity the check runs at eta after z -> 1/(z - eta).
// Empty when the derivative checked is zero (the inequality is vacuous).
std::optional<OrdInequalitySides> ord_inequality_sides(const RatFunc& u, unsigned eps, const Place& v, Elem eta = 0);

}  // namespace frobq
