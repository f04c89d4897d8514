#pragma once

#include <optional>
#include <vector>

#include "frobq/ratfun.hpp"

namespace frobq {

// 0 = eps_1 < eps_2 < ... < eps_n < p^s.
using EpsilonTuple = std::vector<unsigned>;

// det(D_{eps_i}(b_j)).
RatFunc wronskian(const std::vector<RatFunc>& b, const EpsilonTuple& eps);

// Lexicographically least tuple with nonzero Wronskian, or nullopt when b is
// dependent over F(z^{p^s}). Throws DomainError when |b| > p^s.
std::optional<EpsilonTuple> wronskian_certificate(const std::vector<RatFunc>& b, unsigned s);

// Coordinates of b_j in the basis z^0..z^{q-1} of F(z) over F(z^q), written
// as rational functions of w = z^q (stored as RatFunc in the variable z).
std::vector<std::vector<RatFunc>> coordinate_matrix(const std::vector<RatFunc>& b, unsigned s);

// Rank of the coordinate matrix over F(w), by Gaussian elimination.
std::size_t rank_oracle(const std::vector<RatFunc>& b, unsigned s);

// A nonzero polynomial kernel vector lambda(w) with sum_j lambda_j(z^q) b_j = 0,
// or nullopt when b is independent. Components are polynomials in w.
std::optional<std::vector<Poly>> dependency_oracle(const std::vector<RatFunc>& b, unsigned s);

// Copies a function with prime-field coefficients into another field of the
// same characteristic.
Poly lift_to(const Poly& f, const FieldPtr& F);
RatFunc lift_to(const RatFunc& x, const FieldPtr& F);

// Compares the rank over the prime field of b with its rank over ext. Returns
// true iff independent; throws InvariantError when the ranks differ.
bool independence_lift_check(const std::vector<RatFunc>& b, unsigned s, const FieldPtr& ext);

}  // namespace frobq
