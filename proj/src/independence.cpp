#include "frobq/independence.hpp"

#include "frobq/errors.hpp"
#include "frobq/hasse.hpp"

namespace frobq {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Reduces M in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<RatFunc>>& M) {
  std::vector<std::size_t> pivots;
  if (M.empty()) return pivots;
  const std::size_t rows = M.size(), cols = M[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && M[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(M[r], M[piv]);
    RatFunc inv = M[r][c].inv();
    for (std::size_t k = c; k < cols; ++k) M[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c].is_zero()) continue;
      RatFunc f = M[i][c];
      for (std::size_t k = c; k < cols; ++k) M[i][k] -= f * M[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RatFunc determinant(std::vector<std::vector<RatFunc>> M, const FieldPtr& F) {
  const std::size_t n = M.size();
  RatFunc det = RatFunc::constant(F, 1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && M[piv][c].is_zero()) ++piv;
    if (piv == n) return RatFunc(F);
    if (piv != c) {
      std::swap(M[c], M[piv]);
      det = -det;
    }
    det *= M[c][c];
    RatFunc inv = M[c][c].inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (M[i][c].is_zero()) continue;
      RatFunc f = M[i][c] * inv;
      for (std::size_t k = c; k < n; ++k) M[i][k] -= f * M[c][k];
    }
  }
  return det;
}

const FieldPtr& family_field(const std::vector<RatFunc>& b) {
  if (b.empty()) throw DomainError("empty family");
  return b[0].field();
}

}  // namespace

RatFunc wronskian(const std::vector<RatFunc>& b, const EpsilonTuple& eps) {
  if (eps.size() != b.size()) throw DomainError("epsilon tuple and family differ in length");
  if (b.empty()) return RatFunc();
  const FieldPtr& F = family_field(b);
  std::vector<std::vector<RatFunc>> M(b.size(), std::vector<RatFunc>(b.size()));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) M[i][j] = hasse_derivative(b[j], eps[i]);
  return determinant(std::move(M), F);
}

std::optional<EpsilonTuple> wronskian_certificate(const std::vector<RatFunc>& b, unsigned s) {
  const std::size_t n = b.size();
  if (n == 0) return EpsilonTuple{};
  const FieldPtr& F = family_field(b);
  const std::uint64_t q = ipow(F->p(), s);
  if (n > q) throw DomainError("family larger than p^s is always dependent");
  std::vector<std::vector<RatFunc>> D(q, std::vector<RatFunc>(n));
  for (std::size_t e = 0; e < q; ++e)
    for (std::size_t j = 0; j < n; ++j) D[e][j] = hasse_derivative(b[j], static_cast<unsigned>(e));
  // Lexicographic walk over 0 = eps_1 < eps_2 < ... < eps_n < q.
  EpsilonTuple eps(n);
  for (std::size_t i = 0; i < n; ++i) eps[i] = static_cast<unsigned>(i);
  while (true) {
    std::vector<std::vector<RatFunc>> M(n);
    for (std::size_t i = 0; i < n; ++i) M[i] = D[eps[i]];
    if (!determinant(std::move(M), F).is_zero()) return eps;
    std::size_t i = n;
    while (i > 1 && eps[i - 1] == q - n + i - 1) --i;
    if (i <= 1) return std::nullopt;
    ++eps[i - 1];
    for (std::size_t k = i; k < n; ++k) eps[k] = eps[k - 1] + 1;
  }
}

std::vector<std::vector<RatFunc>> coordinate_matrix(const std::vector<RatFunc>& b, unsigned s) {
  if (b.empty()) return {};
  const FieldPtr& F = family_field(b);
  const std::uint64_t q = ipow(F->p(), s);
  std::vector<std::vector<RatFunc>> M(q, std::vector<RatFunc>(b.size(), RatFunc(F)));
  for (std::size_t j = 0; j < b.size(); ++j) {
    auto parts = q_power_decomposition(b[j], s);
    // g^q for g = sum a_k z^k is sum a_k^q w^k.
    for (std::size_t r = 0; r < q; ++r) M[r][j] = parts[r].map_coeffs_frob(s);
  }
  return M;
}

std::size_t rank_oracle(const std::vector<RatFunc>& b, unsigned s) {
  auto M = coordinate_matrix(b, s);
  return rref(M).size();
}

std::optional<std::vector<Poly>> dependency_oracle(const std::vector<RatFunc>& b, unsigned s) {
  if (b.empty()) return std::nullopt;
  const FieldPtr& F = family_field(b);
  auto M = coordinate_matrix(b, s);
  auto piv = rref(M);
  const std::size_t n = b.size();
  if (piv.size() == n) return std::nullopt;
  std::size_t free_col = 0;
  for (std::size_t k = 0; k < piv.size() && piv[k] == free_col; ++k) ++free_col;
  std::vector<RatFunc> lam(n, RatFunc(F));
  lam[free_col] = RatFunc::constant(F, 1);
  for (std::size_t r = 0; r < piv.size(); ++r) lam[piv[r]] = -M[r][free_col];
  Poly den = Poly::constant(F, 1);
  for (auto& x : lam) den = den * x.den().exact_div(gcd(den, x.den()));
  std::vector<Poly> out;
  for (auto& x : lam) out.push_back((x * RatFunc(den)).num());
  return out;
}

Poly lift_to(const Poly& f, const FieldPtr& F) {
  if (!f.over_prime_field()) throw DomainError("lift needs prime-field coefficients");
  if (f.field() && f.field()->p() != F->p()) throw DomainError("lift between different characteristics");
  return Poly(F, f.coeffs());
}

RatFunc lift_to(const RatFunc& x, const FieldPtr& F) { return RatFunc(lift_to(x.num(), F), lift_to(x.den(), F)); }

bool independence_lift_check(const std::vector<RatFunc>& b, unsigned s, const FieldPtr& ext) {
  std::vector<RatFunc> lifted;
  for (auto& x : b) lifted.push_back(lift_to(x, ext));
  std::size_t r0 = rank_oracle(b, s), r1 = rank_oracle(lifted, s);
  if (r0 != r1) throw InvariantError("rank changed under field extension");
  return r0 == b.size();
}

}  // namespace frobq
