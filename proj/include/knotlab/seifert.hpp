#pragma once

// Seifert-matrix models of odd-dimensional knots.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "knotlab/laurent.hpp"
#include "knotlab/matrix.hpp"
#include "knotlab/polymatrix.hpp"

namespace knotlab {

/// Raised when a Seifert model fails det(A - εAᵀ) = ±1, or when two models
/// with different hermitian signs are combined.
class InvalidKnotError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integer Seifert matrix of K ⊂ S^{2m+1} together with ε = (-1)^{m+1}.
struct SeifertKnot {
  IntMatrix a;
  int sign = 1;
  std::string name;

  std::size_t size() const { return a.rows(); }
  friend bool operator==(const SeifertKnot&, const SeifertKnot&) = default;
};

inline bool validate(const SeifertKnot& k) {
  if (!k.a.is_square() || (k.sign != 1 && k.sign != -1)) return false;
  const IntMatrix form = k.a - Integer(k.sign) * k.a.transpose();
  const Integer d = determinant(form);
  return d == 1 || d == -1;
}

namespace detail {

inline void require_valid(const SeifertKnot& k, const char* what) {
  if (!validate(k))
    throw InvalidKnotError(std::string(what) + ": Seifert model '" + k.name + "' violates det(A - eps*A^T) = ±1");
}

}  // namespace detail

/// −K as the model −Aᵀ with the same ε.
inline SeifertKnot mirror_inverse(const SeifertKnot& k) {
  detail::require_valid(k, "mirror_inverse");
  return {-k.a.transpose(), k.sign, k.name.empty() ? std::string() : "-" + k.name};
}

/// Block-diagonal model of k1 # k2.
inline SeifertKnot connected_sum(const SeifertKnot& k1, const SeifertKnot& k2) {
  if (k1.sign != k2.sign) throw InvalidKnotError("connected_sum: hermitian signs differ");
  detail::require_valid(k1, "connected_sum");
  detail::require_valid(k2, "connected_sum");
  std::string name = k1.name.empty() || k2.name.empty() ? k1.name + k2.name : k1.name + "#" + k2.name;
  return {block_diag(k1.a, k2.a), k1.sign, std::move(name)};
}

/// tA − εAᵀ; its cokernel (column relations) is the Alexander module.
inline PolyMatrix presentation_matrix(const SeifertKnot& k) {
  detail::require_valid(k, "presentation_matrix");
  const std::size_t n = k.size();
  PolyMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = LaurentPolynomial::monomial(Rational(k.a(i, j)), 1) -
                  LaurentPolynomial(Rational(k.sign * k.a(j, i)));
  return out;
}

inline LaurentPolynomial alexander_polynomial(const SeifertKnot& k) {
  return normalize_alexander(determinant(presentation_matrix(k)));
}

struct KnotCatalogEntry {
  SeifertKnot seifert;
  std::optional<LaurentPolynomial> expected_alexander;

  const std::string& name() const { return seifert.name; }
};

/// Upper-bidiagonal genus-g model: -1 on the diagonal, `diag` overrides per
/// index, +1 on the superdiagonal. Covers the twist and (2, 2g+1) torus knots.
inline SeifertKnot bidiagonal_knot(std::string name, std::vector<long> diag) {
  const std::size_t n = diag.size();
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = diag[i];
    if (i + 1 < n) a(i, i + 1) = 1;
  }
  return {std::move(a), 1, std::move(name)};
}

inline std::vector<KnotCatalogEntry> builtin_catalog() {
  using P = LaurentPolynomial;
  return {
      {{IntMatrix(0, 0), 1, "unknot"}, P(1)},
      {bidiagonal_knot("trefoil", {-1, -1}), P{{0, 1}, {1, -1}, {2, 1}}},
      {{IntMatrix{{1, 1}, {0, -1}}, 1, "figure-eight"}, P{{0, 1}, {1, -3}, {2, 1}}},
      {bidiagonal_knot("5_1", {-1, -1, -1, -1}), P{{0, 1}, {1, -1}, {2, 1}, {3, -1}, {4, 1}}},
      {bidiagonal_knot("5_2", {-1, -2}), P{{0, 2}, {1, -3}, {2, 2}}},
      {bidiagonal_knot("6_1", {-1, 2}), P{{0, 2}, {1, -5}, {2, 2}}},
  };
}

}  // namespace knotlab
