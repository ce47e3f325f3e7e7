#pragma once

// Linear algebra over the principal ideal domain Q[t^±1]: column Hermite
// normal form, canonical submodules of presented modules, and kernels of
// maps into quotients by a single element.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "knotlab/laurent.hpp"
#include "knotlab/matrix.hpp"

namespace knotlab {

namespace detail {

inline void swap_columns(PolyMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// col[dst] -= q * col[src]
inline void subtract_column(PolyMatrix& m, std::size_t dst, std::size_t src, const LaurentPolynomial& q) {
  if (q.is_zero()) return;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m(i, src).is_zero()) m(i, dst) -= q * m(i, src);
}

inline void scale_column(PolyMatrix& m, std::size_t j, const LaurentPolynomial& u) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = u * m(i, j);
}

// Replace (col a, col b) by (x·a + y·b, -(vb/g)·a + (va/g)·b) where
// va = m(row,a), vb = m(row,b). The transform has determinant 1.
inline void combine_columns(PolyMatrix& m, std::size_t row, std::size_t a, std::size_t b) {
  const LaurentPolynomial va = m(row, a), vb = m(row, b);
  const GcdResult g = laurent_ext_gcd(va, vb);
  const LaurentPolynomial ua = exact_divide(va, g.gcd), ub = exact_divide(vb, g.gcd);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const LaurentPolynomial ca = m(i, a), cb = m(i, b);
    if (ca.is_zero() && cb.is_zero()) continue;
    m(i, a) = g.x * ca + g.y * cb;
    m(i, b) = ua * cb - ub * ca;
  }
}

// Column echelon form on the first `pivot_rows` rows using unimodular column
// operations applied to every row of `m`. Returns the pivot rows in order;
// pivot k sits in column k, and columns >= pivots.size() vanish on the first
// `pivot_rows` rows. With `reduce`, pivots are made monic and entries left of
// each pivot are reduced to canonical remainders.
inline std::vector<std::size_t> column_echelon(PolyMatrix& m, std::size_t pivot_rows, bool reduce) {
  std::vector<std::size_t> pivots;
  std::size_t k = 0;
  for (std::size_t r = 0; r < pivot_rows && k < m.cols(); ++r) {
    std::optional<std::size_t> first;
    for (std::size_t j = k; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) {
        first = j;
        break;
      }
    if (!first) continue;
    swap_columns(m, k, *first);
    for (std::size_t j = k + 1; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) combine_columns(m, r, k, j);
    // pivot is now the gcd up to a unit; make it the monic associate
    const LaurentPolynomial& p = m(r, k);
    const LaurentPolynomial target = monic_associate(p);
    if (p != target) scale_column(m, k, exact_divide(target, p));
    if (reduce) {
      for (std::size_t j = 0; j < k; ++j) {
        if (m(r, j).is_zero()) continue;
        const auto [q, rem] = laurent_divmod(m(r, j), m(r, k));
        subtract_column(m, j, k, q);
      }
    }
    pivots.push_back(r);
    ++k;
  }
  return pivots;
}

}  // namespace detail

/// Column Hermite normal form over Q[t^±1]. The result has one column per
/// pivot; pivot k is the first nonzero row of column k, pivots are monic
/// ordinary polynomials with nonzero constant term, and every entry to the
/// left of a pivot is an ordinary polynomial of smaller degree.
inline PolyMatrix hermite_form(PolyMatrix m) {
  const auto pivots = detail::column_echelon(m, m.rows(), true);
  PolyMatrix out(m.rows(), pivots.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < pivots.size(); ++j) out(i, j) = m(i, j);
  return out;
}

namespace detail {

// Reduce v against a Hermite-form matrix; returns the residue (zero iff v is
// in the column span).
inline PolyVector hermite_residue(const PolyMatrix& h, PolyVector v) {
  std::size_t row = 0;
  for (std::size_t j = 0; j < h.cols(); ++j) {
    while (h(row, j).is_zero()) {
      if (!v[row].is_zero()) return v;
      ++row;
    }
    const auto [q, rem] = laurent_divmod(v[row], h(row, j));
    if (!rem.is_zero()) return v;
    if (!q.is_zero())
      for (std::size_t i = row; i < h.rows(); ++i) v[i] -= q * h(i, j);
    ++row;
  }
  return v;
}

}  // namespace detail

/// Finitely generated submodule of the module presented by `presentation`
/// (an n×m matrix whose columns are relations in Q[t^±1]^n). Stored as the
/// Hermite form of [generators | presentation], so it always contains the
/// relations and two submodules of the same ambient are equal iff their
/// canonical matrices agree.
class Submodule {
 public:
  Submodule() = default;
  Submodule(PolyMatrix presentation, const PolyMatrix& generators)
      : presentation_(std::move(presentation)) {
    if (generators.rows() != presentation_.rows() && generators.cols() != 0)
      throw DimensionError("generator length differs from ambient rank");
    canonical_ = hermite_form(hstack(generators, presentation_));
  }

  static Submodule zero(PolyMatrix presentation) {
    const std::size_t n = presentation.rows();
    return {std::move(presentation), PolyMatrix(n, 0)};
  }
  static Submodule full(PolyMatrix presentation) {
    const std::size_t n = presentation.rows();
    return {std::move(presentation), PolyMatrix::identity(n)};
  }

  std::size_t ambient_rank() const { return presentation_.rows(); }
  const PolyMatrix& presentation() const { return presentation_; }
  const PolyMatrix& canonical() const { return canonical_; }

  bool contains(std::span<const LaurentPolynomial> v) const {
    if (v.size() != ambient_rank()) throw DimensionError("vector length differs from ambient rank");
    const PolyVector residue = detail::hermite_residue(canonical_, PolyVector(v.begin(), v.end()));
    for (const auto& x : residue)
      if (!x.is_zero()) return false;
    return true;
  }

  bool contains(const Submodule& other) const {
    for (std::size_t j = 0; j < other.canonical_.cols(); ++j)
      if (!contains(other.canonical_.column(j))) return false;
    return true;
  }

  friend bool operator==(const Submodule& a, const Submodule& b) {
    if (a.presentation_ != b.presentation_) throw DimensionError("submodules live in different ambient modules");
    return a.canonical_ == b.canonical_;
  }

 private:
  PolyMatrix presentation_;
  PolyMatrix canonical_;
};

inline bool submodule_membership(const Submodule& s, std::span<const LaurentPolynomial> v) { return s.contains(v); }

inline bool submodule_eq(const Submodule& a, const Submodule& b) { return a == b; }

/// { x : xᵀ·c ≡ 0 (mod delta) entrywise } inside the module presented by
/// `presentation` (free when it has no columns).
inline Submodule kernel_mod_delta(const PolyMatrix& c, const LaurentPolynomial& delta, const PolyMatrix& presentation) {
  if (delta.is_zero()) throw DegenerateError("kernel_mod_delta: zero delta (degenerate Alexander polynomial)");
  if (presentation.rows() != c.rows()) throw DimensionError("kernel_mod_delta: ambient rank mismatch");
  const std::size_t g = c.rows(), p = c.cols();
  // Columns of [cᵀ | delta·I] stacked over the identity; kernel columns are the
  // ones whose top block is cleared by unimodular column operations.
  PolyMatrix work(p + g + p, g + p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < g; ++j) work(i, j) = c(j, i);
    work(i, g + i) = delta;
  }
  for (std::size_t j = 0; j < g + p; ++j) work(p + j, j) = 1;
  const auto pivots = detail::column_echelon(work, p, false);
  PolyMatrix kernel(g, work.cols() - pivots.size());
  for (std::size_t j = pivots.size(); j < work.cols(); ++j)
    for (std::size_t i = 0; i < g; ++i) kernel(i, j - pivots.size()) = work(p + i, j);
  return {presentation, kernel};
}

inline Submodule kernel_mod_delta(const PolyMatrix& c, const LaurentPolynomial& delta) {
  return kernel_mod_delta(c, delta, PolyMatrix(c.rows(), 0));
}

/// Order of the torsion module presented by a square matrix, normalized.
inline LaurentPolynomial quotient_order(const PolyMatrix& presentation) {
  if (!presentation.is_square()) throw DimensionError("quotient_order: presentation is not square");
  const LaurentPolynomial d = determinant(presentation);
  if (d.is_zero()) throw DegenerateError("quotient_order: presented module is not torsion (zero determinant)");
  return normalize_alexander(d);
}

}  // namespace knotlab
