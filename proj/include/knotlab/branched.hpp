#pragma once

// Homology of k-fold cyclic branched covers, H/(t^k − 1)H, from a Seifert
// model.

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include "knotlab/laurent.hpp"
#include "knotlab/matrix.hpp"
#include "knotlab/seifert.hpp"

namespace knotlab {

struct BranchedCoverSummary {
  int k = 0;
  Integer order;                          // 0 encodes an infinite group
  std::vector<Integer> invariant_factors; // each divides the next; units dropped
  std::size_t free_rank = 0;              // number of Z summands when order = 0
};

namespace detail {

inline void require_nonzero_k(int k) {
  if (k == 0) throw std::invalid_argument("branched cover requires k != 0");
}

}  // namespace detail

/// C⊗A − I⊗εAᵀ with C the |k|×|k| cyclic shift: t acts on Z^{|k|} ⊗ Z^g.
inline IntMatrix branched_presentation(const SeifertKnot& knot, int k) {
  detail::require_nonzero_k(k);
  detail::require_valid(knot, "branched_presentation");
  const std::size_t n = static_cast<std::size_t>(std::abs(k)), g = knot.size();
  IntMatrix out(n * g, n * g);
  for (std::size_t b = 0; b < n; ++b) {
    const std::size_t shifted = (b + 1) % n;
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) {
        out(b * g + i, shifted * g + j) += knot.a(i, j);
        out(b * g + i, b * g + j) -= knot.sign * knot.a(j, i);
      }
  }
  return out;
}

/// Sylvester-matrix resultant of two integer polynomials (ordinary, nonzero).
inline Integer resultant(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  if (!f.is_polynomial() || !g.is_polynomial() || f.ring() != RingTag::IntegerCoeffs ||
      g.ring() != RingTag::IntegerCoeffs)
    throw std::invalid_argument("resultant expects integer polynomials");
  const int m = f.max_exponent(), n = g.max_exponent();
  const std::size_t size = static_cast<std::size_t>(m + n);
  if (size == 0) return 1;
  IntMatrix s(size, size);
  for (int r = 0; r < n; ++r)
    for (int e = 0; e <= m; ++e) s(r, r + m - e) = f.coefficient(e).get_num();
  for (int r = 0; r < m; ++r)
    for (int e = 0; e <= n; ++e) s(n + r, r + n - e) = g.coefficient(e).get_num();
  return determinant(std::move(s));
}

/// |Res(Δ, t^{|k|} − 1)| = |∏ Δ(ζ)| over |k|-th roots of unity.
inline Integer branched_order(const SeifertKnot& knot, int k) {
  detail::require_nonzero_k(k);
  const LaurentPolynomial delta = alexander_polynomial(knot);
  const LaurentPolynomial cyclic = LaurentPolynomial::t(std::abs(k)) - LaurentPolynomial(1);
  return abs(resultant(delta, cyclic));
}

namespace detail {

// Bring a nonzero entry of least magnitude from the trailing block to (k, k).
inline bool place_smallest(IntMatrix& m, std::size_t k) {
  std::size_t pi = m.rows(), pj = m.cols();
  for (std::size_t i = k; i < m.rows(); ++i)
    for (std::size_t j = k; j < m.cols(); ++j)
      if (m(i, j) != 0 && (pi == m.rows() || abs(m(i, j)) < abs(m(pi, pj)))) {
        pi = i;
        pj = j;
      }
  if (pi == m.rows()) return false;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(k, j), m(pi, j));
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, k), m(i, pj));
  return true;
}

}  // namespace detail

/// Diagonal of the integer Smith normal form (length min(rows, cols),
/// nonnegative, each nonzero entry dividing the next).
inline std::vector<Integer> smith_diagonal(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols(), n = std::min(rows, cols);
  for (std::size_t k = 0; k < n; ++k) {
    if (!detail::place_smallest(m, k)) break;
    for (;;) {
      const Integer p = m(k, k);
      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (m(i, k) == 0) continue;
        const Integer q = m(i, k) / p;  // truncating, so the remainder is smaller than p
        for (std::size_t j = k; j < cols; ++j) m(i, j) -= q * m(k, j);
        clean = clean && m(i, k) == 0;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (m(k, j) == 0) continue;
        const Integer q = m(k, j) / p;
        for (std::size_t i = k; i < rows; ++i) m(i, j) -= q * m(i, k);
        clean = clean && m(k, j) == 0;
      }
      if (!clean) {
        detail::place_smallest(m, k);
        continue;
      }
      // p must divide the trailing block; otherwise fold the offending row in
      std::size_t bad = rows;
      for (std::size_t i = k + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (m(i, j) % p != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t c = k; c < cols; ++c) m(k, c) += m(bad, c);
    }
  }
  std::vector<Integer> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = abs(m(i, i));
  return d;
}

inline BranchedCoverSummary branched_summary(const SeifertKnot& knot, int k) {
  const IntMatrix pres = branched_presentation(knot, k);
  BranchedCoverSummary out;
  out.k = k;
  out.order = 1;
  for (const Integer& d : smith_diagonal(pres)) {
    if (d == 0) {
      ++out.free_rank;
    } else if (d != 1) {
      out.invariant_factors.push_back(d);
      out.order *= d;
    }
  }
  if (out.free_rank > 0) out.order = 0;
  if (out.order != branched_order(knot, k))
    throw std::logic_error("branched_summary: Smith form disagrees with the resultant order");
  return out;
}

}  // namespace knotlab
