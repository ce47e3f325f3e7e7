#pragma once

// Blanchfield pairings of Seifert-presented knot modules and metabolizer
// verification.
//
// Convention: the module is H = coker P with P = tA − εAᵀ (relations are the
// columns of P) and the pairing is
//
//     λ(x, y) = xᵀ · B · ȳ   with   B = (t − 1)·(Pᵀ)⁻¹.
//
// With column relations this is the variant that is well defined: Pᵀ·B and
// B·P̄ are polynomial, and B̄ᵀ = ε·B because P̄ = −ε t⁻¹ Pᵀ.
// B is stored as numerators/delta with delta the normalized order of H.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "knotlab/laurent.hpp"
#include "knotlab/matrix.hpp"
#include "knotlab/polymatrix.hpp"
#include "knotlab/seifert.hpp"

namespace knotlab {

/// The constructed form violates hermitian symmetry or well-definedness:
/// a sign convention is wrong, not the user's input.
class ConventionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using PairingMatrix = Matrix<TorsionClass>;

struct BlanchfieldForm {
  std::string name;
  PolyMatrix presentation;
  PolyMatrix numerators;  // B = numerators / delta
  LaurentPolynomial delta;
  PairingMatrix pairing;  // reduced classes of B
  int sign = 1;

  std::size_t rank() const { return presentation.rows(); }

  RationalFunction entry(std::size_t i, std::size_t j) const { return {numerators(i, j), delta}; }
};

/// Exact value xᵀ·B·ȳ in Q(t), before reduction.
inline RationalFunction pair_raw(const BlanchfieldForm& f, std::span<const LaurentPolynomial> x,
                                 std::span<const LaurentPolynomial> y) {
  if (x.size() != f.rank() || y.size() != f.rank()) throw DimensionError("pair: vector length differs from form rank");
  LaurentPolynomial acc;
  for (std::size_t i = 0; i < f.rank(); ++i) {
    if (x[i].is_zero()) continue;
    LaurentPolynomial row;
    for (std::size_t j = 0; j < f.rank(); ++j)
      if (!y[j].is_zero() && !f.numerators(i, j).is_zero()) row += f.numerators(i, j) * involute(y[j]);
    acc += x[i] * row;
  }
  return {acc, f.delta};
}

inline TorsionClass pair_elements(const BlanchfieldForm& f, std::span<const LaurentPolynomial> x,
                                  std::span<const LaurentPolynomial> y) {
  return torsion_reduce(pair_raw(f, x, y));
}

namespace detail {

inline PolyVector basis_vector(std::size_t n, std::size_t i) {
  PolyVector e(n);
  e[i] = 1;
  return e;
}

inline PairingMatrix reduce_pairing(const PolyMatrix& numerators, const LaurentPolynomial& delta) {
  return numerators.map([&](const LaurentPolynomial& p) { return torsion_reduce(RationalFunction(p, delta)); });
}

}  // namespace detail

/// pairing(i,j) = ε·conj(pairing(j,i)) for every basis pair.
inline bool hermitian_check(const BlanchfieldForm& f) {
  const std::size_t n = f.rank();
  if (f.pairing.rows() != n || f.pairing.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      TorsionClass rhs = conjugate(f.pairing(j, i));
      if (f.sign < 0) rhs = -rhs;
      if (f.pairing(i, j) != rhs) return false;
    }
  return true;
}

/// Every relation column pairs to zero with every basis vector, on both sides.
inline bool relations_check(const BlanchfieldForm& f) {
  const std::size_t n = f.rank();
  for (std::size_t c = 0; c < f.presentation.cols(); ++c) {
    const PolyVector rel = f.presentation.column(c);
    for (std::size_t i = 0; i < n; ++i) {
      const PolyVector e = detail::basis_vector(n, i);
      if (!lambda_membership(pair_raw(f, rel, e)) || !lambda_membership(pair_raw(f, e, rel))) return false;
    }
  }
  return true;
}

/// Build λ_K from a valid Seifert model; throws ConventionError if the
/// result is not ε-hermitian or not well defined on the quotient.
inline BlanchfieldForm build_form(const SeifertKnot& k) {
  BlanchfieldForm f;
  f.name = k.name;
  f.sign = k.sign;
  f.presentation = presentation_matrix(k);
  const PolyMatrix pt = f.presentation.transpose();
  const LaurentPolynomial det = determinant(pt);
  f.delta = normalize_alexander(det);
  // (t-1)·adj(Pᵀ)/det = (t-1)·adj(Pᵀ)·(delta/det) / delta, and delta/det is a unit
  const LaurentPolynomial unit = exact_divide(f.delta, det);
  f.numerators = (LaurentPolynomial{{1, 1}, {0, -1}} * unit) * adjugate(pt);
  f.pairing = detail::reduce_pairing(f.numerators, f.delta);
  if (!hermitian_check(f)) throw ConventionError("build_form: pairing of '" + k.name + "' is not hermitian");
  if (!relations_check(f)) throw ConventionError("build_form: pairing of '" + k.name + "' is not well defined");
  return f;
}

/// λ_f ⊕ −λ_g on the block-diagonal presentation.
inline BlanchfieldForm direct_sum_neg(const BlanchfieldForm& f, const BlanchfieldForm& g) {
  if (f.sign != g.sign) throw InvalidKnotError("direct_sum_neg: hermitian signs differ");
  BlanchfieldForm out;
  out.name = g.name.empty() ? f.name : f.name + "+(-" + g.name + ")";
  out.sign = f.sign;
  out.presentation = block_diag(f.presentation, g.presentation);
  out.delta = f.delta * g.delta;
  out.numerators = block_diag(g.delta * f.numerators, -(f.delta * g.numerators));
  out.pairing = detail::reduce_pairing(out.numerators, out.delta);
  return out;
}

/// A proposed metabolizer: raw generators (over Z[t^±1]) plus their span,
/// which always contains the relations of the ambient module.
struct MetabolizerCandidate {
  PolyMatrix generators;
  Submodule submodule;
  std::string provenance;

  MetabolizerCandidate() = default;
  MetabolizerCandidate(const BlanchfieldForm& f, PolyMatrix gens, std::string tag)
      : generators(std::move(gens)), submodule(f.presentation, generators), provenance(std::move(tag)) {
    if (generators.rows() != f.rank() && generators.cols() != 0)
      throw DimensionError("candidate generators do not match the form rank");
  }
};

/// P^⊥ over Q[t^±1].
inline Submodule orthogonal_complement(const BlanchfieldForm& f, const PolyMatrix& generators) {
  if (generators.rows() != f.rank() && generators.cols() != 0)
    throw DimensionError("orthogonal_complement: generator length differs from form rank");
  const std::size_t n = f.rank();
  // c(i, j) = (numerators · conj(generator j))_i, so pairing = xᵀ·c / delta
  const PolyMatrix conj_gens = involute(generators);
  PolyMatrix c(n, generators.cols());
  for (std::size_t j = 0; j < generators.cols(); ++j) {
    const PolyVector conj = conj_gens.column(j);
    const PolyVector col = f.numerators * std::span<const LaurentPolynomial>(conj);
    for (std::size_t i = 0; i < n; ++i) c(i, j) = col[i];
  }
  return kernel_mod_delta(c, f.delta, f.presentation);
}

inline Submodule orthogonal_complement(const BlanchfieldForm& f, const MetabolizerCandidate& p) {
  if (p.submodule.presentation() != f.presentation)
    throw DimensionError("orthogonal_complement: candidate lives on a different module");
  return orthogonal_complement(f, p.generators);
}

/// P^⊥ of the whole module is the zero submodule.
inline bool nonsingular_check(const BlanchfieldForm& f) {
  return orthogonal_complement(f, PolyMatrix::identity(f.rank())) == Submodule::zero(f.presentation);
}

struct Metabolizer {};
struct NotIsotropic {
  std::size_t first, second;  // generator indices
  TorsionClass value;
};
struct IsotropicNotMaximal {
  PolyVector element;  // in P^⊥ but not in P
};
using Verdict = std::variant<Metabolizer, NotIsotropic, IsotropicNotMaximal>;

inline bool is_metabolizer(const Verdict& v) { return std::holds_alternative<Metabolizer>(v); }

inline std::string verdict_name(const Verdict& v) {
  struct {
    std::string operator()(const Metabolizer&) const { return "Metabolizer"; }
    std::string operator()(const NotIsotropic&) const { return "NotIsotropic"; }
    std::string operator()(const IsotropicNotMaximal&) const { return "IsotropicNotMaximal"; }
  } name;
  return std::visit(name, v);
}

/// Isotropy is checked exactly in Q(t)/Z[t^±1] on generator pairs;
/// P = P^⊥ is checked on Q[t^±1]-spans.
inline Verdict verify_metabolizer(const BlanchfieldForm& f, const MetabolizerCandidate& p) {
  if (p.submodule.presentation() != f.presentation)
    throw DimensionError("verify_metabolizer: candidate lives on a different module");
  const std::size_t m = p.generators.cols();
  std::vector<PolyVector> gens;
  gens.reserve(m);
  for (std::size_t j = 0; j < m; ++j) gens.push_back(p.generators.column(j));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const RationalFunction v = pair_raw(f, gens[i], gens[j]);
      if (!lambda_membership(v)) return NotIsotropic{i, j, torsion_reduce(v)};
    }
  const Submodule perp = orthogonal_complement(f, p.generators);
  if (perp == p.submodule) return Metabolizer{};
  for (std::size_t j = 0; j < perp.canonical().cols(); ++j) {
    PolyVector v = perp.canonical().column(j);
    if (!p.submodule.contains(v)) return IsotropicNotMaximal{std::move(v)};
  }
  // isotropy over Z[t^±1] forces P ⊆ P^⊥
  throw ConventionError("verify_metabolizer: P^⊥ is strictly smaller than P");
}

/// Order of H/P: the normalized determinant of the Hermite form of P.
inline LaurentPolynomial metabolizer_order(const MetabolizerCandidate& p) {
  return quotient_order(p.submodule.canonical());
}

/// o(P)·ō(P) ≐ Δ_H up to units of Q[t^±1].
inline bool order_check(const BlanchfieldForm& f, const MetabolizerCandidate& p) {
  const LaurentPolynomial o = metabolizer_order(p);
  return associates(o * involute(o), f.delta);
}

}  // namespace knotlab
