#pragma once

// Metabolizers of λ_K ⊕ −λ_K coming from the two slice disks of the k-twist
// spin, in the informal form and the precise even-k / odd-k forms, plus the
// checks relating them.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "knotlab/blanchfield.hpp"
#include "knotlab/laurent.hpp"
#include "knotlab/matrix.hpp"
#include "knotlab/polymatrix.hpp"
#include "knotlab/seifert.hpp"

namespace knotlab {

/// Wrong parity of k for the requested family, or ε missing/invalid.
class ParityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TwistSpinScenario {
  int k = 0;
  std::optional<int> eps;  // required iff k is odd
  SeifertKnot knot;
};

enum class StatementTag { Informal, EvenK, OddK };

inline const char* tag_name(StatementTag t) {
  switch (t) {
    case StatementTag::Informal: return "informal";
    case StatementTag::EvenK: return "even";
    case StatementTag::OddK: return "odd";
  }
  return "?";
}

struct MetabolizerPair {
  MetabolizerCandidate minus;  // from the disk B_-
  MetabolizerCandidate plus;   // from the disk B_+
  BlanchfieldForm form;
  StatementTag tag = StatementTag::Informal;
};

inline bool is_odd(int k) { return k % 2 != 0; }

/// λ_K ⊕ −λ_K for the scenario's knot.
inline BlanchfieldForm doubled_form(const SeifertKnot& knot) {
  const BlanchfieldForm f = build_form(knot);
  return direct_sum_neg(f, f);
}

/// Generators (t^a e_i, −t^b e_i), i = 1..g, on the doubled form of rank 2g.
inline MetabolizerCandidate graph_candidate(const BlanchfieldForm& doubled, int a, int b, std::string provenance) {
  const std::size_t g = doubled.rank() / 2;
  PolyMatrix gens(2 * g, g);
  for (std::size_t i = 0; i < g; ++i) {
    gens(i, i) = LaurentPolynomial::t(a);
    gens(g + i, i) = -LaurentPolynomial::t(b);
  }
  return {doubled, std::move(gens), std::move(provenance)};
}

namespace detail {

inline void require_valid_scenario(const TwistSpinScenario& s) {
  if (!validate(s.knot)) throw InvalidKnotError("twist spin: invalid Seifert model '" + s.knot.name + "'");
  if (is_odd(s.k) && !s.eps) throw ParityError("odd k requires an explicit eps in {-1, +1}");
  if (s.eps && *s.eps != 1 && *s.eps != -1) throw ParityError("eps must be -1 or +1");
}

}  // namespace detail

/// {v ⊕ −v} (from B_+) and {v ⊕ −t^k v} (from B_-).
inline MetabolizerPair informal_metabolizers(const TwistSpinScenario& s) {
  if (!validate(s.knot)) throw InvalidKnotError("twist spin: invalid Seifert model '" + s.knot.name + "'");
  MetabolizerPair out;
  out.form = doubled_form(s.knot);
  out.tag = StatementTag::Informal;
  out.minus = graph_candidate(out.form, 0, s.k, "informal-minus");
  out.plus = graph_candidate(out.form, 0, 0, "informal-plus");
  return out;
}

/// {v ⊕ −t^{k/2} v} (B_-) and {t^{k/2} v ⊕ −v} (B_+), k even.
inline MetabolizerPair even_metabolizers(const TwistSpinScenario& s) {
  if (is_odd(s.k)) throw ParityError("even_metabolizers requires even k");
  detail::require_valid_scenario(s);
  MetabolizerPair out;
  out.form = doubled_form(s.knot);
  out.tag = StatementTag::EvenK;
  const int h = s.k / 2;
  out.minus = graph_candidate(out.form, 0, h, "even-minus");
  out.plus = graph_candidate(out.form, h, 0, "even-plus");
  return out;
}

/// {v ⊕ −t^{(k+ε)/2} v} (B_-) and {t^{(k−ε)/2} v ⊕ −v} (B_+), k odd.
inline MetabolizerPair odd_metabolizers(const TwistSpinScenario& s) {
  if (!is_odd(s.k)) throw ParityError("odd_metabolizers requires odd k");
  detail::require_valid_scenario(s);
  const int eps = *s.eps;
  MetabolizerPair out;
  out.form = doubled_form(s.knot);
  out.tag = StatementTag::OddK;
  const std::string suffix = eps > 0 ? "(eps=+1)" : "(eps=-1)";
  out.minus = graph_candidate(out.form, 0, (s.k + eps) / 2, "odd-minus" + suffix);
  out.plus = graph_candidate(out.form, (s.k - eps) / 2, 0, "odd-plus" + suffix);
  return out;
}

/// t^n·P: every generator multiplied by t^n.
inline MetabolizerCandidate scale_metabolizer(const MetabolizerCandidate& p, int n) {
  MetabolizerCandidate out = p;
  out.generators = LaurentPolynomial::t(n) * p.generators;
  out.submodule = Submodule(p.submodule.presentation(), out.generators);
  if (n != 0) out.provenance += "*t^" + std::to_string(n);
  return out;
}

/// Apply diag(1, ..., 1, t^n, ..., t^n) (identity on the first summand,
/// t^n on the second) to a candidate of the doubled form.
inline MetabolizerCandidate twist_second_summand(const BlanchfieldForm& doubled, const MetabolizerCandidate& p, int n) {
  const std::size_t g = doubled.rank() / 2;
  PolyMatrix gens = p.generators;
  const LaurentPolynomial u = LaurentPolynomial::t(n);
  for (std::size_t i = g; i < 2 * g; ++i)
    for (std::size_t j = 0; j < gens.cols(); ++j) gens(i, j) = u * gens(i, j);
  return {doubled, std::move(gens), p.provenance + "|second*t^" + std::to_string(n)};
}

/// Θ = id ⊕ t^n preserves every pairing between basis vectors.
inline bool second_summand_isometry_check(const BlanchfieldForm& doubled, int n) {
  const std::size_t r = doubled.rank(), g = r / 2;
  const LaurentPolynomial u = LaurentPolynomial::t(n);
  auto image = [&](std::size_t i) {
    PolyVector e(r);
    e[i] = i >= g ? u : LaurentPolynomial(1);
    return e;
  };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      PolyVector ei(r), ej(r);
      ei[i] = 1;
      ej[j] = 1;
      if (pair_elements(doubled, image(i), image(j)) != pair_elements(doubled, ei, ej)) return false;
    }
  return true;
}

/// Θ(a, b) = (a, t^{−k/2} b) carries {v ⊕ −t^k v} onto the even minus
/// candidate and {v ⊕ −v} onto the even plus candidate, and is an isometry.
inline bool consistency_check(const TwistSpinScenario& s) {
  if (is_odd(s.k)) throw ParityError("consistency_check requires even k");
  const MetabolizerPair informal = informal_metabolizers(s);
  const MetabolizerPair even = even_metabolizers(s);
  const int n = -s.k / 2;
  const auto theta_minus = twist_second_summand(informal.form, informal.minus, n);
  const auto theta_plus = twist_second_summand(informal.form, informal.plus, n);
  return submodule_eq(theta_minus.submodule, even.minus.submodule) &&
         submodule_eq(theta_plus.submodule, even.plus.submodule) &&
         second_summand_isometry_check(informal.form, n);
}

/// For odd k, (a, b) ↦ (a, t·b) carries the ε = −1 pair onto the ε = +1 pair.
inline bool eps_relation_check(const TwistSpinScenario& s) {
  if (!is_odd(s.k)) throw ParityError("eps_relation_check requires odd k");
  TwistSpinScenario lo = s, hi = s;
  lo.eps = -1;
  hi.eps = 1;
  const MetabolizerPair a = odd_metabolizers(lo);
  const MetabolizerPair b = odd_metabolizers(hi);
  return submodule_eq(twist_second_summand(a.form, a.minus, 1).submodule, b.minus.submodule) &&
         submodule_eq(twist_second_summand(a.form, a.plus, 1).submodule, b.plus.submodule) &&
         second_summand_isometry_check(a.form, 1);
}

struct CandidateReport {
  StatementTag tag;
  MetabolizerCandidate candidate;
  Verdict verdict;
  LaurentPolynomial order;  // o(P), meaningful for metabolizers
  bool order_holds = false;
};

struct TwistSpinReport {
  std::string knot;
  int k = 0;
  std::optional<int> eps;
  LaurentPolynomial delta;  // Δ_H of the doubled form
  std::vector<CandidateReport> candidates;
  std::optional<bool> consistency;   // even k
  std::optional<bool> eps_relation;  // odd k

  bool all_passed() const {
    for (const auto& c : candidates)
      if (!is_metabolizer(c.verdict) || !c.order_holds) return false;
    return consistency.value_or(true) && eps_relation.value_or(true);
  }
};

namespace detail {

inline void add_pair(TwistSpinReport& r, const MetabolizerPair& p) {
  for (const MetabolizerCandidate* c : {&p.minus, &p.plus}) {
    CandidateReport row{p.tag, *c, verify_metabolizer(p.form, *c), {}, false};
    if (is_metabolizer(row.verdict)) {
      row.order = metabolizer_order(*c);
      row.order_holds = order_check(p.form, *c);
    }
    r.candidates.push_back(std::move(row));
  }
}

}  // namespace detail

/// Runs every constructor applicable to the scenario (the informal pair,
/// then the even pair or both odd pairs), verifies each candidate and its
/// order, and the cross-family checks.
inline TwistSpinReport twist_spin_report(const TwistSpinScenario& s) {
  detail::require_valid_scenario(s);
  TwistSpinReport r;
  r.knot = s.knot.name;
  r.k = s.k;
  r.eps = s.eps;
  const MetabolizerPair informal = informal_metabolizers(s);
  r.delta = informal.form.delta;
  detail::add_pair(r, informal);
  if (is_odd(s.k)) {
    for (int e : {-1, 1}) {
      TwistSpinScenario si = s;
      si.eps = e;
      detail::add_pair(r, odd_metabolizers(si));
    }
    r.eps_relation = eps_relation_check(s);
  } else {
    detail::add_pair(r, even_metabolizers(s));
    r.consistency = consistency_check(s);
  }
  return r;
}

}  // namespace knotlab
