// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "knotlab/knotlab.hpp"
#include "oracles.hpp"

namespace {

using namespace knotlab;
using P = LaurentPolynomial;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f ms", ms);
  return buf;
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

const SeifertKnot& knot(const std::vector<KnotCatalogEntry>& catalog, const std::string& name) {
  for (const auto& e : catalog)
    if (e.name() == name) return e.seifert;
  throw std::runtime_error("missing catalog knot " + name);
}

struct Verified {
  BlanchfieldForm form;
  MetabolizerCandidate candidate;
  std::string label;
};

// Metabolizers verified by criteria 3-5, reused by 6 and 7.
std::vector<Verified> g_verified;

void check_pair(const MetabolizerPair& pair, const std::string& label, Outcome& out) {
  for (const MetabolizerCandidate* c : {&pair.minus, &pair.plus}) {
    const Verdict v = verify_metabolizer(pair.form, *c);
    if (!is_metabolizer(v)) {
      out.fail(label + " " + c->provenance + ": " + verdict_name(v));
      continue;
    }
    g_verified.push_back({pair.form, *c, label + " " + c->provenance});
  }
}

Outcome alexander_fixtures(const std::vector<KnotCatalogEntry>& catalog) {
  Outcome out;
  const std::vector<std::pair<std::string, P>> fixtures{
      {"trefoil", P{{0, 1}, {1, -1}, {2, 1}}}, {"figure-eight", P{{0, 1}, {1, -3}, {2, 1}}}, {"unknot", P(1)}};
  double worst = 0;
  for (const auto& [name, expected] : fixtures) {
    const SeifertKnot& k = knot(catalog, name);
    const auto start = Clock::now();
    const P delta = alexander_polynomial(k);
    const double ms = ms_since(start);
    worst = std::max(worst, ms);
    if (delta != expected) out.fail(name + ": got " + to_string(delta));
    if (ms >= 10.0) out.fail(name + ": took " + fmt_ms(ms));
  }
  if (out.ok) out.detail = "slowest " + fmt_ms(worst);
  return out;
}

Outcome form_sanity(const std::vector<KnotCatalogEntry>& catalog) {
  Outcome out;
  std::vector<BlanchfieldForm> forms;
  for (const auto& e : catalog) forms.push_back(build_form(e.seifert));
  const BlanchfieldForm t = build_form(knot(catalog, "trefoil"));
  forms.push_back(direct_sum_neg(t, t));
  for (const auto& f : forms) {
    if (!hermitian_check(f)) out.fail(f.name + " not hermitian");
    if (!nonsingular_check(f)) out.fail(f.name + " singular");
  }
  if (out.ok) out.detail = std::to_string(forms.size()) + " forms";
  return out;
}

Outcome informal_pairs(const std::vector<KnotCatalogEntry>& catalog) {
  Outcome out;
  const auto start = Clock::now();
  int count = 0;
  for (const auto& e : catalog)
    for (int k = -4; k <= 4; ++k) {
      check_pair(informal_metabolizers({k, std::nullopt, e.seifert}), e.name() + " k=" + std::to_string(k), out);
      count += 2;
    }
  const double ms = ms_since(start);
  if (ms >= 60000.0) out.fail("took " + fmt_ms(ms));
  if (out.ok) out.detail = std::to_string(count) + " candidates in " + fmt_ms(ms);
  return out;
}

Outcome even_pairs(const std::vector<KnotCatalogEntry>& catalog) {
  Outcome out;
  int count = 0;
  for (const auto& e : catalog)
    for (int k : {-4, -2, 0, 2, 4}) {
      const TwistSpinScenario s{k, std::nullopt, e.seifert};
      const std::string label = e.name() + " k=" + std::to_string(k);
      check_pair(even_metabolizers(s), label, out);
      if (!consistency_check(s)) out.fail(label + ": consistency");
      count += 2;
    }
  if (out.ok) out.detail = std::to_string(count) + " candidates, consistency holds";
  return out;
}

Outcome odd_pairs(const std::vector<KnotCatalogEntry>& catalog) {
  Outcome out;
  int count = 0;
  for (const auto& e : catalog)
    for (int k : {-3, -1, 1, 3}) {
      const std::string label = e.name() + " k=" + std::to_string(k);
      for (int eps : {-1, 1}) {
        check_pair(odd_metabolizers({k, eps, e.seifert}), label + " eps=" + std::to_string(eps), out);
        count += 2;
      }
      if (!eps_relation_check({k, 1, e.seifert})) out.fail(label + ": eps relation");
    }
  if (out.ok) out.detail = std::to_string(count) + " candidates, eps relation holds";
  return out;
}

Outcome scaling() {
  Outcome out;
  for (const auto& v : g_verified)
    for (int n = -3; n <= 3; ++n)
      if (!is_metabolizer(verify_metabolizer(v.form, scale_metabolizer(v.candidate, n))))
        out.fail(v.label + " * t^" + std::to_string(n));
  if (g_verified.empty()) out.fail("no verified metabolizers to scale");
  if (out.ok) out.detail = std::to_string(g_verified.size() * 7) + " scaled candidates";
  return out;
}

Outcome order_oracle() {
  Outcome out;
  for (const auto& v : g_verified)
    if (!order_check(v.form, v.candidate)) out.fail(v.label + ": o*conj(o) != delta");
  if (g_verified.empty()) out.fail("no verified metabolizers");
  if (out.ok) out.detail = std::to_string(g_verified.size()) + " metabolizers";
  return out;
}

Outcome doubled_alexander(const std::vector<KnotCatalogEntry>& catalog) {
  Outcome out;
  for (const auto& e : catalog) {
    const P d = alexander_polynomial(e.seifert);
    if (!associates(alexander_polynomial(connected_sum(e.seifert, mirror_inverse(e.seifert))), d * d))
      out.fail(e.name());
  }
  if (out.ok) out.detail = std::to_string(catalog.size()) + " knots";
  return out;
}

Outcome branched_covers(const std::vector<KnotCatalogEntry>& catalog) {
  Outcome out;
  for (const auto& e : catalog) {
    for (int k : {-1, 1})
      if (branched_order(e.seifert, k) != 1) out.fail(e.name() + " k=" + std::to_string(k) + " nontrivial");
    for (int k = 1; k <= 6; ++k)
      if (abs(determinant(branched_presentation(e.seifert, k))) != branched_order(e.seifert, k))
        out.fail(e.name() + " k=" + std::to_string(k) + ": det != resultant");
  }
  const SeifertKnot& t = knot(catalog, "trefoil");
  const auto s2 = branched_summary(t, 2), s3 = branched_summary(t, 3);
  if (s2.order != 3 || s2.invariant_factors != std::vector<Integer>{3}) out.fail("trefoil k=2");
  if (s3.order != 4 || s3.invariant_factors != std::vector<Integer>{2, 2}) out.fail("trefoil k=3");
  if (branched_order(knot(catalog, "figure-eight"), 2) != 5) out.fail("figure-eight k=2");
  if (out.ok) out.detail = "trefoil 3 [3], 4 [2,2]; figure-eight 5";
  return out;
}

Outcome negative_control(const std::vector<KnotCatalogEntry>& catalog) {
  Outcome out;
  const BlanchfieldForm f = build_form(knot(catalog, "trefoil"));
  const P tm1{{1, 1}, {0, -1}};
  const std::vector<std::pair<std::string, PolyMatrix>> fixtures{
      {"zero", PolyMatrix(2, 0)},
      {"full", PolyMatrix::identity(2)},
      {"(t-1)e1", PolyMatrix::from_columns(2, {{tm1, P()}})},
      {"e1", PolyMatrix::from_columns(2, {{P(1), P()}})},
      {"e2", PolyMatrix::from_columns(2, {{P(), P(1)}})},
      {"e1+e2", PolyMatrix::from_columns(2, {{P(1), P(1)}})},
      {"e1-te2", PolyMatrix::from_columns(2, {{P(1), -P::t()}})},
      {"(t+1)e1", PolyMatrix::from_columns(2, {{P{{1, 1}, {0, 1}}, P()}})},
  };
  for (const auto& [name, gens] : fixtures) {
    const MetabolizerCandidate c(f, gens, name);
    const Verdict v = verify_metabolizer(f, c);
    if (is_metabolizer(v)) {
      out.fail(name + " verified");
    } else if (const auto* w = std::get_if<NotIsotropic>(&v)) {
      if (w->value.is_zero()) out.fail(name + ": empty isotropy witness");
    } else {
      const auto& m = std::get<IsotropicNotMaximal>(v);
      if (c.submodule.contains(m.element) || !orthogonal_complement(f, c).contains(m.element))
        out.fail(name + ": bad complement witness");
    }
  }
  if (out.ok) out.detail = std::to_string(fixtures.size()) + " fixtures rejected with witnesses";
  return out;
}

}  // namespace

int main() {
  const auto catalog = builtin_catalog();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Alexander fixtures (trefoil, figure-eight, unknot; < 10 ms each)", [&] { return alexander_fixtures(catalog); }},
      {"forms hermitian and nonsingular (catalog and trefoil + -trefoil)", [&] { return form_sanity(catalog); }},
      {"informal pairs verify for k in [-4, 4] (< 60 s)", [&] { return informal_pairs(catalog); }},
      {"even-k pairs verify and agree with the informal pair", [&] { return even_pairs(catalog); }},
      {"odd-k pairs verify for both eps and are related by (a, t b)", [&] { return odd_pairs(catalog); }},
      {"metabolizers stay verified under t^n scaling, n in [-3, 3]", [] { return scaling(); }},
      {"order oracle o(P) conj(o(P)) ~ delta", [] { return order_oracle(); }},
      {"Alexander polynomial of K # -K is the square", [&] { return doubled_alexander(catalog); }},
      {"branched cover orders, invariant factors, det = resultant", [&] { return branched_covers(catalog); }},
      {"trefoil alone admits no metabolizer among fixtures", [&] { return negative_control(catalog); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.ok) ++failures;
    std::printf("%s %2zu  %s  [%s]\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
