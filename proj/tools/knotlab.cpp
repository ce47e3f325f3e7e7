// knotlab: Alexander modules, Blanchfield pairings, twist-spin metabolizers
// and branched-cover homology from Seifert matrices.
//
// Exit codes: 0 success, 1 verification failed, 2 catalog parse error,
// 3 catalog validation error, 4 unknown knot, 5 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "knotlab/knotlab.hpp"

namespace {

using namespace knotlab;

enum ExitCode : int { kOk = 0, kFailed = 1, kParse = 2, kValidation = 3, kLookup = 4, kUsage = 5 };

struct CliError {
  int code;
  std::string message;
};

struct CliConfig {
  std::string catalog_path;  // empty: built-in catalog
  bool json = false;
};

struct KRange {
  int lo = 1, hi = 1;
};

KRange parse_k_range(const std::string& text) {
  KRange r;
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
      r.lo = std::stoi(lo, &used);
      if (used != lo.size()) throw std::invalid_argument(text);
      r.hi = std::stoi(hi, &used);
      if (used != hi.size()) throw std::invalid_argument(text);
    }
  } catch (const std::exception&) {
    throw CliError{kUsage, "bad k range '" + text + "' (expected <lo>..<hi> or <k>)"};
  }
  if (r.lo > r.hi) throw CliError{kUsage, "k range must satisfy lo <= hi"};
  if (static_cast<long>(r.hi) - r.lo > 64) throw CliError{kUsage, "k range is limited to 64 steps"};
  return r;
}

std::vector<KnotCatalogEntry> load_catalog(const CliConfig& cfg) {
  std::string path = cfg.catalog_path;
  if (path.empty())
    if (const char* env = std::getenv("KNOTLAB_CATALOG"); env && *env) path = env;
  if (path.empty()) return builtin_catalog();
  std::ifstream in(path);
  if (!in) throw CliError{kParse, path + ": cannot read catalog file"};
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_catalog(buf.str());
  } catch (const CatalogError& e) {
    throw CliError{e.kind() == CatalogError::Kind::Parse ? kParse : kValidation, path + ":" + e.what()};
  }
}

const KnotCatalogEntry& find_knot(const std::vector<KnotCatalogEntry>& catalog, const std::string& name) {
  for (const auto& e : catalog)
    if (e.name() == name) return e;
  throw CliError{kLookup, "unknown knot '" + name + "'"};
}

const char* pass(bool ok) { return ok ? "pass" : "FAIL"; }

int cmd_catalog(const CliConfig& cfg) {
  const auto catalog = load_catalog(cfg);
  if (cfg.json) {
    json out = json::array();
    for (const auto& e : catalog)
      out.push_back({{"name", e.name()},
                     {"size", e.seifert.size()},
                     {"epsilon", e.seifert.sign},
                     {"alexander", to_json(alexander_polynomial(e.seifert))}});
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::printf("%-16s %4s %4s  %s\n", "name", "size", "eps", "alexander");
  for (const auto& e : catalog)
    std::printf("%-16s %4zu %+4d  %s\n", e.name().c_str(), e.seifert.size(), e.seifert.sign,
                to_string(alexander_polynomial(e.seifert)).c_str());
  return kOk;
}

int cmd_invariants(const CliConfig& cfg, const std::string& name) {
  const auto catalog = load_catalog(cfg);
  const SeifertKnot& knot = find_knot(catalog, name).seifert;
  const BlanchfieldForm form = build_form(knot);
  const bool hermitian = hermitian_check(form), nonsingular = nonsingular_check(form);
  const LaurentPolynomial delta = alexander_polynomial(knot);
  if (cfg.json) {
    json out = {{"knot", knot.name},
                {"epsilon", knot.sign},
                {"size", knot.size()},
                {"alexander", to_json(delta)},
                {"presentation", to_json(form.presentation)},
                {"pairing", to_json(form.pairing)},
                {"hermitian", hermitian},
                {"nonsingular", nonsingular}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "knot: " << knot.name << " (size " << knot.size() << ", eps " << (knot.sign > 0 ? "+1" : "-1")
              << ")\n";
    std::cout << "alexander: " << to_string(delta) << "\n";
    if (knot.size() == 0) std::cout << "module: trivial (H = 0)\n";
    std::cout << "presentation (tA - eps*A^T):\n" << to_string(form.presentation);
    std::cout << "blanchfield pairing:\n" << to_string(form.pairing);
    std::cout << "hermitian: " << pass(hermitian) << "\n";
    std::cout << "nonsingular: " << pass(nonsingular) << "\n";
  }
  return hermitian && nonsingular ? kOk : kFailed;
}

int cmd_verify(const CliConfig& cfg, const std::string& name, int k, const std::optional<std::string>& eps_text) {
  std::optional<int> eps;
  if (eps_text) {
    if (*eps_text == "+1" || *eps_text == "1") eps = 1;
    else if (*eps_text == "-1") eps = -1;
    else throw CliError{kUsage, "--eps must be +1 or -1"};
  }
  if (is_odd(k) && !eps) throw CliError{kUsage, "odd k requires --eps <+1|-1>"};
  if (!is_odd(k) && eps) throw CliError{kUsage, "--eps is only meaningful for odd k"};
  const auto catalog = load_catalog(cfg);
  const SeifertKnot& knot = find_knot(catalog, name).seifert;
  const TwistSpinReport report = twist_spin_report({k, eps, knot});
  if (cfg.json) {
    std::cout << to_json(report).dump(2) << "\n";
  } else {
    std::cout << "knot: " << report.knot << "  k = " << k;
    if (eps) std::cout << "  eps = " << (*eps > 0 ? "+1" : "-1");
    std::cout << "\nform: lambda + (-lambda), delta = " << to_string(report.delta) << "\n";
    for (const auto& c : report.candidates) {
      std::cout << "  " << tag_name(c.tag) << "  " << c.candidate.provenance << ": " << verdict_name(c.verdict);
      if (is_metabolizer(c.verdict)) std::cout << "  order " << to_string(c.order) << " [" << pass(c.order_holds) << "]";
      std::cout << "\n";
      if (!is_metabolizer(c.verdict)) {
        json w;
        add_witness(w, c.verdict);
        std::cout << "    witness: " << w["witness"].dump() << "\n";
      }
    }
    if (report.consistency) std::cout << "consistency (id + t^(-k/2)): " << pass(*report.consistency) << "\n";
    if (report.eps_relation) std::cout << "eps relation (id + t): " << pass(*report.eps_relation) << "\n";
    std::cout << (report.all_passed() ? "all checks passed" : "verification FAILED") << "\n";
  }
  return report.all_passed() ? kOk : kFailed;
}

int cmd_branched(const CliConfig& cfg, const std::string& name, const KRange& range) {
  const auto catalog = load_catalog(cfg);
  const SeifertKnot& knot = find_knot(catalog, name).seifert;
  json rows = json::array();
  bool ok = true;
  if (!cfg.json) std::printf("%6s  %10s  %-20s  %s\n", "k", "order", "invariant factors", "det = resultant");
  for (int k = range.lo; k <= range.hi; ++k) {
    if (k == 0) {
      if (!cfg.json) std::printf("%6d  skipped: the branched cover needs k != 0\n", k);
      continue;
    }
    const BranchedCoverSummary s = branched_summary(knot, k);
    const bool agree = abs(determinant(branched_presentation(knot, k))) == branched_order(knot, k);
    ok = ok && agree;
    if (cfg.json) {
      json row = to_json(knot.name, s);
      row["oracles_agree"] = agree;
      rows.push_back(std::move(row));
      continue;
    }
    std::string factors = "[";
    for (std::size_t i = 0; i < s.invariant_factors.size(); ++i)
      factors += (i ? ", " : "") + s.invariant_factors[i].get_str();
    factors += "]";
    if (s.free_rank > 0) factors += " + Z^" + std::to_string(s.free_rank);
    const std::string order = s.order == 0 ? "infinite" : s.order.get_str();
    std::printf("%6d  %10s  %-20s  %s\n", k, order.c_str(), factors.c_str(), agree ? "ok" : "MISMATCH");
  }
  if (cfg.json) std::cout << rows.dump(2) << "\n";
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotlab: Blanchfield pairings, twist-spin metabolizers and branched covers"};
  app.require_subcommand(1);
  app.fallthrough();
  CliConfig cfg;
  app.add_option("--catalog", cfg.catalog_path, "catalog JSON file (default: built-in; env KNOTLAB_CATALOG)");
  app.add_flag("--json", cfg.json, "machine-readable output");

  auto* catalog = app.add_subcommand("catalog", "list catalog entries with their Alexander polynomials");

  std::string knot_name;
  auto* invariants = app.add_subcommand("invariants", "Alexander polynomial, presentation and Blanchfield pairing");
  invariants->add_option("name", knot_name, "knot name")->required();

  int k = 0;
  std::optional<std::string> eps;
  auto* verify = app.add_subcommand("verify", "verify the twist-spin metabolizers of K # -K");
  verify->add_option("name", knot_name, "knot name")->required();
  verify->add_option("--k", k, "twist parameter")->required();
  verify->add_option("--eps", eps, "+1 or -1, required for odd k");

  std::string k_range = "1..6";
  auto* branched = app.add_subcommand("branched", "homology of the k-fold cyclic branched covers");
  branched->add_option("name", knot_name, "knot name")->required();
  branched->add_option("--k", k_range, "inclusive range <lo>..<hi> (default 1..6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*catalog) return cmd_catalog(cfg);
    if (*invariants) return cmd_invariants(cfg, knot_name);
    if (*verify) return cmd_verify(cfg, knot_name, k, eps);
    if (*branched) return cmd_branched(cfg, knot_name, parse_k_range(k_range));
  } catch (const CliError& e) {
    std::cerr << "knotlab: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "knotlab: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
