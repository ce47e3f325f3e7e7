#pragma once

// Text and JSON serialization: polynomials, matrices, pairing classes,
// verification reports, branched-cover summaries and knot catalogs.

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "knotlab/blanchfield.hpp"
#include "knotlab/branched.hpp"
#include "knotlab/laurent.hpp"
#include "knotlab/matrix.hpp"
#include "knotlab/seifert.hpp"
#include "knotlab/twistspin.hpp"

namespace knotlab {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// human-readable text

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Ascending exponents, explicit negative powers: "2t^-1 + 1 - 5t^3".
inline std::string to_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool unit = mag == 1;
    if (e == 0 || !unit) out += is_integral(mag) ? mag.get_str() : "(" + mag.get_str() + ")";
    if (e != 0) out += e == 1 ? "t" : "t^" + std::to_string(e);
  }
  return out;
}

inline std::string to_string(const RationalFunction& f) {
  if (f.is_laurent()) return to_string(f.numerator());
  return "(" + to_string(f.numerator()) + ")/(" + to_string(f.denominator()) + ")";
}

inline std::string to_string(const TorsionClass& c) {
  if (c.is_zero()) return "0";
  std::string out;
  if (!c.fractional_part().is_zero()) out = to_string(c.fractional_part());
  if (!c.proper_part().is_zero()) {
    if (!out.empty()) out += " + ";
    out += to_string(c.proper_part());
  }
  return "[" + out + "]";
}

template <class T>
std::string to_string(const Matrix<T>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      if constexpr (std::is_same_v<T, Integer>)
        out += m(i, j).get_str();
      else
        out += to_string(m(i, j));
    }
    out += "]\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

/// {"-1": "2", "3": "-5"} is 2t^-1 - 5t^3.
inline json to_json(const LaurentPolynomial& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = c.get_str();
  return out;
}

inline LaurentPolynomial polynomial_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("polynomial must be a JSON object of exponent: coefficient");
  LaurentPolynomial::Terms terms;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || key.empty()) throw std::invalid_argument("bad exponent '" + key + "'");
    if (!value.is_string()) throw std::invalid_argument("coefficient of t^" + key + " must be a decimal string");
    Rational c;
    if (c.set_str(value.get<std::string>(), 10) != 0) throw std::invalid_argument("bad coefficient '" + value.get<std::string>() + "'");
    if (c.get_den() == 0) throw std::invalid_argument("zero denominator in coefficient");
    c.canonicalize();
    terms[e] += c;
  }
  return LaurentPolynomial(std::move(terms));
}

inline json to_json(const PolyMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

inline json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_si());
    out.push_back(std::move(row));
  }
  return out;
}

inline json to_json(const PolyVector& v) {
  json out = json::array();
  for (const auto& p : v) out.push_back(to_json(p));
  return out;
}

inline json to_json(const TorsionClass& c) {
  const RationalFunction r = c.representative();
  return {{"numerator", to_json(r.numerator())}, {"denominator", to_json(r.denominator())}};
}

inline json to_json(const PairingMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

inline json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

inline void add_witness(json& out, const Verdict& v) {
  if (const auto* w = std::get_if<NotIsotropic>(&v)) {
    out["witness"] = {{"kind", "generator_pair"},
                      {"generators", {w->first, w->second}},
                      {"pairing", to_json(w->value)},
                      {"pairing_text", to_string(w->value)}};
  } else if (const auto* w = std::get_if<IsotropicNotMaximal>(&v)) {
    out["witness"] = {{"kind", "complement_element"}, {"element", to_json(w->element)}};
  }
}

/// {form: {name, delta}, candidate: {provenance, generators}, verdict, witness?}
inline json verification_report(const BlanchfieldForm& f, const MetabolizerCandidate& p, const Verdict& v) {
  json out = {{"form", {{"name", f.name}, {"delta", to_json(f.delta)}}},
              {"candidate", {{"provenance", p.provenance}, {"generators", to_json(p.generators)}}},
              {"verdict", verdict_name(v)}};
  add_witness(out, v);
  return out;
}

/// {knot, k, eps?, candidates: [{tag, provenance, verdict, witness?}], consistency?, order_checks}
inline json to_json(const TwistSpinReport& r) {
  json out = {{"knot", r.knot}, {"k", r.k}};
  if (r.eps) out["eps"] = *r.eps;
  json candidates = json::array(), orders = json::array();
  for (const auto& c : r.candidates) {
    json row = {{"tag", tag_name(c.tag)}, {"provenance", c.candidate.provenance}, {"verdict", verdict_name(c.verdict)}};
    add_witness(row, c.verdict);
    candidates.push_back(std::move(row));
    if (is_metabolizer(c.verdict))
      orders.push_back({{"provenance", c.candidate.provenance},
                        {"order", to_json(c.order)},
                        {"delta", to_json(r.delta)},
                        {"holds", c.order_holds}});
  }
  out["candidates"] = std::move(candidates);
  if (r.consistency) out["consistency"] = *r.consistency;
  if (r.eps_relation) out["eps_relation"] = *r.eps_relation;
  out["order_checks"] = std::move(orders);
  return out;
}

/// {knot, k, order, invariant_factors}
inline json to_json(const std::string& knot, const BranchedCoverSummary& s) {
  json factors = json::array();
  for (const auto& d : s.invariant_factors) factors.push_back(integer_json(d));
  json out = {{"knot", knot}, {"k", s.k}, {"order", integer_json(s.order)}, {"invariant_factors", std::move(factors)}};
  if (s.free_rank > 0) out["free_rank"] = s.free_rank;
  return out;
}

// ---------------------------------------------------------------------------
// catalogs: JSON array of {name, epsilon, matrix: [[int, ...], ...], alexander?}

/// Malformed catalog text (kind Parse) or an entry that fails validation
/// (kind Validation); `line` is 1-based.
class CatalogError : public std::runtime_error {
 public:
  enum class Kind { Parse, Validation };
  CatalogError(Kind kind, std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), kind_(kind), line_(line) {}
  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

namespace detail {

inline std::size_t line_of(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

// Line on which each element of the top-level array starts.
inline std::vector<std::size_t> top_level_element_lines(std::string_view text) {
  std::vector<std::size_t> lines;
  std::size_t line = 1;
  int depth = 0;
  bool in_string = false, escaped = false, expecting = false;
  for (char ch : text) {
    if (ch == '\n') ++line;
    if (in_string) {
      if (escaped) escaped = false;
      else if (ch == '\\') escaped = true;
      else if (ch == '"') in_string = false;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') continue;
    if (expecting && depth == 1 && ch != ']') {
      lines.push_back(line);
      expecting = false;
    }
    switch (ch) {
      case '"': in_string = true; break;
      case '[':
      case '{':
        if (++depth == 1 && ch == '[') expecting = true;
        break;
      case ']':
      case '}': --depth; break;
      case ',':
        if (depth == 1) expecting = true;
        break;
      default: break;
    }
  }
  return lines;
}

}  // namespace detail

inline std::vector<KnotCatalogEntry> parse_catalog(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    throw CatalogError(CatalogError::Kind::Parse, detail::line_of(text, offset), e.what());
  }
  if (!doc.is_array()) throw CatalogError(CatalogError::Kind::Parse, 1, "catalog must be a JSON array");
  const auto lines = detail::top_level_element_lines(text);
  std::vector<KnotCatalogEntry> out;
  for (std::size_t idx = 0; idx < doc.size(); ++idx) {
    const std::size_t line = idx < lines.size() ? lines[idx] : 1;
    const json& e = doc[idx];
    auto fail = [&](const std::string& msg) { throw CatalogError(CatalogError::Kind::Parse, line, msg); };
    if (!e.is_object()) fail("entry must be an object");
    if (!e.contains("name") || !e["name"].is_string()) fail("entry needs a string 'name'");
    const std::string name = e["name"].get<std::string>();
    if (!e.contains("epsilon") || !e["epsilon"].is_number_integer()) fail("entry '" + name + "' needs integer 'epsilon'");
    const int eps = e["epsilon"].get<int>();
    if (eps != 1 && eps != -1) fail("entry '" + name + "': epsilon must be +1 or -1");
    if (!e.contains("matrix") || !e["matrix"].is_array()) fail("entry '" + name + "' needs array 'matrix'");
    const json& rows = e["matrix"];
    const std::size_t n = rows.size();
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!rows[i].is_array() || rows[i].size() != n) fail("entry '" + name + "': matrix must be square");
      for (std::size_t j = 0; j < n; ++j) {
        if (!rows[i][j].is_number_integer()) fail("entry '" + name + "': matrix entries must be integers");
        a(i, j) = Integer(std::to_string(rows[i][j].get<long long>()));
      }
    }
    KnotCatalogEntry entry{{std::move(a), eps, name}, std::nullopt};
    if (e.contains("alexander")) {
      try {
        entry.expected_alexander = polynomial_from_json(e["alexander"]);
      } catch (const std::invalid_argument& err) {
        fail("entry '" + name + "': " + err.what());
      }
    }
    if (!validate(entry.seifert))
      throw CatalogError(CatalogError::Kind::Validation, line,
                         "entry '" + name + "' violates det(A - eps*A^T) = ±1");
    if (entry.expected_alexander && alexander_polynomial(entry.seifert) != *entry.expected_alexander)
      throw CatalogError(CatalogError::Kind::Validation, line,
                         "entry '" + name + "': stored Alexander polynomial does not match the Seifert matrix");
    for (const auto& prev : out)
      if (prev.name() == name) fail("duplicate entry name '" + name + "'");
    out.push_back(std::move(entry));
  }
  return out;
}

inline json catalog_to_json(const std::vector<KnotCatalogEntry>& catalog) {
  json out = json::array();
  for (const auto& e : catalog) {
    json row = {{"name", e.name()}, {"epsilon", e.seifert.sign}, {"matrix", to_json(e.seifert.a)}};
    if (e.expected_alexander) row["alexander"] = to_json(*e.expected_alexander);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace knotlab
