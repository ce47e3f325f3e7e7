#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "knotlab/io.hpp"
#include "oracles.hpp"

namespace knotlab {
namespace {

using P = LaurentPolynomial;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CatalogError catalog_error(std::string_view text) {
  try {
    parse_catalog(text);
  } catch (const CatalogError& e) {
    return e;
  }
  ADD_FAILURE() << "no CatalogError for: " << text;
  return {CatalogError::Kind::Parse, 0, ""};
}

TEST(Catalog, SampleFileMatchesBuiltin) {
  const auto entries = parse_catalog(read_file(KNOTLAB_DATA_DIR "/catalog.json"));
  const auto builtin = builtin_catalog();
  ASSERT_EQ(entries.size(), builtin.size() + 1);
  for (std::size_t i = 0; i < builtin.size(); ++i) {
    EXPECT_EQ(entries[i].seifert, builtin[i].seifert) << builtin[i].name();
    EXPECT_EQ(entries[i].expected_alexander, builtin[i].expected_alexander) << builtin[i].name();
  }
  EXPECT_EQ(entries.back().seifert.sign, -1);
}

TEST(Catalog, RoundTrip) {
  const auto builtin = builtin_catalog();
  const auto parsed = parse_catalog(catalog_to_json(builtin).dump(2));
  ASSERT_EQ(parsed.size(), builtin.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    EXPECT_EQ(parsed[i].seifert, builtin[i].seifert);
    EXPECT_EQ(parsed[i].expected_alexander, builtin[i].expected_alexander);
  }
}

TEST(Catalog, ParseErrorsCarryLineNumbers) {
  const CatalogError syntax = catalog_error("[\n  {\"name\": \"a\",\n   \"epsilon\": 1 \"matrix\": []}\n]");
  EXPECT_EQ(syntax.kind(), CatalogError::Kind::Parse);
  EXPECT_EQ(syntax.line(), 3u);

  EXPECT_EQ(catalog_error("").kind(), CatalogError::Kind::Parse);
  EXPECT_EQ(catalog_error("{}").kind(), CatalogError::Kind::Parse);

  const CatalogError missing = catalog_error("[\n{\"name\": \"u\", \"epsilon\": 1, \"matrix\": []},\n{\"name\": \"x\"}\n]");
  EXPECT_EQ(missing.kind(), CatalogError::Kind::Parse);
  EXPECT_EQ(missing.line(), 3u);
  EXPECT_NE(std::string(missing.what()).find("line 3"), std::string::npos);

  EXPECT_EQ(catalog_error(R"([{"name": "r", "epsilon": 1, "matrix": [[1, 2]]}])").kind(), CatalogError::Kind::Parse);
  EXPECT_EQ(catalog_error(R"([{"name": "e", "epsilon": 2, "matrix": []}])").kind(), CatalogError::Kind::Parse);
  EXPECT_EQ(catalog_error(R"([{"name": "f", "epsilon": 1, "matrix": [[1.5]]}])").kind(), CatalogError::Kind::Parse);
  const CatalogError dup = catalog_error("[{\"name\": \"u\", \"epsilon\": 1, \"matrix\": []},\n {\"name\": \"u\", \"epsilon\": 1, \"matrix\": []}]");
  EXPECT_EQ(dup.line(), 2u);
}

TEST(Catalog, ValidationErrors) {
  const CatalogError degenerate = catalog_error(read_file(KNOTLAB_DATA_DIR "/invalid_entry.json"));
  EXPECT_EQ(degenerate.kind(), CatalogError::Kind::Validation);
  EXPECT_EQ(degenerate.line(), 3u);

  const CatalogError wrong_delta =
      catalog_error(R"([{"name": "t", "epsilon": 1, "matrix": [[-1, 1], [0, -1]], "alexander": {"0": "1", "1": "-3", "2": "1"}}])");
  EXPECT_EQ(wrong_delta.kind(), CatalogError::Kind::Validation);
}

TEST(Json, PolyMatrixAndPairing) {
  const BlanchfieldForm f = build_form(builtin_catalog()[1].seifert);
  const json pairing = to_json(f.pairing);
  ASSERT_EQ(pairing.size(), 2u);
  EXPECT_EQ(pairing[0][0]["numerator"], to_json(P::t()));
  EXPECT_EQ(pairing[0][0]["denominator"], to_json(f.delta));
  const json pres = to_json(f.presentation);
  EXPECT_EQ(polynomial_from_json(pres[0][1]), f.presentation(0, 1));
}

TEST(Json, VerificationReportHasWitness) {
  const BlanchfieldForm f = build_form(builtin_catalog()[1].seifert);
  const MetabolizerCandidate p(f, PolyMatrix::from_columns(2, {{P(1), P()}}), "e1");
  const json r = verification_report(f, p, verify_metabolizer(f, p));
  EXPECT_EQ(r["verdict"], "NotIsotropic");
  EXPECT_EQ(r["witness"]["kind"], "generator_pair");
  EXPECT_EQ(r["candidate"]["provenance"], "e1");
}

TEST(Json, TwistSpinReportShape) {
  const json r = to_json(twist_spin_report({1, -1, builtin_catalog()[1].seifert}));
  EXPECT_EQ(r["knot"], "trefoil");
  EXPECT_EQ(r["k"], 1);
  EXPECT_EQ(r["eps"], -1);
  EXPECT_EQ(r["candidates"].size(), 6u);
  EXPECT_EQ(r["order_checks"].size(), 6u);
  EXPECT_TRUE(r["eps_relation"].get<bool>());
  EXPECT_FALSE(r.contains("consistency"));
}

TEST(Json, BranchedSummary) {
  const json r = to_json("trefoil", branched_summary(builtin_catalog()[1].seifert, 3));
  EXPECT_EQ(r["order"], 4);
  EXPECT_EQ(r["invariant_factors"], json::array({2, 2}));
  const json inf = to_json("trefoil", branched_summary(builtin_catalog()[1].seifert, 6));
  EXPECT_EQ(inf["order"], 0);
  EXPECT_EQ(inf["free_rank"], 2);
}

}  // namespace
}  // namespace knotlab
