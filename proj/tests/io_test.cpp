#include <gtest/gtest.h>

#include <set>

#include "bgg/io/corpus.hpp"
#include "bgg/io/json_io.hpp"
#include "bgg/sym/errors.hpp"

namespace bgg::io {
namespace {

TEST(Json, ExpressionRoundTrip) {
  frame::Chart ch = frame::Chart::monge();
  sym::RatExpr e = sym::parse_rat("exp(q/sqrt(10)) + x^2/(1 + y)", ch.parse_options());
  json j = to_json(e);
  ASSERT_TRUE(j.is_string());
  EXPECT_EQ(density_from_json(json{{"sigma", j}}, ch), e);
}

TEST(Json, TractorRoundTripKeepsUnknowns) {
  frame::Frame235 f = frame::Frame235::monge(sym::parse_rat("q^2"));
  tractor::TractorSlots t = tractor::l0_partial(f, sym::parse_rat("x*q"));
  json j = to_json(t);
  EXPECT_EQ(j["chi"], "unknown");
  EXPECT_EQ(tractor_from_json(j, f.chart().parse_options()), t);
}

TEST(Json, MongeFrame) {
  frame::Frame235 f = frame_from_json(json{{"monge_F", "q^3"}});
  EXPECT_TRUE(f.is_monge());
  EXPECT_EQ(f.chart(), frame::Chart::monge());
  json r = to_json(f.reeb());
  EXPECT_TRUE(r.is_object() || r.is_array());
  json c = to_json(f.connection());
  EXPECT_TRUE(c.contains("Gamma^1_11"));
}

TEST(Json, GeneralFrameWithCustomChart) {
  json j = json::parse(R"({"chart": ["a", "b", "c", "d", "e"],
    "frame": [["0", "0", "0", "1", "0"], ["1", "c", "d", "0", "d^2"]], "guards": []})");
  frame::Frame235 f = frame_from_json(j);
  EXPECT_FALSE(f.is_monge());
  EXPECT_EQ(f.chart().names[0], "a");
}

TEST(Json, OpaqueSymbolsAreDeclared) {
  SymbolOptions s;
  s.merge(json{{"functions", {"s"}}, {"fields", {"k"}}});
  frame::Frame235 f = frame_from_json(json{{"monge_F", "q^2*k"}}, s);
  EXPECT_NO_THROW(density_from_json(json{{"sigma", "s(q)"}}, f.chart(), s));
  EXPECT_THROW(density_from_json(json{{"sigma", "s(q)"}}, f.chart()), bgg::ParseError);
}

TEST(Json, BadShapesAreInputErrors) {
  EXPECT_THROW(frame_from_json(json{{"frame", {{"1"}}}}), bgg::InputError);
  EXPECT_THROW(frame_from_json(json::array()), bgg::InputError);
  EXPECT_THROW(frame_from_json(json{{"monge_F", true}}), bgg::InputError);
  EXPECT_THROW(frame_from_json(json{{"monge_F", 3}}), bgg::NotA235Distribution);
  EXPECT_THROW(density_from_json(json{{"rho", "1"}}, frame::Chart::monge()), bgg::InputError);
  EXPECT_THROW(case_from_json(json{{"name", "x"}}), bgg::InputError);
}

TEST(Json, G2Report) {
  g2::Report r;
  r.checks.push_back({"closure", true, ""});
  r.checks.push_back({"jacobi", false, "broken"});
  json j = to_json(r);
  EXPECT_EQ(j["closure"]["status"], "pass");
  EXPECT_EQ(j["jacobi"]["detail"], "broken");
}

TEST(Corpus, EveryCaseCarriesACitation) {
  auto cases = load_corpus(BGG_CORPUS_DIR);
  std::set<std::string> names;
  for (const auto& c : cases) {
    EXPECT_FALSE(c.citation.empty()) << c.name;
    names.insert(c.name);
  }
  for (const char* n : {"flat_model", "rational_f", "fq", "nonexample", "rolling"})
    EXPECT_TRUE(names.count(n)) << n;
}

TEST(Corpus, AllCasesPass) {
  auto results = run_corpus(load_corpus(BGG_CORPUS_DIR));
  for (const auto& r : results) EXPECT_TRUE(r.pass) << r.report.dump(2);
}

TEST(Corpus, WrongExpectationFails) {
  json j = json::parse(R"({"name": "bad", "citation": "test", "input": {"monge_F": "q^2"},
    "densities": [{"sigma": "q^2", "verdict": "solution"}]})");
  CaseResult r = run_case(case_from_json(j));
  EXPECT_FALSE(r.pass);
}

}  // namespace
}  // namespace bgg::io
