#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "document.hpp"
#include "fixtures.hpp"

namespace {

using namespace fixtures;
using ambig::cli::DocKind;
using ambig::cli::ParseError;
using ambig::cli::SchemaError;
using ambig::cli::parse_document;
using ambig::cli::render_document;

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(AMBIG_FIXTURE_DIR) + "/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Document, Fix1Assignment) {
  auto doc = parse_document(slurp("fix1_assignment.json"));
  EXPECT_EQ(doc.kind, DocKind::Assignment);
  EXPECT_EQ(*doc.map, fix1_j());
}

TEST(Document, Fix1Interval) {
  auto doc = parse_document(slurp("fix1_interval.json"));
  EXPECT_EQ(*doc.lower, fix1_lower());
  EXPECT_EQ(*doc.upper, fix1_upper());
  EXPECT_EQ(render_document(doc), slurp("fix1_interval.json"));
}

TEST(Document, Fix2Documents) {
  auto inc = parse_document(slurp("fix2_incidence.json"));
  EXPECT_EQ(*inc.points, fix2_g());
  EXPECT_EQ(*inc.map, fix2_i().map());
  auto amb = parse_document(slurp("fix2_ambiguity.json"));
  EXPECT_EQ(*amb.map, fix2_a());
}

TEST(Document, LowerDefaultsToDual) {
  auto doc = parse_document(R"({"kind":"interval","frame":["x","y"],"situations":["w1","w2","w3"],
    "upper":{"x":["w1","w3"],"y":["w2","w3"],"x,y":["w1","w2","w3"]}})");
  EXPECT_EQ(*doc.lower, fix1_lower());
}

TEST(Document, RoundTripIsIdentity) {
  std::vector<ambig::cli::Document> docs{
      ambig::cli::assignment_document(fix1_j()),
      ambig::cli::interval_document(fix1()),
      ambig::cli::ambiguity_document(fix2_a()),
      ambig::cli::incidence_document(fix2_i()),
      ambig::cli::probability_document(ProbabilityAssignment(w3(), {R(1, 2), R(0), R(1, 2)})),
      ambig::cli::mass_document(MassFunction(xy(), {{PropSet(1), R(1, 3)}, {PropSet(3), R(2, 3)}})),
  };
  for (const auto& d : docs) {
    std::string text = render_document(d);
    EXPECT_EQ(parse_document(text), d) << text;
    EXPECT_EQ(render_document(parse_document(text)), text);
  }
}

TEST(Document, NonCanonicalKey) {
  const std::string text =
      "{\"kind\": \"assignment\", \"frame\": [\"x\",\"y\"], \"situations\": [\"w1\"],\n"
      " \"map\": {\"y,x\": [\"w1\"]}}";
  try {
    parse_document(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 10u);
  }
}

TEST(Document, MalformedJson) {
  try {
    parse_document("{\"kind\": \"assignment\",\n  \"frame\": [\"x\",}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Document, SchemaErrors) {
  EXPECT_THROW(parse_document(R"({"kind":"matrix"})"), SchemaError);
  EXPECT_THROW(parse_document(R"({"frame":["x"]})"), SchemaError);
  EXPECT_THROW(parse_document(R"({"kind":"assignment","frame":["x"],"situations":["w1"],"map":{},"extra":1})"),
               SchemaError);
  EXPECT_THROW(parse_document(R"({"kind":"assignment","frame":["x"],"situations":["w1"],"map":{"x":["w9"]}})"),
               SchemaError);
  EXPECT_THROW(parse_document(R"({"kind":"assignment","frame":["x"],"situations":["w1"],"map":{"q":["w1"]}})"),
               SchemaError);
  EXPECT_THROW(parse_document(R"({"kind":"incidence","frame":["x"],"situations":["w1","w2"],"points":{"w1":"x"}})"),
               SchemaError);
  EXPECT_THROW(parse_document(R"({"kind":"probability","situations":["w1"],"p":{"w1":"one"}})"),
               SchemaError);
}

TEST(Document, ProbabilityMustSumToOne) {
  EXPECT_THROW(parse_document(R"({"kind":"probability","situations":["w1","w2"],"p":{"w1":"1","w2":1}})"),
               ValidationError);
}

TEST(Document, IntegerShorthand) {
  auto doc = parse_document(R"({"kind":"mass","frame":["x","y"],"m":{"x,y":1}})");
  EXPECT_EQ((*doc.mass)(PropSet(3)), R(1));
}

TEST(Document, ValidateSurfacesAxiomFailure) {
  auto doc = parse_document(R"({"kind":"assignment","frame":["x","y"],"situations":["w1","w2"],
    "map":{"x":["w1"],"y":["w1","w2"]}})");
  EXPECT_THROW(ambig::cli::validate_document(doc), AssignmentAxiomViolation);
  auto ok = parse_document(slurp("fix2_ambiguity.json"));
  EXPECT_NO_THROW(ambig::cli::validate_document(ok));
}

TEST(Document, SelectorTable) {
  Selector s = ambig::cli::parse_selector_table(R"({"x": "x", "x,y": "y"})", xy());
  EXPECT_EQ(s.choose(PropSet(3)), 1u);
  EXPECT_THROW(ambig::cli::parse_selector_table(R"({"x": "y"})", xy()), SelectorDomainError);
}

}  // namespace
