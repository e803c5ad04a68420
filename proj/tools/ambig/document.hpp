#pragma once

// JSON document format shared by every subcommand.
//
//   {"kind": "assignment", "frame": ["x","y"], "situations": ["w1","w2","w3"],
//    "map": {"x": ["w1"], "y": ["w2"], "x,y": ["w3"]}}
//
// Subset keys join atom names in frame order with commas; "" is ∅ and
// unlisted subsets map to ∅. Rationals are "p/q" strings in lowest terms (an
// integer string or JSON integer is accepted on input). Rendering sorts keys
// and omits empty cells, so render(parse(text)) == text for canonical text.

#include <optional>
#include <string>
#include <string_view>

#include "ambig/error.hpp"
#include "ambig/incidence.hpp"
#include "ambig/numeric.hpp"
#include "ambig/set_valued_map.hpp"

namespace ambig::cli {

enum class DocKind { Assignment, Interval, Ambiguity, Incidence, Probability, Mass };

std::string_view kind_name(DocKind kind);

// Syntax error, or a subset key that is not canonical. line/column are
// 1-based; 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Well-formed JSON with the wrong kind, missing or unknown fields, or names
// outside the declared universes.
class SchemaError : public Error {
 public:
  using Error::Error;
};

struct Document {
  DocKind kind = DocKind::Assignment;
  std::optional<Frame> frame;
  std::optional<SituationSpace> situations;
  // assignment, ambiguity, incidence
  std::optional<SetValuedMap> map;
  // incidence given as a point map ("points": {"w1": "x"})
  std::optional<PointMap> points;
  // interval
  std::optional<SetValuedMap> lower;
  std::optional<SetValuedMap> upper;
  std::optional<ProbabilityAssignment> probability;
  std::optional<MassFunction> mass;

  bool operator==(const Document&) const = default;
};

// Throws ParseError, SchemaError, or ValidationError (probability and mass
// documents are always validated).
Document parse_document(std::string_view text);
std::string render_document(const Document& doc);

// Checks the axioms the document's kind requires; throws the matching
// ValidationError subtype.
void validate_document(const Document& doc);

Document assignment_document(const SetValuedMap& j);
Document interval_document(const IntervalStructure& s);
Document ambiguity_document(const SetValuedMap& a);
Document incidence_document(const IncidenceMap& i);
Document probability_document(const ProbabilityAssignment& p);
Document mass_document(const MassFunction& m);

// Selector table file body: {"x,y": "y", ...}, keys canonical for `frame`.
Selector parse_selector_table(std::string_view text, const Frame& frame);

}  // namespace ambig::cli
