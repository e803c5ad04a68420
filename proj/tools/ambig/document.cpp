#include "document.hpp"

#include <json.hpp>

#include "ambig/ambiguity.hpp"
#include "ambig/incidence.hpp"
#include "ambig/interval.hpp"

namespace ambig::cli {

using nlohmann::json;

namespace {

struct Location {
  std::size_t line = 0;
  std::size_t column = 0;
};

Location locate_offset(std::string_view text, std::size_t offset) {
  Location loc{1, 1};
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++loc.line;
      loc.column = 1;
    } else {
      ++loc.column;
    }
  }
  return loc;
}

// Position of the first occurrence of the quoted key in the source text.
Location locate_key(std::string_view text, const std::string& key) {
  std::string quoted = "\"" + key + "\"";
  std::size_t at = text.find(quoted);
  if (at == std::string_view::npos) return {};
  return locate_offset(text, at);
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  [[noreturn]] void bad_key(const std::string& key, const std::string& why) const {
    Location loc = locate_key(text_, key);
    throw ParseError(why, loc.line, loc.column);
  }

  PropSet key(const std::string& key, const Frame& frame) const {
    if (key.empty()) return PropSet{};
    std::uint32_t bits = 0;
    std::size_t prev = 0;
    bool first = true;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = key.find(',', start);
      std::string name = key.substr(start, comma == std::string::npos ? std::string::npos
                                                                     : comma - start);
      std::size_t idx = frame.find(name);
      if (idx == frame.size()) {
        throw SchemaError("unknown atom '" + name + "' in subset key '" + key + "'");
      }
      if (!first && idx <= prev) {
        bad_key(key, "non-canonical subset key '" + key + "': atoms must follow frame order");
      }
      bits |= std::uint32_t{1} << idx;
      prev = idx;
      first = false;
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return PropSet(bits);
  }

 private:
  std::string_view text_;
};

const json& field(const json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) throw SchemaError(std::string("missing field '") + name + "'");
  return *it;
}

void allow_fields(const json& obj, std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) throw SchemaError("unexpected field '" + it.key() + "'");
  }
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array of names");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw SchemaError(std::string(what) + " must contain only strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

template <class U>
U universe(const json& j, const char* what) {
  try {
    return U(string_list(j, what));
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  }
}

SitSet situations_of(const json& j, const SituationSpace& space, const std::string& key) {
  try {
    return space.encode(string_list(j, "map value"));
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError("value of '" + key + "': " + e.what());
  }
}

SetValuedMap read_map(const json& body, const Frame& frame, const SituationSpace& space,
                      const Reader& reader, const char* what) {
  if (!body.is_object()) throw SchemaError(std::string(what) + " must be an object");
  SetValuedMap m(frame, space);
  for (auto it = body.begin(); it != body.end(); ++it) {
    m.set(reader.key(it.key(), frame), situations_of(it.value(), space, it.key()));
  }
  return m;
}

Rational read_rational(const json& v, const std::string& key) {
  try {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError("value of '" + key + "': " + e.what());
  }
  throw SchemaError("value of '" + key + "' must be a \"p/q\" string or an integer");
}

json write_map(const SetValuedMap& m) {
  json body = json::object();
  for (std::uint32_t a = 0; a < m.subset_count(); ++a) {
    SitSet s = m[PropSet(a)];
    if (s.empty()) continue;
    body[subset_key(m.frame(), PropSet(a))] = m.space().decode(s);
  }
  return body;
}

}  // namespace

std::string_view kind_name(DocKind kind) {
  switch (kind) {
    case DocKind::Assignment: return "assignment";
    case DocKind::Interval: return "interval";
    case DocKind::Ambiguity: return "ambiguity";
    case DocKind::Incidence: return "incidence";
    case DocKind::Probability: return "probability";
    case DocKind::Mass: return "mass";
  }
  return "?";
}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(line == 0 ? message
                      : "line " + std::to_string(line) + ", column " + std::to_string(column) +
                            ": " + message),
      line_(line),
      column_(column) {}

Document parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    Location loc = locate_offset(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON", loc.line, loc.column);
  }
  if (!root.is_object()) throw SchemaError("document must be a JSON object");
  const json& kind = field(root, "kind");
  if (!kind.is_string()) throw SchemaError("'kind' must be a string");
  const std::string k = kind.get<std::string>();

  Reader reader(text);
  Document doc;
  if (k == "assignment" || k == "ambiguity") {
    doc.kind = k == "assignment" ? DocKind::Assignment : DocKind::Ambiguity;
    allow_fields(root, {"kind", "frame", "situations", "map"});
    doc.frame = universe<Frame>(field(root, "frame"), "frame");
    doc.situations = universe<SituationSpace>(field(root, "situations"), "situations");
    doc.map = read_map(field(root, "map"), *doc.frame, *doc.situations, reader, "map");
  } else if (k == "interval") {
    doc.kind = DocKind::Interval;
    allow_fields(root, {"kind", "frame", "situations", "lower", "upper"});
    doc.frame = universe<Frame>(field(root, "frame"), "frame");
    doc.situations = universe<SituationSpace>(field(root, "situations"), "situations");
    doc.upper = read_map(field(root, "upper"), *doc.frame, *doc.situations, reader, "upper");
    if (root.contains("lower")) {
      doc.lower = read_map(root["lower"], *doc.frame, *doc.situations, reader, "lower");
    } else {
      doc.lower = dual_map(*doc.upper);
    }
  } else if (k == "incidence") {
    doc.kind = DocKind::Incidence;
    allow_fields(root, {"kind", "frame", "situations", "map", "points"});
    doc.frame = universe<Frame>(field(root, "frame"), "frame");
    doc.situations = universe<SituationSpace>(field(root, "situations"), "situations");
    if (root.contains("points") == root.contains("map")) {
      throw SchemaError("incidence document needs exactly one of 'points' or 'map'");
    }
    if (root.contains("map")) {
      doc.map = read_map(root["map"], *doc.frame, *doc.situations, reader, "map");
    } else {
      const json& pts = root["points"];
      if (!pts.is_object()) throw SchemaError("'points' must be an object");
      const std::size_t n = doc.situations->size();
      std::vector<std::size_t> atom_of(n, doc.frame->size());
      for (auto it = pts.begin(); it != pts.end(); ++it) {
        std::size_t w = doc.situations->find(it.key());
        if (w == n) throw SchemaError("unknown situation '" + it.key() + "' in points");
        if (!it.value().is_string()) throw SchemaError("points values must be atom names");
        std::size_t t = doc.frame->find(it.value().get<std::string>());
        if (t == doc.frame->size()) {
          throw SchemaError("unknown atom '" + it.value().get<std::string>() + "' in points");
        }
        atom_of[w] = t;
      }
      for (std::size_t w = 0; w < n; ++w) {
        if (atom_of[w] == doc.frame->size()) {
          throw SchemaError("situation '" + doc.situations->name(w) + "' has no point");
        }
      }
      doc.points = PointMap(std::move(atom_of));
      doc.map = incidence_from_pointmap(*doc.points, *doc.frame, *doc.situations).map();
    }
  } else if (k == "probability") {
    doc.kind = DocKind::Probability;
    allow_fields(root, {"kind", "situations", "p"});
    doc.situations = universe<SituationSpace>(field(root, "situations"), "situations");
    const json& p = field(root, "p");
    if (!p.is_object()) throw SchemaError("'p' must be an object");
    std::vector<Rational> weights(doc.situations->size(), Rational(0));
    for (auto it = p.begin(); it != p.end(); ++it) {
      std::size_t w = doc.situations->find(it.key());
      if (w == doc.situations->size()) {
        throw SchemaError("unknown situation '" + it.key() + "' in p");
      }
      weights[w] = read_rational(it.value(), it.key());
    }
    doc.probability = ProbabilityAssignment(*doc.situations, std::move(weights));
  } else if (k == "mass") {
    doc.kind = DocKind::Mass;
    allow_fields(root, {"kind", "frame", "m"});
    doc.frame = universe<Frame>(field(root, "frame"), "frame");
    const json& m = field(root, "m");
    if (!m.is_object()) throw SchemaError("'m' must be an object");
    std::map<PropSet, Rational> masses;
    for (auto it = m.begin(); it != m.end(); ++it) {
      masses[reader.key(it.key(), *doc.frame)] = read_rational(it.value(), it.key());
    }
    doc.mass = MassFunction(*doc.frame, masses);
  } else {
    throw SchemaError("unknown document kind '" + k + "'");
  }
  return doc;
}

std::string render_document(const Document& doc) {
  json root;
  root["kind"] = std::string(kind_name(doc.kind));
  if (doc.frame) root["frame"] = doc.frame->names();
  if (doc.situations) root["situations"] = doc.situations->names();
  switch (doc.kind) {
    case DocKind::Assignment:
    case DocKind::Ambiguity:
      root["map"] = write_map(*doc.map);
      break;
    case DocKind::Interval:
      root["lower"] = write_map(*doc.lower);
      root["upper"] = write_map(*doc.upper);
      break;
    case DocKind::Incidence:
      if (doc.points) {
        json pts = json::object();
        for (std::size_t w = 0; w < doc.points->size(); ++w) {
          pts[doc.situations->name(w)] = doc.frame->name((*doc.points)[w]);
        }
        root["points"] = pts;
      } else {
        root["map"] = write_map(*doc.map);
      }
      break;
    case DocKind::Probability: {
      json p = json::object();
      for (std::size_t w = 0; w < doc.situations->size(); ++w) {
        const Rational& v = (*doc.probability)[w];
        if (v != 0) p[doc.situations->name(w)] = to_string(v);
      }
      root["p"] = p;
      break;
    }
    case DocKind::Mass: {
      json m = json::object();
      for (const auto& [b, v] : doc.mass->masses()) m[subset_key(*doc.frame, b)] = to_string(v);
      root["m"] = m;
      break;
    }
  }
  return root.dump(2) + "\n";
}

void validate_document(const Document& doc) {
  switch (doc.kind) {
    case DocKind::Assignment:
      BasicAssignment{*doc.map};
      break;
    case DocKind::Interval:
      make_interval_structure(*doc.lower, *doc.upper);
      break;
    case DocKind::Ambiguity:
      AmbiguityMap{*doc.map};
      break;
    case DocKind::Incidence:
      admit_incidence(*doc.map);
      break;
    case DocKind::Probability:
    case DocKind::Mass:
      break;
  }
}

Document assignment_document(const SetValuedMap& j) {
  Document d;
  d.kind = DocKind::Assignment;
  d.frame = j.frame();
  d.situations = j.space();
  d.map = j;
  return d;
}

Document interval_document(const IntervalStructure& s) {
  Document d;
  d.kind = DocKind::Interval;
  d.frame = s.frame();
  d.situations = s.space();
  d.lower = s.lower();
  d.upper = s.upper();
  return d;
}

Document ambiguity_document(const SetValuedMap& a) {
  Document d = assignment_document(a);
  d.kind = DocKind::Ambiguity;
  return d;
}

Document incidence_document(const IncidenceMap& i) {
  Document d;
  d.kind = DocKind::Incidence;
  d.frame = i.frame();
  d.situations = i.space();
  d.map = i.map();
  d.points = i.origin();
  return d;
}

Document probability_document(const ProbabilityAssignment& p) {
  Document d;
  d.kind = DocKind::Probability;
  d.situations = p.space();
  d.probability = p;
  return d;
}

Document mass_document(const MassFunction& m) {
  Document d;
  d.kind = DocKind::Mass;
  d.frame = m.frame();
  d.mass = m;
  return d;
}

Selector parse_selector_table(std::string_view text, const Frame& frame) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    Location loc = locate_offset(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON", loc.line, loc.column);
  }
  if (!root.is_object()) throw SchemaError("selector table must be a JSON object");
  Reader reader(text);
  std::map<PropSet, std::size_t> table;
  for (auto it = root.begin(); it != root.end(); ++it) {
    if (!it.value().is_string()) throw SchemaError("selector values must be atom names");
    std::size_t t = frame.find(it.value().get<std::string>());
    if (t == frame.size()) {
      throw SchemaError("unknown atom '" + it.value().get<std::string>() + "' in selector");
    }
    table[reader.key(it.key(), frame)] = t;
  }
  return Selector::explicit_table(std::move(table));
}

}  // namespace ambig::cli
