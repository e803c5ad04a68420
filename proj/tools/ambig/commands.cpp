#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "ambig/ambiguity.hpp"
#include "ambig/fuzz.hpp"
#include "ambig/generators.hpp"
#include "ambig/incidence.hpp"
#include "ambig/interval.hpp"
#include "ambig/numeric.hpp"
#include "ambig/oracle.hpp"
#include "document.hpp"

namespace ambig::cli {

using nlohmann::json;

namespace {

// Bad invocation detected after CLI11 accepted the arguments.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Globals {
  bool validate = false;
  bool exhaustive = false;
  std::uint64_t samples = SweepOptions{}.samples;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format = "text";

  SweepOptions sweep() const {
    SweepOptions o;
    o.force_exhaustive = exhaustive;
    o.samples = samples;
    o.seed = seed;
    return o;
  }
  bool as_json() const { return format == "json"; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Document load(const Globals& g, const std::string& path) {
  Document doc;
  try {
    doc = parse_document(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), 0, 0);
  }
  if (g.validate) validate_document(doc);
  return doc;
}

Document load_kind(const Globals& g, const std::string& path,
                   std::initializer_list<DocKind> kinds) {
  Document doc = load(g, path);
  if (std::find(kinds.begin(), kinds.end(), doc.kind) == kinds.end()) {
    std::string want;
    for (DocKind k : kinds) want += (want.empty() ? "" : " or ") + std::string(kind_name(k));
    throw SchemaError(path + ": expected a " + want + " document, got " +
                      std::string(kind_name(doc.kind)));
  }
  return doc;
}

IntervalStructure structure_of(const Document& doc, const SweepOptions& opts) {
  if (doc.kind == DocKind::Assignment) return structure_from_assignment(BasicAssignment(*doc.map));
  return make_interval_structure(*doc.lower, *doc.upper, opts);
}

IncidenceMap incidence_of(const Document& doc, const SweepOptions& opts) {
  if (doc.points) return incidence_from_pointmap(*doc.points, *doc.frame, *doc.situations);
  return admit_incidence(*doc.map, opts);
}

Selector parse_selector(const std::string& spec, const Frame& frame) {
  if (spec == "min") return Selector::min_index();
  if (spec.rfind("seed:", 0) == 0) {
    const std::string n = spec.substr(5);
    if (n.empty() || !std::all_of(n.begin(), n.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw UsageError("--selector seed:N needs a non-negative integer");
    }
    try {
      return Selector::seeded(std::stoull(n));
    } catch (const std::out_of_range&) {
      throw UsageError("--selector seed out of range");
    }
  }
  if (!spec.empty() && spec[0] == '@') return parse_selector_table(read_file(spec.substr(1)), frame);
  throw UsageError("--selector must be min, seed:N or @table-file");
}

json report_json(const AxiomReport& r, const Frame& frame) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts()) {
    json e{{"axiom", v.axiom},
           {"pass", v.pass},
           {"derived", v.derived},
           {"exhaustive", v.exhaustive},
           {"cases", v.cases}};
    if (v.witness) {
      json subsets = json::array();
      for (PropSet a : v.witness->subsets) subsets.push_back(subset_key(frame, a));
      e["witness"] = {{"subsets", subsets}, {"detail", v.witness->detail}};
    }
    verdicts.push_back(e);
  }
  return {{"pass", r.all_pass()}, {"verdicts", verdicts}};
}

std::string show_report(const Globals& g, const AxiomReport& r, const Frame& frame) {
  if (g.as_json()) return report_json(r, frame).dump(2) + "\n";
  return r.render();
}

std::string document_array(std::initializer_list<Document> docs) {
  json arr = json::array();
  for (const auto& d : docs) arr.push_back(json::parse(render_document(d)));
  return arr.dump(2) + "\n";
}

struct Result {
  std::string text;
  int code = kExitOk;
};

Result verdict(std::string text, bool pass) { return {std::move(text), pass ? kExitOk : kExitFailure}; }

Result cmd_check(const Globals& g, const std::string& path) {
  Document doc = load(g, path);
  const SweepOptions opts = g.sweep();
  AxiomReport r;
  switch (doc.kind) {
    case DocKind::Assignment: r = check_assignment(*doc.map); break;
    case DocKind::Interval: r = check_interval_pair(*doc.lower, *doc.upper, opts); break;
    case DocKind::Ambiguity: r = check_ambiguity_axioms(*doc.map, opts); break;
    case DocKind::Incidence: r = check_incidence_axioms(*doc.map, opts); break;
    case DocKind::Probability:
      r.add({"probability", true, false, true, doc.situations->size(), std::nullopt});
      break;
    case DocKind::Mass:
      r.add({"mass", true, false, true, doc.mass->masses().size(), std::nullopt});
      break;
  }
  const Frame frame = doc.frame ? *doc.frame : Frame({"_"});
  return verdict(show_report(g, r, frame), r.all_pass());
}

Result cmd_oracle(const Globals& g, const std::string& path) {
  Document doc = load(g, path);
  const SweepOptions opts = g.sweep();
  AxiomReport main, naive;
  switch (doc.kind) {
    case DocKind::Assignment:
      main = check_assignment(*doc.map);
      naive = oracle::verify_assignment(*doc.map);
      break;
    case DocKind::Interval:
      main = check_interval_pair(*doc.lower, *doc.upper, opts);
      naive = oracle::verify_interval(*doc.lower, *doc.upper);
      break;
    case DocKind::Ambiguity:
      main = check_ambiguity_axioms(*doc.map, opts);
      naive = oracle::verify_ambiguity(*doc.map);
      break;
    case DocKind::Incidence:
      main = check_incidence_axioms(*doc.map, opts);
      naive = oracle::verify_incidence(*doc.map);
      break;
    default:
      throw UsageError("oracle applies to assignment, interval, ambiguity and incidence documents");
  }
  auto diff = oracle::disagreement(main, naive);
  const bool pass = !diff && naive.all_pass();
  if (g.as_json()) {
    json j = report_json(naive, *doc.frame);
    j["agreement"] = !diff;
    if (diff) j["disagreement"] = *diff;
    return verdict(j.dump(2) + "\n", pass);
  }
  return verdict(naive.render() + (diff ? "agreement ✗ " + *diff + "\n" : "agreement ✓\n"), pass);
}

Result cmd_belief(const Globals& g, const std::string& spath, const std::string& ppath) {
  Document sd = load_kind(g, spath, {DocKind::Interval, DocKind::Assignment});
  Document pd = load_kind(g, ppath, {DocKind::Probability});
  IntervalStructure s = structure_of(sd, g.sweep());
  const ProbabilityAssignment& p = *pd.probability;
  BeliefReport b = belief_from_structure(s, p);
  AxiomReport identity = check_belief_identity(b, mass_from_structure(s, p));
  const Frame& frame = s.frame();
  if (g.as_json()) {
    json bel = json::object(), pl = json::object(), alpha = json::object();
    for (std::uint32_t a = 0; a < frame.subset_count(); ++a) {
      const std::string key = subset_key(frame, PropSet(a));
      bel[key] = to_string(b.bel(PropSet(a)));
      pl[key] = to_string(b.pl(PropSet(a)));
      alpha[key] = to_string(b.alpha(PropSet(a)));
    }
    json j{{"kind", "belief"}, {"frame", frame.names()}, {"bel", bel}, {"pl", pl},
           {"alpha", alpha}, {"identities", report_json(identity, frame)}};
    return verdict(j.dump(2) + "\n", identity.all_pass());
  }
  std::string text;
  for (std::uint32_t a = 0; a < frame.subset_count(); ++a) {
    PropSet A(a);
    text += format_subset(frame, A) + " Bel=" + to_string(b.bel(A)) + " Pl=" + to_string(b.pl(A)) +
            " α=" + to_string(b.alpha(A)) + "\n";
  }
  return verdict(text + identity.render(), identity.all_pass());
}

Result cmd_fishburn(const Globals& g, const std::string& spath, const std::string& ppath) {
  Document sd = load_kind(g, spath, {DocKind::Interval, DocKind::Assignment});
  Document pd = load_kind(g, ppath, {DocKind::Probability});
  IntervalStructure s = structure_of(sd, g.sweep());
  AxiomReport r = fishburn_report(belief_from_structure(s, *pd.probability), g.sweep());
  return verdict(show_report(g, r, s.frame()), r.all_pass());
}

struct GenArgs {
  std::size_t atoms = 3;
  std::size_t situations = 5;
  std::string kind = "assignment";
  std::optional<double> focal_bias;
  bool zero_inclusive = false;
};

Result cmd_gen(const Globals& g, const GenArgs& a) {
  GenConfig cfg;
  cfg.atoms = a.atoms;
  cfg.situations = a.situations;
  cfg.seed = g.seed;
  cfg.focal_bias = a.focal_bias;
  cfg.zero_inclusive = a.zero_inclusive;
  Document doc;
  if (a.kind == "assignment") {
    doc = assignment_document(gen_assignment(cfg).map());
  } else if (a.kind == "interval") {
    doc = interval_document(structure_from_assignment(gen_assignment(cfg)));
  } else if (a.kind == "ambiguity") {
    doc = ambiguity_document(
        ambiguity_from_interval(structure_from_assignment(gen_assignment(cfg))).map());
  } else if (a.kind == "incidence") {
    doc = incidence_document(
        incidence_from_pointmap(gen_pointmap(cfg), gen_frame(cfg.atoms), gen_space(cfg.situations)));
  } else if (a.kind == "probability") {
    doc = probability_document(gen_probability(cfg));
  } else {
    doc = mass_document(
        mass_from_structure(structure_from_assignment(gen_assignment(cfg)), gen_probability(cfg)));
  }
  return {render_document(doc), kExitOk};
}

struct FuzzArgs {
  std::uint64_t trials = 100;
  std::size_t atoms = 5;
  std::size_t situations = 10;
  unsigned threads = 0;
  bool fault_injection = false;
  std::optional<double> focal_bias;
  bool zero_inclusive = false;
};

Result cmd_fuzz(const Globals& g, const FuzzArgs& a) {
  GenConfig cfg;
  cfg.atoms = a.atoms;
  cfg.situations = a.situations;
  cfg.seed = g.seed;
  cfg.trials = a.trials;
  cfg.threads = a.threads;
  cfg.fault_injection = a.fault_injection;
  cfg.focal_bias = a.focal_bias;
  cfg.zero_inclusive = a.zero_inclusive;
  FuzzReport r = fuzz(cfg);
  if (!g.as_json()) return verdict(r.render(), r.ok());
  json props = json::array(), fails = json::array();
  for (const auto& p : r.properties) props.push_back({{"name", p.name}, {"pass", p.pass}, {"fail", p.fail}});
  for (const auto& f : r.failures) {
    fails.push_back({{"trial", f.trial},
                     {"trial_seed", f.trial_seed},
                     {"property", f.property},
                     {"detail", f.detail},
                     {"atoms", f.atoms},
                     {"situations", f.situations},
                     {"assignment", f.assignment}});
  }
  json j{{"seed", cfg.seed},     {"trials", cfg.trials},         {"atoms", cfg.atoms},
         {"situations", cfg.situations}, {"fault_injection", cfg.fault_injection},
         {"properties", props}, {"failures", fails}};
  return verdict(j.dump(2) + "\n", r.ok());
}

void emit(const Globals& g, const std::string& text, std::ostream& out) {
  if (g.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(g.out_path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + g.out_path + "'");
  f << text;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Qualitative ambiguity calculus over finite frames", "ambig"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--validate", g.validate, "Check every loaded document's axioms before use");
  app.add_flag("--exhaustive", g.exhaustive, "Sweep all 4^m pairs regardless of frame size");
  app.add_option("--sample", g.samples, "Random pairs drawn by sampled sweeps");
  app.add_option("--seed", g.seed, "Seed for gen, fuzz and sampled sweeps");
  app.add_option("--out", g.out_path, "Write the result to this file");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"text", "json"}));

  std::function<Result()> action;
  std::string f1, f2, selector = "min";
  GenArgs gen_args;
  FuzzArgs fuzz_args;

  auto unary = [&](const char* name, const char* help, const char* what,
                   std::function<Result(const std::string&)> body) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", f1, what)->required();
    sub->callback([&action, &f1, body] { action = [&f1, body] { return body(f1); }; });
    return sub;
  };
  auto binary = [&](const char* name, const char* help, const char* w1, const char* w2,
                    std::function<Result(const std::string&, const std::string&)> body) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("first", f1, w1)->required();
    sub->add_option("second", f2, w2)->required();
    sub->callback([&action, &f1, &f2, body] { action = [&f1, &f2, body] { return body(f1, f2); }; });
  };

  unary("check", "Run the axiom suite for the document's kind", "Document file",
        [&](const std::string& p) { return cmd_check(g, p); });
  unary("extract", "Basic assignment of an interval structure", "Interval document",
        [&](const std::string& p) {
          Document d = load_kind(g, p, {DocKind::Interval});
          IntervalStructure s = make_interval_structure(*d.lower, *d.upper, g.sweep());
          return Result{render_document(assignment_document(extract_assignment(s).map()))};
        });
  unary("build", "Interval structure generated by a basic assignment", "Assignment document",
        [&](const std::string& p) {
          Document d = load_kind(g, p, {DocKind::Assignment});
          return Result{render_document(interval_document(structure_from_assignment(*d.map)))};
        });
  unary("ambiguity", "Ambiguity mapping of an interval structure", "Interval document",
        [&](const std::string& p) {
          Document d = load_kind(g, p, {DocKind::Interval});
          IntervalStructure s = make_interval_structure(*d.lower, *d.upper, g.sweep());
          return Result{render_document(ambiguity_document(ambiguity_from_interval(s).map()))};
        });
  unary("incidence", "Incidence mapping selected from a basic assignment", "Assignment or interval document",
        [&](const std::string& p) {
          Document d = load_kind(g, p, {DocKind::Assignment, DocKind::Interval});
          Selector sel = parse_selector(selector, *d.frame);
          BasicAssignment j = d.kind == DocKind::Assignment
                                  ? BasicAssignment(*d.map)
                                  : extract_assignment(structure_of(d, g.sweep()));
          return Result{render_document(incidence_document(select_incidence(j, sel)))};
        })
      ->add_option("--selector", selector, "min, seed:N or @table-file");
  unary("decompose", "Split an interval structure into incidence and ambiguity", "Interval document",
        [&](const std::string& p) {
          Document d = load_kind(g, p, {DocKind::Interval});
          IntervalStructure s = structure_of(d, g.sweep());
          Decomposition dec = decompose_interval(s, parse_selector(selector, s.frame()));
          return Result{document_array({incidence_document(dec.incidence),
                                        ambiguity_document(dec.ambiguity.map())})};
        })
      ->add_option("--selector", selector, "min, seed:N or @table-file");
  binary("compose", "Interval structure from an incidence and an ambiguity mapping",
         "Incidence document", "Ambiguity document",
         [&](const std::string& ip, const std::string& ap) {
           Document di = load_kind(g, ip, {DocKind::Incidence});
           Document da = load_kind(g, ap, {DocKind::Ambiguity});
           const SweepOptions opts = g.sweep();
           IntervalStructure s =
               compose_interval(incidence_of(di, opts), AmbiguityMap(*da.map, opts), opts);
           return Result{render_document(interval_document(s))};
         });
  binary("belief", "Belief, plausibility and ambiguity under a probability",
         "Interval or assignment document", "Probability document",
         [&](const std::string& s, const std::string& p) { return cmd_belief(g, s, p); });
  unary("from-mass", "Structure and probability realising a mass function", "Mass document",
        [&](const std::string& p) {
          Document d = load_kind(g, p, {DocKind::Mass});
          MassRealization r = structure_from_mass(*d.mass);
          return Result{document_array(
              {interval_document(r.structure), probability_document(r.probability)})};
        });
  binary("fishburn", "Fishburn ambiguity axioms for the induced α",
         "Interval or assignment document", "Probability document",
         [&](const std::string& s, const std::string& p) { return cmd_fishburn(g, s, p); });
  unary("oracle", "Compare the checkers with the brute-force oracle", "Document file",
        [&](const std::string& p) { return cmd_oracle(g, p); });

  CLI::App* gen = app.add_subcommand("gen", "Generate a random document");
  gen->add_option("--atoms", gen_args.atoms, "Frame size");
  gen->add_option("--situations", gen_args.situations, "Number of situations");
  gen->add_option("--kind", gen_args.kind, "Document kind")
      ->check(CLI::IsMember({"assignment", "interval", "ambiguity", "incidence", "probability", "mass"}));
  gen->add_option("--focal-bias", gen_args.focal_bias, "Weight ratio between focal sizes k+1 and k");
  gen->add_flag("--zero-inclusive", gen_args.zero_inclusive, "Allow zero probability weights");
  gen->callback([&] { action = [&] { return cmd_gen(g, gen_args); }; });

  CLI::App* fz = app.add_subcommand("fuzz", "Property-check seeded random instances");
  fz->add_option("--trials", fuzz_args.trials, "Number of instances");
  fz->add_option("--atoms", fuzz_args.atoms, "Largest frame size");
  fz->add_option("--situations", fuzz_args.situations, "Largest number of situations");
  fz->add_option("--threads", fuzz_args.threads, "Worker threads, 0 for the default");
  fz->add_flag("--fault-injection", fuzz_args.fault_injection, "Flip one bit of every assignment");
  fz->add_option("--focal-bias", fuzz_args.focal_bias, "Weight ratio between focal sizes k+1 and k");
  fz->add_flag("--zero-inclusive", fuzz_args.zero_inclusive, "Allow zero probability weights");
  fz->callback([&] { action = [&] { return cmd_fuzz(g, fuzz_args); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Result r = action();
    emit(g, r.text, out);
    return r.code;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const InternalInvariantFailure& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace ambig::cli
