#include "ambig/fuzz.hpp"

#include <exception>
#include <functional>
#include <thread>

#include "ambig/ambiguity.hpp"
#include "ambig/error.hpp"
#include "ambig/oracle.hpp"
#include "ambig/sweep.hpp"

namespace ambig {

namespace {

constexpr std::size_t kSeededSelectors = 5;

enum Property : std::size_t {
  kGenerator,
  kRoundTrip,
  kAmbiguity,
  kSelection,
  kDecomposition,
  kBeliefMass,
  kMassRoundtrip,
  kFishburn,
  kOracle,
  kPropertyCount
};

std::string first_failure_text(const AxiomReport& r) {
  const AxiomVerdict* v = r.first_failure();
  if (v == nullptr) return {};
  std::string out = v->axiom + " fails";
  if (v->witness) out += " at " + v->witness->detail;
  return out;
}

// Throws with the report's first failure, if any.
void require(const AxiomReport& r, const std::string& what) {
  if (!r.all_pass()) throw std::runtime_error(what + ": " + first_failure_text(r));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

void require_agreement(const AxiomReport& main, const AxiomReport& oracle,
                       const std::string& what) {
  if (auto diff = oracle::disagreement(main, oracle)) {
    throw std::runtime_error(what + ": " + *diff);
  }
}

bool monotone(const SetValuedMap& m) {
  for (std::uint32_t b = 0; b < m.subset_count(); ++b) {
    // Every a ⊆ b, by submask enumeration.
    for (std::uint32_t a = b;; a = (a - 1) & b) {
      if (!m[PropSet(a)].subset_of(m[PropSet(b)])) return false;
      if (a == 0) break;
    }
  }
  return true;
}

std::vector<Selector> selector_family(std::uint64_t seed) {
  std::vector<Selector> out{Selector::min_index()};
  Stream base(seed);
  for (std::size_t k = 0; k < kSeededSelectors; ++k) {
    out.push_back(Selector::seeded(base.split(k).next()));
  }
  return out;
}

std::string render_assignment(const Frame& frame, const SituationSpace& space,
                              const std::vector<SitSet>& table) {
  std::string out;
  for (std::uint32_t b = 0; b < table.size(); ++b) {
    if (table[b].empty()) continue;
    if (!out.empty()) out += "; ";
    out += format_subset(frame, PropSet(b)) + "→" + format_subset(space, table[b]);
  }
  return out.empty() ? "(empty)" : out;
}

}  // namespace

const std::vector<std::string>& fuzz_properties() {
  static const std::vector<std::string> names{
      "generator",      "roundtrip",      "ambiguity", "selection", "decomposition",
      "belief-mass",    "mass-roundtrip", "fishburn",  "oracle"};
  return names;
}

FuzzInstance make_trial(const GenConfig& cfg, std::uint64_t trial) {
  Stream rng = Stream(cfg.seed).split(trial);
  const std::size_t m = rng.between(1, cfg.atoms);
  const std::size_t n = rng.between(1, cfg.situations);
  Frame frame = gen_frame(m);
  SituationSpace space = gen_space(n);
  SetValuedMap j = gen_assignment_table(frame, space, rng, cfg.focal_bias);
  std::vector<SitSet> table(j.table().begin(), j.table().end());
  if (cfg.fault_injection) {
    std::uint64_t a = rng.below(table.size());
    std::uint64_t w = rng.below(n);
    table[a].bits ^= std::uint64_t{1} << w;
  }
  std::vector<Rational> p = gen_weights(n, rng, cfg.zero_inclusive);
  std::uint64_t selector_seed = rng.next();
  return FuzzInstance{std::move(frame), std::move(space), std::move(table), std::move(p),
                      selector_seed};
}

std::vector<std::optional<std::string>> run_properties(const FuzzInstance& inst) {
  std::vector<std::optional<std::string>> out(kPropertyCount);
  SweepOptions exhaustive;
  exhaustive.force_exhaustive = true;

  auto guard = [&](Property p, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      out[p] = e.what();
    }
  };

  const SetValuedMap jmap(inst.frame, inst.space, inst.assignment);
  std::optional<BasicAssignment> j;
  std::optional<IntervalStructure> s;
  std::optional<AmbiguityMap> a;
  std::optional<BeliefReport> belief;
  std::optional<MassFunction> mass;

  auto need = [](bool present) {
    if (!present) throw std::runtime_error("prerequisite failed");
  };

  guard(kGenerator, [&] { require(check_assignment(jmap), "generated assignment"); });

  guard(kRoundTrip, [&] {
    j.emplace(jmap);
    IntervalStructure built = structure_from_assignment(*j);
    require(check_interval_pair(built.lower(), built.upper(), exhaustive), "structure axioms");
    BasicAssignment back = extract_assignment(built);
    require(back == *j, "extract(build(j)) differs from j");
    require(structure_from_assignment(back) == built, "build(extract(s)) differs from s");
    require(monotone(built.lower()) && monotone(built.upper()), "monotonicity");
    s.emplace(std::move(built));
  });

  guard(kAmbiguity, [&] {
    need(s.has_value());
    AmbiguityMap amb = ambiguity_from_interval(*s);
    require(check_ambiguity_axioms(amb.map(), exhaustive), "ambiguity axioms");
    for (std::uint32_t p = 0; p < amb.map().subset_count(); ++p) {
      PropSet A(p);
      require((amb[A] & s->lower()[A]).empty() && (amb[A] | s->lower()[A]) == s->upper()[A],
              "a(A) does not split upper(A) − lower(A)");
    }
    a.emplace(std::move(amb));
  });

  const std::vector<Selector> selectors = selector_family(inst.selector_seed);

  guard(kSelection, [&] {
    need(j.has_value() && s.has_value());
    for (const Selector& sel : selectors) {
      IncidenceMap i = select_incidence(*j, sel);
      require(check_incidence_axioms(i.map(), exhaustive), "incidence axioms");
      require(check_sandwich(*s, i), "sandwich");
    }
  });

  guard(kDecomposition, [&] {
    need(s.has_value() && a.has_value());
    for (const Selector& sel : selectors) {
      Decomposition d = decompose_interval(*s, sel);
      require(check_compatibility(d.incidence, d.ambiguity, exhaustive), "compatibility");
      require(check_reconstruction(*s, d.incidence.map(), d.ambiguity.map()), "c1/c2");
      require(d.ambiguity == *a, "ambiguity depends on the selector");
      require(compose_interval(d.incidence, d.ambiguity, exhaustive) == *s,
              "compose(decompose(s)) differs from s");
    }
  });

  guard(kBeliefMass, [&] {
    need(s.has_value());
    ProbabilityAssignment prob(inst.space, inst.probability);
    BeliefReport rep = belief_from_structure(*s, prob);
    MassFunction m = mass_from_structure(*s, prob);
    require(check_belief_identity(rep, m), "belief identity");
    for (std::uint32_t b = 0; b < inst.frame.subset_count(); ++b) {
      for (std::uint32_t x = b;; x = (x - 1) & b) {
        require(rep.bel(PropSet(x)) <= rep.bel(PropSet(b)) &&
                    rep.pl(PropSet(x)) <= rep.pl(PropSet(b)),
                "Bel/Pl monotonicity");
        if (x == 0) break;
      }
    }
    belief.emplace(std::move(rep));
    mass.emplace(std::move(m));
  });

  guard(kMassRoundtrip, [&] {
    need(belief.has_value() && mass.has_value());
    MassRealization real = structure_from_mass(*mass);
    BeliefReport rep = belief_from_structure(real.structure, real.probability);
    for (std::uint32_t b = 0; b < inst.frame.subset_count(); ++b) {
      require(rep.bel(PropSet(b)) == belief->bel(PropSet(b)) &&
                  rep.pl(PropSet(b)) == belief->pl(PropSet(b)),
              "realized structure changes Bel/Pl");
    }
    require(check_belief_identity(rep, *mass), "realized belief identity");
  });

  guard(kFishburn, [&] {
    need(belief.has_value());
    require(fishburn_report(*belief, exhaustive), "fishburn axioms");
  });

  guard(kOracle, [&] {
    require_agreement(check_assignment(jmap), oracle::verify_assignment(jmap), "assignment");
    if (!s) return;
    require_agreement(check_interval_pair(s->lower(), s->upper(), exhaustive),
                      oracle::verify_interval(s->lower(), s->upper()), "interval");
    require(oracle::naive_extract(s->lower()) == extract_assignment(*s).map(),
            "naive and submask extraction differ");
    require(oracle::naive_lower(jmap) == s->lower() && oracle::naive_upper(jmap) == s->upper(),
            "naive and submask structure differ");
    if (!a) return;
    require_agreement(check_ambiguity_axioms(a->map(), exhaustive),
                      oracle::verify_ambiguity(a->map()), "ambiguity");
    IncidenceMap i = select_incidence(*j, selectors.front());
    require_agreement(check_incidence_axioms(i.map(), exhaustive),
                      oracle::verify_incidence(i.map()), "incidence");
    require_agreement(check_sandwich(*s, i),
                      oracle::verify_sandwich(s->lower(), s->upper(), i.map()), "sandwich");
    require_agreement(check_compatibility(i.map(), a->map(), exhaustive),
                      oracle::verify_compatibility(i.map(), a->map()), "compatibility");
  });

  return out;
}

namespace {

std::vector<Rational> renormalized(std::vector<Rational> p) {
  Rational total = 0;
  for (const auto& v : p) total += v;
  if (total == 0) {
    for (auto& v : p) v = Rational(1, static_cast<long long>(p.size()));
  } else {
    for (auto& v : p) v /= total;
  }
  return p;
}

std::vector<std::string> names_without(const Universe& u, std::size_t drop) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (k != drop) out.push_back(u.name(k));
  }
  return out;
}

// Removes bit `drop` and closes the gap.
std::uint64_t squeeze(std::uint64_t bits, std::size_t drop) {
  const std::uint64_t low = bits & ((std::uint64_t{1} << drop) - 1);
  return low | ((bits >> (drop + 1)) << drop);
}

FuzzInstance drop_situation(const FuzzInstance& inst, std::size_t w) {
  std::vector<SitSet> table;
  for (SitSet s : inst.assignment) table.emplace_back(squeeze(s.bits, w));
  std::vector<Rational> p = inst.probability;
  p.erase(p.begin() + static_cast<std::ptrdiff_t>(w));
  return FuzzInstance{inst.frame, SituationSpace(names_without(inst.space, w)),
                      std::move(table), renormalized(std::move(p)), inst.selector_seed};
}

// Removes atom t: B maps to B∖{t}. The singleton {t} would collapse onto ∅, so
// its situations move to the new full frame instead.
FuzzInstance drop_atom(const FuzzInstance& inst, std::size_t t) {
  Frame frame(names_without(inst.frame, t));
  std::vector<SitSet> table(frame.subset_count());
  for (std::uint32_t b = 0; b < inst.assignment.size(); ++b) {
    std::uint32_t target = static_cast<std::uint32_t>(squeeze(b, t));
    if (b == (std::uint32_t{1} << t)) target = frame.full().bits;
    table[target] |= inst.assignment[b];
  }
  return FuzzInstance{std::move(frame), inst.space, std::move(table), inst.probability,
                      inst.selector_seed};
}

bool fails(const FuzzInstance& inst, std::size_t property) {
  return run_properties(inst)[property].has_value();
}

}  // namespace

FuzzInstance shrink(const FuzzInstance& inst, std::size_t property) {
  FuzzInstance cur = inst;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t w = cur.space.size(); w-- > 0 && cur.space.size() > 1;) {
      FuzzInstance next = drop_situation(cur, w);
      if (fails(next, property)) {
        cur = std::move(next);
        progress = true;
        break;
      }
    }
    if (progress) continue;
    for (std::size_t t = cur.frame.size(); t-- > 0 && cur.frame.size() > 1;) {
      FuzzInstance next = drop_atom(cur, t);
      if (fails(next, property)) {
        cur = std::move(next);
        progress = true;
        break;
      }
    }
  }
  return cur;
}

FuzzReport fuzz(const GenConfig& cfg) {
  validate(cfg);
  const std::size_t trials = static_cast<std::size_t>(cfg.trials);
  std::vector<std::vector<std::optional<std::string>>> results(trials);

  unsigned workers = cfg.threads != 0 ? cfg.threads : worker_count();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, trials));
  {
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t t; (t = next.fetch_add(1)) < trials;) {
        results[t] = run_properties(make_trial(cfg, t));
      }
    };
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
  }

  FuzzReport report;
  report.config = cfg;
  for (const auto& name : fuzz_properties()) report.properties.push_back({name, 0, 0});
  for (std::size_t t = 0; t < trials; ++t) {
    for (std::size_t p = 0; p < kPropertyCount; ++p) {
      if (!results[t][p]) {
        ++report.properties[p].pass;
        continue;
      }
      ++report.properties[p].fail;
      FuzzInstance inst = make_trial(cfg, t);
      FuzzInstance small = shrink(inst, p);
      FuzzFailure f;
      f.trial = t;
      f.trial_seed = Stream(cfg.seed).split(t).seed();
      f.property = fuzz_properties()[p];
      f.detail = run_properties(small)[p].value_or(*results[t][p]);
      f.atoms = small.frame.size();
      f.situations = small.space.size();
      f.assignment = render_assignment(small.frame, small.space, small.assignment);
      report.failures.push_back(std::move(f));
    }
  }
  return report;
}

std::string FuzzReport::render() const {
  std::string out = "fuzz seed=" + std::to_string(config.seed) +
                    " trials=" + std::to_string(config.trials) +
                    " atoms<=" + std::to_string(config.atoms) +
                    " situations<=" + std::to_string(config.situations);
  if (config.fault_injection) out += " fault-injection";
  out += '\n';
  for (const auto& p : properties) {
    out += (p.fail == 0 ? "✓ " : "✗ ") + p.name + " pass=" + std::to_string(p.pass) +
           " fail=" + std::to_string(p.fail) + '\n';
  }
  out += "failures: " + std::to_string(failures.size()) + '\n';
  for (const auto& f : failures) {
    out += "  trial " + std::to_string(f.trial) + " (seed " + std::to_string(f.trial_seed) +
           ") " + f.property + ": " + f.detail + '\n';
    out += "    shrunk to atoms=" + std::to_string(f.atoms) +
           " situations=" + std::to_string(f.situations) + " j: " + f.assignment + '\n';
  }
  return out;
}

}  // namespace ambig
