#include "ambig/generators.hpp"

#include <cmath>
#include <string>

#include "ambig/error.hpp"

namespace ambig {

namespace {

// Keys separating the streams drawn from one GenConfig seed.
constexpr std::uint64_t kAssignmentKey = 1;
constexpr std::uint64_t kPointMapKey = 2;
constexpr std::uint64_t kProbabilityKey = 3;

std::vector<std::string> numbered(const char* prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= count; ++k) out.push_back(prefix + std::to_string(k));
  return out;
}

// Uniform subset of `atoms` bits with exactly `size` members.
std::uint32_t subset_of_size(std::size_t atoms, std::size_t size, Stream& rng) {
  std::vector<std::size_t> pool(atoms);
  for (std::size_t k = 0; k < atoms; ++k) pool[k] = k;
  std::uint32_t bits = 0;
  for (std::size_t k = 0; k < size; ++k) {
    std::size_t pick = k + rng.below(atoms - k);
    std::swap(pool[k], pool[pick]);
    bits |= std::uint32_t{1} << pool[k];
  }
  return bits;
}

}  // namespace

void validate(const GenConfig& cfg) {
  if (cfg.atoms < 1 || cfg.atoms > Frame::kMaxAtoms) {
    throw InvalidUniverse("atoms must be in 1.." + std::to_string(Frame::kMaxAtoms));
  }
  if (cfg.situations < 1 || cfg.situations > SituationSpace::kMaxSituations) {
    throw InvalidUniverse("situations must be in 1.." +
                          std::to_string(SituationSpace::kMaxSituations));
  }
  if (cfg.trials < 1) throw ValidationError("trials must be at least 1");
  if (cfg.focal_bias && !(*cfg.focal_bias > 0 && std::isfinite(*cfg.focal_bias))) {
    throw ValidationError("focal bias must be a positive finite number");
  }
}

Frame gen_frame(std::size_t atoms) { return Frame(numbered("t", atoms)); }

SituationSpace gen_space(std::size_t situations) {
  return SituationSpace(numbered("w", situations));
}

SetValuedMap gen_assignment_table(const Frame& frame, const SituationSpace& space,
                                  Stream& rng, std::optional<double> focal_bias) {
  const std::size_t m = frame.size();
  SetValuedMap j(frame, space);
  std::vector<double> size_weights;
  if (focal_bias) {
    for (std::size_t k = 1; k <= m; ++k) {
      size_weights.push_back(std::pow(*focal_bias, static_cast<double>(k - 1)));
    }
  }
  for (std::size_t w = 0; w < space.size(); ++w) {
    std::uint32_t focal;
    if (focal_bias) {
      std::size_t size = rng.weighted(size_weights) + 1;
      focal = subset_of_size(m, size, rng);
    } else {
      focal = static_cast<std::uint32_t>(rng.between(1, frame.full().bits));
    }
    j.set(PropSet(focal), j[PropSet(focal)] | SitSet::singleton(w));
  }
  return j;
}

std::vector<Rational> gen_weights(std::size_t situations, Stream& rng, bool zero_inclusive) {
  std::vector<long long> raw(situations);
  long long total = 0;
  for (auto& r : raw) {
    r = static_cast<long long>(rng.between(zero_inclusive ? 0 : 1, 1000));
    total += r;
  }
  if (total == 0) {
    raw[0] = 1;
    total = 1;
  }
  std::vector<Rational> out;
  out.reserve(situations);
  for (long long r : raw) out.emplace_back(r, total);
  return out;
}

BasicAssignment gen_assignment(const GenConfig& cfg) {
  validate(cfg);
  Stream rng = Stream(cfg.seed).split(kAssignmentKey);
  SetValuedMap j = gen_assignment_table(gen_frame(cfg.atoms), gen_space(cfg.situations), rng,
                                        cfg.focal_bias);
  try {
    return BasicAssignment(std::move(j));
  } catch (const AssignmentAxiomViolation& e) {
    throw InternalInvariantFailure(std::string("generated assignment: ") + e.what());
  }
}

PointMap gen_pointmap(const GenConfig& cfg) {
  validate(cfg);
  Stream rng = Stream(cfg.seed).split(kPointMapKey);
  std::vector<std::size_t> atom_of(cfg.situations);
  for (auto& a : atom_of) a = rng.below(cfg.atoms);
  return PointMap(std::move(atom_of));
}

ProbabilityAssignment gen_probability(const GenConfig& cfg) {
  validate(cfg);
  Stream rng = Stream(cfg.seed).split(kProbabilityKey);
  return ProbabilityAssignment(gen_space(cfg.situations),
                               gen_weights(cfg.situations, rng, cfg.zero_inclusive));
}

}  // namespace ambig
