#pragma once

#include <cstdint>
#include <optional>

#include "ambig/incidence.hpp"
#include "ambig/interval.hpp"
#include "ambig/numeric.hpp"
#include "ambig/random.hpp"

namespace ambig {

struct GenConfig {
  std::size_t atoms = 3;
  std::size_t situations = 5;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1;
  // Relative weight of focal size k is bias^(k-1): below 1 favours small
  // focal elements, above 1 large ones. Unset draws uniformly over non-empty
  // subsets.
  std::optional<double> focal_bias;
  // Probability weights drawn from [0, 1000] instead of [1, 1000].
  bool zero_inclusive = false;
  // Fuzz only: flip one bit of every generated assignment.
  bool fault_injection = false;
  // Fuzz only: worker threads, 0 for worker_count().
  unsigned threads = 0;
};

// Throws InvalidUniverse or ValidationError for out-of-range settings.
void validate(const GenConfig& cfg);

// Atoms "t1".."tm" and situations "w1".."wn".
Frame gen_frame(std::size_t atoms);
SituationSpace gen_space(std::size_t situations);

// Each situation independently receives a non-empty focal element.
BasicAssignment gen_assignment(const GenConfig& cfg);
PointMap gen_pointmap(const GenConfig& cfg);
ProbabilityAssignment gen_probability(const GenConfig& cfg);

// Stream-driven forms used by the fuzz driver.
SetValuedMap gen_assignment_table(const Frame& frame, const SituationSpace& space,
                                  Stream& rng, std::optional<double> focal_bias);
std::vector<Rational> gen_weights(std::size_t situations, Stream& rng, bool zero_inclusive);

}  // namespace ambig
