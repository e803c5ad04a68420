#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ambig/generators.hpp"

namespace ambig {

// One generated case: an assignment table (possibly corrupted), a probability
// on its situations and the seed of the selector family.
struct FuzzInstance {
  Frame frame;
  SituationSpace space;
  std::vector<SitSet> assignment;
  std::vector<Rational> probability;
  std::uint64_t selector_seed = 0;
};

struct PropertyTally {
  std::string name;
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
};

struct FuzzFailure {
  std::uint64_t trial = 0;
  std::uint64_t trial_seed = 0;
  std::string property;
  // Failure message on the shrunk instance.
  std::string detail;
  std::size_t atoms = 0;
  std::size_t situations = 0;
  // Shrunk assignment rendered as "key→{situations}" cells.
  std::string assignment;
};

struct FuzzReport {
  GenConfig config;
  std::vector<PropertyTally> properties;
  std::vector<FuzzFailure> failures;

  bool ok() const { return failures.empty(); }
  // Deterministic text rendering (no timings, no thread counts).
  std::string render() const;
};

// Property names in report order.
const std::vector<std::string>& fuzz_properties();

// The instance for `trial`, derived from (cfg.seed, trial) alone.
FuzzInstance make_trial(const GenConfig& cfg, std::uint64_t trial);

// Runs every property; entry k is the failure message for fuzz_properties()[k].
std::vector<std::optional<std::string>> run_properties(const FuzzInstance& inst);

// Drops situations (highest index first), then atoms, while `property` keeps
// failing.
FuzzInstance shrink(const FuzzInstance& inst, std::size_t property);

FuzzReport fuzz(const GenConfig& cfg);

}  // namespace ambig
