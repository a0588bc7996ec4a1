#pragma once

#include "procdual/duality.hpp"

#include <cstdint>
#include <functional>
#include <random>

namespace procdual {

/// Portable draws: results depend only on the seed, not on the standard
/// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  long integer(long lo, long hi);
  Rational rational(long radius, long max_den);
  Vector vector(std::size_t n, long radius, long max_den = 1);
  bool chance(int percent) { return integer(0, 99) < percent; }

 private:
  std::mt19937_64 engine_;
};

/// A valid random instance: dims <= 3, a bounded Ω of at most 6
/// constraints, affine F and G, Slater holding at the centre of Ω.
ProgramInstance random_instance(Rng& rng, std::string id);
std::vector<ProgramInstance> random_corpus(std::uint64_t seed, std::size_t count);

struct InstanceCheck {
  std::string id;
  std::vector<Vector> y0s;
  std::size_t multipliers = 0, multiplier_failures = 0;
  std::size_t shape_failures = 0;  // pointed, full domain, strict containment
  std::size_t inclusion_cases = 0, inclusion_failures = 0;
  std::size_t dual_pairs = 0, weak_violations = 0;
  std::vector<Certificate> failed;
  std::string error;

  bool passed() const {
    return error.empty() && multiplier_failures == 0 && shape_failures == 0 && inclusion_failures == 0 &&
           weak_violations == 0;
  }
};

/// Builds and verifies multipliers at up to `max_points` minimal points of
/// P(0), then runs weak duality on up to `pairs_wanted` dual candidates.
InstanceCheck check_instance(const ProgramInstance& inst, std::size_t max_points = 2, std::size_t pairs_wanted = 8);

/// Worker count from PROCDUAL_WORKERS, else the hardware concurrency.
unsigned worker_count();

/// Runs `check_instance` over the corpus; results sorted by instance id.
std::vector<InstanceCheck> check_all(const std::vector<ProgramInstance>& corpus, unsigned workers);

/// Greedily drops constraints while `still_fails` keeps holding.
ProgramInstance minimize_counterexample(const ProgramInstance& inst,
                                        const std::function<bool(const ProgramInstance&)>& still_fails);

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string counterexample;

  bool passed() const { return failures == 0; }
};

SuiteResult bipolar_suite(std::uint64_t seed, std::size_t n);
SuiteResult dd_round_trip_suite(std::uint64_t seed, std::size_t n);
SuiteResult projection_grid_suite(std::uint64_t seed, std::size_t n);
SuiteResult box_translate_suite(std::uint64_t seed, std::size_t n);
SuiteResult slab_suite(std::uint64_t seed, std::size_t n);

}  // namespace procdual
