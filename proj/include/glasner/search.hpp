#pragma once

// The top-level experiment engine: densification search over prime
// assignments, adversarial point-set generators, and empirical k(eps)
// exponent scans against the reference exponents
//
//   independent primes: 2L(m+1)n   (m = 1: 2Ln)
//   single prime:       (2L+1)(m+1)n   (m = 1: (2L+1)n)
//
// A budgeted search cannot certify non-existence: found = false means "not
// within budget", never a refutation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glasner/family.hpp"
#include "glasner/numeric.hpp"
#include "glasner/torus.hpp"

namespace glasner {

enum class Strategy { Exhaustive, RandomSample, GreedyRowwise };

struct SearchConfig {
  double eps = 0.1;
  Metric metric = Metric::Sup;
  double resolution = 1e-3;
  int64_t prime_budget = 1000;  // assignments tested (Exhaustive/RandomSample) / pool size
  Strategy strategy = Strategy::Exhaustive;
  uint64_t rng_seed = 0;
  int64_t freq_box = 0;  // S_T edge, carried for reporting; 0 = unset
  int threads = 1;
};

struct SearchReport {
  bool found = false;
  std::optional<PrimeAssignment> witness_primes;
  std::optional<BigIntMatrix> matrix;
  DensityReport density;  // re-verified density of the witness, or best candidate seen
  int64_t assignments_tested = 0;
  double wall_seconds = 0.0;
  bool unknown_flagged = false;  // some verdict came back Unknown (counted as not dense)
};

// Iteration orders are documented and deterministic: Exhaustive enumerates the
// prime grid as an odometer over the first `prime_budget` primes with the last
// (row-major) cell fastest; RandomSample derives the i-th assignment from
// (rng_seed, i) alone; GreedyRowwise tunes each row against its projected
// 1-D covering radius, then verifies jointly. Every found = true result is
// re-verified with a fresh density call at half the configured resolution.
SearchReport search(const MatrixFamily& fam, const ExactPointSet& x, const SearchConfig& cfg);

enum class GeneratorKind { BallCluster, HalfGrid, ArithmeticProgression, RandomBoundedDenominator };

struct GeneratorParams {
  Rational rho{1, 100};        // BallCluster radius
  Rational ap_step{0, 1};      // ArithmeticProgression step a/q; 0 = use 1/k
  int64_t max_denominator = 100;  // RandomBoundedDenominator cap; 0 = auto from k
};

PointSet<Rational> generate_adversarial(GeneratorKind kind, int64_t k, int dim,
                                        const GeneratorParams& params, uint64_t seed);

// floor(1/eps)^n, the sphere-packing obstruction.
BigInt packing_lower_bound(int dim, double eps);

// floor(1/eps)^n distinct points inside a ball small enough that the set is
// certifiably not eps-dense.
PointSet<Rational> packing_point_set(int dim, double eps, uint64_t seed);

struct ScanRow {
  double eps = 0.0;
  std::optional<int64_t> k_min_success;
  std::optional<int64_t> k_max_failure;
  bool budget_exhausted = false;
  int64_t assignments_total = 0;  // prime assignments tested across this row's searches
};

struct ExponentScanResult {
  std::vector<ScanRow> rows;
  double fitted_exponent = 0.0;  // slope of log k_min vs log(1/eps); NaN if underdetermined
  double reference_exponent = 0.0;
  std::vector<std::string> warnings;
};

struct ScanConfig {
  GeneratorKind kind = GeneratorKind::RandomBoundedDenominator;
  GeneratorParams params;
  int reps = 5;          // majority over draws, ties toward failure
  int64_t k_cap = 4096;  // binary-search ceiling
  SearchConfig search_template;
};

double reference_exponent(const MatrixFamily& fam);

// For each eps (decreasing), binary-search the least k at which search
// succeeds for a majority of `reps` generator draws within budget, assuming
// success monotone in k (heuristic, verified empirically).
ExponentScanResult exponent_scan(const MatrixFamily& fam, const std::vector<double>& eps_schedule,
                                 const ScanConfig& cfg);

}  // namespace glasner
