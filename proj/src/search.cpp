#include "glasner/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "glasner/primes.hpp"

namespace glasner {

namespace {

struct Candidate {
  DensityReport density;
  bool unknown = false;
};

// One assignment by documented index. Exhaustive: odometer over the prime
// pool, last row-major cell fastest. RandomSample: derived from (seed, index).
PrimeAssignment assignment_by_index(const MatrixFamily& fam, const SearchConfig& cfg,
                                    const PrimeTable& pool, int64_t index) {
  const int cells = fam.mode == PrimeMode::SinglePrime ? 1 : fam.rows * fam.cols;
  PrimeAssignment pa;
  pa.primes.resize(static_cast<size_t>(cells));
  if (cfg.strategy == Strategy::RandomSample) {
    Rng rng(cfg.rng_seed ^ (0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(index + 1)));
    for (auto& p : pa.primes)
      p = pool.primes[rng.below(static_cast<uint64_t>(pool.size()))];
    return pa;
  }
  int64_t rest = index;
  for (int c = cells - 1; c >= 0; --c) {
    pa.primes[static_cast<size_t>(c)] = pool.primes[static_cast<size_t>(rest % pool.size())];
    rest /= pool.size();
  }
  return pa;
}

Candidate evaluate(const MatrixFamily& fam, const ExactPointSet& x, const SearchConfig& cfg,
                   const PrimeAssignment& pa) {
  const BigIntMatrix M = instantiate(fam, pa);
  const ExactPointSet image = apply_integer_matrix(M, x);
  Candidate c;
  c.density = is_eps_dense(image, cfg.eps, cfg.resolution, cfg.metric, 1);
  c.unknown = c.density.verdict == Verdict::Unknown;
  return c;
}

int64_t exhaustive_space(const MatrixFamily& fam, const SearchConfig& cfg, const PrimeTable& pool) {
  if (fam.mode == PrimeMode::SinglePrime) return pool.size();
  const int cells = fam.rows * fam.cols;
  int64_t space = 1;
  for (int i = 0; i < cells; ++i) {
    if (pool.size() > 0 && space > cfg.prime_budget / pool.size() + 1) return cfg.prime_budget;
    space *= pool.size();
    if (space >= cfg.prime_budget) return cfg.prime_budget;
  }
  return std::min(space, cfg.prime_budget);
}

SearchReport greedy_rowwise(const MatrixFamily& fam, const ExactPointSet& x,
                            const SearchConfig& cfg, const PrimeTable& pool);

}  // namespace

SearchReport search(const MatrixFamily& fam, const ExactPointSet& x, const SearchConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  if (x.dim() != fam.cols)
    throw std::invalid_argument("search: point set dimension must equal the family's column count");
  const FamilyCheck fc = check_family(fam);
  if (!fc.valid)
    throw std::invalid_argument("search: invalid family: " + fc.failures.front());
  if (cfg.prime_budget < 1) throw std::invalid_argument("search: prime budget must be >= 1");
  if (cfg.strategy == Strategy::GreedyRowwise && fam.mode != PrimeMode::IndependentPrimes)
    throw std::invalid_argument("search: GreedyRowwise requires IndependentPrimes mode");

  const PrimeTable pool = first_n_primes(cfg.prime_budget);

  SearchReport rep;
  if (cfg.strategy == Strategy::GreedyRowwise) {
    rep = greedy_rowwise(fam, x, cfg, pool);
  } else {
    const int64_t total = cfg.strategy == Strategy::RandomSample
                              ? cfg.prime_budget
                              : exhaustive_space(fam, cfg, pool);

    struct WorkerResult {
      int64_t success_index = -1;
      double best_hi = std::numeric_limits<double>::infinity();
      int64_t best_index = -1;
      bool unknown = false;
    };
    std::vector<WorkerResult> results(static_cast<size_t>(std::max(cfg.threads, 1)));

    parallel_chunks(total, cfg.threads, [&](int64_t lo, int64_t hi, int worker) {
      WorkerResult wr;
      for (int64_t i = lo; i < hi; ++i) {
        const PrimeAssignment pa = assignment_by_index(fam, cfg, pool, i);
        const Candidate c = evaluate(fam, x, cfg, pa);
        wr.unknown = wr.unknown || c.unknown;
        if (c.density.covering_radius_hi < wr.best_hi) {
          wr.best_hi = c.density.covering_radius_hi;
          wr.best_index = i;
        }
        if (c.density.verdict == Verdict::Dense) {
          wr.success_index = i;
          break;
        }
      }
      results[static_cast<size_t>(worker)] = wr;
    });

    int64_t success = -1;
    int64_t best_index = -1;
    double best_hi = std::numeric_limits<double>::infinity();
    for (const auto& wr : results) {
      rep.unknown_flagged = rep.unknown_flagged || wr.unknown;
      if (wr.success_index >= 0 && (success < 0 || wr.success_index < success))
        success = wr.success_index;
      if (wr.best_index >= 0 &&
          (wr.best_hi < best_hi || (wr.best_hi == best_hi && wr.best_index < best_index)))
        best_hi = wr.best_hi, best_index = wr.best_index;
    }
    if (success >= 0) {
      const PrimeAssignment pa = assignment_by_index(fam, cfg, pool, success);
      const BigIntMatrix M = instantiate(fam, pa);
      const ExactPointSet image = apply_integer_matrix(M, x);
      // soundness: fresh verification at half resolution before claiming found
      const DensityReport fresh =
          is_eps_dense(image, cfg.eps, cfg.resolution / 2.0, cfg.metric, cfg.threads);
      rep.density = fresh;
      rep.assignments_tested = success + 1;
      if (fresh.verdict == Verdict::Dense) {
        rep.found = true;
        rep.witness_primes = pa;
        rep.matrix = M;
      }
    } else {
      rep.assignments_tested = total;
      if (best_index >= 0) {
        const PrimeAssignment pa = assignment_by_index(fam, cfg, pool, best_index);
        rep.density = evaluate(fam, x, cfg, pa).density;
      }
    }
  }
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

namespace {

SearchReport greedy_rowwise(const MatrixFamily& fam, const ExactPointSet& x,
                            const SearchConfig& cfg, const PrimeTable& pool) {
  SearchReport rep;
  const int64_t per_row = std::max<int64_t>(1, cfg.prime_budget / fam.rows);
  PrimeAssignment joint;
  joint.primes.resize(static_cast<size_t>(fam.rows) * fam.cols);

  for (int i = 0; i < fam.rows; ++i) {
    // row image is 1-D: score candidate row assignments by exact sweep radius
    double best_score = std::numeric_limits<double>::infinity();
    std::vector<int64_t> best_row;
    int64_t tested = 0;
    std::vector<int64_t> idx(static_cast<size_t>(fam.cols), 0);
    while (tested < per_row) {
      std::vector<int64_t> row(static_cast<size_t>(fam.cols));
      for (int j = 0; j < fam.cols; ++j)
        row[static_cast<size_t>(j)] = pool.primes[static_cast<size_t>(idx[static_cast<size_t>(j)])];
      // project: y = sum_j f_ij(p_ij) x^j mod 1
      std::vector<ExactTorusPoint> proj;
      proj.reserve(static_cast<size_t>(x.size()));
      for (const auto& pt : x.points()) {
        Rational acc = 0;
        for (int j = 0; j < fam.cols; ++j)
          acc += Rational(fam.entry(i, j).eval_integer(BigInt(row[static_cast<size_t>(j)]))) * pt[j];
        proj.emplace_back(std::vector<Rational>{mod1(acc)});
      }
      std::sort(proj.begin(), proj.end());
      proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
      const CoveringRadius cr = covering_radius(ExactPointSet(std::move(proj)), cfg.resolution,
                                                cfg.metric, 1);
      const double score = (cr.lo + cr.hi) / 2.0;
      if (score < best_score) {
        best_score = score;
        best_row = row;
      }
      ++tested;
      // odometer over the row's cells, last cell fastest
      int j = fam.cols - 1;
      while (j >= 0 && ++idx[static_cast<size_t>(j)] == pool.size()) {
        idx[static_cast<size_t>(j)] = 0;
        --j;
      }
      if (j < 0) break;
    }
    rep.assignments_tested += tested;
    for (int j = 0; j < fam.cols; ++j)
      joint.primes[static_cast<size_t>(i) * fam.cols + j] = best_row[static_cast<size_t>(j)];
  }

  const BigIntMatrix M = instantiate(fam, joint);
  const ExactPointSet image = apply_integer_matrix(M, x);
  const DensityReport joint_density =
      is_eps_dense(image, cfg.eps, cfg.resolution / 2.0, cfg.metric, cfg.threads);
  rep.density = joint_density;
  rep.unknown_flagged = joint_density.verdict == Verdict::Unknown;
  if (joint_density.verdict == Verdict::Dense) {
    rep.found = true;
    rep.witness_primes = joint;
    rep.matrix = M;
  }
  return rep;
}

int64_t to_int64(const BigInt& v, const char* who) {
  if (v > std::numeric_limits<int64_t>::max())
    throw std::invalid_argument(std::string(who) + ": value too large");
  return v.convert_to<int64_t>();
}

}  // namespace

PointSet<Rational> generate_adversarial(GeneratorKind kind, int64_t k, int dim,
                                        const GeneratorParams& params, uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("generate_adversarial: dim must be >= 1");
  Rng rng(seed);
  std::vector<ExactTorusPoint> pts;

  switch (kind) {
    case GeneratorKind::HalfGrid: {
      const int64_t expect = int64_t(1) << dim;
      if (k != expect)
        throw std::invalid_argument("generate_adversarial: HalfGrid in dimension " +
                                    std::to_string(dim) + " forces k = " + std::to_string(expect));
      for (int64_t mask = 0; mask < expect; ++mask) {
        std::vector<Rational> c(static_cast<size_t>(dim));
        for (int i = 0; i < dim; ++i)
          c[static_cast<size_t>(i)] = (mask >> i) & 1 ? Rational(1, 2) : Rational(0);
        pts.emplace_back(std::move(c));
      }
      break;
    }
    case GeneratorKind::BallCluster: {
      if (k < 1) throw std::invalid_argument("generate_adversarial: k must be >= 1");
      if (!(params.rho > 0) || params.rho >= Rational(1, 2))
        throw std::invalid_argument("generate_adversarial: rho must lie in (0, 1/2)");
      // random rational center, then a spread along the first axis strictly
      // inside the ball: offsets t*rho/(2k), t = 0..k-1
      const int64_t q0 = 997;
      std::vector<Rational> center(static_cast<size_t>(dim));
      for (int i = 0; i < dim; ++i)
        center[static_cast<size_t>(i)] = Rational(static_cast<int64_t>(rng.below(q0)), q0);
      for (int64_t t = 0; t < k; ++t) {
        std::vector<Rational> c = center;
        c[0] = mod1(c[0] + params.rho * Rational(t, 2 * k));
        pts.emplace_back(std::move(c));
      }
      break;
    }
    case GeneratorKind::ArithmeticProgression: {
      if (k < 1) throw std::invalid_argument("generate_adversarial: k must be >= 1");
      Rational step = params.ap_step == 0 ? Rational(1, k) : mod1(params.ap_step);
      if (step == 0) throw std::invalid_argument("generate_adversarial: zero AP step");
      if (BigInt(k) > denom(step))
        throw std::invalid_argument(
            "generate_adversarial: AP wraps onto itself (k exceeds the step's denominator)");
      for (int64_t j = 0; j < k; ++j) {
        std::vector<Rational> c(static_cast<size_t>(dim), mod1(step * j));
        pts.emplace_back(std::move(c));
      }
      break;
    }
    case GeneratorKind::RandomBoundedDenominator: {
      if (k < 1) throw std::invalid_argument("generate_adversarial: k must be >= 1");
      int64_t cap = params.max_denominator;
      if (cap == 0) {
        // smallest D whose coordinate pool (1 + sum phi(q), q <= D) reaches
        // ceil(k^(1/dim)); keeps the generated sets denominator-saturated
        const double target = std::ceil(std::pow(static_cast<double>(k), 1.0 / dim));
        int64_t pool = 1;
        cap = 1;
        while (static_cast<double>(pool) < target) {
          ++cap;
          pool += euler_phi(cap);
        }
      }
      if (cap < 1) throw std::invalid_argument("generate_adversarial: denominator cap must be >= 1");
      // uniform over reduced fractions with denominator <= cap, by rejection
      auto draw_coord = [&]() -> Rational {
        while (true) {
          const int64_t q = static_cast<int64_t>(rng.below(static_cast<uint64_t>(cap))) + 1;
          const int64_t p = static_cast<int64_t>(rng.below(static_cast<uint64_t>(cap)));
          if (p >= q) continue;
          if (std::gcd(p, q) != 1) continue;
          return Rational(p, q);
        }
      };
      std::set<ExactTorusPoint> seen;
      int64_t attempts = 0;
      const int64_t max_attempts = 1000 * k + 1000000;
      while (static_cast<int64_t>(seen.size()) < k) {
        if (++attempts > max_attempts)
          throw std::invalid_argument(
              "generate_adversarial: cannot draw enough distinct points under this denominator cap");
        std::vector<Rational> c(static_cast<size_t>(dim));
        for (int i = 0; i < dim; ++i) c[static_cast<size_t>(i)] = draw_coord();
        seen.emplace(std::move(c));
      }
      pts.assign(seen.begin(), seen.end());
      break;
    }
  }
  return PointSet<Rational>(std::move(pts));
}

BigInt packing_lower_bound(int dim, double eps) {
  if (dim < 1) throw std::invalid_argument("packing_lower_bound: dim must be >= 1");
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("packing_lower_bound: eps must lie in (0,1)");
  const BigInt base = static_cast<int64_t>(std::floor(1.0 / eps));
  BigInt out = 1;
  for (int i = 0; i < dim; ++i) out *= base;
  return out;
}

PointSet<Rational> packing_point_set(int dim, double eps, uint64_t seed) {
  if (!(eps > 0.0 && eps < 0.5))
    throw std::invalid_argument("packing_point_set: eps must lie in (0, 1/2)");
  const int64_t k = to_int64(packing_lower_bound(dim, eps), "packing_point_set");
  GeneratorParams params;
  const Rational margin = (Rational(1, 2) - Rational(eps)) / 4;
  params.rho = std::min(Rational(1, 100), margin);
  return generate_adversarial(GeneratorKind::BallCluster, k, dim, params, seed);
}

double reference_exponent(const MatrixFamily& fam) {
  const double L = fam.max_degree();
  const double n = fam.rows, m = fam.cols;
  if (fam.mode == PrimeMode::IndependentPrimes) return m == 1 ? 2 * L * n : 2 * L * (m + 1) * n;
  return m == 1 ? (2 * L + 1) * n : (2 * L + 1) * (m + 1) * n;
}

ExponentScanResult exponent_scan(const MatrixFamily& fam, const std::vector<double>& eps_schedule,
                                 const ScanConfig& cfg) {
  ExponentScanResult out;
  out.reference_exponent = reference_exponent(fam);
  for (size_t i = 1; i < eps_schedule.size(); ++i)
    if (!(eps_schedule[i] < eps_schedule[i - 1]))
      throw std::invalid_argument("exponent_scan: eps schedule must be strictly decreasing");

  const int needed_majority = cfg.reps / 2 + 1;
  int64_t* tested_acc = nullptr;
  auto succeeds_at = [&](double eps, int64_t k) {
    int successes = 0;
    for (int rep = 0; rep < cfg.reps; ++rep) {
      const uint64_t seed = cfg.search_template.rng_seed ^
                            (0x60bee2bee120fc15ULL * (static_cast<uint64_t>(k) + 1)) ^
                            (0xa3b195354a39b70dULL * (static_cast<uint64_t>(rep) + 1));
      PointSet<Rational> x = [&] {
        if (cfg.kind == GeneratorKind::HalfGrid)
          return generate_adversarial(cfg.kind, int64_t(1) << fam.cols, fam.cols, cfg.params, seed);
        return generate_adversarial(cfg.kind, k, fam.cols, cfg.params, seed);
      }();
      SearchConfig sc = cfg.search_template;
      sc.eps = eps;
      sc.rng_seed = seed;
      const SearchReport sr = search(fam, x, sc);
      if (tested_acc) *tested_acc += sr.assignments_tested;
      if (sr.found) ++successes;
    }
    return successes >= needed_majority;
  };

  for (double eps : eps_schedule) {
    ScanRow row;
    row.eps = eps;
    tested_acc = &row.assignments_total;
    if (cfg.kind == GeneratorKind::HalfGrid) {
      // fixed k = 2^m and (for eps < 1/4 in sup) never dense: record failure
      row.k_max_failure = int64_t(1) << fam.cols;
      row.budget_exhausted = !succeeds_at(eps, *row.k_max_failure);
      if (!row.budget_exhausted) row.k_min_success = row.k_max_failure;
      out.rows.push_back(row);
      continue;
    }
    if (!succeeds_at(eps, cfg.k_cap)) {
      row.k_max_failure = cfg.k_cap;
      row.budget_exhausted = true;
      out.rows.push_back(row);
      continue;
    }
    int64_t lo = 1, hi = cfg.k_cap;  // success at hi; monotone-in-k heuristic
    while (lo < hi) {
      const int64_t mid = lo + (hi - lo) / 2;
      if (succeeds_at(eps, mid)) {
        hi = mid;
      } else {
        row.k_max_failure = std::max(row.k_max_failure.value_or(0), mid);
        lo = mid + 1;
      }
    }
    row.k_min_success = lo;
    out.rows.push_back(row);
  }

  std::vector<double> xs, ys;
  for (const auto& row : out.rows) {
    if (!row.k_min_success) continue;
    xs.push_back(std::log(1.0 / row.eps));
    ys.push_back(std::log(static_cast<double>(*row.k_min_success)));
  }
  const LineFit fit = fit_line(xs, ys);
  out.fitted_exponent = fit.slope;
  if (xs.size() < 2) {
    out.fitted_exponent = std::numeric_limits<double>::quiet_NaN();
    out.warnings.push_back("fit underdetermined: fewer than two rows with a successful k");
  }
  return out;
}

}  // namespace glasner
