#include <doctest.h>

#include <cmath>

#include "glasner/io.hpp"
#include "glasner/search.hpp"

using namespace glasner;

namespace {

MatrixFamily fam_identity() {
  MatrixFamily f;
  f.rows = f.cols = 1;
  f.entries = {RationalPolynomial::parse("x")};
  return f;
}

ExactPointSet grid97() {
  std::vector<ExactTorusPoint> pts;
  for (int i = 0; i < 97; ++i) pts.push_back(reduce_to_torus(std::vector<Rational>{Rational(i, 97)}));
  return ExactPointSet(std::move(pts));
}

Json report_json_without_walltime(const SearchReport& rep) {
  Json j = to_json(rep);
  j.erase("wall_seconds");
  return j;
}

}  // namespace

TEST_CASE("search finds a densifying prime for the 97-point grid") {
  SearchConfig cfg;
  cfg.eps = 0.02;
  cfg.resolution = 1e-4;
  cfg.prime_budget = 50;
  const SearchReport rep = search(fam_identity(), grid97(), cfg);
  CHECK(rep.found);
  REQUIRE(rep.witness_primes.has_value());
  CHECK(rep.witness_primes->primes[0] == 2);  // first prime already works
  CHECK(rep.assignments_tested == 1);
  CHECK(rep.density.verdict == Verdict::Dense);
  // image of the grid under a coprime prime is the same grid: radius 1/194
  CHECK(rep.density.covering_radius_hi == doctest::Approx(1.0 / 194).epsilon(1e-12));
}

TEST_CASE("half-grid sets defeat every budgeted search below eps = 1/4") {
  const auto half =
      generate_adversarial(GeneratorKind::HalfGrid, 2, 1, GeneratorParams{}, 0);
  SearchConfig cfg;
  cfg.eps = 0.2;
  cfg.resolution = 1e-3;
  cfg.prime_budget = 100;
  const SearchReport rep = search(fam_identity(), half, cfg);
  CHECK_FALSE(rep.found);
  CHECK(rep.assignments_tested == 100);
  CHECK_FALSE(rep.witness_primes.has_value());
}

TEST_CASE("a single orbit point cannot densify") {
  const ExactPointSet lone(std::vector<ExactTorusPoint>{
      reduce_to_torus(std::vector<Rational>{Rational(0)})});
  SearchConfig cfg;
  cfg.eps = 0.4;
  cfg.resolution = 1e-3;
  cfg.prime_budget = 30;
  const SearchReport rep = search(fam_identity(), lone, cfg);
  CHECK_FALSE(rep.found);
  CHECK(rep.density.covering_radius_lo == 0.5);  // image is always {0}
}

TEST_CASE("search validates inputs") {
  SearchConfig cfg;
  cfg.prime_budget = 0;
  CHECK_THROWS_AS(search(fam_identity(), grid97(), cfg), std::invalid_argument);

  MatrixFamily bad = fam_identity();
  bad.entries[0] = RationalPolynomial::parse("7");
  SearchConfig ok;
  CHECK_THROWS_AS(search(bad, grid97(), ok), std::invalid_argument);

  MatrixFamily two;
  two.rows = 1;
  two.cols = 2;
  two.entries = {RationalPolynomial::parse("x"), RationalPolynomial::parse("x^2")};
  CHECK_THROWS_AS(search(two, grid97(), ok), std::invalid_argument);  // dim mismatch
}

TEST_CASE("unknown verdicts are flagged and counted as not dense") {
  // entry parities fix the image of {0,1/2}^2 at the full half grid, whose
  // radius-1/4 interval straddles eps = 0.26 at resolution 0.1
  std::vector<ExactTorusPoint> pts;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      pts.push_back(reduce_to_torus(std::vector<Rational>{Rational(a, 2), Rational(b, 2)}));
  MatrixFamily fam;
  fam.rows = 2;
  fam.cols = 2;
  fam.entries = {RationalPolynomial::parse("2x+1"), RationalPolynomial::parse("2x"),
                 RationalPolynomial::parse("2x^2"), RationalPolynomial::parse("2x^2+1")};
  SearchConfig cfg;
  cfg.eps = 0.26;
  cfg.resolution = 0.1;
  cfg.prime_budget = 3;
  const SearchReport rep = search(fam, ExactPointSet(pts), cfg);
  CHECK_FALSE(rep.found);
  CHECK(rep.unknown_flagged);
}

TEST_CASE("identical configs give identical reports") {
  GeneratorParams params;
  params.max_denominator = 500;
  const auto x = generate_adversarial(GeneratorKind::RandomBoundedDenominator, 40, 1, params, 9);
  SearchConfig cfg;
  cfg.eps = 0.05;
  cfg.resolution = 1e-4;
  cfg.prime_budget = 200;
  cfg.strategy = Strategy::RandomSample;
  cfg.rng_seed = 1234;
  const auto a = search(fam_identity(), x, cfg);
  const auto b = search(fam_identity(), x, cfg);
  CHECK(report_json_without_walltime(a) == report_json_without_walltime(b));

  cfg.threads = 3;
  const auto c = search(fam_identity(), x, cfg);
  CHECK(report_json_without_walltime(a) == report_json_without_walltime(c));
}

TEST_CASE("success is monotone in eps for a fixed witness") {
  SearchConfig cfg;
  cfg.eps = 0.02;
  cfg.resolution = 1e-4;
  cfg.prime_budget = 20;
  const SearchReport rep = search(fam_identity(), grid97(), cfg);
  REQUIRE(rep.found);
  const auto image = apply_integer_matrix(*rep.matrix, grid97());
  for (double eps : {0.05, 0.1, 0.3}) {
    CHECK(is_eps_dense(image, eps, 1e-4, Metric::Sup).verdict == Verdict::Dense);
  }
}

TEST_CASE("greedy rowwise strategy verifies jointly") {
  MatrixFamily fam;
  fam.rows = 2;
  fam.cols = 2;
  fam.entries = {RationalPolynomial::parse("x"), RationalPolynomial::parse("x^2"),
                 RationalPolynomial::parse("x^3"), RationalPolynomial::parse("x^2 + x")};
  GeneratorParams params;
  params.max_denominator = 60;
  const auto x = generate_adversarial(GeneratorKind::RandomBoundedDenominator, 150, 2, params, 3);
  SearchConfig cfg;
  cfg.eps = 0.2;
  cfg.resolution = 0.05;
  cfg.prime_budget = 18;
  cfg.strategy = Strategy::GreedyRowwise;
  const SearchReport rep = search(fam, x, cfg);
  if (rep.found) {
    CHECK(rep.density.verdict == Verdict::Dense);
    CHECK(rep.witness_primes->primes.size() == 4);
  }
  const SearchReport again = search(fam, x, cfg);
  CHECK(report_json_without_walltime(rep) == report_json_without_walltime(again));

  SearchConfig single = cfg;
  MatrixFamily sp = fam;
  sp.mode = PrimeMode::SinglePrime;
  CHECK_THROWS_AS(search(sp, x, single), std::invalid_argument);
}

TEST_CASE("packing bound and packing point sets") {
  CHECK(packing_lower_bound(2, 0.1) == 100);
  CHECK(packing_lower_bound(1, 0.3) == 3);
  CHECK(packing_lower_bound(3, 0.5) == 8);

  for (auto [dim, eps] : std::vector<std::pair<int, double>>{{1, 0.1}, {2, 0.2}}) {
    const auto s = packing_point_set(dim, eps, 17);
    CHECK(s.size() == packing_lower_bound(dim, eps));
    const auto rep = is_eps_dense(s, eps, 0.05, Metric::Sup);
    CHECK(rep.verdict == Verdict::NotDense);
  }
}

TEST_CASE("adversarial generators") {
  // half grid in dimension 2
  const auto half = generate_adversarial(GeneratorKind::HalfGrid, 4, 2, GeneratorParams{}, 0);
  CHECK(half.size() == 4);
  for (const auto& p : half.points())
    for (int i = 0; i < 2; ++i) CHECK((p[i] == 0 || p[i] == Rational(1, 2)));
  CHECK_THROWS_AS(generate_adversarial(GeneratorKind::HalfGrid, 3, 2, GeneratorParams{}, 0),
                  std::invalid_argument);

  // arithmetic progression with step 1/k is the uniform grid
  GeneratorParams ap;
  ap.ap_step = Rational(0);
  const auto grid = generate_adversarial(GeneratorKind::ArithmeticProgression, 8, 1, ap, 0);
  std::vector<Rational> xs;
  for (const auto& p : grid.points()) xs.push_back(p[0]);
  std::sort(xs.begin(), xs.end());
  for (int i = 0; i < 8; ++i) CHECK(xs[static_cast<size_t>(i)] == Rational(i, 8));
  GeneratorParams wrap;
  wrap.ap_step = Rational(1, 4);
  CHECK_THROWS_AS(generate_adversarial(GeneratorKind::ArithmeticProgression, 5, 1, wrap, 0),
                  std::invalid_argument);

  // ball cluster: pairwise distinct, pairwise within 2*rho
  GeneratorParams ball;
  ball.rho = Rational(1, 50);
  const auto cluster = generate_adversarial(GeneratorKind::BallCluster, 12, 2, ball, 5);
  CHECK(cluster.size() == 12);
  for (int64_t i = 0; i < cluster.size(); ++i)
    for (int64_t j = i + 1; j < cluster.size(); ++j)
      CHECK(sup_distance_exact(cluster[i], cluster[j]) <= Rational(2, 50));

  // random bounded denominators: caps respected, points distinct by construction
  GeneratorParams rnd;
  rnd.max_denominator = 9;
  const auto r = generate_adversarial(GeneratorKind::RandomBoundedDenominator, 15, 2, rnd, 11);
  CHECK(r.size() == 15);
  for (const auto& p : r.points())
    for (int i = 0; i < 2; ++i) CHECK(denom(p[i]) <= 9);
  // more points than the pool holds
  GeneratorParams tiny;
  tiny.max_denominator = 2;
  CHECK_THROWS_AS(generate_adversarial(GeneratorKind::RandomBoundedDenominator, 10, 1, tiny, 1),
                  std::invalid_argument);
}

TEST_CASE("exponent scan: fit, reference exponents, degenerate schedules") {
  MatrixFamily fam = fam_identity();
  CHECK(reference_exponent(fam) == 2.0);  // 2Ln with L = n = m = 1
  fam.mode = PrimeMode::SinglePrime;
  CHECK(reference_exponent(fam) == 3.0);  // (2L+1)n
  MatrixFamily wide;
  wide.rows = 2;
  wide.cols = 2;
  wide.mode = PrimeMode::IndependentPrimes;
  wide.entries = {RationalPolynomial::parse("x"), RationalPolynomial::parse("x^2"),
                  RationalPolynomial::parse("x^3"), RationalPolynomial::parse("x^2+x")};
  CHECK(reference_exponent(wide) == 2.0 * 3 * 3 * 2);  // 2L(m+1)n, L = 3

  ScanConfig cfg;
  cfg.kind = GeneratorKind::RandomBoundedDenominator;
  cfg.params.max_denominator = 0;  // auto
  cfg.reps = 3;
  cfg.k_cap = 64;
  cfg.search_template.prime_budget = 40;
  cfg.search_template.resolution = 1e-3;
  cfg.search_template.rng_seed = 21;

  const auto res = exponent_scan(fam_identity(), {0.4, 0.2}, cfg);
  REQUIRE(res.rows.size() == 2);
  CHECK(res.rows[0].k_min_success.has_value());
  CHECK(res.rows[1].k_min_success.has_value());
  CHECK(*res.rows[1].k_min_success >= *res.rows[0].k_min_success);
  CHECK(std::isfinite(res.fitted_exponent));
  CHECK(res.rows[0].assignments_total > 0);

  const auto lonely = exponent_scan(fam_identity(), {0.3}, cfg);
  CHECK(std::isnan(lonely.fitted_exponent));
  REQUIRE(lonely.warnings.size() == 1);

  CHECK_THROWS_AS(exponent_scan(fam_identity(), {0.1, 0.2}, cfg), std::invalid_argument);

  // half-grid rows never succeed below 1/4
  ScanConfig hg = cfg;
  hg.kind = GeneratorKind::HalfGrid;
  const auto hg_res = exponent_scan(fam_identity(), {0.2, 0.1}, hg);
  for (const auto& row : hg_res.rows) {
    CHECK_FALSE(row.k_min_success.has_value());
    CHECK(row.budget_exhausted);
  }
  CHECK(std::isnan(hg_res.fitted_exponent));
}
