#include <doctest.h>

#include <cmath>

#include "glasner/numeric.hpp"
#include "glasner/torus.hpp"

using namespace glasner;

namespace {

ExactTorusPoint pt(std::vector<Rational> c) { return reduce_to_torus(c); }

ExactPointSet set1d(std::vector<Rational> xs) {
  std::vector<ExactTorusPoint> pts;
  for (auto& x : xs) pts.push_back(pt({x}));
  return ExactPointSet(std::move(pts));
}

Rational rand_coord(Rng& rng, int64_t max_den) {
  const int64_t q = static_cast<int64_t>(rng.below(static_cast<uint64_t>(max_den))) + 1;
  return Rational(static_cast<int64_t>(rng.below(static_cast<uint64_t>(q))), q);
}

}  // namespace

TEST_CASE("reduce_to_torus wraps coordinates") {
  const auto p = pt({Rational(3, 2), Rational(-1, 4)});
  CHECK(p[0] == Rational(1, 2));
  CHECK(p[1] == Rational(3, 4));
  const auto z = pt({Rational(0), Rational(0)});
  CHECK(z[0] == 0);
  CHECK(z[1] == 0);
  CHECK(pt({Rational(7, 3)})[0] == Rational(1, 3));
  const auto f = reduce_to_torus(std::vector<double>{1.75, -0.25});
  CHECK(f[0] == doctest::Approx(0.75));
  CHECK(f[1] == doctest::Approx(0.75));
}

TEST_CASE("torus distance: wraparound, identity, euclidean") {
  const auto a = reduce_to_torus(std::vector<double>{0.0});
  const auto b = reduce_to_torus(std::vector<double>{0.9});
  CHECK(torus_distance(a, b, Metric::Sup) == doctest::Approx(0.1));

  const auto c = pt({Rational(1, 4), Rational(1, 4)});
  CHECK(torus_distance(c, c, Metric::Sup) == 0.0);
  CHECK(torus_distance(c, c, Metric::Euclidean) == 0.0);

  const auto o = pt({Rational(0), Rational(0)});
  const auto h = pt({Rational(1, 2), Rational(1, 2)});
  CHECK(torus_distance(o, h, Metric::Euclidean) == doctest::Approx(std::sqrt(2.0) / 2));
  CHECK(sup_distance_exact(o, h) == Rational(1, 2));
  CHECK(euclidean_sq_exact(o, h) == Rational(1, 2));

  CHECK_THROWS_AS(torus_distance(o, pt({Rational(0)}), Metric::Sup), std::invalid_argument);
}

TEST_CASE("metric properties on random triples") {
  Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = 1 + static_cast<int>(rng.below(3));
    auto draw = [&] {
      std::vector<Rational> c;
      for (int i = 0; i < dim; ++i) c.push_back(rand_coord(rng, 40));
      return pt(c);
    };
    const auto x = draw(), y = draw(), z = draw();
    for (Metric m : {Metric::Sup, Metric::Euclidean}) {
      const double dxy = torus_distance(x, y, m);
      CHECK(dxy == torus_distance(y, x, m));
      const double cap = m == Metric::Sup ? 0.5 : 0.5 * std::sqrt(static_cast<double>(dim));
      CHECK(dxy <= cap + 1e-12);
      CHECK(dxy <= torus_distance(x, z, m) + torus_distance(z, y, m) + 1e-12);
    }
  }
}

TEST_CASE("point sets enforce distinctness and homogeneous dimension") {
  CHECK_THROWS_AS(ExactPointSet({}), std::invalid_argument);
  CHECK_THROWS_AS(set1d({Rational(0), Rational(0)}), std::invalid_argument);
  std::vector<ExactTorusPoint> mixed = {pt({Rational(0)}), pt({Rational(0), Rational(1, 2)})};
  CHECK_THROWS_AS(ExactPointSet(std::move(mixed)), std::invalid_argument);
}

TEST_CASE("covering radius: exact one-dimensional sweeps") {
  const auto single = covering_radius(set1d({Rational(0)}), 1e-3, Metric::Sup);
  CHECK(single.lo == 0.5);
  CHECK(single.hi == 0.5);

  const auto half = covering_radius(set1d({Rational(0), Rational(1, 2)}), 1e-3, Metric::Sup);
  CHECK(half.lo == 0.25);
  CHECK(half.hi == 0.25);

  // gaps 1/3, 1/6, 1/2: largest gap [1/2, 1], radius 1/4 at midpoint 3/4
  const auto three =
      covering_radius(set1d({Rational(0), Rational(1, 3), Rational(1, 2)}), 1e-3, Metric::Sup);
  CHECK(three.lo == 0.25);
  CHECK(three.hi == 0.25);
  CHECK(three.witness[0] == 0.75);

  CHECK_THROWS_AS(covering_radius(set1d({Rational(0)}), 0.0, Metric::Sup), std::invalid_argument);
}

TEST_CASE("covering radius grid interval brackets a brute-force estimate") {
  Rng rng(99);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<ExactTorusPoint> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(pt({rand_coord(rng, 30), rand_coord(rng, 30)}));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const ExactPointSet s(pts);
    for (Metric m : {Metric::Sup, Metric::Euclidean}) {
      const auto cr = covering_radius(s, 0.05, m);
      CHECK(cr.hi - cr.lo <= 0.05);
      // independent fine-grid lower estimate of the true radius
      const int fine = 160;
      double est = 0.0;
      for (int a = 0; a < fine; ++a) {
        for (int b = 0; b < fine; ++b) {
          const FloatTorusPoint y =
              reduce_to_torus(std::vector<double>{(a + 0.5) / fine, (b + 0.5) / fine});
          double dmin = 1e9;
          for (const auto& p : s.points()) {
            const FloatTorusPoint pd =
                reduce_to_torus(std::vector<double>{to_double(p[0]), to_double(p[1])});
            dmin = std::min(dmin, torus_distance(y, pd, m));
          }
          est = std::max(est, dmin);
        }
      }
      CHECK(est <= cr.hi + 1e-9);
      CHECK(est >= cr.lo - 1.0 / fine);
    }
  }
}

TEST_CASE("is_eps_dense three-valued verdicts") {
  const auto s = set1d({Rational(0), Rational(1, 2)});

  const auto dense = is_eps_dense(s, 0.3, 1e-3, Metric::Sup);
  CHECK(dense.verdict == Verdict::Dense);
  CHECK(dense.covering_radius_hi <= 0.3);

  const auto notdense = is_eps_dense(s, 0.2, 1e-3, Metric::Sup);
  CHECK(notdense.verdict == Verdict::NotDense);
  REQUIRE(notdense.witness.has_value());
  CHECK((*notdense.witness)[0] == 0.25);
  CHECK(notdense.covering_radius_lo > 0.2);

  const auto single = is_eps_dense(set1d({Rational(0)}), 0.6, 1e-3, Metric::Sup);
  CHECK(single.verdict == Verdict::Dense);

  CHECK_THROWS_AS(is_eps_dense(s, 0.0, 1e-3, Metric::Sup), std::invalid_argument);
  CHECK_THROWS_AS(is_eps_dense(s, 1.0, 1e-3, Metric::Sup), std::invalid_argument);
}

TEST_CASE("is_eps_dense on a grid in two dimensions") {
  // {0, 1/2}^2 has sup covering radius exactly 1/4
  std::vector<ExactTorusPoint> pts;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) pts.push_back(pt({Rational(a, 2), Rational(b, 2)}));
  const ExactPointSet grid(pts);

  const auto dense = is_eps_dense(grid, 0.3, 0.02, Metric::Sup);
  CHECK(dense.verdict == Verdict::Dense);

  const auto notdense = is_eps_dense(grid, 0.2, 0.02, Metric::Sup);
  CHECK(notdense.verdict == Verdict::NotDense);
  REQUIRE(notdense.witness.has_value());

  // interval straddles eps at a coarse resolution
  const auto unknown = is_eps_dense(grid, 0.26, 0.1, Metric::Sup);
  CHECK(unknown.verdict == Verdict::Unknown);
  CHECK(unknown.covering_radius_lo <= 0.26);
  CHECK(unknown.covering_radius_hi >= 0.26);
}

TEST_CASE("covering radius agrees across thread counts") {
  std::vector<ExactTorusPoint> pts;
  Rng rng(31);
  for (int i = 0; i < 9; ++i) pts.push_back(pt({rand_coord(rng, 23), rand_coord(rng, 23)}));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const ExactPointSet s(pts);
  const auto a = covering_radius(s, 0.03, Metric::Sup, 1);
  const auto b = covering_radius(s, 0.03, Metric::Sup, 4);
  CHECK(a.lo == b.lo);
  CHECK(a.hi == b.hi);
  CHECK(a.witness == b.witness);
}

TEST_CASE("apply_integer_matrix: examples and torus well-definedness") {
  BigIntMatrix two(1, 1);
  two.at(0, 0) = 2;
  CHECK(apply_integer_matrix(two, pt({Rational(1, 2)}))[0] == Rational(0));

  BigIntMatrix row(1, 2);
  row.at(0, 0) = 1;
  row.at(0, 1) = 1;
  CHECK(apply_integer_matrix(row, pt({Rational(1, 3), Rational(1, 2)}))[0] == Rational(5, 6));

  CHECK_THROWS_AS(apply_integer_matrix(row, pt({Rational(1, 3)})), std::invalid_argument);

  // Mx is invariant under integer shifts of the input representative
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    BigIntMatrix m(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m.at(i, j) = static_cast<int64_t>(rng.below(19)) - 9;
    const Rational x0 = rand_coord(rng, 50), x1 = rand_coord(rng, 50);
    const auto base = apply_integer_matrix(m, pt({x0, x1}));
    const int64_t z0 = static_cast<int64_t>(rng.below(7)) - 3;
    const int64_t z1 = static_cast<int64_t>(rng.below(7)) - 3;
    const auto shifted =
        apply_integer_matrix(m, reduce_to_torus(std::vector<Rational>{x0 + z0, x1 + z1}));
    CHECK(base == shifted);
  }
}

TEST_CASE("half-grid sets are closed under every integer matrix") {
  std::vector<ExactTorusPoint> pts;
  for (int mask = 0; mask < 8; ++mask)
    pts.push_back(pt({Rational((mask >> 0) & 1, 2), Rational((mask >> 1) & 1, 2),
                      Rational((mask >> 2) & 1, 2)}));
  const ExactPointSet half(pts);
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    BigIntMatrix m(2, 3);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) m.at(i, j) = static_cast<int64_t>(rng.below(2001)) - 1000;
    const auto image = apply_integer_matrix(m, half);
    for (const auto& p : image.points())
      for (int i = 0; i < p.dim(); ++i) CHECK((p[i] == 0 || p[i] == Rational(1, 2)));
  }
}
