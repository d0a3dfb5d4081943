#include "glasner/torus.hpp"

#include <cmath>
#include <limits>

namespace glasner {

ExactTorusPoint reduce_to_torus(const std::vector<Rational>& v) {
  std::vector<Rational> coords;
  coords.reserve(v.size());
  for (const auto& q : v) coords.push_back(mod1(q));
  return ExactTorusPoint(std::move(coords));
}

FloatTorusPoint reduce_to_torus(const std::vector<double>& v) {
  std::vector<double> coords;
  coords.reserve(v.size());
  for (double x : v) coords.push_back(mod1(x));
  return FloatTorusPoint(std::move(coords));
}

namespace {

double wrap_dist(double a, double b) {
  const double d = std::fabs(a - b);
  return std::min(d, 1.0 - d);
}

Rational wrap_dist(const Rational& a, const Rational& b) {
  Rational d = a - b;
  if (d < 0) d = -d;
  const Rational alt = 1 - d;
  return d < alt ? d : alt;
}

void check_dims(int a, int b) {
  if (a != b) throw std::invalid_argument("torus dimension mismatch");
}

}  // namespace

double torus_distance(const FloatTorusPoint& x, const FloatTorusPoint& y, Metric metric) {
  check_dims(x.dim(), y.dim());
  double acc = 0.0;
  for (int i = 0; i < x.dim(); ++i) {
    const double d = wrap_dist(x[i], y[i]);
    if (metric == Metric::Sup)
      acc = std::max(acc, d);
    else
      acc += d * d;
  }
  return metric == Metric::Sup ? acc : std::sqrt(acc);
}

double torus_distance(const ExactTorusPoint& x, const ExactTorusPoint& y, Metric metric) {
  check_dims(x.dim(), y.dim());
  if (metric == Metric::Sup) return to_double(sup_distance_exact(x, y));
  return std::sqrt(to_double(euclidean_sq_exact(x, y)));
}

Rational sup_distance_exact(const ExactTorusPoint& x, const ExactTorusPoint& y) {
  check_dims(x.dim(), y.dim());
  Rational acc = 0;
  for (int i = 0; i < x.dim(); ++i) acc = std::max(acc, wrap_dist(x[i], y[i]));
  return acc;
}

Rational euclidean_sq_exact(const ExactTorusPoint& x, const ExactTorusPoint& y) {
  check_dims(x.dim(), y.dim());
  Rational acc = 0;
  for (int i = 0; i < x.dim(); ++i) {
    const Rational d = wrap_dist(x[i], y[i]);
    acc += d * d;
  }
  return acc;
}

namespace {

constexpr double kFpSlack = 1e-12;  // double-rounding slack folded into hi

// Exact one-dimensional sweep: the covering radius is half the largest
// circular gap between consecutive sorted points.
template <typename Scalar>
CoveringRadius sweep_1d(const std::vector<Scalar>& sorted, const Scalar& one) {
  CoveringRadius out;
  Scalar best_gap = 0;
  Scalar best_start = sorted.front();
  for (size_t i = 0; i < sorted.size(); ++i) {
    const Scalar next = (i + 1 < sorted.size()) ? sorted[i + 1] : sorted.front() + one;
    const Scalar gap = next - sorted[i];
    if (gap > best_gap) {
      best_gap = gap;
      best_start = sorted[i];
    }
  }
  const Scalar radius = best_gap / 2;
  const Scalar mid = best_start + radius;
  if constexpr (std::is_same_v<Scalar, Rational>) {
    out.lo = out.hi = to_double(radius);
    out.witness = {to_double(mod1(mid))};
  } else {
    out.lo = out.hi = radius;
    out.witness = {mod1(mid)};
  }
  return out;
}

// Grid certification over cell centers (j + 1/2) * h.
CoveringRadius grid_covering_radius(const std::vector<std::vector<double>>& pts, int dim,
                                    double resolution, Metric metric, int threads) {
  const double rdim = std::sqrt(static_cast<double>(dim));
  const double h = metric == Metric::Sup ? resolution : resolution / rdim;
  const double cell_radius = metric == Metric::Sup ? h / 2.0 : (h / 2.0) * rdim;
  const int64_t per_axis = static_cast<int64_t>(std::ceil(1.0 / h));
  constexpr int64_t kMaxCells = int64_t(1) << 34;
  int64_t cells = 1;
  for (int i = 0; i < dim; ++i) {
    if (per_axis > kMaxCells / cells)
      throw std::invalid_argument("covering_radius: grid too fine for this dimension");
    cells *= per_axis;
  }

  struct Best {
    double value = -1.0;
    int64_t index = -1;
  };
  std::vector<Best> best(static_cast<size_t>(std::max(threads, 1)));

  parallel_chunks(cells, threads, [&](int64_t lo, int64_t hi, int worker) {
    std::vector<double> y(static_cast<size_t>(dim));
    Best b;
    for (int64_t cell = lo; cell < hi; ++cell) {
      int64_t rest = cell;
      for (int i = 0; i < dim; ++i) {
        y[static_cast<size_t>(i)] = (static_cast<double>(rest % per_axis) + 0.5) * h;
        rest /= per_axis;
      }
      double dmin = std::numeric_limits<double>::infinity();
      for (const auto& p : pts) {
        double acc = 0.0;
        for (int i = 0; i < dim; ++i) {
          const double d = wrap_dist(y[static_cast<size_t>(i)], p[static_cast<size_t>(i)]);
          if (metric == Metric::Sup)
            acc = std::max(acc, d);
          else
            acc += d * d;
        }
        if (metric == Metric::Euclidean) acc = std::sqrt(acc);
        dmin = std::min(dmin, acc);
        if (dmin == 0.0) break;
      }
      if (dmin > b.value) b = {dmin, cell};
    }
    best[static_cast<size_t>(worker)] = b;
  });

  Best top;
  for (const auto& b : best) {
    if (b.index < 0) continue;
    if (b.value > top.value || (b.value == top.value && b.index < top.index)) top = b;
  }
  CoveringRadius out;
  out.lo = top.value;
  out.hi = top.value + cell_radius + kFpSlack;
  out.witness.resize(static_cast<size_t>(dim));
  int64_t rest = top.index;
  for (int i = 0; i < dim; ++i) {
    out.witness[static_cast<size_t>(i)] = (static_cast<double>(rest % per_axis) + 0.5) * h;
    rest /= per_axis;
  }
  return out;
}

void check_resolution(double resolution) {
  if (!(resolution > 0)) throw std::invalid_argument("resolution must be positive");
  if (resolution < 4 * kFpSlack)
    throw std::invalid_argument("resolution below floating-point certification slack");
}

}  // namespace

CoveringRadius covering_radius(const ExactPointSet& s, double resolution, Metric metric,
                               int threads) {
  check_resolution(resolution);
  if (s.dim() == 1) {
    std::vector<Rational> xs;
    xs.reserve(static_cast<size_t>(s.size()));
    for (const auto& p : s.points()) xs.push_back(p[0]);
    std::sort(xs.begin(), xs.end());
    return sweep_1d<Rational>(xs, Rational(1));
  }
  std::vector<std::vector<double>> pts;
  pts.reserve(static_cast<size_t>(s.size()));
  for (const auto& p : s.points()) {
    std::vector<double> v(static_cast<size_t>(s.dim()));
    for (int i = 0; i < s.dim(); ++i) v[static_cast<size_t>(i)] = to_double(p[i]);
    pts.push_back(std::move(v));
  }
  return grid_covering_radius(pts, s.dim(), resolution, metric, threads);
}

CoveringRadius covering_radius(const FloatPointSet& s, double resolution, Metric metric,
                               int threads) {
  check_resolution(resolution);
  if (s.dim() == 1) {
    std::vector<double> xs;
    xs.reserve(static_cast<size_t>(s.size()));
    for (const auto& p : s.points()) xs.push_back(p[0]);
    std::sort(xs.begin(), xs.end());
    return sweep_1d<double>(xs, 1.0);
  }
  std::vector<std::vector<double>> pts;
  pts.reserve(static_cast<size_t>(s.size()));
  for (const auto& p : s.points()) pts.push_back(p.coords());
  return grid_covering_radius(pts, s.dim(), resolution, metric, threads);
}

namespace {

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
}

// Exact distance-from-witness check used before committing to NotDense.
bool witness_certified(const ExactPointSet& s, const std::vector<double>& witness, double eps,
                       Metric metric) {
  std::vector<Rational> wq;
  wq.reserve(witness.size());
  for (double c : witness) wq.push_back(mod1(Rational(c)));
  const ExactTorusPoint w(std::move(wq));
  const Rational eps_q(eps);
  for (const auto& p : s.points()) {
    if (metric == Metric::Sup) {
      if (sup_distance_exact(w, p) <= eps_q) return false;
    } else {
      if (euclidean_sq_exact(w, p) <= eps_q * eps_q) return false;
    }
  }
  return true;
}

DensityReport verdict_from_interval(const CoveringRadius& cr, double eps, double resolution) {
  DensityReport rep;
  rep.covering_radius_lo = cr.lo;
  rep.covering_radius_hi = cr.hi;
  rep.grid_resolution = resolution;
  if (cr.hi <= eps) {
    rep.verdict = Verdict::Dense;
  } else if (cr.lo > eps) {
    rep.verdict = Verdict::NotDense;
    rep.witness = cr.witness;
  } else {
    rep.verdict = Verdict::Unknown;
  }
  return rep;
}

}  // namespace

DensityReport is_eps_dense(const ExactPointSet& s, double eps, double resolution, Metric metric,
                           int threads) {
  check_eps(eps);
  if (s.dim() == 1) {
    // decide exactly: covering radius and eps are both rational
    check_resolution(resolution);
    std::vector<Rational> xs;
    xs.reserve(static_cast<size_t>(s.size()));
    for (const auto& p : s.points()) xs.push_back(p[0]);
    std::sort(xs.begin(), xs.end());
    Rational best_gap = 0;
    Rational best_start = xs.front();
    for (size_t i = 0; i < xs.size(); ++i) {
      const Rational next = (i + 1 < xs.size()) ? xs[i + 1] : xs.front() + 1;
      if (next - xs[i] > best_gap) {
        best_gap = next - xs[i];
        best_start = xs[i];
      }
    }
    const Rational radius = best_gap / 2;
    DensityReport rep;
    rep.grid_resolution = resolution;
    rep.covering_radius_lo = rep.covering_radius_hi = to_double(radius);
    if (radius <= Rational(eps)) {
      rep.verdict = Verdict::Dense;
      if (rep.covering_radius_hi > eps) rep.covering_radius_lo = rep.covering_radius_hi = eps;
    } else {
      rep.verdict = Verdict::NotDense;
      rep.witness = {to_double(mod1(best_start + radius))};
      // keep the reported interval consistent with the exact verdict
      if (rep.covering_radius_lo <= eps)
        rep.covering_radius_lo = rep.covering_radius_hi = std::nextafter(eps, 1.0);
    }
    return rep;
  }
  const CoveringRadius cr = covering_radius(s, resolution, metric, threads);
  DensityReport rep = verdict_from_interval(cr, eps, resolution);
  if (rep.verdict == Verdict::NotDense && !witness_certified(s, *rep.witness, eps, metric)) {
    rep.verdict = Verdict::Unknown;  // double rounding ate the margin
    rep.witness.reset();
  }
  return rep;
}

DensityReport is_eps_dense(const FloatPointSet& s, double eps, double resolution, Metric metric,
                           int threads) {
  check_eps(eps);
  const CoveringRadius cr = covering_radius(s, resolution, metric, threads);
  return verdict_from_interval(cr, eps, resolution);
}

ExactTorusPoint apply_integer_matrix(const BigIntMatrix& M, const ExactTorusPoint& x) {
  if (M.cols != x.dim()) throw std::invalid_argument("matrix/point shape mismatch");
  std::vector<Rational> y(static_cast<size_t>(M.rows));
  for (int i = 0; i < M.rows; ++i) {
    Rational acc = 0;
    for (int j = 0; j < M.cols; ++j) acc += Rational(M.at(i, j)) * x[j];
    y[static_cast<size_t>(i)] = mod1(acc);
  }
  return ExactTorusPoint(std::move(y));
}

FloatTorusPoint apply_integer_matrix(const BigIntMatrix& M, const FloatTorusPoint& x) {
  if (M.cols != x.dim()) throw std::invalid_argument("matrix/point shape mismatch");
  std::vector<double> y(static_cast<size_t>(M.rows));
  for (int i = 0; i < M.rows; ++i) {
    double acc = 0;
    for (int j = 0; j < M.cols; ++j) acc += to_double(Rational(M.at(i, j))) * x[j];
    y[static_cast<size_t>(i)] = mod1(acc);
  }
  return FloatTorusPoint(std::move(y));
}

ExactPointSet apply_integer_matrix(const BigIntMatrix& M, const ExactPointSet& s) {
  std::vector<ExactTorusPoint> out;
  out.reserve(static_cast<size_t>(s.size()));
  for (const auto& p : s.points()) out.push_back(apply_integer_matrix(M, p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return ExactPointSet(std::move(out));
}

}  // namespace glasner
