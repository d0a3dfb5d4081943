#include "glasner/bump.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace glasner {

namespace {

constexpr int kHarmonicFactors = 48;

double sinc(double x) {
  if (std::fabs(x) < 1e-12) return 1.0;
  return std::sin(x) / x;
}

// Bound on |g^(m)| for m > m_max from the two largest widths:
// |sinc(pi m w)| <= 1/(pi m w), so |g^(m)| <= (pi^2 w1 w2 m^2)^-1 with two or
// more widths and (pi w1 m)^-1 with one.
double coefficient_envelope_tail(const BumpFunction& g, int64_t from, int power) {
  // power = 1 bounds sum |g^|, power = 2 bounds sum g^^2
  std::vector<double> w = g.widths;
  std::sort(w.begin(), w.end(), std::greater<>());
  const double pi = std::numbers::pi;
  const double m0 = static_cast<double>(from);
  if (w.size() >= 2) {
    const double c = 1.0 / (pi * pi * w[0] * w[1]);
    // sum_{m>=m0} (c/m^2)^power <= (c/m0^2)^power + integral
    const int p = 2 * power;
    const double head = std::pow(c / (m0 * m0), power);
    const double integral = std::pow(c, power) * std::pow(m0, 1.0 - p) / (p - 1.0);
    return 2.0 * (head + integral);
  }
  if (power == 2) {
    const double c = 1.0 / (pi * w[0]);
    return 2.0 * (c * c / (m0 * m0) + c * c / m0);
  }
  return std::numeric_limits<double>::infinity();  // single indicator: 1/m is not summable
}

}  // namespace

double BumpFunction::coefficient(int64_t m) const {
  const int64_t a = m < 0 ? -m : m;
  if (a > m_max) throw std::out_of_range("bump coefficient index beyond table (m_max)");
  return fourier[static_cast<size_t>(a)];
}

BumpFunction build_bump_from_widths(std::vector<double> widths, int64_t m_max) {
  if (widths.empty()) throw std::invalid_argument("build_bump_from_widths: no widths");
  if (m_max < 1) throw std::invalid_argument("build_bump_from_widths: m_max must be >= 1");
  double total = 0.0;
  for (double w : widths) {
    if (!(w > 0.0)) throw std::invalid_argument("build_bump_from_widths: widths must be positive");
    total += w;
  }
  BumpFunction g;
  g.eps = total;
  g.m_max = m_max;
  g.widths = std::move(widths);
  g.fourier.resize(static_cast<size_t>(m_max) + 1);
  g.fourier[0] = 1.0;
  const double pi = std::numbers::pi;
  for (int64_t m = 1; m <= m_max; ++m) {
    double prod = 1.0;
    for (double w : g.widths) {
      prod *= sinc(pi * static_cast<double>(m) * w);
      if (prod == 0.0) break;
    }
    g.fourier[static_cast<size_t>(m)] = prod;
  }
  return g;
}

BumpFunction build_bump(double eps, int64_t m_max) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("build_bump: eps must lie in (0,1)");
  if (m_max < 1) throw std::invalid_argument("build_bump: m_max must be >= 1");
  double norm = 0.0;
  for (int j = 1; j <= kHarmonicFactors; ++j) norm += 1.0 / (static_cast<double>(j) * j);
  std::vector<double> widths;
  widths.reserve(2 * kHarmonicFactors);
  for (int j = 1; j <= kHarmonicFactors; ++j) {
    const double v = (eps / 2.0) / (static_cast<double>(j) * j) / norm;
    widths.push_back(v);  // each width twice: squared sinc factors stay in [0,1]
    widths.push_back(v);
  }
  BumpFunction g = build_bump_from_widths(std::move(widths), m_max);
  g.eps = eps;
  return g;
}

BumpEval eval_bump(const BumpFunction& g, double t) {
  if (!(t >= -0.5 && t < 0.5)) throw std::invalid_argument("eval_bump: t must lie in [-1/2, 1/2)");
  double acc = g.fourier[0];
  const double two_pi = 2.0 * std::numbers::pi;
  for (int64_t m = 1; m <= g.m_max; ++m)
    acc += 2.0 * g.fourier[static_cast<size_t>(m)] * std::cos(two_pi * static_cast<double>(m) * t);
  return BumpEval{acc, coefficient_envelope_tail(g, g.m_max + 1, 1)};
}

L2Mass l2_mass(const BumpFunction& g) {
  double acc = g.fourier[0] * g.fourier[0];
  for (int64_t m = 1; m <= g.m_max; ++m) {
    const double c = g.fourier[static_cast<size_t>(m)];
    acc += 2.0 * c * c;
  }
  return L2Mass{acc, coefficient_envelope_tail(g, g.m_max + 1, 2)};
}

double tensor_coefficient(const BumpFunction& g, std::span<const int64_t> m_vec) {
  double prod = 1.0;
  for (int64_t m : m_vec) prod *= g.coefficient(m);
  return prod;
}

int64_t truncation_threshold(double eps) {
  if (!(eps > 0.0 && eps <= std::exp(-1.0)))
    throw std::invalid_argument("truncation_threshold: eps must lie in (0, 1/e]");
  const double log_inv = std::log(1.0 / eps);
  return static_cast<int64_t>(std::floor((4.0 / eps) * log_inv * log_inv));
}

double fit_decay_constant(const BumpFunction& g) {
  double c = 0.0;
  for (int64_t m = 0; m <= g.m_max; ++m) {
    const double envelope = std::exp(-std::sqrt(g.eps * static_cast<double>(m)));
    c = std::max(c, g.fourier[static_cast<size_t>(m)] / envelope);
  }
  return c;
}

double exp_sqrt_tail(double eps, int64_t T) {
  // sum_{m>=T} e^-sqrt(eps m) <= e^-a + (2/eps)(a+1)e^-a,  a = sqrt(eps T)
  const double a = std::sqrt(eps * static_cast<double>(T));
  return std::exp(-a) * (1.0 + (2.0 / eps) * (a + 1.0));
}

double bump_tail_sum(const BumpFunction& g, int64_t T, int n) {
  if (T < 1) throw std::invalid_argument("bump_tail_sum: T must be >= 1");
  if (n < 1) throw std::invalid_argument("bump_tail_sum: n must be >= 1");
  double acc = 0.0;
  for (int64_t m = std::min(T, g.m_max + 1); m <= g.m_max; ++m)
    acc += g.fourier[static_cast<size_t>(m)];
  const int64_t beyond = std::max(T, g.m_max + 1);
  acc += fit_decay_constant(g) * exp_sqrt_tail(g.eps, beyond);
  return 2.0 * static_cast<double>(n) * acc;
}

double eps1_threshold(int n, double c_ref) {
  if (n < 1) throw std::invalid_argument("eps1_threshold: n must be >= 1");
  const double limit = std::exp(-1.0);
  double best = 0.0;
  for (double eps = limit; eps > 1e-6; eps *= 0.99) {
    const double tail = 2.0 * n * c_ref * exp_sqrt_tail(eps, truncation_threshold(eps));
    if (tail < 0.5) {
      if (best == 0.0) best = eps;
    } else {
      best = 0.0;  // must hold for every smaller eps down the scan
    }
  }
  return best;
}

}  // namespace glasner
