#include "glasner/pair_counts.hpp"

#include <cmath>
#include <stdexcept>

namespace glasner {

int64_t PairCountProfile::total_pairs() const {
  int64_t t = 0;
  for (const auto& [b, hb] : h) t += hb;
  return t;
}

BigInt min_denominator(const ExactTorusPoint& x, const ExactTorusPoint& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("min_denominator: dimension mismatch");
  BigInt l = 1;
  for (int i = 0; i < x.dim(); ++i) {
    const Rational d = x[i] - y[i];
    l = boost::multiprecision::lcm(l, denom(d));
  }
  return l;
}

PairCountProfile profile(const ExactPointSet& s) {
  PairCountProfile out;
  out.k = s.size();
  out.dim = s.dim();
  for (int64_t i = 0; i < s.size(); ++i) {
    for (int64_t j = i + 1; j < s.size(); ++j) {
      const BigInt b = min_denominator(s[i], s[j]);
      // b = 1 would mean equal reduced points, excluded by PointSet distinctness
      ++out.h[b];
    }
  }
  return out;
}

HbBoundReport verify_hb_bound(const PairCountProfile& p) {
  HbBoundReport rep;
  BigInt cumulative = 0;
  double alpha = 0.0;
  for (const auto& [b, hb] : p.h) {
    cumulative += hb;
    BigInt bound = p.k;
    for (int i = 0; i < p.dim + 1; ++i) bound *= b;
    if (cumulative > bound && !rep.first_violation_b) {
      rep.ok = false;
      rep.first_violation_b = b;
    }
    if (p.dim == 1) {
      const double kb = static_cast<double>(p.k) * b.convert_to<double>();
      if (kb > 1.0) {
        const double a = std::log(cumulative.convert_to<double>()) / std::log(kb) - 1.0;
        alpha = std::max(alpha, a);
      }
    }
  }
  rep.least_alpha = p.dim == 1 ? alpha : 0.0;
  return rep;
}

double lemma4_sum(const PairCountProfile& p, double c, int64_t T, double r, int n) {
  if (!(c > 0)) throw std::invalid_argument("lemma4_sum: c must be positive");
  if (T < 1) throw std::invalid_argument("lemma4_sum: T must be >= 1");
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("lemma4_sum: r must lie in (0,1)");
  if (n < 1) throw std::invalid_argument("lemma4_sum: n must be >= 1");
  double sum = 0.0;
  for (const auto& [b, hb] : p.h) {
    const double bd = b.convert_to<double>();
    const double base = c * static_cast<double>(T) * std::pow(bd, -r) + 1.0;
    sum += static_cast<double>(hb) * (std::pow(base, n) - 1.0);
  }
  return sum;
}

}  // namespace glasner
