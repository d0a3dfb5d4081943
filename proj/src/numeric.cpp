#include "glasner/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace glasner {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;  // truncates toward zero
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt mod_floor(const BigInt& a, const BigInt& b) {
  BigInt r = a % b;
  if (r < 0) r += b;
  return r;
}

Rational mod1(const Rational& q) {
  const BigInt n = numer(q), d = denom(q);
  return Rational(mod_floor(n, d), d);
}

double mod1(double x) {
  double r = x - std::floor(x);
  if (r >= 1.0) r = 0.0;  // floor rounding at the seam
  return r;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Complex unit_circle(const Rational& t) {
  const Rational u = mod1(t);
  const BigInt n = numer(u), d = denom(u);
  if (n == 0) return {1.0, 0.0};
  if (d == 2) return {-1.0, 0.0};
  if (d == 4) return (n == 1) ? Complex{0.0, 1.0} : Complex{0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * to_double(u);
  return {std::cos(angle), std::sin(angle)};
}

Rational parse_rational(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  const auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    const BigInt n(std::string(s.substr(0, slash)));
    const BigInt d(std::string(s.substr(slash + 1)));
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rational(n, d);
  }
  const auto dot = s.find('.');
  if (dot == std::string_view::npos) return Rational(BigInt(std::string(s)));

  std::string_view head = s.substr(0, dot), tail = s.substr(dot + 1);
  bool negative = false;
  if (!head.empty() && (head.front() == '+' || head.front() == '-')) {
    negative = head.front() == '-';
    head.remove_prefix(1);
  }
  if (tail.empty() && head.empty()) throw std::invalid_argument("bad decimal literal");
  BigInt scale = 1;
  for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
  BigInt mantissa = (head.empty() ? BigInt(0) : BigInt(std::string(head))) * scale +
                    (tail.empty() ? BigInt(0) : BigInt(std::string(tail)));
  if (negative) mantissa = -mantissa;
  return Rational(mantissa, scale);
}

std::string format_rational(const Rational& q) {
  return numer(q).str() + "/" + denom(q).str();
}

int fraction_digits(std::string_view s) {
  const auto dot = s.find('.');
  if (dot == std::string_view::npos) return 0;
  return static_cast<int>(s.size() - dot - 1);
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  const size_t n = x.size();
  if (n != y.size() || n < 2) return {std::numeric_limits<double>::quiet_NaN(), 0.0};
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double det = n * sxx - sx * sx;
  if (det == 0.0) return {std::numeric_limits<double>::quiet_NaN(), 0.0};
  LineFit f;
  f.slope = (n * sxy - sx * sy) / det;
  f.intercept = (sy - f.slope * sx) / n;
  return f;
}

uint64_t Rng::below(uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  const uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % n;
  uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % n;
}

void parallel_chunks(int64_t n, int threads,
                     const std::function<void(int64_t, int64_t, int)>& fn) {
  if (n <= 0) return;
  if (threads <= 1 || n == 1) {
    fn(0, n, 0);
    return;
  }
  const int workers = static_cast<int>(std::min<int64_t>(threads, n));
  const int64_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    const int64_t lo = w * chunk, hi = std::min<int64_t>(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(fn, lo, hi, w);
  }
  for (auto& t : pool) t.join();
}

}  // namespace glasner
