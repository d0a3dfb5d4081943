#pragma once

// Arbitrary-precision scalars and small shared numeric helpers. Exact
// arithmetic is boost::multiprecision (header-only backends); nothing here
// rounds unless the name says so.

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace glasner {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

inline BigInt numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denom(const Rational& q) { return boost::multiprecision::denominator(q); }

// Floor division, b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b);

// a mod b in [0, b), b > 0.
BigInt mod_floor(const BigInt& a, const BigInt& b);

// Reduce into [0, 1).
Rational mod1(const Rational& q);
double mod1(double x);

double to_double(const Rational& q);

// exp(2*pi*i*t) for t reduced into [0,1). Exact at the quarter turns so that
// phases landing on the half-integer lattice carry no sin(pi) noise.
Complex unit_circle(const Rational& t);

// Accepts "p/q", "p", or a plain decimal ("0.125", "-1.41421356...").
Rational parse_rational(std::string_view s);
std::string format_rational(const Rational& q);  // always "p/q"

// Digits after '.' in a decimal literal; 0 if none.
int fraction_digits(std::string_view s);

// Canonical shortest-perfect-roundtrip-free formatting for CSV ("%.17g").
std::string fmt_double(double x);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

// Least-squares y ~ slope*x + intercept. Requires >= 2 samples with distinct x;
// returns NaN slope otherwise.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

// Dense integer matrix, row-major. Consumers check shapes.
struct BigIntMatrix {
  int rows = 0, cols = 0;
  std::vector<BigInt> data;

  BigIntMatrix() = default;
  BigIntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}
  BigInt& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  const BigInt& at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
  bool operator==(const BigIntMatrix&) const = default;
};

// splitmix64: tiny deterministic generator so seeded runs are reproducible
// independent of standard-library distribution internals.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Unbiased draw from [0, n), n >= 1.
  uint64_t below(uint64_t n);
};

// Runs fn(begin, end, worker_index) over [0, n) split into contiguous chunks.
// Reductions are the caller's job; with threads <= 1 runs inline.
void parallel_chunks(int64_t n, int threads,
                     const std::function<void(int64_t, int64_t, int)>& fn);

}  // namespace glasner
