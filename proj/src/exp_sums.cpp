#include "glasner/exp_sums.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace glasner {

namespace {

constexpr int64_t kMaxModulus = 4'000'000;  // dense phase-count tables

// f scaled to integer coefficients: num_coeffs[i] = D * c_i with D the lcm of
// the coefficient denominators.
struct ScaledPoly {
  std::vector<BigInt> num_coeffs;  // ascending
  BigInt scale;                    // D
};

ScaledPoly scale_poly(const std::vector<Rational>& coeffs) {
  ScaledPoly out;
  out.scale = 1;
  for (const auto& c : coeffs) out.scale = boost::multiprecision::lcm(out.scale, denom(c));
  out.num_coeffs.reserve(coeffs.size());
  for (const auto& c : coeffs) out.num_coeffs.push_back(numer(c) * (out.scale / denom(c)));
  return out;
}

// D*f(t) mod m via Horner; m > 0.
BigInt eval_scaled_mod(const ScaledPoly& sp, const BigInt& t, const BigInt& m) {
  BigInt acc = 0;
  const BigInt tm = mod_floor(t, m);
  for (auto it = sp.num_coeffs.rbegin(); it != sp.num_coeffs.rend(); ++it)
    acc = mod_floor(acc * tm + *it, m);
  return acc;
}

int64_t checked_modulus(const BigInt& m, const char* who) {
  if (m < 1 || m > kMaxModulus)
    throw std::invalid_argument(std::string(who) + ": modulus out of supported range [1, " +
                                std::to_string(kMaxModulus) + "]");
  return m.convert_to<int64_t>();
}

// Grouped sum over a dense phase-count table: sum_t counts[t] * weight * e(t/mod),
// ascending t, weights as exact rationals before conversion. This fixed order
// makes results identical across equivalent periods and fast paths.
Complex grouped_sum(const std::vector<int64_t>& counts, int64_t mod, const BigInt& weight_den) {
  Complex acc{0.0, 0.0};
  for (int64_t t = 0; t < mod; ++t) {
    if (counts[static_cast<size_t>(t)] == 0) continue;
    const double w = to_double(Rational(counts[static_cast<size_t>(t)], weight_den));
    acc += w * unit_circle(Rational(t, mod));
  }
  return acc;
}

}  // namespace

ExpSumResult empirical_prime_exp_sum(const RationalPolynomial& f, const Rational& alpha,
                                     int64_t w, int64_t N) {
  return empirical_prime_exp_sum(f, alpha, w, N, first_n_primes(N));
}

ExpSumResult empirical_prime_exp_sum(const RationalPolynomial& f, const Rational& alpha,
                                     int64_t w, int64_t N, const PrimeTable& table) {
  if (N < 1) throw std::invalid_argument("empirical_prime_exp_sum: N must be >= 1");
  if (table.size() < N) throw std::invalid_argument("empirical_prime_exp_sum: prime table too small");
  // phase(p) = w * alpha * f(p) mod 1 = (w * A * D f(p)) / (D B) mod 1
  ScaledPoly sp = scale_poly(f.coefficients());
  const BigInt mod = sp.scale * denom(alpha);
  const BigInt factor = mod_floor(BigInt(w) * numer(alpha), mod);
  Complex acc{0.0, 0.0};
  for (int64_t i = 0; i < N; ++i) {
    const BigInt fr = eval_scaled_mod(sp, BigInt(table.primes[static_cast<size_t>(i)]), mod);
    const BigInt t = mod_floor(factor * fr, mod);
    acc += unit_circle(Rational(t, mod));
  }
  acc /= static_cast<double>(N);
  return ExpSumResult{acc, N, 0};
}

ExpSumResult limit_prime_exp_sum_rational(const RationalPolynomial& f, int64_t a, int64_t b,
                                          int64_t w, int64_t period_scale) {
  if (b < 1) throw std::invalid_argument("limit_prime_exp_sum_rational: b must be >= 1");
  if (period_scale < 1)
    throw std::invalid_argument("limit_prime_exp_sum_rational: period_scale must be >= 1");
  if (boost::multiprecision::gcd(BigInt(a < 0 ? -a : a), BigInt(b)) != 1)
    throw std::invalid_argument("limit_prime_exp_sum_rational: gcd(a, b) must be 1");

  const int L = std::max(1, f.degree());
  BigInt lfact = 1;
  for (int i = 2; i <= L; ++i) lfact *= i;
  const BigInt period_big = BigInt(b) * lfact * period_scale;
  const int64_t period = checked_modulus(period_big, "limit_prime_exp_sum_rational");

  ScaledPoly sp = scale_poly(f.coefficients());
  const BigInt mod_big = sp.scale * b;
  const int64_t mod = checked_modulus(mod_big, "limit_prime_exp_sum_rational");
  const BigInt factor = mod_floor(BigInt(w) * a, mod_big);

  std::vector<int64_t> counts(static_cast<size_t>(mod), 0);
  BigInt phi = 0;
  for (int64_t r = 1; r <= period; ++r) {
    if (std::gcd(r, period) != 1) continue;
    const BigInt fr = eval_scaled_mod(sp, BigInt(r), mod_big);
    const int64_t t = mod_floor(factor * fr, mod_big).convert_to<int64_t>();
    ++counts[static_cast<size_t>(t)];
    ++phi;
  }
  return ExpSumResult{grouped_sum(counts, mod, phi), 0, period};
}

double lemma3_sum(const RationalPolynomial& f, int64_t a, int64_t b, int64_t T) {
  if (T < 1) throw std::invalid_argument("lemma3_sum: T must be >= 1");
  if (a == 0) throw std::invalid_argument("lemma3_sum: a/b must be nonzero");
  if (b < 1) throw std::invalid_argument("lemma3_sum: b must be >= 1");
  if (boost::multiprecision::gcd(BigInt(a < 0 ? -a : a), BigInt(b)) != 1)
    throw std::invalid_argument("lemma3_sum: a/b must be reduced");

  const int L = std::max(1, f.degree());
  BigInt lfact = 1;
  for (int i = 2; i <= L; ++i) lfact *= i;
  const int64_t period = checked_modulus(BigInt(b) * lfact, "lemma3_sum");
  ScaledPoly sp = scale_poly(f.coefficients());
  const BigInt mod_big = sp.scale * b;
  const int64_t mod = checked_modulus(mod_big, "lemma3_sum");

  // cache (a * D f(r)) mod (D b) over the reduced residues once; each w then
  // reuses it, reproducing limit_prime_exp_sum_rational bit for bit
  std::vector<int64_t> base;
  const BigInt a_mod = mod_floor(BigInt(a), mod_big);
  for (int64_t r = 1; r <= period; ++r) {
    if (std::gcd(r, period) != 1) continue;
    const BigInt fr = eval_scaled_mod(sp, BigInt(r), mod_big);
    base.push_back(mod_floor(a_mod * fr, mod_big).convert_to<int64_t>());
  }
  const BigInt phi = static_cast<int64_t>(base.size());

  double total = 0.0;
  std::vector<int64_t> counts(static_cast<size_t>(mod), 0);
  for (int64_t w = 1; w <= T; ++w) {
    std::fill(counts.begin(), counts.end(), 0);
    const int64_t wm = w % mod;
    for (int64_t t0 : base) ++counts[static_cast<size_t>((wm * t0) % mod)];
    total += std::abs(grouped_sum(counts, mod, phi));
  }
  return total;
}

ExpSumResult lemma6_complete_sum(const RationalPolynomial& P, int64_t b) {
  if (!P.has_integer_coefficients())
    throw std::invalid_argument("lemma6_complete_sum: P must lie in Z[x]");
  const int64_t mod = checked_modulus(BigInt(b), "lemma6_complete_sum");
  BigInt g = b;
  for (const auto& c : P.coefficients())
    g = boost::multiprecision::gcd(g, numer(c) < 0 ? BigInt(-numer(c)) : numer(c));
  if (g != 1)
    throw std::invalid_argument("lemma6_complete_sum: gcd(a_0, ..., a_L, b) must be 1");

  std::vector<int64_t> coeffs;
  coeffs.reserve(P.coefficients().size());
  for (const auto& c : P.coefficients())
    coeffs.push_back(mod_floor(numer(c), BigInt(mod)).convert_to<int64_t>());

  std::vector<int64_t> counts(static_cast<size_t>(mod), 0);
  for (int64_t r = 1; r <= mod; ++r) {
    if (std::gcd(r, mod) != 1) continue;
    int64_t acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
      acc = static_cast<int64_t>((static_cast<__int128>(acc) * (r % mod) + *it) % mod);
    ++counts[static_cast<size_t>(acc)];
  }
  // unnormalized
  Complex acc{0.0, 0.0};
  for (int64_t t = 0; t < mod; ++t) {
    if (counts[static_cast<size_t>(t)] == 0) continue;
    acc += static_cast<double>(counts[static_cast<size_t>(t)]) * unit_circle(Rational(t, mod));
  }
  return ExpSumResult{acc, 0, mod};
}

std::vector<double> lemma2_convergence_probe(const std::vector<std::string>& coeff_decimals,
                                             const std::vector<int64_t>& schedule) {
  if (coeff_decimals.size() < 2)
    throw std::invalid_argument("lemma2_convergence_probe: polynomial must be non-constant");
  std::vector<Rational> coeffs;
  bool has_irrational_surrogate = false;
  for (size_t i = 0; i < coeff_decimals.size(); ++i) {
    coeffs.push_back(parse_rational(coeff_decimals[i]));
    if (i >= 1 && fraction_digits(coeff_decimals[i]) >= 40) has_irrational_surrogate = true;
  }
  bool nonconstant = false;
  for (size_t i = 1; i < coeffs.size(); ++i) nonconstant = nonconstant || coeffs[i] != 0;
  if (!nonconstant)
    throw std::invalid_argument("lemma2_convergence_probe: polynomial must be non-constant");
  if (!has_irrational_surrogate)
    throw std::invalid_argument(
        "lemma2_convergence_probe: need a non-constant coefficient given to >= 40 decimal places "
        "(an explicit irrational surrogate)");
  if (schedule.empty()) throw std::invalid_argument("lemma2_convergence_probe: empty schedule");

  int64_t n_max = 0;
  for (int64_t n : schedule) {
    if (n < 1) throw std::invalid_argument("lemma2_convergence_probe: schedule entries must be >= 1");
    n_max = std::max(n_max, n);
  }
  const PrimeTable table = first_n_primes(n_max);
  const ScaledPoly sp = scale_poly(coeffs);
  const BigInt mod = sp.scale;

  std::vector<double> out;
  out.reserve(schedule.size());
  for (int64_t n : schedule) {
    Complex acc{0.0, 0.0};
    for (int64_t i = 0; i < n; ++i) {
      const BigInt t = eval_scaled_mod(sp, BigInt(table.primes[static_cast<size_t>(i)]), mod);
      acc += unit_circle(Rational(t, mod));
    }
    out.push_back(std::abs(acc) / static_cast<double>(n));
  }
  return out;
}

}  // namespace glasner
