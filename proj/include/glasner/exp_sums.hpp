#pragma once

// Exponential sums over primes: empirical averages (1/N) sum_{p in P_N}
// e(w f(p) a/b), their exact Dirichlet limits, and complete sums over reduced
// residues.
//
// The limit oracle uses the period M0 = b * L! (L = deg f): for integer-valued
// f, L!*f lies in Z[x], so f(r + b*L!) = f(r) (mod b), and by Dirichlet's
// theorem the prime average converges to the average of e(w f(r) a/b) over the
// reduced residues r mod M0. Phases are reduced to exact rationals mod 1 and
// grouped before any floating-point evaluation, so the result does not depend
// on which multiple of the true period is used.

#include <cstdint>
#include <string>
#include <vector>

#include "glasner/numeric.hpp"
#include "glasner/polynomial.hpp"
#include "glasner/primes.hpp"

namespace glasner {

struct ExpSumResult {
  Complex value{0.0, 0.0};
  int64_t n_used = 0;        // primes averaged; 0 for an exact limit
  int64_t modulus_used = 0;  // complete-sum period; 0 for an empirical average
};

// (1/N) sum_{p in P_N} e(w * f(p) * alpha), phases reduced mod 1 exactly.
// Irrational alpha is passed as a high-precision rational surrogate (see
// lemma2_convergence_probe for the decimal-string route).
ExpSumResult empirical_prime_exp_sum(const RationalPolynomial& f, const Rational& alpha,
                                     int64_t w, int64_t N);
ExpSumResult empirical_prime_exp_sum(const RationalPolynomial& f, const Rational& alpha,
                                     int64_t w, int64_t N, const PrimeTable& table);

// Exact limit of the above for alpha = a/b, gcd(a,b) = 1. period_scale
// multiplies the reduction period b*L! and must not change the value; it
// exists so tests can verify exactly that.
ExpSumResult limit_prime_exp_sum_rational(const RationalPolynomial& f, int64_t a, int64_t b,
                                          int64_t w, int64_t period_scale = 1);

// sum_{w=1}^{T} | limit_prime_exp_sum_rational(f, a, b, w) |.
double lemma3_sum(const RationalPolynomial& f, int64_t a, int64_t b, int64_t T);

// Unnormalized sum over reduced residues: sum_{1<=r<=b, gcd(r,b)=1} e(P(r)/b).
// Requires gcd(a_0, ..., a_L, b) = 1 and P in Z[x].
ExpSumResult lemma6_complete_sum(const RationalPolynomial& P, int64_t b);

// Empirical |(1/N) sum_{p in P_N} e(f(p))| along an N schedule, for f given by
// decimal coefficient strings of which at least one non-constant coefficient
// must carry >= 40 fractional digits (an explicit irrational surrogate).
// Report only; the limit itself is asymptotic and never claimed.
std::vector<double> lemma2_convergence_probe(const std::vector<std::string>& coeff_decimals,
                                             const std::vector<int64_t>& schedule);

}  // namespace glasner
