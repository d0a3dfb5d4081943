#pragma once

// Prime-indexed matrix families: an n x m grid of integer-valued polynomials
// instantiated either at independent primes per entry or at one shared prime.
// Also the multiplicative-complexity bound Q = m!(n*||M(x)-M(0)||*||mvec||_inf)^m
// for integer combinations m_vec^t M(x), with a randomized gcd witness check.

#include <cstdint>
#include <string>
#include <vector>

#include "glasner/numeric.hpp"
#include "glasner/polynomial.hpp"

namespace glasner {

enum class PrimeMode { IndependentPrimes, SinglePrime };

struct MatrixFamily {
  int rows = 0, cols = 0;  // n, m
  PrimeMode mode = PrimeMode::IndependentPrimes;
  std::vector<RationalPolynomial> entries;  // row-major, rows*cols

  const RationalPolynomial& entry(int i, int j) const {
    return entries[static_cast<size_t>(i) * cols + j];
  }
  int max_degree() const;  // L
};

struct FamilyCheck {
  bool valid = true;
  std::vector<std::string> failures;  // one line per violated hypothesis
};

// Hypotheses: every entry non-constant and integer-valued; in SinglePrime mode
// additionally integer coefficients and {1} united with the entries linearly
// independent over the rationals (exact elimination; equivalent to over Z since
// the span is torsion-free).
FamilyCheck check_family(const MatrixFamily& fam);

struct PrimeAssignment {
  std::vector<int64_t> primes;  // one entry (SinglePrime) or rows*cols row-major
};

// Entrywise exact evaluation; rejects non-primes and wrong arity.
BigIntMatrix instantiate(const MatrixFamily& fam, const PrimeAssignment& pa);

struct MultComplexityBound {
  BigInt Q;
  BigInt frequency_bound;  // ||m_vec||_inf
  BigInt matrix_norm;      // largest |coefficient| over entries of M(x) - M(0)
};

// Requires integer-coefficient entries and the combined row polynomials
// m_vec^t (M(x) - M(0)) linearly independent (checked; throws otherwise).
MultComplexityBound mult_complexity_bound(const MatrixFamily& fam,
                                          const std::vector<BigInt>& m_vec);

// Draws `trials` pairs (a, q) with gcd(a_1..a_m, q) = 1, a_i in [-a_max, a_max],
// q in [1, q_max], and checks gcd(b_1, ..., b_L, q) <= Q for the coefficients of
// (P(x) - P(0)) . a. Returns false iff a counterexample was found.
bool mult_complexity_witness_check(const MatrixFamily& fam, const std::vector<BigInt>& m_vec,
                                   int64_t trials, uint64_t seed, int64_t q_max = 1000000,
                                   int64_t a_max = 1000);

// Rank of a rational matrix by exact Gaussian elimination (rows of equal length).
int rank_over_q(std::vector<std::vector<Rational>> rows);

}  // namespace glasner
