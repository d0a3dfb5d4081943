#pragma once

// Rational-difference pair statistics. For an exact point set {z_1..z_k} in
// T^m, h_b counts the pairs i < j whose difference needs minimal denominator b
// (the least b with b(z_i - z_j) integral, i.e. the lcm of the reduced
// coordinate-difference denominators). H_b is the cumulative count; the
// imported bound H_b <= k*b^(m+1) and the weighted sum
// sum_b h_b ((cTb^-r + 1)^n - 1) are checked numerically.

#include <cstdint>
#include <map>
#include <optional>

#include "glasner/numeric.hpp"
#include "glasner/torus.hpp"

namespace glasner {

struct PairCountProfile {
  std::map<BigInt, int64_t> h;  // b >= 2 only; pairs with integral difference cannot occur
  int64_t k = 0;
  int dim = 0;

  int64_t total_pairs() const;  // sum of h_b
};

BigInt min_denominator(const ExactTorusPoint& x, const ExactTorusPoint& y);

PairCountProfile profile(const ExactPointSet& s);

struct HbBoundReport {
  bool ok = true;
  std::optional<BigInt> first_violation_b;
  // m = 1 only: least alpha >= 0 with H_b <= (k*b)^(1+alpha) for all b; 0 otherwise.
  double least_alpha = 0.0;
};

HbBoundReport verify_hb_bound(const PairCountProfile& p);

// sum_{b} h_b ((c*T*b^-r + 1)^n - 1); finite since the profile has finite support.
double lemma4_sum(const PairCountProfile& p, double c, int64_t T, double r, int n);

}  // namespace glasner
