#pragma once

// Period-1 bump functions g supported in [-eps/2, eps/2] subset [-eps, eps]
// with mean 1, built as a finite convolution of centered interval indicators.
//
// Widths: v_j proportional to eps/j^2 for j = 1..J, each used twice and
// normalized so the total width is exactly eps. Each indicator contributes a
// sinc factor to the Fourier transform, so
//
//   g^(m) = prod_j sinc(pi m v_j)^2   in [0, 1],   g^(0) = 1.
//
// The harmonic width schedule is what produces exp(-c*sqrt(eps|m|)) decay:
// the factors with m*v_j >= 1 number about sqrt(eps*m), and each is < 1.
// (A geometric width schedule would only give exp(-c*log^2) decay.) The decay
// constant C in |g^(m)| <= C*exp(-sqrt(eps|m|)) is fitted over the stored
// table, never assumed.

#include <cstdint>
#include <span>
#include <vector>

namespace glasner {

struct BumpFunction {
  double eps = 0.0;
  int64_t m_max = 0;
  std::vector<double> fourier;  // index 0..m_max; real, g^(-m) = g^(m)
  std::vector<double> widths;   // construction widths, sum <= eps

  // Throws out-of-table beyond m_max.
  double coefficient(int64_t m) const;
};

BumpFunction build_bump(double eps, int64_t m_max);

// General finite convolution (each width applied once); coefficients may be
// negative. Degenerate single-width case is the plain interval indicator.
BumpFunction build_bump_from_widths(std::vector<double> widths, int64_t m_max);

struct BumpEval {
  double value = 0.0;
  double truncation_bound = 0.0;  // bound on the mass dropped beyond m_max
};

// Truncated Fourier synthesis at t in [-1/2, 1/2).
BumpEval eval_bump(const BumpFunction& g, double t);

struct L2Mass {
  double value = 0.0;       // sum over |m| <= m_max of g^(m)^2 (Parseval)
  double tail_bound = 0.0;  // bound on the omitted tail
};

L2Mass l2_mass(const BumpFunction& g);

// prod_i g^(m_vec[i]); throws if any |m_vec[i]| exceeds the table.
double tensor_coefficient(const BumpFunction& g, std::span<const int64_t> m_vec);

// floor((4/eps) * ln(1/eps)^2), natural log; 0 < eps <= 1/e.
int64_t truncation_threshold(double eps);

// Least C with g^(m) <= C * exp(-sqrt(eps*m)) over the stored table.
double fit_decay_constant(const BumpFunction& g);

// Upper bound for sum_{m >= T} exp(-sqrt(eps*m)).
double exp_sqrt_tail(double eps, int64_t T);

// Certified frequency tail used by the densification argument:
//   2n * ( sum_{T <= m <= m_max} g^(m)  +  modeled remainder beyond m_max ).
double bump_tail_sum(const BumpFunction& g, int64_t T, int n);

// Largest eps (geometric scan) at which the *modeled* tail
// 2n * C_ref * sum_{m >= truncation_threshold(eps)} exp(-sqrt(eps*m)) stays
// below 1/2; the asymptotic threshold the densification bound needs.
double eps1_threshold(int n, double c_ref = 2.0);

}  // namespace glasner
