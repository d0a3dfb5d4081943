#pragma once

// Rational-coefficient polynomials in one variable. Integer-valuedness
// (f(Z) subset Z) is certified by the finite-difference criterion: the forward
// differences D^i f(0), i = 0..deg, are all integers iff f maps Z into Z.

#include <string>
#include <string_view>
#include <vector>

#include "glasner/numeric.hpp"

namespace glasner {

class RationalPolynomial {
 public:
  RationalPolynomial() : coeffs_{Rational(0)} {}
  // Coefficients in ascending degree; trailing zeros are trimmed.
  explicit RationalPolynomial(std::vector<Rational> coeffs);

  // Grammar: sum of terms "c", "c x", "c x^k", "x", "-x^2"; coefficients are
  // rational literals ("3", "1/2", "0.25"). "*" between coefficient and x is
  // optional.
  static RationalPolynomial parse(std::string_view text);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_constant() const { return degree() == 0; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int i) const;  // 0 beyond degree

  Rational eval(const Rational& t) const;

  // Exact integer value; throws domain_error if the result is non-integral
  // (a violated integer-valuedness certificate).
  BigInt eval_integer(const BigInt& t) const;

  bool has_integer_coefficients() const;
  std::string to_string() const;

  bool operator==(const RationalPolynomial&) const = default;

 private:
  std::vector<Rational> coeffs_;  // ascending, size >= 1
};

// D^i f(0) for i = 0..deg.
std::vector<Rational> finite_differences_at_zero(const RationalPolynomial& f);

bool is_integer_valued(const RationalPolynomial& f);

}  // namespace glasner
