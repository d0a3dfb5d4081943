#include "glasner/polynomial.hpp"

#include <cctype>
#include <stdexcept>

namespace glasner {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(Rational(0));
}

Rational RationalPolynomial::coefficient(int i) const {
  if (i < 0) throw std::out_of_range("negative coefficient index");
  if (i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<size_t>(i)];
}

Rational RationalPolynomial::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

BigInt RationalPolynomial::eval_integer(const BigInt& t) const {
  const Rational v = eval(Rational(t));
  if (denom(v) != 1)
    throw std::domain_error("eval_integer: non-integral value " + format_rational(v) +
                            " (integer-valuedness certificate violated)");
  return numer(v);
}

bool RationalPolynomial::has_integer_coefficients() const {
  for (const auto& c : coeffs_)
    if (denom(c) != 1) return false;
  return true;
}

std::string RationalPolynomial::to_string() const {
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational c = coeffs_[static_cast<size_t>(i)];
    if (c == 0 && degree() > 0) continue;
    if (!out.empty()) out += (c < 0) ? " - " : " + ";
    else if (c < 0) out += "-";
    const Rational a = (c < 0) ? Rational(-c) : c;
    const bool unit = (a == 1 && i > 0);
    if (!unit) {
      out += numer(a).str();
      if (denom(a) != 1) out += "/" + denom(a).str();
    }
    if (i >= 1) {
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  if (out.empty()) out = "0";
  return out;
}

namespace {

struct Term {
  Rational coeff;
  int power;
};

// One term: [coef][*][x[^k]] with coef a rational/decimal literal. Whitespace
// is insignificant and stripped up front.
Term parse_term(std::string_view raw) {
  std::string t;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty term");

  size_t i = 0;
  size_t start = i;
  while (i < t.size() && (std::isdigit(static_cast<unsigned char>(t[i])) || t[i] == '/' ||
                          t[i] == '.' || ((t[i] == '+' || t[i] == '-') && i == start))) {
    ++i;
  }
  Rational coeff = 1;
  std::string_view lit = std::string_view(t).substr(start, i - start);
  if (lit == "-") {
    coeff = -1;
  } else if (!lit.empty() && lit != "+") {
    coeff = parse_rational(lit);
  }
  if (i < t.size() && t[i] == '*') ++i;
  if (i >= t.size()) {
    if (lit.empty() || lit == "+" || lit == "-") throw std::invalid_argument("bare sign term");
    return {coeff, 0};
  }
  if (t[i] != 'x' && t[i] != 'X') throw std::invalid_argument("expected 'x' in term: " + t);
  ++i;
  int power = 1;
  if (i < t.size() && t[i] == '^') {
    ++i;
    size_t ps = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (ps == i) throw std::invalid_argument("missing exponent");
    power = std::stoi(t.substr(ps, i - ps));
  }
  if (i != t.size()) throw std::invalid_argument("trailing characters in term: " + t);
  return {coeff, power};
}

}  // namespace

RationalPolynomial RationalPolynomial::parse(std::string_view text) {
  // Split at +/- signs between terms; a sign at a term's first non-space
  // character belongs to that term's coefficient. Exponents are unsigned, so
  // every other +/- is a separator.
  std::vector<Term> terms;
  size_t term_start = 0;
  auto flush = [&](size_t end) {
    std::string_view piece = text.substr(term_start, end - term_start);
    bool blank = true;
    for (char c : piece)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) terms.push_back(parse_term(piece));
    term_start = end;
  };
  for (size_t pos = 0; pos < text.size(); ++pos) {
    if (text[pos] != '+' && text[pos] != '-') continue;
    size_t first = term_start;
    while (first < pos && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
    if (pos > first) flush(pos);
  }
  flush(text.size());
  if (terms.empty()) throw std::invalid_argument("empty polynomial");
  int deg = 0;
  for (const auto& tm : terms) deg = std::max(deg, tm.power);
  std::vector<Rational> coeffs(static_cast<size_t>(deg) + 1, Rational(0));
  for (const auto& tm : terms) coeffs[static_cast<size_t>(tm.power)] += tm.coeff;
  return RationalPolynomial(std::move(coeffs));
}

std::vector<Rational> finite_differences_at_zero(const RationalPolynomial& f) {
  const int d = f.degree();
  std::vector<Rational> row(static_cast<size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) row[static_cast<size_t>(i)] = f.eval(Rational(i));
  std::vector<Rational> out;
  out.reserve(row.size());
  for (int i = 0; i <= d; ++i) {
    out.push_back(row[0]);
    for (size_t j = 0; j + 1 < row.size() - static_cast<size_t>(i); ++j) row[j] = row[j + 1] - row[j];
  }
  return out;
}

bool is_integer_valued(const RationalPolynomial& f) {
  for (const auto& diff : finite_differences_at_zero(f))
    if (denom(diff) != 1) return false;
  return true;
}

}  // namespace glasner
