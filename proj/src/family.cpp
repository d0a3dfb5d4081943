#include "glasner/family.hpp"

#include <algorithm>
#include <stdexcept>

#include "glasner/primes.hpp"

namespace glasner {

int MatrixFamily::max_degree() const {
  int L = 0;
  for (const auto& f : entries) L = std::max(L, f.degree());
  return L;
}

int rank_over_q(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const size_t ncols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != ncols) throw std::invalid_argument("rank_over_q: ragged rows");
  int rank = 0;
  for (size_t col = 0; col < ncols && rank < static_cast<int>(rows.size()); ++col) {
    size_t pivot = rows.size();
    for (size_t r = static_cast<size_t>(rank); r < rows.size(); ++r) {
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<size_t>(rank)]);
    const auto& prow = rows[static_cast<size_t>(rank)];
    for (size_t r = static_cast<size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rational factor = rows[r][col] / prow[col];
      for (size_t c = col; c < ncols; ++c) rows[r][c] -= factor * prow[c];
    }
    ++rank;
  }
  return rank;
}

FamilyCheck check_family(const MatrixFamily& fam) {
  FamilyCheck out;
  if (fam.rows < 1 || fam.cols < 1 ||
      fam.entries.size() != static_cast<size_t>(fam.rows) * fam.cols) {
    out.valid = false;
    out.failures.push_back("shape: entries count does not match rows*cols");
    return out;
  }
  for (int i = 0; i < fam.rows; ++i) {
    for (int j = 0; j < fam.cols; ++j) {
      const auto& f = fam.entry(i, j);
      const std::string tag = "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (f.is_constant()) out.failures.push_back("non-constant: " + tag + " is constant");
      if (!is_integer_valued(f))
        out.failures.push_back("integer-valued: " + tag + " has a non-integer finite difference");
      if (fam.mode == PrimeMode::SinglePrime && !f.has_integer_coefficients())
        out.failures.push_back("integer-coefficients: " + tag + " is not in Z[x] (single-prime mode)");
    }
  }
  if (fam.mode == PrimeMode::SinglePrime && out.failures.empty()) {
    // coefficient vectors of {1} and all entries, rank must be full
    const int L = fam.max_degree();
    std::vector<std::vector<Rational>> rows;
    rows.emplace_back(static_cast<size_t>(L) + 1, Rational(0));
    rows.back()[0] = 1;
    for (const auto& f : fam.entries) {
      std::vector<Rational> row(static_cast<size_t>(L) + 1, Rational(0));
      for (int d = 0; d <= f.degree(); ++d) row[static_cast<size_t>(d)] = f.coefficient(d);
      rows.push_back(std::move(row));
    }
    if (rank_over_q(rows) != static_cast<int>(fam.entries.size()) + 1)
      out.failures.push_back(
          "linear-independence: the entries and 1 are linearly dependent over Z (single-prime mode)");
  }
  out.valid = out.failures.empty();
  return out;
}

BigIntMatrix instantiate(const MatrixFamily& fam, const PrimeAssignment& pa) {
  const size_t need = fam.mode == PrimeMode::SinglePrime
                          ? 1
                          : static_cast<size_t>(fam.rows) * fam.cols;
  if (pa.primes.size() != need)
    throw std::invalid_argument("instantiate: expected " + std::to_string(need) +
                                " primes, got " + std::to_string(pa.primes.size()));
  for (int64_t p : pa.primes) {
    if (p < 2 || !is_prime(static_cast<uint64_t>(p)))
      throw std::invalid_argument("instantiate: " + std::to_string(p) + " is not prime");
  }
  BigIntMatrix M(fam.rows, fam.cols);
  for (int i = 0; i < fam.rows; ++i) {
    for (int j = 0; j < fam.cols; ++j) {
      const int64_t p = fam.mode == PrimeMode::SinglePrime
                            ? pa.primes[0]
                            : pa.primes[static_cast<size_t>(i) * fam.cols + j];
      M.at(i, j) = fam.entry(i, j).eval_integer(BigInt(p));
    }
  }
  return M;
}

namespace {

// m_vec^t (M(x) - M(0)) as m polynomials with the constant terms removed.
std::vector<RationalPolynomial> combined_rows(const MatrixFamily& fam,
                                              const std::vector<BigInt>& m_vec) {
  if (static_cast<int>(m_vec.size()) != fam.rows)
    throw std::invalid_argument("m_vec length must equal the family's row count");
  bool nonzero = false;
  for (const auto& v : m_vec) nonzero = nonzero || v != 0;
  if (!nonzero) throw std::invalid_argument("m_vec must be nonzero");
  std::vector<RationalPolynomial> out;
  const int L = fam.max_degree();
  for (int j = 0; j < fam.cols; ++j) {
    std::vector<Rational> coeffs(static_cast<size_t>(L) + 1, Rational(0));
    for (int i = 0; i < fam.rows; ++i) {
      const auto& f = fam.entry(i, j);
      for (int d = 1; d <= f.degree(); ++d)
        coeffs[static_cast<size_t>(d)] += Rational(m_vec[static_cast<size_t>(i)]) * f.coefficient(d);
    }
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

}  // namespace

MultComplexityBound mult_complexity_bound(const MatrixFamily& fam,
                                          const std::vector<BigInt>& m_vec) {
  for (const auto& f : fam.entries)
    if (!f.has_integer_coefficients())
      throw std::invalid_argument("mult_complexity_bound: entries must lie in Z[x]");

  const auto rows = combined_rows(fam, m_vec);
  std::vector<std::vector<Rational>> vecs;
  const int L = fam.max_degree();
  for (const auto& p : rows) {
    std::vector<Rational> row(static_cast<size_t>(L), Rational(0));  // degrees 1..L
    for (int d = 1; d <= p.degree(); ++d) row[static_cast<size_t>(d - 1)] = p.coefficient(d);
    vecs.push_back(std::move(row));
  }
  if (rank_over_q(vecs) != fam.cols)
    throw std::invalid_argument(
        "mult_complexity_bound: the combined row polynomials are linearly dependent over Z");

  BigInt norm = 0;
  for (const auto& f : fam.entries) {
    for (int d = 1; d <= f.degree(); ++d) {
      BigInt c = numer(f.coefficient(d));
      if (c < 0) c = -c;
      norm = std::max(norm, c);
    }
  }
  BigInt minf = 0;
  for (const auto& v : m_vec) minf = std::max(minf, v < 0 ? BigInt(-v) : v);

  BigInt fact = 1;
  for (int i = 2; i <= fam.cols; ++i) fact *= i;
  BigInt base = BigInt(fam.rows) * norm * minf;
  BigInt power = 1;
  for (int i = 0; i < fam.cols; ++i) power *= base;
  return MultComplexityBound{fact * power, minf, norm};
}

bool mult_complexity_witness_check(const MatrixFamily& fam, const std::vector<BigInt>& m_vec,
                                   int64_t trials, uint64_t seed, int64_t q_max, int64_t a_max) {
  const MultComplexityBound bound = mult_complexity_bound(fam, m_vec);
  const auto rows = combined_rows(fam, m_vec);
  const int L = fam.max_degree();
  Rng rng(seed);
  for (int64_t t = 0; t < trials; ++t) {
    const int64_t q = static_cast<int64_t>(rng.below(static_cast<uint64_t>(q_max))) + 1;
    std::vector<BigInt> a(static_cast<size_t>(fam.cols));
    while (true) {
      for (auto& ai : a)
        ai = static_cast<int64_t>(rng.below(static_cast<uint64_t>(2 * a_max + 1))) - a_max;
      BigInt g = q;
      for (const auto& ai : a) g = boost::multiprecision::gcd(g, ai < 0 ? BigInt(-ai) : ai);
      if (g == 1) break;
    }
    // coefficients b_1..b_L of (P(x) - P(0)) . a
    BigInt g = q;
    for (int d = 1; d <= L && g > bound.Q; ++d) {
      Rational bd = 0;
      for (int j = 0; j < fam.cols; ++j)
        bd += Rational(a[static_cast<size_t>(j)]) * rows[static_cast<size_t>(j)].coefficient(d);
      BigInt bi = numer(bd);  // entries are in Z[x], so bd is integral
      g = boost::multiprecision::gcd(g, bi < 0 ? BigInt(-bi) : bi);
    }
    if (g > bound.Q) return false;
  }
  return true;
}

}  // namespace glasner
