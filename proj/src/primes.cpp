#include "glasner/primes.hpp"

#include <cmath>
#include <stdexcept>

namespace glasner {

std::vector<int64_t> primes_up_to(int64_t limit) {
  std::vector<int64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<size_t>(limit) + 1, false);
  for (int64_t p = 2; p * p <= limit; ++p) {
    if (composite[static_cast<size_t>(p)]) continue;
    for (int64_t q = p * p; q <= limit; q += p) composite[static_cast<size_t>(q)] = true;
  }
  for (int64_t p = 2; p <= limit; ++p)
    if (!composite[static_cast<size_t>(p)]) out.push_back(p);
  return out;
}

PrimeTable first_n_primes(int64_t n) {
  if (n < 1) throw std::invalid_argument("first_n_primes: n must be >= 1");
  // p_n < n(ln n + ln ln n) for n >= 6
  int64_t bound = 15;
  if (n >= 6) {
    const double dn = static_cast<double>(n);
    bound = static_cast<int64_t>(dn * (std::log(dn) + std::log(std::log(dn)))) + 16;
  }
  std::vector<int64_t> p = primes_up_to(bound);
  while (static_cast<int64_t>(p.size()) < n) {
    bound += bound / 4 + 64;
    p = primes_up_to(bound);
  }
  p.resize(static_cast<size_t>(n));
  return PrimeTable{std::move(p)};
}

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // this witness set is deterministic below 3.3e24
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

int64_t euler_phi(int64_t n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
  int64_t result = n;
  int64_t m = n;
  for (int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace glasner
