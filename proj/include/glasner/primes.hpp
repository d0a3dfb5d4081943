#pragma once

#include <cstdint>
#include <vector>

namespace glasner {

// Ascending list of exactly the first N primes.
struct PrimeTable {
  std::vector<int64_t> primes;
  int64_t size() const { return static_cast<int64_t>(primes.size()); }
};

PrimeTable first_n_primes(int64_t n);
std::vector<int64_t> primes_up_to(int64_t limit);

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(uint64_t n);

int64_t euler_phi(int64_t n);

}  // namespace glasner
