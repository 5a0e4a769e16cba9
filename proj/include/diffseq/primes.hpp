#pragma once

#include <cstdint>
#include <shared_mutex>
#include <vector>

namespace diffseq {

/// Primes in [2, limit], ascending. Segmented and OpenMP-parallel above
/// kSegmentThreshold; plain Eratosthenes below it.
std::vector<std::uint64_t> sieve(std::uint64_t limit);

/// Single-threaded, unsegmented Eratosthenes. Reference for sieve().
std::vector<std::uint64_t> sieve_serial(std::uint64_t limit);

/// Primality flags for [0, limit].
std::vector<bool> prime_flags(std::uint64_t limit);

inline constexpr std::uint64_t kSegmentThreshold = 10'000'000;

/// Trial division; independent of any sieve.
bool is_prime_trial(std::uint64_t n);

/// Process-wide primality cache that grows on demand. Lookups take a shared
/// lock; growth takes the exclusive lock and at least doubles the range.
class PrimeTable {
 public:
  static PrimeTable& instance();

  bool is_prime(std::uint64_t n);
  void reserve(std::uint64_t limit);
  std::uint64_t limit() const;

 private:
  PrimeTable();

  mutable std::shared_mutex mutex_;
  std::vector<bool> flags_;
};

}  // namespace diffseq
