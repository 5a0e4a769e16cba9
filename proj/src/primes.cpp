#include "diffseq/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace diffseq {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

constexpr std::uint64_t kSegmentSize = 1u << 19;

}  // namespace

std::vector<bool> prime_flags(std::uint64_t limit) {
  std::vector<bool> flags(limit + 1, true);
  flags[0] = false;
  if (limit >= 1) flags[1] = false;
  for (std::uint64_t p = 2; p * p <= limit; ++p) {
    if (!flags[p]) continue;
    for (std::uint64_t m = p * p; m <= limit; m += p) flags[m] = false;
  }
  return flags;
}

std::vector<std::uint64_t> sieve_serial(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  const auto flags = prime_flags(limit);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (flags[i]) primes.push_back(i);
  }
  return primes;
}

std::vector<std::uint64_t> sieve(std::uint64_t limit) {
  if (limit < kSegmentThreshold) return sieve_serial(limit);

  const auto base = sieve_serial(isqrt(limit));
  const std::uint64_t num_segments = (limit + kSegmentSize) / kSegmentSize;
  std::vector<std::vector<std::uint64_t>> found(num_segments);

#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(num_segments); ++s) {
    const std::uint64_t lo = static_cast<std::uint64_t>(s) * kSegmentSize;
    const std::uint64_t hi = std::min(limit + 1, lo + kSegmentSize);
    std::vector<char> composite(hi - lo, 0);
    for (std::uint64_t p : base) {
      if (p * p >= hi) break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t m = start; m < hi; m += p) composite[m - lo] = 1;
    }
    auto& out = found[static_cast<std::size_t>(s)];
    for (std::uint64_t x = std::max<std::uint64_t>(lo, 2); x < hi; ++x) {
      if (!composite[x - lo]) out.push_back(x);
    }
  }

  std::size_t total = 0;
  for (const auto& seg : found) total += seg.size();
  std::vector<std::uint64_t> primes;
  primes.reserve(total);
  for (const auto& seg : found) primes.insert(primes.end(), seg.begin(), seg.end());
  return primes;
}

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeTable& PrimeTable::instance() {
  static PrimeTable table;
  return table;
}

PrimeTable::PrimeTable() : flags_(prime_flags(1u << 16)) {}

bool PrimeTable::is_prime(std::uint64_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < flags_.size()) return flags_[n];
  }
  reserve(n);
  std::shared_lock lock(mutex_);
  return flags_[n];
}

void PrimeTable::reserve(std::uint64_t limit) {
  std::unique_lock lock(mutex_);
  if (limit < flags_.size()) return;
  flags_ = prime_flags(std::max<std::uint64_t>(limit, 2 * flags_.size()));
}

std::uint64_t PrimeTable::limit() const {
  std::shared_lock lock(mutex_);
  return flags_.size() - 1;
}

}  // namespace diffseq
