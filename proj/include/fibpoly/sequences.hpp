#pragma once

// Fibonacci and Lucas polynomials:
//   F_0 = 0, F_1 = 1, F_{n+2} = x F_{n+1} + F_n
//   L_0 = 2, L_1 = x, L_{n+2} = x L_{n+1} + L_n

#include "fibpoly/polycore.hpp"

#include <cstdint>
#include <shared_mutex>
#include <vector>

namespace fibpoly {

/// Memoized prefixes F_0..F_m and L_0..L_m. Both prefixes always have the
/// same length and only ever grow.
///
/// Any number of threads may read concurrently; extension takes an exclusive
/// lock, so there is a single writer at a time. Lookups return copies, which
/// keeps returned values valid across later growth.
class SequenceCache {
public:
  SequenceCache();
  SequenceCache(const SequenceCache&) = delete;
  SequenceCache& operator=(const SequenceCache&) = delete;

  Polynomial fib(std::uint64_t n);
  Polynomial lucas(std::uint64_t n);

  /// Number of cached entries per sequence (m + 1).
  std::size_t size() const;

private:
  void ensure(std::uint64_t n);

  mutable std::shared_mutex mutex_;
  std::vector<Polynomial> fib_;
  std::vector<Polynomial> lucas_;
};

/// F_n through the recurrence, using the cache.
Polynomial fib(std::uint64_t n, SequenceCache& cache);
/// L_n through the recurrence, using the cache.
Polynomial lucas(std::uint64_t n, SequenceCache& cache);

// Cache-free recurrence evaluation.
Polynomial fib(std::uint64_t n);
Polynomial lucas(std::uint64_t n);

/// F_n = sum_{0<=k<=(n-1)/2} C(n-1-k, k) x^{n-1-2k}. Throws DomainError for n = 0.
Polynomial fib_expanded(std::uint64_t n);

/// L_n = sum_{0<=k<=n/2} n/(n-k) C(n-k, k) x^{n-2k}. Each coefficient is formed
/// as n*C(n-k,k) and divided by n-k with an asserted zero remainder
/// (NotDivisible otherwise). Throws DomainError for n = 0.
Polynomial lucas_expanded(std::uint64_t n);

/// n-th term of f_{k+2} = x f_{k+1} + f_k seeded with (f0, f1).
Polynomial custom_sequence(const Polynomial& f0, const Polynomial& f1, std::uint64_t n);

} // namespace fibpoly
