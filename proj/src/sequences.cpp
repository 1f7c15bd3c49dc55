#include "fibpoly/sequences.hpp"

#include "fibpoly/errors.hpp"

#include <mutex>
#include <string>
#include <utility>

namespace fibpoly {

SequenceCache::SequenceCache()
    : fib_{Polynomial{}, Polynomial::constant(1)}, lucas_{Polynomial::constant(2), Polynomial::x()} {}

void SequenceCache::ensure(std::uint64_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < fib_.size()) return;
  }
  std::unique_lock lock(mutex_);
  fib_.reserve(n + 1);
  lucas_.reserve(n + 1);
  while (fib_.size() <= n) {
    const std::size_t m = fib_.size();
    fib_.push_back(fib_[m - 1].shifted_up() + fib_[m - 2]);
    lucas_.push_back(lucas_[m - 1].shifted_up() + lucas_[m - 2]);
  }
}

Polynomial SequenceCache::fib(std::uint64_t n) {
  ensure(n);
  std::shared_lock lock(mutex_);
  return fib_[n];
}

Polynomial SequenceCache::lucas(std::uint64_t n) {
  ensure(n);
  std::shared_lock lock(mutex_);
  return lucas_[n];
}

std::size_t SequenceCache::size() const {
  std::shared_lock lock(mutex_);
  return fib_.size();
}

Polynomial fib(std::uint64_t n, SequenceCache& cache) { return cache.fib(n); }
Polynomial lucas(std::uint64_t n, SequenceCache& cache) { return cache.lucas(n); }

Polynomial fib(std::uint64_t n) { return custom_sequence(Polynomial{}, Polynomial::constant(1), n); }
Polynomial lucas(std::uint64_t n) { return custom_sequence(Polynomial::constant(2), Polynomial::x(), n); }

Polynomial custom_sequence(const Polynomial& f0, const Polynomial& f1, std::uint64_t n) {
  if (n == 0) return f0;
  Polynomial prev = f0;
  Polynomial cur = f1;
  for (std::uint64_t k = 1; k < n; ++k) {
    Polynomial next = cur.shifted_up() + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Polynomial fib_expanded(std::uint64_t n) {
  if (n == 0) throw DomainError("fib_expanded: requires n >= 1, got n = 0");
  std::vector<Coefficient> v(n);
  for (std::uint64_t k = 0; k <= (n - 1) / 2; ++k) {
    v[n - 1 - 2 * k] = binomial(n - 1 - k, static_cast<std::int64_t>(k));
  }
  return Polynomial(std::move(v));
}

Polynomial lucas_expanded(std::uint64_t n) {
  if (n == 0) throw DomainError("lucas_expanded: requires n >= 1, got n = 0");
  std::vector<Coefficient> v(n + 1);
  Coefficient num, rem;
  for (std::uint64_t k = 0; k <= n / 2; ++k) {
    num = binomial(n - k, static_cast<std::int64_t>(k));
    num *= to_coefficient(n);
    const Coefficient divisor = to_coefficient(n - k);
    mpz_tdiv_qr(v[n - 2 * k].get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), divisor.get_mpz_t());
    if (rem != 0)
      throw NotDivisible("lucas_expanded: " + std::to_string(n - k) + " does not divide " +
                         std::to_string(n) + "*C(" + std::to_string(n - k) + "," + std::to_string(k) + ")");
  }
  return Polynomial(std::move(v));
}

} // namespace fibpoly
