#include "fibpoly/numeric.hpp"

#include "fibpoly/errors.hpp"
#include "fibpoly/sequences.hpp"

#include <string>

namespace fibpoly {

namespace {

Coefficient exact_quotient(const Coefficient& num, const Coefficient& den, const char* what) {
  Coefficient q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0)
    throw NotDivisible(std::string(what) + ": " + den.get_str() + " does not divide " + num.get_str());
  return q;
}

// sum_{0<=i<=m/2} C(m-i, i), i.e. F_{m+1}(1).
Coefficient diagonal_binomial_sum(std::uint64_t m) {
  Coefficient sum = 0;
  for (std::uint64_t i = 0; i <= m / 2; ++i) sum += binomial(m - i, static_cast<std::int64_t>(i));
  return sum;
}

} // namespace

Coefficient classical_sum(std::uint64_t n) { return diagonal_binomial_sum(n); }

Coefficient double_sum_square(std::uint64_t n) {
  Coefficient sum = 0;
  for (std::uint64_t i = 0; i <= 2 * n / 3; ++i) {
    for (std::uint64_t j = 0; j <= i; ++j) {
      // 2n-2i-j can go negative near the top of the range; those terms vanish.
      const std::int64_t top = static_cast<std::int64_t>(2 * n) - static_cast<std::int64_t>(2 * i + j);
      if (top < 0) continue;
      sum += binomial(i, static_cast<std::int64_t>(j)) *
             binomial(static_cast<std::uint64_t>(top), static_cast<std::int64_t>(i));
    }
  }
  return sum;
}

Coefficient lucas_number_sum(std::uint64_t m) {
  if (m == 0) throw DomainError("lucas_number_sum: requires m >= 1, got m = 0");
  Coefficient sum = 0;
  const Coefficient mc = to_coefficient(m);
  for (std::uint64_t k = 0; k <= m / 2; ++k) {
    sum += exact_quotient(mc * binomial(m - k, static_cast<std::int64_t>(k)), to_coefficient(m - k),
                          "lucas_number_sum");
  }
  return sum;
}

Coefficient square_single_sum(std::uint64_t n) {
  if (n == 0) throw DomainError("square_single_sum: requires n >= 1, got n = 0");
  // S is the Lucas-number sum for L_{2n}; its range 0<=k<=n is 0<=k<=2n/2.
  const Coefficient s = lucas_number_sum(2 * n);
  const Coefficient numerator = s + 2 * sign_pow(Parity::of_unsigned(n - 1));
  return exact_quotient(numerator, 5, "square_single_sum");
}

Coefficient cube_single_sum(std::uint64_t n) {
  if (n == 0) throw DomainError("cube_single_sum: requires n >= 1, got n = 0");
  const Coefficient a = diagonal_binomial_sum(3 * n - 1);
  const Coefficient b = diagonal_binomial_sum(n - 1);
  const Coefficient numerator = a - 3 * sign_pow(Parity::of_unsigned(n)) * b;
  return exact_quotient(numerator, 5, "cube_single_sum");
}

IntSequencePoint generalized_point(std::uint64_t n, const Coefficient& x0, SequenceKind kind) {
  const Polynomial p = kind == SequenceKind::Fib ? fib(n) : lucas(n);
  const Coefficient via_poly = poly_eval_int(p, x0);

  Coefficient prev = kind == SequenceKind::Fib ? Coefficient(0) : Coefficient(2);
  Coefficient cur = kind == SequenceKind::Fib ? Coefficient(1) : x0;
  Coefficient via_recurrence = prev;
  if (n >= 1) {
    for (std::uint64_t k = 1; k < n; ++k) {
      Coefficient next = x0 * cur + prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    via_recurrence = cur;
  }
  if (via_poly != via_recurrence)
    throw IdentityViolation("generalized_point: polynomial evaluation " + via_poly.get_str() +
                            " != integer recurrence " + via_recurrence.get_str());
  return {n, x0, kind, via_poly};
}

} // namespace fibpoly
