#pragma once

// Number-level (integer x) specializations. At x = 1 the polynomials F_n and
// L_n become the Fibonacci and Lucas numbers.

#include "fibpoly/polycore.hpp"

#include <cstdint>

namespace fibpoly {

enum class SequenceKind { Fib, Lucas };

struct IntSequencePoint {
  std::uint64_t n = 0;
  Coefficient x0;
  SequenceKind kind = SequenceKind::Fib;
  Coefficient value;
};

/// F_{n+1} = sum_{0<=i<=n/2} C(n-i, i).
Coefficient classical_sum(std::uint64_t n);

/// F_{n+1}^2 = sum_{0<=j<=i<=2n/3} C(i,j) C(2n-2i-j, i). Two summation levels.
Coefficient double_sum_square(std::uint64_t n);

/// L_m = sum_{0<=k<=m/2} m/(m-k) C(m-k,k) at x = 1, each term divided exactly.
/// Throws DomainError for m = 0.
Coefficient lucas_number_sum(std::uint64_t m);

/// F_n^2 = (S + 2(-1)^{n-1}) / 5 with S = sum_{0<=k<=n} 2n/(2n-k) C(2n-k,k).
/// Throws DomainError for n = 0, NotDivisible if any exact division fails.
Coefficient square_single_sum(std::uint64_t n);

/// F_n^3 = (A - 3(-1)^n B) / 5 with A = sum_{i<=(3n-1)/2} C(3n-1-i,i),
/// B = sum_{i<=(n-1)/2} C(n-1-i,i). Throws DomainError for n = 0.
Coefficient cube_single_sum(std::uint64_t n);

/// F_n(x0) or L_n(x0), computed twice: by evaluating the polynomial and by the
/// integer recurrence seeded (0, 1) or (2, x0). Throws IdentityViolation if
/// the two disagree.
IntSequencePoint generalized_point(std::uint64_t n, const Coefficient& x0, SequenceKind kind);

} // namespace fibpoly
