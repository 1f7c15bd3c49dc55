#pragma once

// Exact univariate polynomials over Z.
//
// Polynomials are stored densely in ascending degree. The stored vector never
// ends in a zero coefficient, so the zero polynomial is the empty vector and
// equality is plain structural comparison.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace fibpoly {

using Coefficient = mpz_class;

inline Coefficient to_coefficient(std::uint64_t v) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return Coefficient(static_cast<unsigned long>(v));
}
inline Coefficient to_coefficient(std::int64_t v) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return Coefficient(static_cast<long>(v));
}

/// Degree of a polynomial. The zero polynomial has degree minus infinity,
/// which compares below every finite degree and absorbs addition.
class Degree {
public:
  static constexpr Degree neg_infinity() { return Degree{}; }
  static constexpr Degree finite(std::size_t d) { return Degree{d}; }

  constexpr bool is_neg_infinity() const { return !value_.has_value(); }
  /// Precondition: !is_neg_infinity().
  constexpr std::size_t value() const { return *value_; }

  constexpr friend bool operator==(const Degree&, const Degree&) = default;
  constexpr friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.is_neg_infinity() || b.is_neg_infinity())
      return !a.is_neg_infinity() <=> !b.is_neg_infinity();
    return *a.value_ <=> *b.value_;
  }
  constexpr friend Degree operator+(const Degree& a, const Degree& b) {
    if (a.is_neg_infinity() || b.is_neg_infinity()) return neg_infinity();
    return finite(*a.value_ + *b.value_);
  }

private:
  constexpr Degree() = default;
  constexpr explicit Degree(std::size_t d) : value_(d) {}
  std::optional<std::size_t> value_;
};

class Polynomial {
public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Coefficient> ascending);
  explicit Polynomial(std::vector<Coefficient> ascending);

  static Polynomial constant(const Coefficient& c);
  /// c * x^k
  static Polynomial monomial(const Coefficient& c, std::size_t k);
  static Polynomial x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  Degree degree() const;
  /// Coefficient of x^i; zero beyond the stored range.
  Coefficient operator[](std::size_t i) const;
  /// Leading coefficient. Precondition: !is_zero().
  const Coefficient& leading() const { return coeffs_.back(); }
  std::span<const Coefficient> coefficients() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Coefficient& c, const Polynomial& p);

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// x * p, a coefficient shift.
  Polynomial shifted_up(std::size_t k = 1) const;

  /// True when the last stored coefficient is nonzero (or the vector is empty).
  bool is_canonical() const { return coeffs_.empty() || coeffs_.back() != 0; }

private:
  void trim();
  std::vector<Coefficient> coeffs_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

/// p^e by repeated squaring. p^0 = 1, including p = 0.
Polynomial poly_pow(const Polynomial& p, std::uint64_t e);

/// Returns q with q * den == num. Throws NotDivisible when the remainder is
/// nonzero (or when a quotient coefficient is not an integer), DomainError
/// when den is zero.
Polynomial poly_exact_div(const Polynomial& num, const Polynomial& den);

/// Horner evaluation at an integer point.
Coefficient poly_eval_int(const Polynomial& p, const Coefficient& x0);

/// C(n, k); zero when k < 0 or k > n.
Coefficient binomial(std::uint64_t n, std::int64_t k);

/// e mod 2, normalised to {0, 1} for negative e as well.
class Parity {
public:
  constexpr Parity() = default;
  static constexpr Parity of(std::int64_t e) {
    return Parity(static_cast<unsigned>(((e % 2) + 2) % 2));
  }
  /// Parity of e given as an unsigned count.
  static constexpr Parity of_unsigned(std::uint64_t e) {
    return Parity(static_cast<unsigned>(e & 1u));
  }
  constexpr unsigned bit() const { return bit_; }
  constexpr bool is_odd() const { return bit_ == 1; }

  /// Parity of a product a*b, without forming the product.
  constexpr friend Parity operator*(Parity a, Parity b) { return Parity(a.bit_ & b.bit_); }
  /// Parity of a sum a+b.
  constexpr friend Parity operator+(Parity a, Parity b) { return Parity(a.bit_ ^ b.bit_); }
  constexpr friend bool operator==(Parity, Parity) = default;

private:
  constexpr explicit Parity(unsigned bit) : bit_(bit) {}
  unsigned bit_ = 0;
};

/// (-1)^e for an exponent with the given parity.
Coefficient sign_pow(Parity e_parity);

/// x^2 + 4, the denominator base of every Fibonacci linearization.
const Polynomial& x2_plus_4();

} // namespace fibpoly
