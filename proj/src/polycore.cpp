#include "fibpoly/polycore.hpp"

#include "fibpoly/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace fibpoly {

Polynomial::Polynomial(std::initializer_list<Coefficient> ascending) : coeffs_(ascending) {
  trim();
}

Polynomial::Polynomial(std::vector<Coefficient> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

Polynomial Polynomial::constant(const Coefficient& c) { return Polynomial(std::vector<Coefficient>{c}); }

Polynomial Polynomial::monomial(const Coefficient& c, std::size_t k) {
  std::vector<Coefficient> v(k + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Degree Polynomial::degree() const {
  return coeffs_.empty() ? Degree::neg_infinity() : Degree::finite(coeffs_.size() - 1);
}

Coefficient Polynomial::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Coefficient(0);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const auto& big = a.size() >= b.size() ? a : b;
  const auto& small = a.size() >= b.size() ? b : a;
  Polynomial r = big;
  for (std::size_t i = 0; i < small.size(); ++i) r.coeffs_[i] += small.coeffs_[i];
  r.trim();
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Coefficient> v(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.size(); ++i) v[i] -= b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Coefficient> v(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Coefficient& ai = a.coeffs_[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b.coeffs_[j] != 0) mpz_addmul(v[i + j].get_mpz_t(), ai.get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  // Leading product of two nonzero leading coefficients is nonzero over Z.
  return Polynomial(std::move(v));
}

Polynomial operator*(const Coefficient& c, const Polynomial& p) {
  if (c == 0) return {};
  Polynomial r = p;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Polynomial Polynomial::shifted_up(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Coefficient> v(coeffs_.size() + k);
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
  return Polynomial(std::move(v));
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial poly_pow(const Polynomial& p, std::uint64_t e) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = p;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial poly_exact_div(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DomainError("poly_exact_div: division by the zero polynomial");
  if (num.is_zero()) return {};
  if (num.size() < den.size())
    throw NotDivisible("poly_exact_div: numerator degree below denominator degree");

  const std::size_t dn = den.size() - 1;
  const std::size_t qn = num.size() - den.size() + 1;
  auto dc = den.coefficients();
  const Coefficient& lead = den.leading();

  std::vector<Coefficient> rem(num.coefficients().begin(), num.coefficients().end());
  std::vector<Coefficient> q(qn);
  Coefficient r;
  for (std::size_t k = qn; k-- > 0;) {
    Coefficient& top = rem[k + dn];
    if (top == 0) continue;
    mpz_fdiv_qr(q[k].get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (r != 0)
      throw NotDivisible("poly_exact_div: quotient coefficient of x^" + std::to_string(k) +
                         " is not an integer");
    for (std::size_t j = 0; j <= dn; ++j) {
      if (dc[j] != 0) mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), dc[j].get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (rem[i] != 0)
      throw NotDivisible("poly_exact_div: nonzero remainder (coefficient of x^" + std::to_string(i) +
                         " is " + rem[i].get_str() + ")");
  }
  return Polynomial(std::move(q));
}

Coefficient poly_eval_int(const Polynomial& p, const Coefficient& x0) {
  Coefficient acc = 0;
  auto c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= x0;
    acc += c[i];
  }
  return acc;
}

Coefficient binomial(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
  Coefficient r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Coefficient sign_pow(Parity e_parity) { return e_parity.is_odd() ? Coefficient(-1) : Coefficient(1); }

const Polynomial& x2_plus_4() {
  static const Polynomial p{4, 0, 1};
  return p;
}

} // namespace fibpoly
