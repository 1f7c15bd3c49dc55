#include "fibpoly/linearizer.hpp"

#include "fibpoly/errors.hpp"

#include <string>
#include <utility>

namespace fibpoly {

std::string_view to_string(TermKind k) {
  switch (k) {
    case TermKind::Fib: return "FIB";
    case TermKind::Lucas: return "LUCAS";
    case TermKind::Const: return "CONST";
  }
  return "?";
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::FibPower: return "FIB_POWER";
    case Family::LucasPower: return "LUCAS_POWER";
    case Family::Product: return "PRODUCT";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "equal";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::NotDivisible: return "not-divisible";
  }
  return "?";
}

std::optional<TermKind> term_kind_from_string(std::string_view s) {
  if (s == "FIB") return TermKind::Fib;
  if (s == "LUCAS") return TermKind::Lucas;
  if (s == "CONST") return TermKind::Const;
  return std::nullopt;
}

std::optional<Family> family_from_string(std::string_view s) {
  if (s == "FIB_POWER") return Family::FibPower;
  if (s == "LUCAS_POWER") return Family::LucasPower;
  if (s == "PRODUCT") return Family::Product;
  return std::nullopt;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("subscript overflows 64 bits");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("subscript overflows 64 bits");
  return r;
}

// Parity of n-1, with n = 0 giving -1 (odd).
Parity parity_n_minus_1(std::uint64_t n) {
  return n == 0 ? Parity::of(-1) : Parity::of_unsigned(n - 1);
}

// Shared shape of the two power families: terms (-1)^{s * shift} C(e,s) K_{(e-2s)n}
// for s < e/2, and for even e a middle constant (-1)^{(e/2) * shift} C(e, e/2).
Linearization power_certificate(Family family, TermKind odd_kind, std::uint64_t n, std::uint64_t e,
                                Parity shift) {
  if (e == 0) throw DomainError("exponent must be >= 1, got e = 0");
  Linearization cert;
  cert.family = family;
  cert.n = n;
  cert.parameter = e;
  cert.n_parity = Parity::of_unsigned(n);
  const std::uint64_t d = e / 2;
  const bool odd = (e % 2) == 1;
  cert.denom_exponent = family == Family::FibPower ? d : 0;

  // Even Fibonacci powers switch to Lucas terms.
  const TermKind kind = odd ? odd_kind : TermKind::Lucas;
  const std::uint64_t top = odd ? d : d - 1;
  checked_mul(e, n);
  for (std::uint64_t s = 0; s <= top; ++s) {
    Coefficient m = binomial(e, static_cast<std::int64_t>(s));
    m *= sign_pow(Parity::of_unsigned(s) * shift);
#ifdef FIBPOLY_NEGATIVE_CONTROL
    // Deliberately wrong sign for the acceptance negative control.
    if (family == Family::FibPower && odd && s == 1) m = -m;
#endif
    cert.terms.push_back({kind, (e - 2 * s) * n, std::move(m)});
  }
  if (!odd) {
    Coefficient m = binomial(e, static_cast<std::int64_t>(d));
    m *= sign_pow(Parity::of_unsigned(d) * shift);
    cert.terms.push_back({TermKind::Const, 0, std::move(m)});
  }
  return cert;
}

} // namespace

Linearization fib_power_certificate(std::uint64_t n, std::uint64_t e) {
  return power_certificate(Family::FibPower, TermKind::Fib, n, e, parity_n_minus_1(n));
}

Linearization lucas_power_certificate(std::uint64_t n, std::uint64_t e) {
  return power_certificate(Family::LucasPower, TermKind::Lucas, n, e, Parity::of_unsigned(n));
}

Linearization product_certificate(std::uint64_t n, std::uint64_t d) {
  Linearization cert;
  cert.family = Family::Product;
  cert.n = n;
  cert.parameter = d;
  cert.n_parity = Parity::of_unsigned(n);
  cert.denom_exponent = 1;
  cert.terms.push_back({TermKind::Lucas, checked_add(checked_mul(2, n), d), Coefficient(1)});
  cert.terms.push_back({TermKind::Lucas, d, -sign_pow(cert.n_parity)});
  return cert;
}

Polynomial Linearization::numerator(SequenceCache& cache) const {
  Polynomial sum;
  for (const auto& t : terms) {
    switch (t.kind) {
      case TermKind::Fib: sum += t.multiplier * cache.fib(t.subscript); break;
      case TermKind::Lucas: sum += t.multiplier * cache.lucas(t.subscript); break;
      case TermKind::Const: sum += Polynomial::constant(t.multiplier); break;
    }
  }
  return sum;
}

Polynomial Linearization::reconstruct(SequenceCache& cache) const {
  return poly_exact_div(numerator(cache), poly_pow(x2_plus_4(), denom_exponent));
}

std::string Linearization::symbolic_multiplier(std::size_t i) const {
  if (family == Family::Product) return i == 0 ? "1" : "-(-1)^n";
  const std::string e = std::to_string(parameter);
  const std::string s = std::to_string(i);
  const std::string exponent = family == Family::FibPower ? s + "*(n-1)" : s + "*n";
  return "C(" + e + "," + s + ")*(-1)^(" + exponent + ")";
}

bool Linearization::well_formed() const {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (t.multiplier == 0) return false;
    if (t.kind == TermKind::Const && t.subscript != 0) return false;
    if (i > 0) {
      const auto prev = terms[i - 1].subscript;
      if (t.subscript > prev) return false;
      if (n >= 1 && t.subscript == prev) return false;
    }
  }
  return true;
}

LinearizationResult linearize_fib_power(std::uint64_t n, std::uint64_t e, SequenceCache& cache) {
  Linearization cert = fib_power_certificate(n, e);
  Polynomial p = cert.reconstruct(cache);
  return {std::move(cert), std::move(p)};
}

LinearizationResult linearize_lucas_power(std::uint64_t n, std::uint64_t e, SequenceCache& cache) {
  Linearization cert = lucas_power_certificate(n, e);
  Polynomial p = cert.reconstruct(cache);
  return {std::move(cert), std::move(p)};
}

LinearizationResult product_linearization(std::uint64_t n, std::uint64_t d, SequenceCache& cache) {
  Linearization cert = product_certificate(n, d);
  Polynomial p = cert.reconstruct(cache);
  return {std::move(cert), std::move(p)};
}

VerificationReport verify_identity(IdentityKind kind, std::uint64_t n, std::uint64_t k, SequenceCache& cache) {
  VerificationReport report;
  report.kind = kind;
  report.n = n;
  report.k = k;
  switch (kind) {
    case IdentityKind::FibPower:
      report.certificate = fib_power_certificate(n, k);
      report.oracle = poly_pow(cache.fib(n), k);
      break;
    case IdentityKind::LucasPower:
      report.certificate = lucas_power_certificate(n, k);
      report.oracle = poly_pow(cache.lucas(n), k);
      break;
    case IdentityKind::Product:
      report.certificate = product_certificate(n, k);
      report.oracle = cache.fib(n) * cache.fib(checked_add(n, k));
      break;
  }
  try {
    report.reconstructed = report.certificate.reconstruct(cache);
  } catch (const NotDivisible& ex) {
    report.verdict = Verdict::NotDivisible;
    report.detail = ex.what();
    return report;
  }
  if (*report.reconstructed == report.oracle) {
    report.verdict = Verdict::Equal;
  } else {
    report.verdict = Verdict::Mismatch;
    report.detail = "linearized form differs from the direct computation";
  }
  return report;
}

} // namespace fibpoly
