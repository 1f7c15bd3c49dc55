#pragma once

// One-level linearizations of F_n^e, L_n^e and F_n F_{n+d}.
//
// A certificate is a short list of signed multiples of single F or L terms,
// plus a denominator exponent d: the linearized value is
//     (sum multiplier * term) / (x^2 + 4)^d.
// Multipliers are fully evaluated for the concrete n; the parity of n is
// kept alongside so the symbolic sign factor can be reprinted.

#include "fibpoly/polycore.hpp"
#include "fibpoly/sequences.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fibpoly {

enum class TermKind { Fib, Lucas, Const };

enum class Family { FibPower, LucasPower, Product };

std::string_view to_string(TermKind k);
std::string_view to_string(Family f);
std::optional<TermKind> term_kind_from_string(std::string_view s);
std::optional<Family> family_from_string(std::string_view s);

struct LinearizationTerm {
  TermKind kind = TermKind::Const;
  /// Index of F or L; always 0 for Const.
  std::uint64_t subscript = 0;
  Coefficient multiplier;

  friend bool operator==(const LinearizationTerm&, const LinearizationTerm&) = default;
};

struct Linearization {
  Family family = Family::FibPower;
  std::uint64_t n = 0;
  /// Exponent e for the power families, shift d for Product.
  std::uint64_t parameter = 0;
  Parity n_parity;
  std::uint64_t denom_exponent = 0;
  std::vector<LinearizationTerm> terms;

  friend bool operator==(const Linearization&, const Linearization&) = default;

  /// sum multiplier * poly(kind, subscript); Const terms contribute the bare multiplier.
  Polynomial numerator(SequenceCache& cache) const;
  /// numerator / (x^2+4)^denom_exponent via exact division (NotDivisible on failure).
  Polynomial reconstruct(SequenceCache& cache) const;
  /// Symbolic form of term i's multiplier, e.g. "C(7,1)*(-1)^(1*(n-1))".
  std::string symbolic_multiplier(std::size_t i) const;
  /// Structural invariants: nonzero multipliers, non-increasing subscripts
  /// (strictly decreasing when n >= 1), Const terms at subscript 0.
  bool well_formed() const;
};

struct LinearizationResult {
  Linearization certificate;
  Polynomial polynomial;
};

// Certificates alone, without reconstruction.
Linearization fib_power_certificate(std::uint64_t n, std::uint64_t e);
Linearization lucas_power_certificate(std::uint64_t n, std::uint64_t e);
Linearization product_certificate(std::uint64_t n, std::uint64_t d);

/// F_n^e. Odd e = 2d+1:
///     F_n^e = (x^2+4)^{-d} sum_{s=0}^{d} (-1)^{s(n-1)} C(e,s) F_{(e-2s)n}
/// Even e = 2d:
///     F_n^e = (x^2+4)^{-d} [ sum_{s=0}^{d-1} (-1)^{s(n-1)} C(e,s) L_{(e-2s)n}
///                            + (-1)^{d(n-1)} C(e,d) ]
/// Throws DomainError for e = 0.
LinearizationResult linearize_fib_power(std::uint64_t n, std::uint64_t e, SequenceCache& cache);

/// L_n^e = sum_{s<e/2} (-1)^{sn} C(e,s) L_{(e-2s)n}  [+ (-1)^{dn} C(2d,d) for e = 2d].
/// Denominator exponent is always 0. Throws DomainError for e = 0.
LinearizationResult linearize_lucas_power(std::uint64_t n, std::uint64_t e, SequenceCache& cache);

/// F_n F_{n+d} = (L_{2n+d} - (-1)^n L_d) / (x^2+4).
LinearizationResult product_linearization(std::uint64_t n, std::uint64_t d, SequenceCache& cache);

enum class IdentityKind { FibPower, LucasPower, Product };

enum class Verdict { Equal, Mismatch, NotDivisible };

std::string_view to_string(Verdict v);

struct VerificationReport {
  IdentityKind kind = IdentityKind::FibPower;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  Linearization certificate;
  /// Empty when the numerator was not divisible by (x^2+4)^d.
  std::optional<Polynomial> reconstructed;
  Polynomial oracle;
  Verdict verdict = Verdict::Equal;
  std::string detail;

  bool ok() const { return verdict == Verdict::Equal; }
};

/// Compares the linearized form with the direct power or product. Mismatches
/// and failed divisions are reported, never thrown; DomainError propagates.
VerificationReport verify_identity(IdentityKind kind, std::uint64_t n, std::uint64_t k, SequenceCache& cache);

} // namespace fibpoly
