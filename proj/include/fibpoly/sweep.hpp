#pragma once

// Grid verification of every identity the library implements. Drives
// verify_identity plus the expansion and number-level checks, and collects
// a one-line reproduction command for each failure.

#include "fibpoly/linearizer.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fibpoly {

struct SweepBounds {
  std::uint64_t max_n = 0;
  std::uint64_t max_e = 0;
  std::uint64_t max_d = 0;
};

struct SweepFailure {
  std::string identity;
  std::string repro;
  std::string detail;
};

struct SweepResult {
  std::uint64_t checks = 0;
  std::vector<SweepFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Program name used in reproduction commands.
inline constexpr const char* kCliName = "fibpoly";

/// Runs, in order: Fibonacci-power grid (0<=n<=max_n, 1<=e<=max_e) with
/// certificate-shape checks, Lucas-power grid, product grid (0<=d<=max_d) with
/// the d=0 / e=2 consistency check, expansion equivalence (1<=n<=max_n) and
/// number-level identities (0<=n<=max_n). Never throws on a failed identity.
SweepResult run_sweep(const SweepBounds& bounds, SequenceCache& cache);

/// Product certificate at d=0 against the e=2 Fibonacci-power certificate,
/// term by term, identifying the L_0 term with CONST via L_0 = 2.
bool product_matches_square(const Linearization& product, const Linearization& square);

/// Certificate shape for a power family: e = 2d+1 gives d+1 terms of one
/// kind; e = 2d gives d Lucas terms then one CONST term; |multiplier_s| = C(e,s).
bool power_certificate_shape_ok(const Linearization& cert);

} // namespace fibpoly
