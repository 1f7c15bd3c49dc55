#include "fibpoly/sweep.hpp"

#include "fibpoly/errors.hpp"
#include "fibpoly/numeric.hpp"
#include "fibpoly/sequences.hpp"

#include <exception>
#include <functional>
#include <string>

namespace fibpoly {

bool product_matches_square(const Linearization& product, const Linearization& square) {
  if (product.family != Family::Product || product.parameter != 0) return false;
  if (square.family != Family::FibPower || square.parameter != 2) return false;
  if (product.terms.size() != 2 || square.terms.size() != 2) return false;
  if (product.denom_exponent != square.denom_exponent) return false;
  if (product.terms[0] != square.terms[0]) return false;
  const auto& l0 = product.terms[1];
  const auto& c = square.terms[1];
  return l0.kind == TermKind::Lucas && l0.subscript == 0 && c.kind == TermKind::Const &&
         2 * l0.multiplier == c.multiplier;
}

bool power_certificate_shape_ok(const Linearization& cert) {
  if (cert.family == Family::Product || cert.parameter == 0) return false;
  const std::uint64_t e = cert.parameter;
  const std::uint64_t d = e / 2;
  const bool odd = e % 2 == 1;
  // Odd: s = 0..d. Even: d Lucas terms followed by CONST.
  const std::size_t expected = d + 1;
  if (cert.terms.size() != expected) return false;
  const TermKind body = odd && cert.family == Family::FibPower ? TermKind::Fib : TermKind::Lucas;
  for (std::size_t s = 0; s < cert.terms.size(); ++s) {
    const auto& t = cert.terms[s];
    const bool is_const = !odd && s == d;
    if (t.kind != (is_const ? TermKind::Const : body)) return false;
    if (abs(t.multiplier) != binomial(e, static_cast<std::int64_t>(s))) return false;
  }
  const std::uint64_t denom = cert.family == Family::FibPower ? d : 0;
  return cert.denom_exponent == denom && cert.well_formed();
}

namespace {

class Recorder {
public:
  explicit Recorder(SweepResult& out) : out_(out) {}

  // Runs one check; any exception counts as a failure.
  void check(const std::string& identity, const std::string& repro, const std::function<std::string()>& body) {
    ++out_.checks;
    std::string detail;
    try {
      detail = body();
    } catch (const std::exception& ex) {
      detail = ex.what();
    }
    if (!detail.empty()) out_.failures.push_back({identity, repro, std::move(detail)});
  }

private:
  SweepResult& out_;
};

std::string cmd(const std::string& args) { return std::string(kCliName) + " " + args; }

std::string u(std::uint64_t v) { return std::to_string(v); }

void sweep_powers(IdentityKind kind, const SweepBounds& b, SequenceCache& cache, Recorder& rec) {
  const bool fibk = kind == IdentityKind::FibPower;
  for (std::uint64_t n = 0; n <= b.max_n; ++n) {
    for (std::uint64_t e = 1; e <= b.max_e; ++e) {
      const std::string name = std::string(fibk ? "F_" : "L_") + u(n) + "^" + u(e);
      const std::string repro = cmd(std::string("power ") + (fibk ? "fib " : "lucas ") + u(n) + " " + u(e) +
                                    " --certificate");
      rec.check(name, repro, [&]() -> std::string {
        const auto report = verify_identity(kind, n, e, cache);
        if (!report.ok()) return std::string(to_string(report.verdict)) + ": " + report.detail;
        if (!power_certificate_shape_ok(report.certificate)) return "certificate shape violated";
        return {};
      });
    }
  }
}

void sweep_products(const SweepBounds& b, SequenceCache& cache, Recorder& rec) {
  for (std::uint64_t n = 0; n <= b.max_n; ++n) {
    for (std::uint64_t d = 0; d <= b.max_d; ++d) {
      const std::string repro = cmd("product " + u(n) + " " + u(d) + " --certificate");
      rec.check("F_" + u(n) + "*F_" + u(n + d), repro, [&]() -> std::string {
        const auto report = verify_identity(IdentityKind::Product, n, d, cache);
        if (!report.ok()) return std::string(to_string(report.verdict)) + ": " + report.detail;
        if (!report.certificate.well_formed()) return "certificate not well formed";
        return {};
      });
    }
    rec.check("F_" + u(n) + "*F_" + u(n) + " vs F_" + u(n) + "^2 certificate",
              cmd("product " + u(n) + " 0 --certificate"), [&]() -> std::string {
                if (!product_matches_square(product_certificate(n, 0), fib_power_certificate(n, 2)))
                  return "product d=0 certificate differs from the e=2 power certificate";
                return {};
              });
  }
}

void sweep_expansions(const SweepBounds& b, SequenceCache& cache, Recorder& rec) {
  for (std::uint64_t n = 1; n <= b.max_n; ++n) {
    rec.check("F_" + u(n) + " expansion", cmd("gen fib " + u(n) + " --expanded"), [&]() -> std::string {
      return fib_expanded(n) == cache.fib(n) ? "" : "closed-form sum differs from recurrence";
    });
    rec.check("L_" + u(n) + " expansion", cmd("gen lucas " + u(n) + " --expanded"), [&]() -> std::string {
      return lucas_expanded(n) == cache.lucas(n) ? "" : "closed-form sum differs from recurrence";
    });
  }
}

void sweep_numbers(const SweepBounds& b, SequenceCache& cache, Recorder& rec) {
  const Coefficient one = 1;
  for (std::uint64_t n = 0; n <= b.max_n; ++n) {
    const std::string repro = cmd("numbers " + u(n));
    rec.check("classical sum squared vs double sum, n=" + u(n), repro, [&]() -> std::string {
      const Coefficient c = classical_sum(n);
      if (c != generalized_point(n + 1, one, SequenceKind::Fib).value) return "classical sum != F_(n+1)";
      return c * c == double_sum_square(n) ? "" : "classical_sum^2 != double_sum_square";
    });
    if (n == 0) continue;
    rec.check("F_" + u(n) + "^2 and F_" + u(n) + "^3 single sums", repro, [&]() -> std::string {
      const Coefficient f = generalized_point(n, one, SequenceKind::Fib).value;
      if (square_single_sum(n) != f * f) return "square_single_sum != F_n^2";
      if (cube_single_sum(n) != f * f * f) return "cube_single_sum != F_n^3";
      if (lucas_number_sum(2 * n) != poly_eval_int(cache.lucas(2 * n), one)) return "Lucas sum != L_2n(1)";
      return {};
    });
  }
}

} // namespace

SweepResult run_sweep(const SweepBounds& bounds, SequenceCache& cache) {
  SweepResult result;
  Recorder rec(result);
  sweep_powers(IdentityKind::FibPower, bounds, cache, rec);
  sweep_powers(IdentityKind::LucasPower, bounds, cache, rec);
  sweep_products(bounds, cache, rec);
  sweep_expansions(bounds, cache, rec);
  sweep_numbers(bounds, cache, rec);
  return result;
}

} // namespace fibpoly
