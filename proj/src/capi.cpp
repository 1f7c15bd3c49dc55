// extern "C" surface over the C++ core. Every entry point funnels exceptions
// through guarded() so nothing propagates across the C boundary.

#include "fibpoly/fibpoly.h"

#include "fibpoly/errors.hpp"
#include "fibpoly/linearizer.hpp"
#include "fibpoly/numeric.hpp"
#include "fibpoly/polycore.hpp"
#include "fibpoly/sequences.hpp"
#include "fibpoly/serialize.hpp"
#include "fibpoly/sweep.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

struct fp_poly {
  fibpoly::Polynomial value;
};

struct fp_cache {
  fibpoly::SequenceCache value;
};

struct fp_certificate {
  fibpoly::Linearization value;
};

struct fp_report {
  fibpoly::VerificationReport value;
  fp_certificate certificate;
  std::optional<fp_poly> reconstructed;
  fp_poly oracle;
};

struct fp_sweep {
  fibpoly::SweepResult value;
};

namespace {

thread_local std::string last_error;

fp_status fail(fp_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class F>
fp_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const fibpoly::DomainError& ex) {
    return fail(FP_ERR_DOMAIN, ex.what());
  } catch (const fibpoly::NotDivisible& ex) {
    return fail(FP_ERR_NOT_DIVISIBLE, ex.what());
  } catch (const fibpoly::IdentityViolation& ex) {
    return fail(FP_ERR_IDENTITY, ex.what());
  } catch (const fibpoly::ParseError& ex) {
    return fail(FP_ERR_PARSE, ex.what());
  } catch (const nlohmann::json::exception& ex) {
    return fail(FP_ERR_PARSE, ex.what());
  } catch (const std::bad_alloc&) {
    return fail(FP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& ex) {
    return fail(FP_ERR_INTERNAL, ex.what());
  } catch (...) {
    return fail(FP_ERR_INTERNAL, "unknown exception");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fp_status null_arg(const char* what) { return fail(FP_ERR_INVALID_ARGUMENT, std::string(what) + " is NULL"); }

fp_status emit(fibpoly::Polynomial p, fp_poly** out) {
  *out = new fp_poly{std::move(p)};
  return FP_OK;
}

fp_status emit(const std::string& s, char** out) {
  *out = dup_string(s);
  return FP_OK;
}

fibpoly::IdentityKind to_core(fp_identity_kind k) {
  switch (k) {
    case FP_FIB_POWER: return fibpoly::IdentityKind::FibPower;
    case FP_LUCAS_POWER: return fibpoly::IdentityKind::LucasPower;
    case FP_PRODUCT: return fibpoly::IdentityKind::Product;
  }
  throw fibpoly::ParseError("unknown identity kind");
}

fp_identity_kind from_core(fibpoly::Family f) {
  switch (f) {
    case fibpoly::Family::FibPower: return FP_FIB_POWER;
    case fibpoly::Family::LucasPower: return FP_LUCAS_POWER;
    case fibpoly::Family::Product: return FP_PRODUCT;
  }
  return FP_FIB_POWER;
}

using LinearizeFn = fibpoly::LinearizationResult (*)(std::uint64_t, std::uint64_t, fibpoly::SequenceCache&);

fp_status linearize(LinearizeFn fn, fp_cache* cache, uint64_t n, uint64_t k, fp_certificate** cert,
                    fp_poly** poly) {
  return guarded([&] {
    std::optional<fibpoly::SequenceCache> local;
    fibpoly::SequenceCache& c = cache ? cache->value : local.emplace();
    auto result = fn(n, k, c);
    auto cert_handle = std::make_unique<fp_certificate>(fp_certificate{std::move(result.certificate)});
    auto poly_handle = std::make_unique<fp_poly>(fp_poly{std::move(result.polynomial)});
    if (cert) *cert = cert_handle.release();
    if (poly) *poly = poly_handle.release();
    return FP_OK;
  });
}

} // namespace

extern "C" {

const char* fp_version(void) { return "0.1.0"; }

const char* fp_status_name(fp_status status) {
  switch (status) {
    case FP_OK: return "OK";
    case FP_ERR_DOMAIN: return "DomainError";
    case FP_ERR_NOT_DIVISIBLE: return "NotDivisible";
    case FP_ERR_IDENTITY: return "IdentityViolation";
    case FP_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case FP_ERR_PARSE: return "ParseError";
    case FP_ERR_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

const char* fp_last_error(void) { return last_error.c_str(); }

void fp_string_free(char* s) { std::free(s); }

fp_status fp_poly_from_coeffs(const char* const* coeffs, size_t count, fp_poly** out) {
  if (!out) return null_arg("out");
  if (count > 0 && !coeffs) return null_arg("coeffs");
  return guarded([&] {
    std::vector<fibpoly::Coefficient> v;
    v.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (!coeffs[i]) return null_arg("coefficient string");
      v.push_back(fibpoly::parse_coefficient(coeffs[i]));
    }
    return emit(fibpoly::Polynomial(std::move(v)), out);
  });
}

fp_status fp_poly_from_json(const char* json, fp_poly** out) {
  if (!json) return null_arg("json");
  if (!out) return null_arg("out");
  return guarded([&] { return emit(fibpoly::polynomial_from_json(nlohmann::json::parse(json)), out); });
}

fp_status fp_poly_clone(const fp_poly* p, fp_poly** out) {
  if (!p) return null_arg("p");
  if (!out) return null_arg("out");
  return guarded([&] { return emit(p->value, out); });
}

void fp_poly_free(fp_poly* p) { delete p; }

int64_t fp_poly_degree(const fp_poly* p) {
  if (!p || p->value.is_zero()) return FP_DEGREE_NEG_INFINITY;
  return static_cast<int64_t>(p->value.degree().value());
}

size_t fp_poly_size(const fp_poly* p) { return p ? p->value.size() : 0; }

fp_status fp_poly_coeff(const fp_poly* p, size_t i, char** out) {
  if (!p) return null_arg("p");
  if (!out) return null_arg("out");
  return guarded([&] { return emit(p->value[i].get_str(), out); });
}

int fp_poly_equal(const fp_poly* a, const fp_poly* b) {
  if (!a || !b) return 0;
  return a->value == b->value ? 1 : 0;
}

fp_status fp_poly_to_text(const fp_poly* p, char** out) {
  if (!p) return null_arg("p");
  if (!out) return null_arg("out");
  return guarded([&] { return emit(fibpoly::to_text(p->value), out); });
}

fp_status fp_poly_to_json(const fp_poly* p, char** out) {
  if (!p) return null_arg("p");
  if (!out) return null_arg("out");
  return guarded([&] { return emit(fibpoly::to_json(p->value).dump(), out); });
}

fp_status fp_poly_add(const fp_poly* a, const fp_poly* b, fp_poly** out) {
  if (!a || !b) return null_arg("operand");
  if (!out) return null_arg("out");
  return guarded([&] { return emit(fibpoly::poly_add(a->value, b->value), out); });
}

fp_status fp_poly_mul(const fp_poly* a, const fp_poly* b, fp_poly** out) {
  if (!a || !b) return null_arg("operand");
  if (!out) return null_arg("out");
  return guarded([&] { return emit(fibpoly::poly_mul(a->value, b->value), out); });
}

fp_status fp_poly_pow(const fp_poly* p, uint64_t e, fp_poly** out) {
  if (!p) return null_arg("p");
  if (!out) return null_arg("out");
  return guarded([&] { return emit(fibpoly::poly_pow(p->value, e), out); });
}

fp_status fp_poly_exact_div(const fp_poly* num, const fp_poly* den, fp_poly** out) {
  if (!num || !den) return null_arg("operand");
  if (!out) return null_arg("out");
  return guarded([&] { return emit(fibpoly::poly_exact_div(num->value, den->value), out); });
}

fp_status fp_poly_eval(const fp_poly* p, const char* x0, char** out) {
  if (!p) return null_arg("p");
  if (!x0) return null_arg("x0");
  if (!out) return null_arg("out");
  return guarded([&] {
    return emit(fibpoly::poly_eval_int(p->value, fibpoly::parse_coefficient(x0)).get_str(), out);
  });
}

fp_status fp_binomial(uint64_t n, int64_t k, char** out) {
  if (!out) return null_arg("out");
  return guarded([&] { return emit(fibpoly::binomial(n, k).get_str(), out); });
}

fp_status fp_cache_new(fp_cache** out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new fp_cache;
    return FP_OK;
  });
}

void fp_cache_free(fp_cache* cache) { delete cache; }

fp_status fp_fib(fp_cache* cache, uint64_t n, fp_poly** out) {
  if (!out) return null_arg("out");
  return guarded([&] { return emit(cache ? cache->value.fib(n) : fibpoly::fib(n), out); });
}

fp_status fp_lucas(fp_cache* cache, uint64_t n, fp_poly** out) {
  if (!out) return null_arg("out");
  return guarded([&] { return emit(cache ? cache->value.lucas(n) : fibpoly::lucas(n), out); });
}

fp_status fp_fib_expanded(uint64_t n, fp_poly** out) {
  if (!out) return null_arg("out");
  return guarded([&] { return emit(fibpoly::fib_expanded(n), out); });
}

fp_status fp_lucas_expanded(uint64_t n, fp_poly** out) {
  if (!out) return null_arg("out");
  return guarded([&] { return emit(fibpoly::lucas_expanded(n), out); });
}

fp_status fp_custom_sequence(const fp_poly* f0, const fp_poly* f1, uint64_t n, fp_poly** out) {
  if (!f0 || !f1) return null_arg("seed");
  if (!out) return null_arg("out");
  return guarded([&] { return emit(fibpoly::custom_sequence(f0->value, f1->value, n), out); });
}

fp_status fp_linearize_fib_power(fp_cache* cache, uint64_t n, uint64_t e, fp_certificate** cert, fp_poly** poly) {
  return linearize(&fibpoly::linearize_fib_power, cache, n, e, cert, poly);
}

fp_status fp_linearize_lucas_power(fp_cache* cache, uint64_t n, uint64_t e, fp_certificate** cert,
                                   fp_poly** poly) {
  return linearize(&fibpoly::linearize_lucas_power, cache, n, e, cert, poly);
}

fp_status fp_product_linearization(fp_cache* cache, uint64_t n, uint64_t d, fp_certificate** cert,
                                   fp_poly** poly) {
  return linearize(&fibpoly::product_linearization, cache, n, d, cert, poly);
}

void fp_certificate_free(fp_certificate* cert) { delete cert; }

fp_identity_kind fp_certificate_kind(const fp_certificate* cert) {
  return cert ? from_core(cert->value.family) : FP_FIB_POWER;
}

uint64_t fp_certificate_n(const fp_certificate* cert) { return cert ? cert->value.n : 0; }

uint64_t fp_certificate_parameter(const fp_certificate* cert) { return cert ? cert->value.parameter : 0; }

uint64_t fp_certificate_denom_exponent(const fp_certificate* cert) {
  return cert ? cert->value.denom_exponent : 0;
}

size_t fp_certificate_term_count(const fp_certificate* cert) { return cert ? cert->value.terms.size() : 0; }

fp_status fp_certificate_term(const fp_certificate* cert, size_t i, fp_term_kind* kind, uint64_t* subscript,
                              char** multiplier) {
  if (!cert) return null_arg("cert");
  if (i >= cert->value.terms.size()) return fail(FP_ERR_INVALID_ARGUMENT, "term index out of range");
  return guarded([&] {
    const auto& t = cert->value.terms[i];
    if (multiplier) *multiplier = dup_string(t.multiplier.get_str());
    if (subscript) *subscript = t.subscript;
    if (kind) {
      switch (t.kind) {
        case fibpoly::TermKind::Fib: *kind = FP_TERM_FIB; break;
        case fibpoly::TermKind::Lucas: *kind = FP_TERM_LUCAS; break;
        case fibpoly::TermKind::Const: *kind = FP_TERM_CONST; break;
      }
    }
    return FP_OK;
  });
}

fp_status fp_certificate_symbolic(const fp_certificate* cert, size_t i, char** out) {
  if (!cert) return null_arg("cert");
  if (!out) return null_arg("out");
  if (i >= cert->value.terms.size()) return fail(FP_ERR_INVALID_ARGUMENT, "term index out of range");
  return guarded([&] { return emit(cert->value.symbolic_multiplier(i), out); });
}

fp_status fp_certificate_to_text(const fp_certificate* cert, char** out) {
  if (!cert) return null_arg("cert");
  if (!out) return null_arg("out");
  return guarded([&] { return emit(fibpoly::to_text(cert->value), out); });
}

fp_status fp_certificate_to_json(const fp_certificate* cert, char** out) {
  if (!cert) return null_arg("cert");
  if (!out) return null_arg("out");
  return guarded([&] { return emit(fibpoly::to_json(cert->value).dump(), out); });
}

fp_status fp_certificate_from_json(const char* json, fp_certificate** out) {
  if (!json) return null_arg("json");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new fp_certificate{fibpoly::linearization_from_json(nlohmann::json::parse(json))};
    return FP_OK;
  });
}

fp_status fp_certificate_reconstruct(fp_cache* cache, const fp_certificate* cert, fp_poly** out) {
  if (!cert) return null_arg("cert");
  if (!out) return null_arg("out");
  return guarded([&] {
    std::optional<fibpoly::SequenceCache> local;
    fibpoly::SequenceCache& c = cache ? cache->value : local.emplace();
    return emit(cert->value.reconstruct(c), out);
  });
}

fp_status fp_verify_identity(fp_cache* cache, fp_identity_kind kind, uint64_t n, uint64_t k, fp_report** out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    std::optional<fibpoly::SequenceCache> local;
    fibpoly::SequenceCache& c = cache ? cache->value : local.emplace();
    auto r = fibpoly::verify_identity(to_core(kind), n, k, c);
    auto handle = std::make_unique<fp_report>();
    handle->certificate.value = r.certificate;
    if (r.reconstructed) handle->reconstructed = fp_poly{*r.reconstructed};
    handle->oracle.value = r.oracle;
    handle->value = std::move(r);
    *out = handle.release();
    return FP_OK;
  });
}

void fp_report_free(fp_report* report) { delete report; }

fp_verdict fp_report_verdict(const fp_report* report) {
  if (!report) return FP_VERDICT_MISMATCH;
  switch (report->value.verdict) {
    case fibpoly::Verdict::Equal: return FP_VERDICT_EQUAL;
    case fibpoly::Verdict::Mismatch: return FP_VERDICT_MISMATCH;
    case fibpoly::Verdict::NotDivisible: return FP_VERDICT_NOT_DIVISIBLE;
  }
  return FP_VERDICT_MISMATCH;
}

const fp_certificate* fp_report_certificate(const fp_report* report) {
  return report ? &report->certificate : nullptr;
}

const fp_poly* fp_report_reconstructed(const fp_report* report) {
  return report && report->reconstructed ? &*report->reconstructed : nullptr;
}

const fp_poly* fp_report_oracle(const fp_report* report) { return report ? &report->oracle : nullptr; }

fp_status fp_report_to_json(const fp_report* report, char** out) {
  if (!report) return null_arg("report");
  if (!out) return null_arg("out");
  return guarded([&] { return emit(fibpoly::to_json(report->value).dump(), out); });
}

fp_status fp_sweep_run(fp_cache* cache, uint64_t max_n, uint64_t max_e, uint64_t max_d, fp_sweep** out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    std::optional<fibpoly::SequenceCache> local;
    fibpoly::SequenceCache& c = cache ? cache->value : local.emplace();
    *out = new fp_sweep{fibpoly::run_sweep({max_n, max_e, max_d}, c)};
    return FP_OK;
  });
}

void fp_sweep_free(fp_sweep* sweep) { delete sweep; }

uint64_t fp_sweep_checks(const fp_sweep* sweep) { return sweep ? sweep->value.checks : 0; }

size_t fp_sweep_failure_count(const fp_sweep* sweep) { return sweep ? sweep->value.failures.size() : 0; }

fp_status fp_sweep_failure(const fp_sweep* sweep, size_t i, const char** identity, const char** repro,
                           const char** detail) {
  if (!sweep) return null_arg("sweep");
  if (i >= sweep->value.failures.size()) return fail(FP_ERR_INVALID_ARGUMENT, "failure index out of range");
  const auto& f = sweep->value.failures[i];
  if (identity) *identity = f.identity.c_str();
  if (repro) *repro = f.repro.c_str();
  if (detail) *detail = f.detail.c_str();
  return FP_OK;
}

fp_status fp_classical_sum(uint64_t n, char** out) {
  if (!out) return null_arg("out");
  return guarded([&] { return emit(fibpoly::classical_sum(n).get_str(), out); });
}

fp_status fp_double_sum_square(uint64_t n, char** out) {
  if (!out) return null_arg("out");
  return guarded([&] { return emit(fibpoly::double_sum_square(n).get_str(), out); });
}

fp_status fp_square_single_sum(uint64_t n, char** out) {
  if (!out) return null_arg("out");
  return guarded([&] { return emit(fibpoly::square_single_sum(n).get_str(), out); });
}

fp_status fp_cube_single_sum(uint64_t n, char** out) {
  if (!out) return null_arg("out");
  return guarded([&] { return emit(fibpoly::cube_single_sum(n).get_str(), out); });
}

fp_status fp_generalized_point(uint64_t n, const char* x0, fp_sequence_kind kind, char** out) {
  if (!x0) return null_arg("x0");
  if (!out) return null_arg("out");
  return guarded([&] {
    const auto k = kind == FP_SEQ_LUCAS ? fibpoly::SequenceKind::Lucas : fibpoly::SequenceKind::Fib;
    return emit(fibpoly::generalized_point(n, fibpoly::parse_coefficient(x0), k).value.get_str(), out);
  });
}

} // extern "C"
