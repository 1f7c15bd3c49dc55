// fibpoly: command-line front end over the libfibpoly C API.
//
// Exit codes: 0 success, 1 an identity failed to verify, 2 usage or domain
// error.

#include "fibpoly/fibpoly.h"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentity = 1;
constexpr int kExitUsage = 2;

struct PolyDeleter {
  void operator()(fp_poly* p) const { fp_poly_free(p); }
};
struct CertDeleter {
  void operator()(fp_certificate* c) const { fp_certificate_free(c); }
};
struct CacheDeleter {
  void operator()(fp_cache* c) const { fp_cache_free(c); }
};
struct SweepDeleter {
  void operator()(fp_sweep* s) const { fp_sweep_free(s); }
};
struct StringDeleter {
  void operator()(char* s) const { fp_string_free(s); }
};

using Poly = std::unique_ptr<fp_poly, PolyDeleter>;
using Cert = std::unique_ptr<fp_certificate, CertDeleter>;
using Cache = std::unique_ptr<fp_cache, CacheDeleter>;
using Sweep = std::unique_ptr<fp_sweep, SweepDeleter>;

/// A failed C call, carrying the exit code it maps to.
struct CliError {
  int exit_code;
  std::string message;
};

void check(fp_status st, const std::string& context) {
  if (st == FP_OK) return;
  const int code = (st == FP_ERR_NOT_DIVISIBLE || st == FP_ERR_IDENTITY) ? kExitIdentity : kExitUsage;
  throw CliError{code, context + ": " + fp_status_name(st) + ": " + fp_last_error()};
}

std::string take(char* s) {
  std::unique_ptr<char, StringDeleter> owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

std::string text_of(const fp_poly* p) {
  char* out = nullptr;
  check(fp_poly_to_text(p, &out), "render");
  return take(out);
}

nlohmann::json json_of(const fp_poly* p) {
  char* out = nullptr;
  check(fp_poly_to_json(p, &out), "render");
  return nlohmann::json::parse(take(out));
}

nlohmann::json json_of(const fp_certificate* c) {
  char* out = nullptr;
  check(fp_certificate_to_json(c, &out), "render");
  return nlohmann::json::parse(take(out));
}

std::string text_of(const fp_certificate* c) {
  char* out = nullptr;
  check(fp_certificate_to_text(c, &out), "render");
  return take(out);
}

Cache make_cache() {
  fp_cache* c = nullptr;
  check(fp_cache_new(&c), "cache");
  return Cache(c);
}

Poly sequence_term(fp_cache* cache, const std::string& kind, std::uint64_t n) {
  fp_poly* p = nullptr;
  check(kind == "fib" ? fp_fib(cache, n, &p) : fp_lucas(cache, n, &p), "gen " + kind);
  return Poly(p);
}

std::string repro_power(const std::string& kind, std::uint64_t n, std::uint64_t e) {
  return "fibpoly power " + kind + " " + std::to_string(n) + " " + std::to_string(e) + " --certificate";
}

struct Options {
  bool structured = false;

  // gen / power
  std::string kind;
  std::uint64_t n = 0;
  std::uint64_t e = 0;
  std::uint64_t d = 0;
  bool expanded = false;
  std::optional<std::string> eval_at;
  bool certificate = false;

  // verify / bench
  std::uint64_t max_n = 0;
  std::uint64_t max_e = 0;
  std::uint64_t max_d = 0;
};

int cmd_gen(const Options& o) {
  Poly p;
  if (o.expanded) {
    fp_poly* raw = nullptr;
    check(o.kind == "fib" ? fp_fib_expanded(o.n, &raw) : fp_lucas_expanded(o.n, &raw), "gen " + o.kind);
    p.reset(raw);
    Poly recurrence = sequence_term(nullptr, o.kind, o.n);
    if (!fp_poly_equal(p.get(), recurrence.get())) {
      std::cerr << "identity failure: closed-form " << o.kind << " sum differs from the recurrence at n = " << o.n
                << "\nrepro: fibpoly gen " << o.kind << " " << o.n << " --expanded\n";
      return kExitIdentity;
    }
  } else {
    p = sequence_term(nullptr, o.kind, o.n);
  }

  nlohmann::json j{{"command", "gen"}, {"kind", o.kind}, {"n", o.n}, {"expanded", o.expanded}};
  if (o.eval_at) {
    char* out = nullptr;
    check(fp_poly_eval(p.get(), o.eval_at->c_str(), &out), "--eval-at");
    const std::string value = take(out);
    if (!o.structured) {
      std::cout << value << "\n";
      return kExitOk;
    }
    j["eval_at"] = *o.eval_at;
    j["value"] = value;
  } else {
    if (!o.structured) {
      std::cout << text_of(p.get()) << "\n";
      return kExitOk;
    }
    j["polynomial"] = json_of(p.get());
  }
  std::cout << j.dump() << "\n";
  return kExitOk;
}

// Prints a linearized result after checking it against the direct computation.
int emit_linearized(const Options& o, nlohmann::json j, const fp_certificate* cert, const fp_poly* poly,
                    const fp_poly* oracle, const std::string& repro) {
  if (!fp_poly_equal(poly, oracle)) {
    std::cerr << "identity failure: linearized form differs from the direct computation\n"
              << "  linearized: " << text_of(poly) << "\n  direct:     " << text_of(oracle) << "\n"
              << "repro: " << repro << "\n";
    return kExitIdentity;
  }
  if (o.structured) {
    j["polynomial"] = json_of(poly);
    if (o.certificate) j["certificate"] = json_of(cert);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text_of(poly) << "\n";
    if (o.certificate) std::cout << text_of(cert);
  }
  return kExitOk;
}

int cmd_power(const Options& o) {
  Cache cache = make_cache();
  const std::string repro = repro_power(o.kind, o.n, o.e);
  fp_certificate* raw_cert = nullptr;
  fp_poly* raw_poly = nullptr;
  const fp_status st = o.kind == "fib" ? fp_linearize_fib_power(cache.get(), o.n, o.e, &raw_cert, &raw_poly)
                                       : fp_linearize_lucas_power(cache.get(), o.n, o.e, &raw_cert, &raw_poly);
  if (st == FP_ERR_NOT_DIVISIBLE) {
    std::cerr << "identity failure: " << fp_last_error() << "\nrepro: " << repro << "\n";
    return kExitIdentity;
  }
  check(st, "power " + o.kind);
  Cert cert(raw_cert);
  Poly poly(raw_poly);

  Poly base = sequence_term(cache.get(), o.kind, o.n);
  fp_poly* raw_oracle = nullptr;
  check(fp_poly_pow(base.get(), o.e, &raw_oracle), "power");
  Poly oracle(raw_oracle);

  nlohmann::json j{{"command", "power"}, {"kind", o.kind}, {"n", o.n}, {"exponent", o.e}};
  return emit_linearized(o, std::move(j), cert.get(), poly.get(), oracle.get(), repro);
}

int cmd_product(const Options& o) {
  Cache cache = make_cache();
  const std::string repro = "fibpoly product " + std::to_string(o.n) + " " + std::to_string(o.d) + " --certificate";
  fp_certificate* raw_cert = nullptr;
  fp_poly* raw_poly = nullptr;
  const fp_status st = fp_product_linearization(cache.get(), o.n, o.d, &raw_cert, &raw_poly);
  if (st == FP_ERR_NOT_DIVISIBLE) {
    std::cerr << "identity failure: " << fp_last_error() << "\nrepro: " << repro << "\n";
    return kExitIdentity;
  }
  check(st, "product");
  Cert cert(raw_cert);
  Poly poly(raw_poly);

  Poly a = sequence_term(cache.get(), "fib", o.n);
  Poly b = sequence_term(cache.get(), "fib", o.n + o.d);
  fp_poly* raw_oracle = nullptr;
  check(fp_poly_mul(a.get(), b.get(), &raw_oracle), "product");
  Poly oracle(raw_oracle);

  nlohmann::json j{{"command", "product"}, {"n", o.n}, {"shift", o.d}};
  return emit_linearized(o, std::move(j), cert.get(), poly.get(), oracle.get(), repro);
}

int cmd_numbers(const Options& o) {
  auto call = [](fp_status (*fn)(uint64_t, char**), std::uint64_t n, const char* name) {
    char* out = nullptr;
    check(fn(n, &out), name);
    return take(out);
  };
  auto fib_number = [](std::uint64_t n) {
    char* out = nullptr;
    check(fp_generalized_point(n, "1", FP_SEQ_FIB, &out), "generalized_point");
    return take(out);
  };
  // Integer powers of F values are computed as constant polynomials so that
  // the CLI stays on the C API.
  auto power_of = [](const std::string& v, std::uint64_t e) {
    const char* coeffs[] = {v.c_str()};
    fp_poly* c = nullptr;
    check(fp_poly_from_coeffs(coeffs, 1, &c), "numbers");
    Poly base(c);
    fp_poly* r = nullptr;
    check(fp_poly_pow(base.get(), e, &r), "numbers");
    Poly result(r);
    char* out = nullptr;
    check(fp_poly_eval(result.get(), "0", &out), "numbers");
    return take(out);
  };

  nlohmann::json j{{"command", "numbers"}, {"n", o.n}};
  std::ostringstream text;
  bool ok = true;
  auto record = [&](const char* name, const char* meaning, const std::string& got, const std::string& want) {
    j[name] = got;
    text << name << "(" << o.n << ") = " << got << "   [" << meaning << " = " << want << "]\n";
    if (got != want) {
      ok = false;
      text << "  mismatch\n";
    }
  };

  const std::string f_next = fib_number(o.n + 1);
  record("classical_sum", "F_(n+1)", call(&fp_classical_sum, o.n, "classical_sum"), f_next);
  record("double_sum_square", "F_(n+1)^2", call(&fp_double_sum_square, o.n, "double_sum_square"),
         power_of(f_next, 2));
  if (o.n >= 1) {
    const std::string f = fib_number(o.n);
    record("square_single_sum", "F_n^2", call(&fp_square_single_sum, o.n, "square_single_sum"), power_of(f, 2));
    record("cube_single_sum", "F_n^3", call(&fp_cube_single_sum, o.n, "cube_single_sum"), power_of(f, 3));
  }

  if (o.structured) {
    j["ok"] = ok;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text.str();
  }
  if (!ok) {
    std::cerr << "identity failure\nrepro: fibpoly numbers " << o.n << "\n";
    return kExitIdentity;
  }
  return kExitOk;
}

int cmd_verify(const Options& o) {
  Cache cache = make_cache();
  fp_sweep* raw = nullptr;
  check(fp_sweep_run(cache.get(), o.max_n, o.max_e, o.max_d, &raw), "verify");
  Sweep sweep(raw);

  const std::uint64_t checks = fp_sweep_checks(sweep.get());
  const std::size_t failures = fp_sweep_failure_count(sweep.get());
  constexpr std::size_t kShown = 10;

  if (o.structured) {
    nlohmann::json j{{"command", "verify"},
                     {"max_n", o.max_n},
                     {"max_e", o.max_e},
                     {"max_d", o.max_d},
                     {"checks", checks},
                     {"failure_count", failures},
                     {"ok", failures == 0}};
    nlohmann::json list = nlohmann::json::array();
    for (std::size_t i = 0; i < failures; ++i) {
      const char *identity = nullptr, *repro = nullptr, *detail = nullptr;
      check(fp_sweep_failure(sweep.get(), i, &identity, &repro, &detail), "verify");
      list.push_back({{"identity", identity}, {"repro", repro}, {"detail", detail}});
    }
    j["failures"] = std::move(list);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "checks: " << checks << "\nfailures: " << failures << "\n";
    for (std::size_t i = 0; i < failures && i < kShown; ++i) {
      const char *identity = nullptr, *repro = nullptr, *detail = nullptr;
      check(fp_sweep_failure(sweep.get(), i, &identity, &repro, &detail), "verify");
      std::cout << "FAIL " << identity << ": " << detail << "\n  repro: " << repro << "\n";
    }
    if (failures > kShown) std::cout << "... and " << failures - kShown << " more\n";
  }
  return failures == 0 ? kExitOk : kExitIdentity;
}

int cmd_bench(const Options& o) {
  using clock = std::chrono::steady_clock;
  Cache cache = make_cache();
  // Warm the cache so both columns time arithmetic only.
  sequence_term(cache.get(), "fib", o.max_n * o.max_e);

  nlohmann::json rows = nlohmann::json::array();
  if (!o.structured) std::cout << "n\te\tdirect_us\tlinearized_us\n";
  for (std::uint64_t n = 1; n <= o.max_n; ++n) {
    for (std::uint64_t e = 1; e <= o.max_e; ++e) {
      auto t0 = clock::now();
      Poly base = sequence_term(cache.get(), "fib", n);
      fp_poly* direct = nullptr;
      check(fp_poly_pow(base.get(), e, &direct), "bench");
      Poly direct_owned(direct);
      auto t1 = clock::now();
      fp_poly* lin = nullptr;
      check(fp_linearize_fib_power(cache.get(), n, e, nullptr, &lin), "bench");
      Poly lin_owned(lin);
      auto t2 = clock::now();

      const auto us = [](auto a, auto b) {
        return std::chrono::duration<double, std::micro>(b - a).count();
      };
      if (o.structured) {
        rows.push_back({{"n", n}, {"e", e}, {"direct_us", us(t0, t1)}, {"linearized_us", us(t1, t2)}});
      } else {
        std::cout << n << "\t" << e << "\t" << us(t0, t1) << "\t" << us(t1, t2) << "\n";
      }
    }
  }
  if (o.structured) std::cout << nlohmann::json{{"command", "bench"}, {"rows", rows}}.dump() << "\n";
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fibonacci and Lucas polynomials with one-level power linearizations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  const auto kinds = CLI::IsMember({"fib", "lucas"});

  auto* gen = app.add_subcommand("gen", "Print F_n or L_n");
  gen->add_option("kind", o.kind, "fib | lucas")->required()->check(kinds);
  gen->add_option("n", o.n, "Index")->required();
  gen->add_flag("--expanded", o.expanded, "Use the closed-form binomial sum (n >= 1)");
  gen->add_option("--eval-at", o.eval_at, "Print the value at this integer x instead");

  auto* power = app.add_subcommand("power", "Print F_n^e or L_n^e through its linearization");
  power->add_option("kind", o.kind, "fib | lucas")->required()->check(kinds);
  power->add_option("n", o.n, "Index")->required();
  power->add_option("e", o.e, "Exponent (>= 1)")->required();
  power->add_flag("--certificate", o.certificate, "Also print the linearization certificate");

  auto* product = app.add_subcommand("product", "Print F_n*F_(n+d) through its linearization");
  product->add_option("n", o.n, "Index")->required();
  product->add_option("d", o.d, "Shift")->required();
  product->add_flag("--certificate", o.certificate, "Also print the linearization certificate");

  auto* numbers = app.add_subcommand("numbers", "Number-level (x = 1) single and double sums at n");
  numbers->add_option("n", o.n, "Index")->required();

  auto* verify = app.add_subcommand("verify", "Verify every identity over a grid");
  verify->add_option("--max-n", o.max_n, "Largest n")->required();
  verify->add_option("--max-e", o.max_e, "Largest exponent")->required();
  verify->add_option("--max-d", o.max_d, "Largest product shift")->required();

  auto* bench = app.add_subcommand("bench", "Time direct powers against linearized reconstruction");
  bench->add_option("--max-n", o.max_n, "Largest n (>= 1)")->required()->check(CLI::PositiveNumber);
  bench->add_option("--max-e", o.max_e, "Largest exponent (>= 1)")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  o.structured = format == "structured";

  try {
    if (*gen) return cmd_gen(o);
    if (*power) return cmd_power(o);
    if (*product) return cmd_product(o);
    if (*numbers) return cmd_numbers(o);
    if (*verify) return cmd_verify(o);
    if (*bench) return cmd_bench(o);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
