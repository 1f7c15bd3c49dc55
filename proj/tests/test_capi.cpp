// Exercises the shared library strictly through the C header.

#include "fibpoly/fibpoly.h"

#include <gtest/gtest.h>

#include <string>
#include <thread>
#include <vector>

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  fp_string_free(s);
  return out;
}

std::string text(const fp_poly* p) {
  char* out = nullptr;
  EXPECT_EQ(fp_poly_to_text(p, &out), FP_OK);
  return take(out);
}

fp_poly* poly(std::initializer_list<const char*> coeffs) {
  std::vector<const char*> v(coeffs);
  fp_poly* p = nullptr;
  EXPECT_EQ(fp_poly_from_coeffs(v.data(), v.size(), &p), FP_OK);
  return p;
}

} // namespace

TEST(CApi, PolynomialArithmetic) {
  fp_poly* a = poly({"1", "0", "1"});
  fp_poly* b = poly({"0", "1", "-1"});
  fp_poly* sum = nullptr;
  ASSERT_EQ(fp_poly_add(a, b, &sum), FP_OK);
  EXPECT_EQ(text(sum), "x + 1");
  EXPECT_EQ(fp_poly_degree(sum), 1);

  fp_poly* cube = nullptr;
  ASSERT_EQ(fp_poly_pow(a, 3, &cube), FP_OK);
  EXPECT_EQ(text(cube), "x^6 + 3*x^4 + 3*x^2 + 1");

  fp_poly* prod = nullptr;
  ASSERT_EQ(fp_poly_mul(a, b, &prod), FP_OK);
  fp_poly* back = nullptr;
  ASSERT_EQ(fp_poly_exact_div(prod, a, &back), FP_OK);
  EXPECT_TRUE(fp_poly_equal(back, b));

  char* v = nullptr;
  ASSERT_EQ(fp_poly_eval(a, "-3", &v), FP_OK);
  EXPECT_EQ(take(v), "10");

  for (fp_poly* p : {a, b, sum, cube, prod, back}) fp_poly_free(p);
}

TEST(CApi, ZeroPolynomialDegree) {
  fp_poly* z = poly({"0", "0"});
  EXPECT_EQ(fp_poly_degree(z), FP_DEGREE_NEG_INFINITY);
  EXPECT_EQ(fp_poly_size(z), 0u);
  EXPECT_EQ(text(z), "0");
  fp_poly_free(z);
}

TEST(CApi, ErrorCodes) {
  fp_poly* num = poly({"5", "0", "1"});
  fp_poly* den = poly({"4", "0", "1"});
  fp_poly* q = nullptr;
  EXPECT_EQ(fp_poly_exact_div(num, den, &q), FP_ERR_NOT_DIVISIBLE);
  EXPECT_EQ(q, nullptr);
  EXPECT_NE(std::string(fp_last_error()), "");

  fp_poly* bad = nullptr;
  const char* junk[] = {"12a"};
  EXPECT_EQ(fp_poly_from_coeffs(junk, 1, &bad), FP_ERR_PARSE);
  EXPECT_EQ(fp_poly_from_json("not json", &bad), FP_ERR_PARSE);
  EXPECT_EQ(fp_poly_add(nullptr, den, &q), FP_ERR_INVALID_ARGUMENT);

  fp_poly* p = nullptr;
  EXPECT_EQ(fp_lucas_expanded(0, &p), FP_ERR_DOMAIN);
  EXPECT_EQ(fp_fib_expanded(0, &p), FP_ERR_DOMAIN);
  EXPECT_EQ(fp_linearize_fib_power(nullptr, 3, 0, nullptr, &p), FP_ERR_DOMAIN);
  char* s = nullptr;
  EXPECT_EQ(fp_square_single_sum(0, &s), FP_ERR_DOMAIN);
  EXPECT_STREQ(fp_status_name(FP_ERR_DOMAIN), "DomainError");

  fp_poly_free(num);
  fp_poly_free(den);
  fp_poly_free(nullptr);
}

TEST(CApi, Sequences) {
  fp_cache* cache = nullptr;
  ASSERT_EQ(fp_cache_new(&cache), FP_OK);
  fp_poly* f = nullptr;
  ASSERT_EQ(fp_fib(cache, 5, &f), FP_OK);
  EXPECT_EQ(text(f), "x^4 + 3*x^2 + 1");
  fp_poly* fe = nullptr;
  ASSERT_EQ(fp_fib_expanded(5, &fe), FP_OK);
  EXPECT_TRUE(fp_poly_equal(f, fe));
  fp_poly* l = nullptr;
  ASSERT_EQ(fp_lucas(nullptr, 3, &l), FP_OK);
  EXPECT_EQ(text(l), "x^3 + 3*x");

  fp_poly* one = poly({"1"});
  fp_poly* c = nullptr;
  ASSERT_EQ(fp_custom_sequence(one, one, 3, &c), FP_OK);
  EXPECT_EQ(text(c), "x^2 + x + 1");

  for (fp_poly* p : {f, fe, l, one, c}) fp_poly_free(p);
  fp_cache_free(cache);
}

TEST(CApi, CertificateAccessors) {
  fp_certificate* cert = nullptr;
  fp_poly* p = nullptr;
  ASSERT_EQ(fp_linearize_fib_power(nullptr, 1, 7, &cert, &p), FP_OK);
  EXPECT_EQ(text(p), "1");
  EXPECT_EQ(fp_certificate_kind(cert), FP_FIB_POWER);
  EXPECT_EQ(fp_certificate_n(cert), 1u);
  EXPECT_EQ(fp_certificate_parameter(cert), 7u);
  EXPECT_EQ(fp_certificate_denom_exponent(cert), 3u);
  ASSERT_EQ(fp_certificate_term_count(cert), 4u);
  const char* expected[] = {"1", "7", "21", "35"};
  const uint64_t subs[] = {7, 5, 3, 1};
  for (size_t i = 0; i < 4; ++i) {
    fp_term_kind kind{};
    uint64_t sub = 0;
    char* m = nullptr;
    ASSERT_EQ(fp_certificate_term(cert, i, &kind, &sub, &m), FP_OK);
    EXPECT_EQ(kind, FP_TERM_FIB);
    EXPECT_EQ(sub, subs[i]);
    EXPECT_EQ(take(m), expected[i]);
  }
  EXPECT_EQ(fp_certificate_term(cert, 4, nullptr, nullptr, nullptr), FP_ERR_INVALID_ARGUMENT);

  char* sym = nullptr;
  ASSERT_EQ(fp_certificate_symbolic(cert, 3, &sym), FP_OK);
  EXPECT_EQ(take(sym), "C(7,3)*(-1)^(3*(n-1))");

  char* js = nullptr;
  ASSERT_EQ(fp_certificate_to_json(cert, &js), FP_OK);
  fp_certificate* back = nullptr;
  ASSERT_EQ(fp_certificate_from_json(js, &back), FP_OK);
  fp_string_free(js);
  fp_poly* rebuilt = nullptr;
  ASSERT_EQ(fp_certificate_reconstruct(nullptr, back, &rebuilt), FP_OK);
  EXPECT_TRUE(fp_poly_equal(rebuilt, p));

  fp_certificate* bad = nullptr;
  EXPECT_EQ(fp_certificate_from_json(R"({"kind":"FIB_POWER"})", &bad), FP_ERR_PARSE);
  // A certificate with a wrong sign fails reconstruction.
  EXPECT_EQ(fp_certificate_from_json(
                R"({"kind":"FIB_POWER","n":2,"exponent":3,"n_parity":0,"denom_exponent":1,
                    "terms":[{"kind":"FIB","subscript":6,"multiplier":"1"},
                             {"kind":"FIB","subscript":2,"multiplier":"3"}]})",
                &bad),
            FP_OK);
  fp_poly* nope = nullptr;
  EXPECT_EQ(fp_certificate_reconstruct(nullptr, bad, &nope), FP_ERR_NOT_DIVISIBLE);

  fp_certificate_free(bad);
  fp_certificate_free(back);
  fp_certificate_free(cert);
  fp_poly_free(rebuilt);
  fp_poly_free(p);
}

TEST(CApi, LucasAndProduct) {
  fp_poly* p = nullptr;
  fp_certificate* cert = nullptr;
  ASSERT_EQ(fp_linearize_lucas_power(nullptr, 2, 2, &cert, &p), FP_OK);
  EXPECT_EQ(text(p), "x^4 + 4*x^2 + 4");
  EXPECT_EQ(fp_certificate_term_count(cert), 2u);
  fp_term_kind kind{};
  char* m = nullptr;
  ASSERT_EQ(fp_certificate_term(cert, 1, &kind, nullptr, &m), FP_OK);
  EXPECT_EQ(kind, FP_TERM_CONST);
  EXPECT_EQ(take(m), "2");
  fp_certificate_free(cert);
  fp_poly_free(p);

  ASSERT_EQ(fp_product_linearization(nullptr, 1, 1, nullptr, &p), FP_OK);
  EXPECT_EQ(text(p), "x");
  fp_poly_free(p);
}

TEST(CApi, VerifyAndReport) {
  fp_report* r = nullptr;
  ASSERT_EQ(fp_verify_identity(nullptr, FP_FIB_POWER, 4, 6, &r), FP_OK);
  EXPECT_EQ(fp_report_verdict(r), FP_VERDICT_EQUAL);
  EXPECT_TRUE(fp_poly_equal(fp_report_reconstructed(r), fp_report_oracle(r)));
  EXPECT_EQ(fp_certificate_denom_exponent(fp_report_certificate(r)), 3u);
  char* js = nullptr;
  ASSERT_EQ(fp_report_to_json(r, &js), FP_OK);
  EXPECT_NE(take(js).find("\"verdict\":\"equal\""), std::string::npos);
  fp_report_free(r);

  EXPECT_EQ(fp_verify_identity(nullptr, FP_LUCAS_POWER, 4, 0, &r), FP_ERR_DOMAIN);
}

TEST(CApi, Sweep) {
  fp_sweep* s = nullptr;
  ASSERT_EQ(fp_sweep_run(nullptr, 6, 5, 6, &s), FP_OK);
  EXPECT_GT(fp_sweep_checks(s), 0u);
  EXPECT_EQ(fp_sweep_failure_count(s), 0u);
  EXPECT_EQ(fp_sweep_failure(s, 0, nullptr, nullptr, nullptr), FP_ERR_INVALID_ARGUMENT);
  fp_sweep_free(s);
}

TEST(CApi, Numbers) {
  char* s = nullptr;
  ASSERT_EQ(fp_classical_sum(9, &s), FP_OK);
  EXPECT_EQ(take(s), "55");
  ASSERT_EQ(fp_double_sum_square(8, &s), FP_OK);
  EXPECT_EQ(take(s), "1156");
  ASSERT_EQ(fp_square_single_sum(7, &s), FP_OK);
  EXPECT_EQ(take(s), "169");
  ASSERT_EQ(fp_cube_single_sum(6, &s), FP_OK);
  EXPECT_EQ(take(s), "512");
  ASSERT_EQ(fp_generalized_point(4, "2", FP_SEQ_FIB, &s), FP_OK);
  EXPECT_EQ(take(s), "12");
  ASSERT_EQ(fp_binomial(52, 17, &s), FP_OK);
  EXPECT_EQ(take(s), "21945588357420");
}

TEST(CApi, SharedCacheAcrossThreads) {
  fp_cache* cache = nullptr;
  ASSERT_EQ(fp_cache_new(&cache), FP_OK);
  std::vector<std::thread> threads;
  std::vector<int> failures(6, 0);
  for (int t = 0; t < 6; ++t) {
    threads.emplace_back([&, t] {
      for (uint64_t n = 0; n <= 15; ++n) {
        fp_report* r = nullptr;
        const auto kind = static_cast<fp_identity_kind>(t % 3);
        if (fp_verify_identity(cache, kind, n, 1 + static_cast<uint64_t>(t), &r) != FP_OK ||
            fp_report_verdict(r) != FP_VERDICT_EQUAL)
          ++failures[static_cast<size_t>(t)];
        fp_report_free(r);
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int f : failures) EXPECT_EQ(f, 0);
  fp_cache_free(cache);
}
