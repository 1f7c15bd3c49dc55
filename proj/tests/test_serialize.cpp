#include "fibpoly/errors.hpp"
#include "fibpoly/serialize.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

using namespace fibpoly;
using nlohmann::json;

TEST(TextForm, Examples) {
  EXPECT_EQ(to_text(Polynomial{}), "0");
  EXPECT_EQ(to_text(Polynomial{1, 0, 3, 0, 1}), "x^4 + 3*x^2 + 1");
  EXPECT_EQ(to_text(Polynomial{-1, 0, 1}), "x^2 - 1");
  EXPECT_EQ(to_text(Polynomial{1, -2, -1}), "-x^2 - 2*x + 1");
  EXPECT_EQ(to_text(Polynomial{0, 1}), "x");
  EXPECT_EQ(to_text(Polynomial{0, -1}), "-x");
  EXPECT_EQ(to_text(Polynomial::constant(-7)), "-7");
  EXPECT_EQ(to_text(Polynomial{0, 0, 18}), "18*x^2");
}

TEST(TextForm, BigCoefficient) {
  const Coefficient big("123456789012345678901234567890");
  EXPECT_EQ(to_text(Polynomial{big, -big}), "-123456789012345678901234567890*x + 123456789012345678901234567890");
}

TEST(StructuredForm, PolynomialIsAscendingDecimalStrings) {
  EXPECT_EQ(to_json(Polynomial{2, 0, 1}), json::parse(R"(["2","0","1"])"));
  EXPECT_EQ(to_json(Polynomial{}), json::array());
}

TEST(StructuredForm, PolynomialRoundTrip) {
  fibpoly::testing::Gen g(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = g.polynomial(20);
    EXPECT_EQ(polynomial_from_json(json::parse(to_json(p).dump())), p);
  }
}

TEST(StructuredForm, PolynomialParseErrors) {
  EXPECT_THROW(polynomial_from_json(json::parse(R"({"a":1})")), ParseError);
  EXPECT_THROW(polynomial_from_json(json::parse(R"([1,2])")), ParseError);
  EXPECT_THROW(polynomial_from_json(json::parse(R"(["1x"])")), ParseError);
  EXPECT_THROW(polynomial_from_json(json::parse(R"(["+1"])")), ParseError);
  EXPECT_THROW(polynomial_from_json(json::parse(R"(["-"])")), ParseError);
  EXPECT_THROW(polynomial_from_json(json::parse(R"([""])")), ParseError);
  // Trailing zeros are accepted and trimmed.
  EXPECT_EQ(polynomial_from_json(json::parse(R"(["1","0"])")), Polynomial::constant(1));
}

TEST(StructuredForm, CertificateLayout) {
  const json j = to_json(fib_power_certificate(1, 7));
  EXPECT_EQ(j["kind"], "FIB_POWER");
  EXPECT_EQ(j["n"], 1);
  EXPECT_EQ(j["exponent"], 7);
  EXPECT_EQ(j["n_parity"], 1);
  EXPECT_EQ(j["denom_exponent"], 3);
  ASSERT_EQ(j["terms"].size(), 4u);
  EXPECT_EQ(j["terms"][1], json::parse(R"({"kind":"FIB","subscript":5,"multiplier":"7"})"));

  const json p = to_json(product_certificate(2, 3));
  EXPECT_EQ(p["shift"], 3);
  EXPECT_FALSE(p.contains("exponent"));
}

TEST(StructuredForm, CertificateRoundTrip) {
  fibpoly::testing::Gen g(22);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::uint64_t>(g.small_int(0, 60));
    const auto k = static_cast<std::uint64_t>(g.small_int(1, 25));
    Linearization c;
    switch (g.small_int(0, 2)) {
      case 0: c = fib_power_certificate(n, k); break;
      case 1: c = lucas_power_certificate(n, k); break;
      default: c = product_certificate(n, k); break;
    }
    EXPECT_EQ(linearization_from_json(json::parse(to_json(c).dump())), c);
  }
}

TEST(StructuredForm, CertificateParseErrors) {
  json j = to_json(fib_power_certificate(2, 3));
  json bad_kind = j;
  bad_kind["kind"] = "NOPE";
  EXPECT_THROW(linearization_from_json(bad_kind), ParseError);
  json bad_parity = j;
  bad_parity["n_parity"] = 1;
  EXPECT_THROW(linearization_from_json(bad_parity), ParseError);
  json negative_n = j;
  negative_n["n"] = -2;
  EXPECT_THROW(linearization_from_json(negative_n), ParseError);
  json missing = j;
  missing.erase("terms");
  EXPECT_THROW(linearization_from_json(missing), ParseError);
  json bad_term = j;
  bad_term["terms"][0]["kind"] = "X";
  EXPECT_THROW(linearization_from_json(bad_term), ParseError);
  EXPECT_THROW(linearization_from_json(json::array()), ParseError);
}

TEST(TextForm, CertificateListsSymbolicFactors) {
  const std::string t = to_text(fib_power_certificate(1, 7));
  EXPECT_NE(t.find("F_n^7 at n = 1 (n odd)"), std::string::npos);
  EXPECT_NE(t.find("(x^2 + 4)^3"), std::string::npos);
  EXPECT_NE(t.find("F_5  7  = C(7,1)*(-1)^(1*(n-1))"), std::string::npos);
  EXPECT_NE(t.find("F_1  35  = C(7,3)*(-1)^(3*(n-1))"), std::string::npos);
}

TEST(StructuredForm, VerificationReport) {
  SequenceCache cache;
  const json j = to_json(verify_identity(IdentityKind::LucasPower, 2, 2, cache));
  EXPECT_EQ(j["verdict"], "equal");
  EXPECT_EQ(j["oracle"], json::parse(R"(["4","0","4","0","1"])"));
  EXPECT_EQ(j["reconstructed"], j["oracle"]);
}
