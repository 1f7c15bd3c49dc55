#include "fibpoly/serialize.hpp"

#include "fibpoly/errors.hpp"

#include <sstream>
#include <vector>

namespace fibpoly {

using nlohmann::json;

std::string to_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  auto c = p.coefficients();
  std::string out;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    const bool negative = c[i] < 0;
    const Coefficient mag = abs(c[i]);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += 'x';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Coefficient parse_coefficient(std::string_view s) {
  std::string_view digits = s;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) throw ParseError("empty integer literal");
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw ParseError("invalid integer literal '" + std::string(s) + "'");
  }
  return Coefficient(std::string(s), 10);
}

json to_json(const Polynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.get_str());
  return arr;
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array of decimal strings");
  std::vector<Coefficient> v;
  v.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError("polynomial coefficients must be decimal strings");
    v.push_back(parse_coefficient(e.get<std::string>()));
  }
  return Polynomial(std::move(v));
}

json to_json(const Linearization& cert) {
  json j;
  j["kind"] = std::string(to_string(cert.family));
  j["n"] = cert.n;
  j[cert.family == Family::Product ? "shift" : "exponent"] = cert.parameter;
  j["n_parity"] = cert.n_parity.bit();
  j["denom_exponent"] = cert.denom_exponent;
  json terms = json::array();
  for (const auto& t : cert.terms) {
    terms.push_back({{"kind", std::string(to_string(t.kind))},
                     {"subscript", t.subscript},
                     {"multiplier", t.multiplier.get_str()}});
  }
  j["terms"] = std::move(terms);
  return j;
}

namespace {

std::uint64_t get_u64(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned())
    throw ParseError(std::string("certificate field '") + key + "' must be a nonnegative integer");
  return j.at(key).get<std::uint64_t>();
}

std::string get_string(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string())
    throw ParseError(std::string("certificate field '") + key + "' must be a string");
  return j.at(key).get<std::string>();
}

} // namespace

Linearization linearization_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("certificate must be a JSON object");
  Linearization cert;
  const auto family = family_from_string(get_string(j, "kind"));
  if (!family) throw ParseError("unknown certificate kind");
  cert.family = *family;
  cert.n = get_u64(j, "n");
  cert.parameter = get_u64(j, cert.family == Family::Product ? "shift" : "exponent");
  const auto parity = get_u64(j, "n_parity");
  if (parity > 1) throw ParseError("n_parity must be 0 or 1");
  cert.n_parity = Parity::of_unsigned(parity);
  if (cert.n_parity != Parity::of_unsigned(cert.n)) throw ParseError("n_parity disagrees with n");
  cert.denom_exponent = get_u64(j, "denom_exponent");
  if (!j.contains("terms") || !j.at("terms").is_array()) throw ParseError("certificate 'terms' must be an array");
  for (const auto& t : j.at("terms")) {
    if (!t.is_object()) throw ParseError("certificate term must be an object");
    const auto kind = term_kind_from_string(get_string(t, "kind"));
    if (!kind) throw ParseError("unknown term kind");
    cert.terms.push_back({*kind, get_u64(t, "subscript"), parse_coefficient(get_string(t, "multiplier"))});
  }
  return cert;
}

json to_json(const VerificationReport& r) {
  json j;
  j["certificate"] = to_json(r.certificate);
  j["verdict"] = std::string(to_string(r.verdict));
  j["oracle"] = to_json(r.oracle);
  j["reconstructed"] = r.reconstructed ? to_json(*r.reconstructed) : json(nullptr);
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

std::string to_text(const Linearization& cert) {
  std::ostringstream os;
  const char* parity = cert.n_parity.is_odd() ? "odd" : "even";
  switch (cert.family) {
    case Family::FibPower:
      os << "certificate: F_n^" << cert.parameter;
      break;
    case Family::LucasPower:
      os << "certificate: L_n^" << cert.parameter;
      break;
    case Family::Product:
      os << "certificate: F_n*F_(n+" << cert.parameter << ")";
      break;
  }
  os << " at n = " << cert.n << " (n " << parity << ")\n";
  os << "denominator: (x^2 + 4)^" << cert.denom_exponent << "\n";
  os << "terms:\n";
  for (std::size_t i = 0; i < cert.terms.size(); ++i) {
    const auto& t = cert.terms[i];
    std::string label;
    switch (t.kind) {
      case TermKind::Fib: label = "F_" + std::to_string(t.subscript); break;
      case TermKind::Lucas: label = "L_" + std::to_string(t.subscript); break;
      case TermKind::Const: label = "CONST"; break;
    }
    os << "  " << label << "  " << t.multiplier.get_str() << "  = " << cert.symbolic_multiplier(i) << "\n";
  }
  return os.str();
}

} // namespace fibpoly
