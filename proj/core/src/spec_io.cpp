#include "arterm/spec_io.hpp"

#include "arterm/errors.hpp"

namespace arterm {

namespace {

std::string scalar_text(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw ParseError("expected a decimal string or an integer, got " + v.dump(), 0);
}

}  // namespace

Recurrence recurrence_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("recurrence spec must be a JSON object", 0);
  if (!j.contains("coeffs") || !j.contains("init")) throw ParseError("recurrence spec needs coeffs and init", 0);
  const auto& coeffs = j.at("coeffs");
  const auto& init = j.at("init");
  if (!coeffs.is_array() || !init.is_array()) throw ParseError("coeffs and init must be arrays", 0);

  std::vector<Rational> a;
  for (const auto& v : coeffs) a.push_back(parse_rational(scalar_text(v)));
  std::vector<BigInt> s;
  for (const auto& v : init) s.push_back(parse_bigint(scalar_text(v)));
  if (j.contains("order")) {
    const auto& order = j.at("order");
    if (!order.is_number_unsigned() || order.get<std::size_t>() != a.size())
      throw DomainError("order does not match the number of coefficients");
  }
  return Recurrence(std::move(a), std::move(s));
}

Recurrence recurrence_from_json_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  return recurrence_from_json(j);
}

nlohmann::json to_json(const Recurrence& rec) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& a : rec.coefficients()) coeffs.push_back(to_string(a));
  nlohmann::json init = nlohmann::json::array();
  for (const auto& s : rec.initial_terms()) init.push_back(to_string(s));
  return {{"order", rec.order()}, {"coeffs", coeffs}, {"init", init}};
}

nlohmann::json to_json(const BoundsCertificate& cert) {
  nlohmann::json j{{"c", to_string(cert.c)},           {"c_t", to_string(cert.c_t)},
                   {"rho", to_string(cert.rho)},       {"b1", to_string(cert.b1)},
                   {"m", cert.m},                      {"b2", to_string(cert.b2)},
                   {"b", to_string(cert.b)},           {"lambda", to_string(cert.lambda)},
                   {"scale", to_string(cert.scale)},   {"base_floor", to_string(cert.base_floor)}};
  j["m_b"] = cert.m_chosen ? nlohmann::json(*cert.m_chosen) : nlohmann::json(nullptr);
  j["holds"] = cert.holds();
  return j;
}

nlohmann::json to_json(const SynthesisResult& result) {
  return {{"recurrence", to_json(result.recurrence)},
          {"term", render(result.term)},
          {"term_ast", to_json(result.term)},
          {"b", to_string(result.b)},
          {"c", to_string(result.c)},
          {"valid_from", result.valid_from},
          {"valid_at_zero", result.valid_at_zero},
          {"gf_t", result.gf_t.to_string()},
          {"certificate", to_json(result.certificate)}};
}

nlohmann::json to_json(const Fixture& f) {
  nlohmann::json j{{"id", f.id},
                   {"name", f.name},
                   {"recurrence", to_json(f.recurrence)},
                   {"b", to_string(f.reference_b)},
                   {"c", to_string(f.reference_c)},
                   {"term", render(f.reference_term)},
                   {"valid_from", f.valid_from},
                   {"notes", f.notes}};
  if (f.alternate_term) j["alternate_term"] = render(*f.alternate_term);
  return j;
}

}  // namespace arterm
