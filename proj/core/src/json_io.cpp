#include <cyclo/errors.hpp>
#include <cyclo/json_io.hpp>

#include <json.hpp>

namespace cyclo {

namespace {

using nlohmann::json;

Rational coefficient_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2 || !j[0].is_string() || !j[1].is_string())
      throw Error(Errc::parse_error, "coefficient pairs must be [\"num\", \"den\"] strings");
    const Integer num(j[0].get<std::string>(), 10);
    const Integer den(j[1].get<std::string>(), 10);
    if (den == 0) throw Error(Errc::parse_error, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  throw Error(Errc::parse_error, "unsupported coefficient encoding: " + j.dump());
}

}  // namespace

std::string element_to_json(const CycloElement& a) {
  json coeffs = json::array();
  for (const auto& c : a.coeffs()) coeffs.push_back(json::array({to_string(c.get_num()), to_string(c.get_den())}));
  json out = json::object();
  out["p"] = a.p();
  out["coeffs"] = std::move(coeffs);
  return out.dump();
}

CycloElement element_from_json(std::string_view text, std::optional<int> p) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, e.what());
  }

  const json* coeffs = &doc;
  if (doc.is_object()) {
    if (!doc.contains("p") || !doc["p"].is_number_integer() || !doc.contains("coeffs"))
      throw Error(Errc::parse_error, "element objects need integer \"p\" and \"coeffs\"");
    const int own = doc["p"].get<int>();
    if (p && *p != own)
      throw Error(Errc::modulus_mismatch, "element has p=" + std::to_string(own) + ", expected " + std::to_string(*p));
    p = own;
    coeffs = &doc["coeffs"];
  }
  if (!p) throw Error(Errc::parse_error, "a bare coefficient array needs p");
  if (!coeffs->is_array()) throw Error(Errc::parse_error, "\"coeffs\" must be an array");

  std::vector<Rational> values;
  values.reserve(coeffs->size());
  try {
    for (const auto& c : *coeffs) values.push_back(coefficient_from_json(c));
  } catch (const std::invalid_argument&) {
    throw Error(Errc::parse_error, "coefficient is not a decimal integer");
  }
  return CycloElement::make(*p, std::move(values));
}

std::string trace_vector_to_json(const TraceVector& v) {
  json out = json::array();
  for (const auto& x : v.entries) out.push_back(to_string(x));
  return out.dump();
}

}  // namespace cyclo
