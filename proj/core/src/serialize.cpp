#include <hyperdelta/error.hpp>
#include <hyperdelta/serialize.hpp>

namespace hyperdelta {

namespace {

unsigned full_digits() { return settings().digits + 5; }

}  // namespace

nlohmann::json to_json(const SeriesNumber& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : s.terms()) {
    terms.push_back({t.exponent.numerator(), t.exponent.denominator(),
                     to_decimal(t.coefficient.re, full_digits()),
                     to_decimal(t.coefficient.im, full_digits())});
  }
  nlohmann::json trunc = nullptr;
  if (s.truncation()) trunc = {s.truncation()->numerator(), s.truncation()->denominator()};
  return {{"terms", std::move(terms)}, {"trunc", std::move(trunc)}};
}

SeriesNumber series_from_json(const nlohmann::json& j) {
  try {
    std::vector<SeriesNumber::Term> terms;
    for (const auto& t : j.at("terms")) {
      if (!t.is_array() || t.size() != 4) throw Error(ErrorCode::DomainError, "term must have 4 entries");
      Exponent q(t[0].get<std::int64_t>(), t[1].get<std::int64_t>());
      terms.push_back({q, Complex(Real(t[2].get<std::string>()), Real(t[3].get<std::string>()))});
    }
    std::optional<Exponent> trunc;
    const auto& jt = j.at("trunc");
    if (!jt.is_null()) trunc = Exponent(jt.at(0).get<std::int64_t>(), jt.at(1).get<std::int64_t>());
    return SeriesNumber::from_terms(std::move(terms), trunc);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::DomainError, std::string("malformed series document: ") + e.what());
  } catch (const boost::bad_rational& e) {
    throw Error(ErrorCode::DomainError, std::string("malformed exponent: ") + e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw Error(ErrorCode::DomainError, std::string("malformed coefficient: ") + e.what());
  }
}

nlohmann::json to_json(const std::optional<Exponent>& q) {
  if (!q) return nullptr;
  return {q->numerator(), q->denominator()};
}

nlohmann::json to_json(const kernels::SiftReport& r) {
  return {{"value", to_json(r.value)},
          {"st", to_double(r.st)},
          {"st_decimal", to_decimal(r.st, settings().digits)},
          {"expected", to_double(r.expected)},
          {"expected_decimal", to_decimal(r.expected, settings().digits)},
          {"ratio", to_json(r.ratio)},
          {"ratio_class", std::string(to_string(r.ratio_class))},
          {"laugwitz_ok", r.laugwitz_ok},
          {"residual_leading_exponent", to_json(r.residual_leading_exponent)}};
}

}  // namespace hyperdelta
