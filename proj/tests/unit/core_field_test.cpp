#include <hyperdelta/analytic.hpp>
#include <hyperdelta/mvt.hpp>
#include <hyperdelta/serialize.hpp>

#include "test_support.hpp"

using namespace hyperdelta;
using namespace hyperdelta::testing;

namespace {

SeriesNumber eta(Exponent q = Exponent(1)) { return SeriesNumber::eta(q); }

void check_terms(const SeriesNumber& s, const std::vector<std::pair<Exponent, Real>>& expected) {
  REQUIRE(s.terms().size() == expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) {
    CHECK(s.terms()[k].exponent == expected[k].first);
    CHECK(close(s.terms()[k].coefficient.re, expected[k].second));
    CHECK(s.terms()[k].coefficient.im == 0);
  }
}

}  // namespace

TEST_CASE("scalar configuration and decimal parsing") {
  CHECK(settings().digits == 40);
  CHECK(settings().truncation == Exponent(8));
  CHECK(parse_decimal("1.5e-3") == Rational(3, 2000));
  CHECK(parse_decimal("-12") == Rational(-12));
  CHECK(parse_decimal(".25") == Rational(1, 4));
  CHECK_THROWS_AS(parse_decimal("1.2.3"), Error);
  CHECK_THROWS_AS(parse_decimal(""), Error);
  CHECK(close(pi(), Real("3.141592653589793238462643383279502884197")));
  {
    ScopedTruncation t(Exponent(3));
    CHECK(settings().truncation == Exponent(3));
  }
  CHECK(settings().truncation == Exponent(8));
  CHECK_THROWS_AS(configure(8, Exponent(8)), Error);
  CHECK_THROWS_AS(configure(40, Exponent(0)), Error);
}

TEST_CASE("Error carries its code") {
  try {
    (void)invert(SeriesNumber());
    FAIL("expected ZeroDivision");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroDivision);
    CHECK(std::string(e.what()).rfind("ZeroDivision", 0) == 0);
  }
}

TEST_CASE("add") {
  check_terms((SeriesNumber(1) + eta()) + (-eta()), {{Exponent(0), Real(1)}});
  check_terms(eta(Exponent(1, 2)) + eta(), {{Exponent(1, 2), Real(1)}, {Exponent(1), Real(1)}});
  check_terms(SeriesNumber(3) + SeriesNumber(4), {{Exponent(0), Real(7)}});
  CHECK((eta() - eta()).is_zero());
  CHECK((eta() - eta()).is_exact());
}

TEST_CASE("truncation propagates through add and mul") {
  const SeriesNumber a = SeriesNumber(1) + SeriesNumber::big_o(Exponent(3));
  const SeriesNumber b = eta() + SeriesNumber::big_o(Exponent(5));
  REQUIRE(a.truncation());
  CHECK(*(a + b).truncation() == Exponent(3));
  // (1 + O(3)) (eta + O(5)) = eta + O(min(3 + 1, 5 + 0))
  CHECK(*(a * b).truncation() == Exponent(4));
  CHECK((a * b).terms().size() == 1);
  // terms at or past the truncation are dropped
  const SeriesNumber c = SeriesNumber::from_terms({{Exponent(1), Complex(2)}, {Exponent(4), Complex(1)}}, Exponent(3));
  CHECK(c.terms().size() == 1);
}

TEST_CASE("mul") {
  check_terms(eta() * eta(), {{Exponent(2), Real(1)}});
  check_terms((SeriesNumber(1) + eta()) * (SeriesNumber(1) - eta()), {{Exponent(0), Real(1)}, {Exponent(2), Real(-1)}});
  check_terms(eta(Exponent(1, 2)) * eta(Exponent(1, 2)), {{Exponent(1), Real(1)}});
  CHECK(pow(SeriesNumber(1) + eta(), 3).terms().size() == 4);
}

TEST_CASE("invert") {
  const SeriesNumber g = invert(SeriesNumber(1) + eta());
  REQUIRE(g.truncation());
  CHECK(*g.truncation() == Exponent(8));
  for (int k = 0; k < 8; ++k) CHECK(close(g.coefficient(Exponent(k)).re, Real(k % 2 ? -1 : 1)));
  check_terms(invert(eta()), {{Exponent(-1), Real(1)}});
  CHECK(invert(eta()).is_exact());
  check_terms(invert(SeriesNumber(2)), {{Exponent(0), Real("0.5")}});
  CHECK_THROWS_AS(invert(SeriesNumber()), Error);
  // truncation is relative to the leading exponent
  const SeriesNumber h = invert(eta(Exponent(-1)) + SeriesNumber(1));
  CHECK(h.leading_exponent() == Exponent(1));
  CHECK(*h.truncation() == Exponent(9));
  // a * invert(a) = 1 + O(eta^T)
  const SeriesNumber a = SeriesNumber(2) + eta(Exponent(1, 3)) - eta(Exponent(2)) * SeriesNumber(Real(5));
  const SeriesNumber one = a * invert(a);
  CHECK(approx_equal(one, SeriesNumber(1), tau()));
  CHECK(one.truncation());
}

TEST_CASE("compare") {
  CHECK(compare(eta(), SeriesNumber(0)) == Ordering::Greater);
  for (const char* r : {"1", "0.1", "0.000001"}) CHECK(compare(eta(), SeriesNumber(Real(r))) == Ordering::Less);
  CHECK(compare(eta(Exponent(1, 2)), eta()) == Ordering::Greater);
  CHECK(compare(SeriesNumber(1) + eta(), SeriesNumber(1)) == Ordering::Greater);
  CHECK(compare(SeriesNumber(3), SeriesNumber(3)) == Ordering::Equal);
  CHECK(compare(-eta(Exponent(-1)), SeriesNumber(-1000000)) == Ordering::Less);
  CHECK_THROWS_AS(compare(SeriesNumber(Complex(Real(0), Real(1))), SeriesNumber(0)), Error);
  // equal up to truncation
  const SeriesNumber fuzzy = SeriesNumber(1) + SeriesNumber::big_o(Exponent(2));
  CHECK(compare(fuzzy, SeriesNumber(1)) == Ordering::Equal);
  CHECK(compare(fuzzy, SeriesNumber(1) + eta()) == Ordering::Less);
}

TEST_CASE("classify") {
  CHECK(classify(eta(Exponent(2))) == Classification::Infinitesimal);
  CHECK(classify(SeriesNumber(3) + eta()) == Classification::Appreciable);
  CHECK(classify(eta(Exponent(-1, 2))) == Classification::Infinite);
  CHECK(classify(SeriesNumber()) == Classification::Zero);
  for (int p = -6; p <= 6; ++p)
    for (int q = 1; q <= 4; ++q) {
      const Exponent e(p, q);
      const Classification c = classify(eta(e));
      if (e > 0) CHECK(c == Classification::Infinitesimal);
      else if (e < 0) CHECK(c == Classification::Infinite);
      else CHECK(c == Classification::Appreciable);
    }
}

TEST_CASE("standard part") {
  CHECK(standard_part(SeriesNumber(3) + eta() - eta(Exponent(2)) * SeriesNumber(5)) == 3);
  CHECK(standard_part(eta(Exponent(1, 2))) == 0);
  try {
    (void)standard_part(invert(eta()));
    FAIL("expected NotFinite");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFinite);
  }
  const Complex z = complex_standard_part(SeriesNumber(Complex(Real(1), Real(2))) + eta());
  CHECK(z.re == 1);
  CHECK(z.im == 2);
  CHECK_THROWS_AS(standard_part(SeriesNumber(Complex(Real(1), Real(2)))), Error);
}

TEST_CASE("compose_analytic examples") {
  // arctan at 1 + eta; hand values pi/4, 1/2, -1/4, 1/12, 0, -1/40
  const SeriesNumber at = compose_analytic(seeds::arctan(), SeriesNumber(1) + eta());
  CHECK(close(at.coefficient(Exponent(0)).re, pi() / 4));
  CHECK(close(at.coefficient(Exponent(1)).re, Real("0.5")));
  CHECK(close(at.coefficient(Exponent(2)).re, Real("-0.25")));
  CHECK(close(at.coefficient(Exponent(3)).re, Real(1) / 12));
  CHECK(mp::abs(at.coefficient(Exponent(4)).re) <= tau());
  CHECK(close(at.coefficient(Exponent(5)).re, Real(-1) / 40));

  // Independent oracle: central finite differences of mp::atan.
  const Real h("1e-6");
  auto f = [](const Real& x) { return Real(mp::atan(x)); };
  const Real x0 = 1;
  const Real d1 = (f(x0 + h) - f(x0 - h)) / (2 * h);
  const Real d2 = (f(x0 + h) - 2 * f(x0) + f(x0 - h)) / (h * h);
  const Real d3 = (f(x0 + 2 * h) - 2 * f(x0 + h) + 2 * f(x0 - h) - f(x0 - 2 * h)) / (2 * h * h * h);
  CHECK(close(at.coefficient(Exponent(1)).re, d1, Real("1e-9")));
  CHECK(close(at.coefficient(Exponent(2)).re, d2 / 2, Real("1e-9")));
  CHECK(close(at.coefficient(Exponent(3)).re, d3 / 6, Real("1e-9")));

  const SeriesNumber ex = compose_analytic(seeds::exp(), eta());
  for (int k = 0; k < 8; ++k) {
    Real factorial = 1;
    for (int j = 2; j <= k; ++j) factorial *= j;
    CHECK(close(ex.coefficient(Exponent(k)).re, 1 / factorial));
  }
  CHECK(*ex.truncation() == Exponent(8));

  const SeriesNumber p = compose_analytic(seeds::polynomial(poly({Real(-1), Real(0), Real(1)})),
                                          SeriesNumber(1) + eta());
  check_terms(p, {{Exponent(1), Real(2)}, {Exponent(2), Real(1)}});
  CHECK(p.is_exact());

  const SeriesNumber s = compose_analytic(seeds::sin(), eta(Exponent(1, 2)));
  CHECK(close(s.coefficient(Exponent(1, 2)).re, Real(1)));
  CHECK(close(s.coefficient(Exponent(3, 2)).re, Real(-1) / 6));
}

TEST_CASE("compose_analytic errors") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::DomainError;
  };
  CHECK(code_of([] { (void)compose_analytic(seeds::exp(), invert(eta())); }) == ErrorCode::NotFinite);
  CHECK(code_of([] { (void)compose_analytic(seeds::log(), eta()); }) == ErrorCode::NeedsLog);
  CHECK(code_of([] { (void)compose_analytic(seeds::log(), invert(eta())); }) == ErrorCode::NeedsLog);
  CHECK(code_of([] { (void)compose_analytic(seeds::log(), SeriesNumber(-1) + eta()); }) == ErrorCode::SeedDomain);
  const SeriesNumber l = compose_analytic(seeds::log(), SeriesNumber(1) + eta());
  CHECK(close(l.coefficient(Exponent(1)).re, Real(1)));
  CHECK(close(l.coefficient(Exponent(2)).re, Real("-0.5")));
}

TEST_CASE("arctan_ext") {
  const SeriesNumber a = arctan_ext(invert(eta()));
  CHECK(close(a.coefficient(Exponent(0)).re, pi() / 2));
  CHECK(close(a.coefficient(Exponent(1)).re, Real(-1)));
  CHECK(close(a.coefficient(Exponent(3)).re, Real(1) / 3));
  CHECK(close(standard_part(arctan_ext(SeriesNumber(1))), pi() / 4));
  CHECK(arctan_ext(SeriesNumber(1)).is_exact());
  const SeriesNumber b = arctan_ext(-eta(Exponent(-1, 2)));
  CHECK(close(b.coefficient(Exponent(0)).re, -pi() / 2));
  CHECK(close(b.coefficient(Exponent(1, 2)).re, Real(1)));
  CHECK(arctan_ext(SeriesNumber()).is_zero());
  CHECK_THROWS_AS(arctan_ext(SeriesNumber(Complex(Real(0), Real(2)))), Error);
}

TEST_CASE("mvt_theta examples") {
  const MvtSolution quad = mvt_theta(poly({Real(0), Real(0), Real(1)}), Real(1), eta());
  check_terms(quad.theta, {{Exponent(0), Real("0.5")}});
  CHECK_FALSE(quad.degenerate);

  const MvtSolution cube = mvt_theta(poly({Real(0), Real(0), Real(0), Real(1)}), Real(0), eta());
  CHECK(close(standard_part(cube.theta), 1 / mp::sqrt(Real(3))));

  const MvtSolution line = mvt_theta(poly({Real(0), Real(1)}), Real(0), eta());
  CHECK(line.degenerate);
  CHECK(standard_part(line.theta) == Real("0.5"));

  // x^3 at 1: theta = 1/2 + h/24 + ...
  const MvtSolution shifted = mvt_theta(poly({Real(0), Real(0), Real(0), Real(1)}), Real(1), eta());
  CHECK(close(shifted.theta.coefficient(Exponent(0)).re, Real("0.5")));
  CHECK(close(shifted.theta.coefficient(Exponent(1)).re, Real(1) / 24));
  const auto order = order_of(shifted.residual);
  if (order) CHECK(*order >= settings().truncation);

  CHECK_THROWS_AS(mvt_theta(poly({Real(0), Real(0), Real(1)}), Real(0), SeriesNumber(1)), Error);
}

TEST_CASE("SeriesNumber JSON round trip") {
  const SeriesNumber s = SeriesNumber(pi()) - eta(Exponent(1, 2)) * SeriesNumber(Real(3)) +
                         SeriesNumber::monomial(Complex(Real(1), Real(-2)), Exponent(2)) +
                         SeriesNumber::big_o(Exponent(7, 2));
  const auto j = to_json(s);
  CHECK(j.at("trunc") == nlohmann::json({7, 2}));
  CHECK(j.at("terms").size() == 3);
  const SeriesNumber back = series_from_json(j);
  CHECK(approx_equal(back, s, tau()));
  CHECK(back.truncation() == s.truncation());
  CHECK(to_json(eta()).at("trunc").is_null());
  CHECK_THROWS_AS(series_from_json(nlohmann::json{{"terms", {{1, 0, "1", "0"}}}, {"trunc", nullptr}}), Error);
  CHECK_THROWS_AS(series_from_json(nlohmann::json{{"terms", 3}}), Error);
  CHECK_THROWS_AS(series_from_json(nlohmann::json{{"terms", {{1, 1, "x", "0"}}}, {"trunc", nullptr}}), Error);
}
