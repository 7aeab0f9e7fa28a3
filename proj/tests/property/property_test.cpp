// Randomized property suites. Every generator is seeded, so failures replay.

#include <hyperdelta/analytic.hpp>
#include <hyperdelta/kernels.hpp>
#include <hyperdelta/lang/eval.hpp>
#include <hyperdelta/lang/printer.hpp>
#include <hyperdelta/mvt.hpp>
#include <hyperdelta/oracle/shadows.hpp>
#include <hyperdelta/seqring.hpp>

#include "test_support.hpp"

#include <cmath>

using namespace hyperdelta;
using namespace hyperdelta::testing;

namespace {

SeriesNumber eta(Exponent q = Exponent(1)) { return SeriesNumber::eta(q); }

bool positive(const SeriesNumber& a) { return compare(a, SeriesNumber()) == Ordering::Greater; }

Ordering flip(Ordering o) {
  if (o == Ordering::Less) return Ordering::Greater;
  if (o == Ordering::Greater) return Ordering::Less;
  return o;
}

// A nonzero series whose leading coefficient has a random sign.
SeriesNumber nonzero_series(Gen& g, int lo = -4, int hi = 6) {
  SeriesNumber s;
  while (s.is_zero()) s = g.series(lo, hi);
  return s;
}

Polynomial<Real> random_polynomial(Gen& g, int min_degree, int max_degree) {
  std::vector<Real> c;
  const int degree = g.integer(min_degree, max_degree);
  for (int k = 0; k <= degree; ++k) c.push_back(g.coefficient());
  return poly(std::move(c));
}

}  // namespace

TEST_CASE("ordered-field laws: 1000 cases") {
  Gen g(20261015);
  const Real tol = tau();
  int cases = 0;
  for (; cases < 1000; ++cases) {
    const SeriesNumber a = g.series(-4, 6), b = g.series(-4, 6), c = g.series(-4, 6);
    INFO("case " << cases << ": a = " << lang::format_series(a, 12) << ", b = " << lang::format_series(b, 12)
                 << ", c = " << lang::format_series(c, 12));
    REQUIRE(approx_equal(a + b, b + a, tol));
    REQUIRE(approx_equal(a * b, b * a, tol));
    REQUIRE(approx_equal((a + b) + c, a + (b + c), tol));
    REQUIRE(approx_equal((a * b) * c, a * (b * c), tol));
    REQUIRE(approx_equal(a * (b + c), a * b + a * c, tol));
    REQUIRE(approx_equal(a + SeriesNumber(), a, tol));
    REQUIRE(approx_equal(a * SeriesNumber(1), a, tol));
    REQUIRE(approx_equal(a - a, SeriesNumber(), tol));
    if (!a.is_zero()) {
      const SeriesNumber one = a * invert(a);
      REQUIRE(approx_equal(one, SeriesNumber(1), tol));
      if (one.truncation()) REQUIRE(*one.truncation() > 0);
    }
    // order: antisymmetry, compatibility with + and *, transitivity
    REQUIRE(compare(a, b) == flip(compare(b, a)));
    if (positive(a) && positive(b)) {
      REQUIRE(positive(a + b));
      REQUIRE(positive(a * b));
    }
    if (compare(a, b) == Ordering::Less && compare(b, c) == Ordering::Less)
      REQUIRE(compare(a, c) == Ordering::Less);
    if (compare(a, b) == Ordering::Less) REQUIRE(compare(a + c, b + c) == Ordering::Less);
  }
  CHECK(cases == 1000);
}

TEST_CASE("st is a ring homomorphism on finite elements: 500 cases") {
  Gen g(8151);
  for (int k = 0; k < 500; ++k) {
    const SeriesNumber a = g.series(0, 6), b = g.series(0, 6);
    INFO("case " << k << ": a = " << lang::format_series(a, 12) << ", b = " << lang::format_series(b, 12));
    REQUIRE(standard_part(a + b) == standard_part(a) + standard_part(b));
    REQUIRE(standard_part(a * b) == standard_part(a) * standard_part(b));
    REQUIRE(standard_part(-a) == -standard_part(a));
  }
  // st is the identity on embedded reals
  for (int k = 0; k < 20; ++k) {
    const Real r = g.coefficient();
    CHECK(standard_part(SeriesNumber(r)) == r);
  }
}

TEST_CASE("print and re-parse round trip: 200 cases") {
  Gen g(424242);
  for (int k = 0; k < 200; ++k) {
    SeriesNumber s = g.series(-6, 6);
    if (k % 5 == 0) {
      // complex coefficients and irrational reals
      s = s + SeriesNumber::monomial(Complex(g.coefficient() / 7, g.coefficient() / 3), g.exponent(-3, 3)) +
          SeriesNumber(pi() * g.coefficient());
    }
    const std::string text = lang::format_series(s);
    INFO("case " << k << ": " << text);
    const SeriesNumber back = lang::evaluate_series(*lang::parse_expr(text));
    REQUIRE(back.terms().size() == s.terms().size());
    for (std::size_t i = 0; i < s.terms().size(); ++i) REQUIRE(back.terms()[i].exponent == s.terms()[i].exponent);
    REQUIRE(approx_equal(back, s, tau()));
    REQUIRE(back.truncation() == s.truncation());
  }
}

TEST_CASE("classify(eta^q) follows the sign of q") {
  Gen g(77);
  for (int k = 0; k < 300; ++k) {
    const Exponent q = g.exponent(-12, 12);
    const Classification c = classify(eta(q));
    if (q > 0) REQUIRE(c == Classification::Infinitesimal);
    else if (q < 0) REQUIRE(c == Classification::Infinite);
    else REQUIRE(c == Classification::Appreciable);
  }
}

TEST_CASE("arctan_ext is odd and monotone") {
  Gen g(31337);
  for (int k = 0; k < 300; ++k) {
    const SeriesNumber a = g.series(-3, 4, false), b = g.series(-3, 4, false);
    INFO("case " << k << ": a = " << lang::format_series(a, 12) << ", b = " << lang::format_series(b, 12));
    const SeriesNumber fa = arctan_ext(a), fb = arctan_ext(b);
    REQUIRE(approx_equal(arctan_ext(-a), -fa, tau()));
    const Ordering o = compare(a, b);
    if (o == Ordering::Equal) continue;
    const SeriesNumber d = fb - fa;
    // a strictly smaller argument gives a strictly smaller value, unless the
    // difference sits below the truncation of both values
    if (d.is_zero()) continue;
    REQUIRE(compare(fa, fb) == o);
  }
}

TEST_CASE("sifting master property against the oracle") {
  Gen g(151);
  struct Pair {
    Exponent alpha, eps;
    Real ratio_scale;  // eps = ratio_scale * eta^eps
  };
  const std::vector<Pair> pairs{
      {Exponent(1), Exponent(1, 2), Real(1)},  // T infinite
      {Exponent(1), Exponent(1, 3), Real(1)},  // T infinite
      {Exponent(1), Exponent(2), Real(1)},     // T infinitesimal
      {Exponent(1), Exponent(1), Real(1)},     // T = 1
      {Exponent(1), Exponent(1), Real(3)},     // T = 3
  };
  const double eta_value = 1e-8;
  int checked = 0;
  for (int k = 0; k < 60; ++k) {
    const TestFunction f = TestFunction::polynomial(random_polynomial(g, 0, 6));
    const int a = g.integer(-1, 2);
    const Pair& p = pairs[static_cast<std::size_t>(k) % pairs.size()];
    const SeriesNumber alpha = eta(p.alpha);
    const SeriesNumber eps = SeriesNumber(p.ratio_scale) * eta(p.eps);
    INFO("case " << k << ": F = " << f.description() << ", a = " << a << ", eps = " << lang::format_series(eps, 6));
    const kernels::SiftReport r = kernels::sift(f, Real(a), alpha, eps);

    const Real fa = f.value(Real(a));
    Real expected;
    if (p.eps < p.alpha * Exponent(1)) expected = fa * pi() / 2;
    else if (p.eps > p.alpha) expected = 0;
    else expected = fa * mp::atan(p.ratio_scale);
    REQUIRE(close(r.st, expected, Real("1e-30")));

    const double alpha_d = std::pow(eta_value, to_double(to_real(p.alpha)));
    const double eps_d = to_double(p.ratio_scale) * std::pow(eta_value, to_double(to_real(p.eps)));
    const double numeric = oracle::sift_integral([&](double x) { return to_double(f.value(Real(x))); },
                                                 static_cast<double>(a), alpha_d, eps_d);
    const double e = to_double(expected);
    REQUIRE(std::abs(numeric - e) <= 1e-3 * std::max(1.0, std::abs(e)));
    ++checked;
  }
  CHECK(checked == 60);
}

TEST_CASE("kernel mass is conserved under any positive power of eta") {
  Gen g(99);
  for (int k = 0; k < 50; ++k) {
    Exponent q = g.exponent(1, 12);
    const kernels::DiracReport r = kernels::dirac_conditions(eta(q), TestFunction::parse("poly: 1"), {Real(1)});
    REQUIRE(r.mass == Exponent(1));
    REQUIRE(r.mass_ok);
  }
}

TEST_CASE("fourier closed form equals direct evaluation") {
  Gen g(1827);
  for (int k = 0; k < 20; ++k) {
    const Real d = Real(g.uniform(-6.0, 6.0));
    const Real e = Real(g.uniform(1e-6, 0.5));
    const Real closed = kernels::fourier_kernel_value(d, e);
    const Complex direct = kernels::fourier_kernel_direct_value(d, e);
    INFO("d = " << show(d) << ", eps = " << show(e));
    REQUIRE(close(direct.re, closed, Real("1e-20")));
    REQUIRE(mp::abs(direct.im) <= Real("1e-20") * mp::max(Real(1), Real(mp::abs(closed))));
  }
  for (int k = 0; k < 10; ++k) {
    const Real x = Real(g.uniform(0.1, 6.0)), mu = Real(g.uniform(0.1, 6.0));
    REQUIRE(approx_equal(kernels::fourier_kernel(x, mu, eta()), kernels::fourier_kernel_direct(x, mu, eta()),
                         Real("1e-15")));
  }
}

TEST_CASE("mvt residual vanishes to the truncation order") {
  Gen g(7);
  for (int k = 0; k < 20; ++k) {
    const Polynomial<Real> p = random_polynomial(g, 2, 6);
    const Real x0 = Real(g.integer(-3, 3)) / 2;
    const MvtSolution s = mvt_theta(p, x0, eta());
    const auto order = order_of(s.residual);
    if (order) REQUIRE(*order >= settings().truncation);
    const Real st = standard_part(s.theta);
    REQUIRE(st >= 0);
    REQUIRE(st <= 1);
  }
  for (int k = 0; k < 10; ++k) {
    const Polynomial<Real> q = poly({g.coefficient(), g.coefficient(), g.coefficient()});
    const MvtSolution s = mvt_theta(q, Real(g.integer(-5, 5)), eta());
    REQUIRE(s.theta.terms().size() == 1);
    REQUIRE(close(s.theta.coefficient(Exponent(0)).re, Real("0.5")));
  }
}

TEST_CASE("sequence ring: ideals, limits and surjection") {
  Gen g(88);
  auto random_rational = [&](int max_degree) {
    std::vector<Rational> c;
    const int degree = g.integer(0, max_degree);
    for (int k = 0; k <= degree; ++k) c.push_back(Rational(g.integer(-5, 5)));
    if (c.back() == 0) c.back() = 1;
    return Polynomial<Rational>(std::move(c));
  };
  int ez_yes = 0;
  for (int k = 0; k < 50; ++k) {
    seq::SeqNumber a = seq::SeqNumber::symbolic(RationalFunction(random_rational(3), random_rational(3)));
    if (k % 5 == 0) a = a - a;
    if (k % 7 == 0) a = seq::SeqNumber::periodic({Rational(g.integer(0, 1)), Rational(0)});
    const seq::Answer ez = seq::in_ideal(a, seq::Ideal::EventuallyZero);
    if (ez == seq::Answer::Yes) {
      ++ez_yes;
      REQUIRE(seq::in_ideal(a, seq::Ideal::Null) == seq::Answer::Yes);
    }
  }
  CHECK(ez_yes > 0);

  for (int k = 0; k < 50; ++k) {
    const auto num = random_rational(3), den = random_rational(3);
    const seq::SeqNumber a = seq::SeqNumber::symbolic(RationalFunction(num, den));
    const RationalFunction& rf = a.generator();
    if (rf.numerator().degree() > rf.denominator().degree()) {
      CHECK_THROWS_AS(seq::seq_standard_part(a), Error);
      continue;
    }
    const seq::Limit l = seq::seq_standard_part(a);
    REQUIRE(l.exact);
    // independent numeric limit: Richardson on u(n), u(2n) at n = 10^6
    const Rational n(1000000);
    const Rational richardson = 2 * rf(2 * n) - rf(n);
    REQUIRE(mp::abs(to_real(richardson) - to_real(l.exact_value)) < Real("1e-9"));
    // surjection onto R: a and its limit agree modulo null sequences
    REQUIRE(seq::equals_mod(a, seq::SeqNumber::constant(l.exact_value), seq::Ideal::Null) == seq::Answer::Yes);
  }
}

TEST_CASE("sequence ring laws hold exactly for symbolic sequences") {
  Gen g(5);
  auto random_seq = [&] {
    std::vector<Rational> n, d;
    for (int k = 0; k <= g.integer(0, 2); ++k) n.push_back(Rational(g.integer(-4, 4)));
    for (int k = 0; k <= g.integer(0, 2); ++k) d.push_back(Rational(g.integer(1, 4)));
    return seq::SeqNumber::symbolic(RationalFunction(Polynomial<Rational>(n), Polynomial<Rational>(d)));
  };
  for (int k = 0; k < 100; ++k) {
    const auto a = random_seq(), b = random_seq(), c = random_seq();
    REQUIRE((a + b).generator() == (b + a).generator());
    REQUIRE((a * b).generator() == (b * a).generator());
    REQUIRE(((a + b) + c).generator() == (a + (b + c)).generator());
    REQUIRE(((a * b) * c).generator() == (a * (b * c)).generator());
    REQUIRE((a * (b + c)).generator() == (a * b + a * c).generator());
  }
}
