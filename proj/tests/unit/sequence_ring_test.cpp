#include <hyperdelta/seqring.hpp>
#include <hyperdelta/series.hpp>

#include "test_support.hpp"

using namespace hyperdelta;
using namespace hyperdelta::seq;
using namespace hyperdelta::testing;

namespace {

SeqNumber gen(std::string_view text) { return SeqNumber::parse(text); }

}  // namespace

TEST_CASE("parse and evaluate") {
  const SeqNumber a = gen("(2*n^2+1)/(n^2)");
  CHECK(a.kind() == SeqNumber::Kind::Symbolic);
  CHECK(a.value(1) == 3);
  CHECK(a.value(2) == Real("2.25"));
  CHECK_THROWS_AS(gen("sin(n)"), Error);
  CHECK_THROWS_AS(gen("n^(1/2)"), Error);
  CHECK_THROWS_AS(gen("(1"), Error);
  // the sequence starts past the last positive integer pole
  const SeqNumber b = gen("1/((n-1)*(n-3))");
  CHECK(b.start_index() == 4);
  CHECK_THROWS_AS(b.value(2), Error);
}

TEST_CASE("termwise arithmetic") {
  CHECK(in_ideal(gen("1/n") + gen("-1/n"), Ideal::EventuallyZero) == Answer::Yes);
  const SeqNumber one = gen("1/n") * gen("n");
  CHECK(one.kind() == SeqNumber::Kind::Symbolic);
  CHECK(one.generator() == RationalFunction(Polynomial<Rational>(Rational(1))));
  const SeqNumber sq = seq_mul(gen("1/n"), gen("1/n"));
  CHECK(sq.generator() == gen("1/n^2").generator());
  CHECK(seq_add(gen("n"), gen("1")).value(5) == 6);
  CHECK((-gen("n")).value(3) == -3);
  // mixed kinds fall back to periodic or opaque
  const SeqNumber mixed = SeqNumber::periodic({Rational(1), Rational(0)}) + gen("1/n");
  CHECK(mixed.kind() == SeqNumber::Kind::Opaque);
  CHECK(mixed.value(1) == 2);
  CHECK(mixed.value(2) == Real("0.5"));
  const SeqNumber both = SeqNumber::periodic({Rational(1), Rational(2)}) * SeqNumber::periodic({Rational(3)});
  CHECK(both.kind() == SeqNumber::Kind::Periodic);
  CHECK(both.value(2) == 6);
}

TEST_CASE("in_ideal examples") {
  CHECK(in_ideal(gen("1/n"), Ideal::EventuallyZero) == Answer::No);
  CHECK(in_ideal(gen("1/n"), Ideal::Null) == Answer::Yes);
  CHECK(in_ideal(gen("0"), Ideal::EventuallyZero) == Answer::Yes);
  CHECK(in_ideal(gen("(n^2+1)/(n^3)"), Ideal::Null) == Answer::Yes);
  CHECK(in_ideal(gen("(n^2+1)/(n^2)"), Ideal::Null) == Answer::No);
  CHECK(in_ideal(gen("n"), Ideal::Null) == Answer::No);
}

TEST_CASE("equals_mod examples") {
  const SeqNumber three = SeqNumber::constant(Rational(3));
  const SeqNumber near = gen("3 + 1/n");
  CHECK(equals_mod(three, near, Ideal::Null) == Answer::Yes);
  CHECK(equals_mod(three, near, Ideal::EventuallyZero) == Answer::No);
  const SeqNumber alternating = SeqNumber::opaque([](std::uint64_t n) { return Real(n % 2 == 1 ? 1 : 0); }, 1000);
  CHECK(equals_mod(alternating, SeqNumber::constant(Rational(0)), Ideal::EventuallyZero) == Answer::No);
}

TEST_CASE("opaque sequences answer three-valued") {
  const SeqNumber decaying = SeqNumber::opaque([](std::uint64_t n) { return Real(1) / Real(n); }, 1000);
  CHECK(in_ideal(decaying, Ideal::EventuallyZero) == Answer::No);
  CHECK(in_ideal(decaying, Ideal::Null) == Answer::Unknown);
  const SeqNumber flat = SeqNumber::opaque([](std::uint64_t) { return Real(1); }, 1000);
  CHECK(in_ideal(flat, Ideal::Null) == Answer::No);
  const SeqNumber vanishing = SeqNumber::opaque([](std::uint64_t n) { return Real(n < 10 ? 1 : 0); }, 1000);
  CHECK(in_ideal(vanishing, Ideal::EventuallyZero) == Answer::Unknown);
  const Limit l = seq_standard_part(decaying);
  CHECK_FALSE(l.exact);
  CHECK(close(l.value, Real("0.001")));
}

TEST_CASE("zero divisor witness") {
  const auto [even, odd] = zero_divisor_witness();
  CHECK(in_ideal(even, Ideal::EventuallyZero) == Answer::No);
  CHECK(in_ideal(odd, Ideal::EventuallyZero) == Answer::No);
  CHECK(in_ideal(even * odd, Ideal::EventuallyZero) == Answer::Yes);
  CHECK(equals_mod(even + odd, SeqNumber::constant(Rational(1)), Ideal::Null) == Answer::Yes);
  for (std::uint64_t n = 1; n <= 20; ++n) CHECK((even * odd).value(n) == 0);
}

TEST_CASE("standard part as a limit") {
  CHECK(seq_standard_part(gen("(2*n^2+1)/(n^2)")).exact_value == 2);
  CHECK(seq_standard_part(gen("1/n")).exact_value == 0);
  CHECK(seq_standard_part(gen("(3*n - 1)/(6*n + 5)")).exact_value == Rational(1, 2));
  try {
    (void)seq_standard_part(gen("n"));
    FAIL("expected NotConvergent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotConvergent);
  }
  CHECK_THROWS_AS(seq_standard_part(zero_divisor_witness().first), Error);
}

TEST_CASE("bridge to the series standard part") {
  // 2 + 3 eta - eta^2 at eta = 1/n, and with a negative power dropped.
  const SeqNumber a = at_reciprocal_index({{0, Rational(2)}, {1, Rational(3)}, {2, Rational(-1)}});
  const SeriesNumber s = SeriesNumber(2) + SeriesNumber(3) * SeriesNumber::eta() - SeriesNumber::eta(Exponent(2));
  CHECK(to_real(seq_standard_part(a).exact_value) == standard_part(s));
  CHECK(a.value(10) == Real("2.29"));
  CHECK_THROWS_AS(seq_standard_part(at_reciprocal_index({{-1, Rational(1)}})), Error);
}
