#include <hyperdelta/error.hpp>
#include <hyperdelta/series.hpp>

#include <algorithm>
#include <map>

namespace hyperdelta {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Zero: return "Zero";
    case Classification::Infinitesimal: return "Infinitesimal";
    case Classification::Appreciable: return "Appreciable";
    case Classification::Infinite: return "Infinite";
  }
  return "?";
}

std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

namespace {

using Truncation = std::optional<Exponent>;

Truncation min_order(const Truncation& a, const Truncation& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

Truncation plus(const Truncation& a, const Exponent& q) {
  if (!a) return std::nullopt;
  return *a + q;
}

// Accumulates coefficients per exponent together with the magnitude of what
// was summed, so cancellation is judged relative to the inputs.
struct Accumulator {
  struct Slot {
    Complex sum;
    Real scale{0};
  };
  std::map<Exponent, Slot> slots;

  void add(const Exponent& q, const Complex& c) {
    auto& slot = slots[q];
    slot.sum += c;
    slot.scale += abs(c);
  }

  std::vector<SeriesNumber::Term> drain(const Truncation& truncation) {
    const Real& tol = settings().tolerance;
    std::vector<SeriesNumber::Term> out;
    out.reserve(slots.size());
    for (auto& [q, slot] : slots) {
      if (truncation && q >= *truncation) break;
      if (slot.sum.is_zero() || abs(slot.sum) <= tol * slot.scale) continue;
      out.push_back({q, std::move(slot.sum)});
    }
    return out;
  }
};

void snap(Complex& c) {
  const Real& tol = settings().tolerance;
  using boost::multiprecision::abs;
  if (c.im != 0 && abs(c.im) <= tol * abs(c.re)) c.im = 0;
  if (c.re != 0 && abs(c.re) <= tol * abs(c.im)) c.re = 0;
}

}  // namespace

SeriesNumber::SeriesNumber(Real value) : SeriesNumber(Complex(std::move(value))) {}

SeriesNumber::SeriesNumber(int value) : SeriesNumber(Complex(value)) {}

SeriesNumber::SeriesNumber(Complex value) {
  if (!value.is_zero()) terms_.push_back({Exponent(0), std::move(value)});
}

SeriesNumber SeriesNumber::from_terms(std::vector<Term> terms, std::optional<Exponent> truncation) {
  SeriesNumber s;
  s.terms_ = std::move(terms);
  s.truncation_ = truncation;
  s.normalize();
  return s;
}

SeriesNumber SeriesNumber::monomial(Complex coefficient, Exponent exponent) {
  SeriesNumber s;
  if (!coefficient.is_zero()) s.terms_.push_back({exponent, std::move(coefficient)});
  return s;
}

SeriesNumber SeriesNumber::eta(Exponent exponent) { return monomial(Complex(1), exponent); }

SeriesNumber SeriesNumber::big_o(Exponent order) {
  SeriesNumber s;
  s.truncation_ = order;
  return s;
}

void SeriesNumber::normalize() {
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  Accumulator acc;
  for (auto& t : terms_) acc.add(t.exponent, t.coefficient);
  terms_ = acc.drain(truncation_);
  for (auto& t : terms_) snap(t.coefficient);
}

bool SeriesNumber::is_real() const {
  const Real& tol = settings().tolerance;
  for (const auto& t : terms_) {
    if (t.coefficient.im != 0 && abs(t.coefficient.im) > tol * abs(t.coefficient)) return false;
  }
  return true;
}

const Exponent& SeriesNumber::leading_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::DomainError, "leading exponent of zero series");
  return terms_.front().exponent;
}

const Complex& SeriesNumber::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorCode::DomainError, "leading coefficient of zero series");
  return terms_.front().coefficient;
}

Complex SeriesNumber::coefficient(const Exponent& q) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), q,
                             [](const Term& t, const Exponent& e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == q) return it->coefficient;
  return Complex();
}

SeriesNumber SeriesNumber::truncated(const Exponent& order) const {
  SeriesNumber s;
  s.truncation_ = min_order(truncation_, order);
  for (const auto& t : terms_) {
    if (t.exponent >= *s.truncation_) break;
    s.terms_.push_back(t);
  }
  return s;
}

SeriesNumber SeriesNumber::shifted(const Exponent& q) const {
  SeriesNumber s = *this;
  for (auto& t : s.terms_) t.exponent += q;
  s.truncation_ = plus(truncation_, q);
  return s;
}

SeriesNumber SeriesNumber::operator-() const {
  SeriesNumber s = *this;
  for (auto& t : s.terms_) t.coefficient = -t.coefficient;
  return s;
}

SeriesNumber operator+(const SeriesNumber& a, const SeriesNumber& b) {
  Accumulator acc;
  for (const auto& t : a.terms_) acc.add(t.exponent, t.coefficient);
  for (const auto& t : b.terms_) acc.add(t.exponent, t.coefficient);
  SeriesNumber s;
  s.truncation_ = min_order(a.truncation_, b.truncation_);
  s.terms_ = acc.drain(s.truncation_);
  for (auto& t : s.terms_) snap(t.coefficient);
  return s;
}

SeriesNumber operator-(const SeriesNumber& a, const SeriesNumber& b) { return a + (-b); }

SeriesNumber operator*(const SeriesNumber& a, const SeriesNumber& b) {
  // The lowest known exponent of each factor; an unknown-only factor
  // O(eta^T) contributes T.
  auto low = [](const SeriesNumber& s) -> Truncation {
    if (!s.terms_.empty()) return s.terms_.front().exponent;
    return s.truncation_;
  };
  SeriesNumber s;
  const Truncation la = low(a), lb = low(b);
  if (!la || !lb) return s;  // an exact zero factor
  s.truncation_ = min_order(plus(a.truncation_, *lb), plus(b.truncation_, *la));

  Accumulator acc;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Exponent q = ta.exponent + tb.exponent;
      if (s.truncation_ && q >= *s.truncation_) break;
      acc.add(q, ta.coefficient * tb.coefficient);
    }
  }
  s.terms_ = acc.drain(s.truncation_);
  for (auto& t : s.terms_) snap(t.coefficient);
  return s;
}

SeriesNumber operator/(const SeriesNumber& a, const SeriesNumber& b) { return a * invert(b); }

SeriesNumber add(const SeriesNumber& a, const SeriesNumber& b) { return a + b; }
SeriesNumber mul(const SeriesNumber& a, const SeriesNumber& b) { return a * b; }

SeriesNumber invert(const SeriesNumber& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroDivision, "inverse of a zero series");

  const Exponent lead = a.leading_exponent();
  const Complex lead_inv = Complex(1) / a.leading_coefficient();

  // a = c eta^q (1 + r) with every exponent of r positive.
  std::vector<SeriesNumber::Term> rest;
  for (std::size_t i = 1; i < a.terms().size(); ++i) {
    const auto& t = a.terms()[i];
    rest.push_back({t.exponent - lead, t.coefficient * lead_inv});
  }
  if (rest.empty() && a.is_exact()) return SeriesNumber::monomial(lead_inv, -lead);

  Exponent relative = settings().truncation;
  if (a.truncation()) relative = std::min(relative, *a.truncation() - lead);

  const SeriesNumber neg_r = -SeriesNumber::from_terms(std::move(rest));
  SeriesNumber sum = SeriesNumber(1).truncated(relative);
  SeriesNumber power = sum;
  while (true) {
    power = (power * neg_r).truncated(relative);
    if (power.is_zero()) break;
    sum += power;
  }
  return (sum * SeriesNumber(lead_inv)).shifted(-lead);
}

SeriesNumber pow(const SeriesNumber& a, unsigned n) {
  SeriesNumber result(1);
  SeriesNumber base = a;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

Ordering compare(const SeriesNumber& a, const SeriesNumber& b) {
  if (!a.is_real() || !b.is_real()) throw Error(ErrorCode::NotOrdered, "order comparison of nonreal series");
  const SeriesNumber d = a - b;
  if (d.is_zero()) return Ordering::Equal;
  return d.leading_coefficient().re > 0 ? Ordering::Greater : Ordering::Less;
}

Classification classify(const SeriesNumber& a) {
  if (a.is_zero()) return Classification::Zero;
  const Exponent& q = a.leading_exponent();
  if (q > 0) return Classification::Infinitesimal;
  if (q < 0) return Classification::Infinite;
  return Classification::Appreciable;
}

Complex complex_standard_part(const SeriesNumber& a) {
  if (classify(a) == Classification::Infinite)
    throw Error(ErrorCode::NotFinite, "standard part of an infinite value");
  return a.coefficient(Exponent(0));
}

Real standard_part(const SeriesNumber& a) {
  Complex c = complex_standard_part(a);
  using boost::multiprecision::abs;
  if (c.im != 0 && abs(c.im) > settings().tolerance * max(Real(1), abs(c.re)))
    throw Error(ErrorCode::NotOrdered, "standard part has a nonzero imaginary part");
  return c.re;
}

bool approx_equal(const SeriesNumber& a, const SeriesNumber& b, const Real& tol) {
  std::map<Exponent, std::pair<Complex, Complex>> merged;
  for (const auto& t : a.terms()) merged[t.exponent].first = t.coefficient;
  for (const auto& t : b.terms()) merged[t.exponent].second = t.coefficient;
  std::optional<Exponent> horizon = a.truncation();
  if (b.truncation() && (!horizon || *b.truncation() < *horizon)) horizon = b.truncation();
  for (const auto& [q, pair] : merged) {
    if (horizon && q >= *horizon) break;
    const Real scale = max(Real(1), max(abs(pair.first), abs(pair.second)));
    if (abs(pair.first - pair.second) > tol * scale) return false;
  }
  return true;
}

std::optional<Exponent> order_of(const SeriesNumber& a) {
  if (!a.is_zero()) return a.leading_exponent();
  return a.truncation();
}

}  // namespace hyperdelta
