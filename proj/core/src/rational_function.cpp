#include <hyperdelta/rational_function.hpp>

namespace hyperdelta {

RationalFunction::RationalFunction(Polynomial<Rational> numerator)
    : num_(std::move(numerator)), den_(Rational(1)) {}

RationalFunction::RationalFunction(Polynomial<Rational> numerator, Polynomial<Rational> denominator) {
  if (denominator.is_zero()) throw Error(ErrorCode::ZeroDivision, "rational function with zero denominator");
  if (numerator.is_zero()) {
    den_ = Polynomial<Rational>(Rational(1));
    return;
  }
  auto g = gcd(numerator, denominator);
  num_ = divmod(numerator, g).first;
  den_ = divmod(denominator, g).first;
  const Rational lead = den_.leading();
  num_ = num_.scaled(Rational(1) / lead);
  den_ = den_.scaled(Rational(1) / lead);
}

Rational RationalFunction::operator()(const Rational& x) const {
  const Rational d = den_(x);
  if (d == 0) throw Error(ErrorCode::ZeroDivision, "evaluation at a root of the denominator");
  return num_(x) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a) { return {-a.num_, a.den_}; }

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroDivision, "division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

long largest_positive_integer_root(const Polynomial<Rational>& p) {
  if (p.degree() <= 0) return 0;
  // Cauchy bound: every root satisfies |x| <= 1 + max |a_k / a_n|.
  Rational bound = 0;
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = p.coefficient(static_cast<std::size_t>(k)) / p.leading();
    if (r < 0) r = -r;
    if (r > bound) bound = r;
  }
  bound += 1;
  const auto limit = boost::multiprecision::numerator(bound) / boost::multiprecision::denominator(bound);
  if (limit > 10'000'000)
    throw Error(ErrorCode::DomainError, "denominator root bound too large to scan");
  for (long n = limit.convert_to<long>(); n >= 1; --n) {
    if (p(Rational(n)) == 0) return n;
  }
  return 0;
}

std::string to_string(const Polynomial<Rational>& p, std::string_view variable) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    const bool negative = c[k] < 0;
    const Rational magnitude = negative ? Rational(-c[k]) : c[k];
    std::string monomial;
    if (k > 0) {
      monomial = std::string(variable);
      if (k > 1) monomial += "^" + std::to_string(k);
    }
    std::string term;
    if (k == 0) term = magnitude.str();
    else if (magnitude == 1) term = monomial;
    else term = magnitude.str() + "*" + monomial;
    if (out.empty()) out = negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out;
}

std::string to_string(const RationalFunction& f, std::string_view variable) {
  if (f.is_polynomial()) return to_string(f.numerator(), variable);
  return "(" + to_string(f.numerator(), variable) + ")/(" + to_string(f.denominator(), variable) + ")";
}

}  // namespace hyperdelta
