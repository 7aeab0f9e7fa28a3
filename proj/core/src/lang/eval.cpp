#include <hyperdelta/analytic.hpp>
#include <hyperdelta/lang/eval.hpp>

namespace hyperdelta::lang {

namespace {

[[noreturn]] void unsupported(const Expr& e, const std::string& what) {
  throw Error(ErrorCode::UnsupportedFunction, "at byte " + std::to_string(e.offset) + ": " + what);
}

const SeriesNumber& as_series(const Value& v, const Expr& e) {
  if (const auto* s = std::get_if<SeriesNumber>(&v)) return *s;
  unsupported(e, "a classification cannot be used as a number");
}

SeriesNumber power(const SeriesNumber& base, const Exponent& q, const Expr& e) {
  if (q.denominator() == 1) {
    const std::int64_t n = q.numerator();
    if (n >= 0) return pow(base, static_cast<unsigned>(n));
    return invert(pow(base, static_cast<unsigned>(-n)));
  }
  // Fractional powers are defined on monomials only: (c eta^p)^q.
  if (base.terms().size() == 1 && base.is_exact()) {
    const auto& t = base.terms().front();
    if (t.coefficient.im == 0 && t.coefficient.re > 0) {
      Real c = boost::multiprecision::pow(t.coefficient.re, to_real(q));
      return SeriesNumber::monomial(Complex(c), t.exponent * q);
    }
  }
  unsupported(e, "fractional powers apply to positive monomials only");
}

SeriesNumber call(const Call& c, const Expr& e) {
  if (c.args.size() != 1) unsupported(e, c.name + " takes one argument");
  const Expr& arg_expr = *c.args.front();
  if (c.name == "O") {
    const SeriesNumber m = evaluate_series(arg_expr);
    if (m.terms().size() != 1 || !m.is_exact()) unsupported(e, "O() takes a monomial eta^q");
    return SeriesNumber::big_o(m.leading_exponent());
  }
  const SeriesNumber arg = evaluate_series(arg_expr);
  if (c.name == "st") return SeriesNumber(complex_standard_part(arg));
  if (c.name == "arctan") return arctan_ext(arg);
  if (c.name == "exp") return compose_analytic(seeds::exp(), arg);
  if (c.name == "log") return compose_analytic(seeds::log(), arg);
  if (c.name == "sin") return compose_analytic(seeds::sin(), arg);
  if (c.name == "cos") return compose_analytic(seeds::cos(), arg);
  unsupported(e, "unknown function '" + c.name + "'");
}

}  // namespace

Value evaluate(const Expr& e) {
  return std::visit(
      [&](const auto& n) -> Value {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Number>) {
          return SeriesNumber(Real(n.text));
        } else if constexpr (std::is_same_v<T, Symbol>) {
          if (n.name == "eta") return SeriesNumber::eta();
          if (n.name == "i") return SeriesNumber(Complex(Real(0), Real(1)));
          if (n.name == "pi") return SeriesNumber(pi());
          throw Error(ErrorCode::DomainError,
                      "at byte " + std::to_string(e.offset) + ": unknown symbol '" + n.name + "'");
        } else if constexpr (std::is_same_v<T, Unary>) {
          const SeriesNumber v = as_series(evaluate(*n.operand), *n.operand);
          return n.op == '-' ? -v : v;
        } else if constexpr (std::is_same_v<T, Binary>) {
          const SeriesNumber a = as_series(evaluate(*n.lhs), *n.lhs);
          const SeriesNumber b = as_series(evaluate(*n.rhs), *n.rhs);
          switch (n.op) {
            case '+': return a + b;
            case '-': return a - b;
            case '*': return a * b;
            default: return a * invert(b);
          }
        } else if constexpr (std::is_same_v<T, Power>) {
          return power(as_series(evaluate(*n.base), *n.base), n.exponent, e);
        } else {
          if (n.name == "classify") {
            if (n.args.size() != 1) unsupported(e, "classify takes one argument");
            return classify(evaluate_series(*n.args.front()));
          }
          return call(n, e);
        }
      },
      e.node);
}

SeriesNumber evaluate_series(const Expr& e) { return as_series(evaluate(e), e); }

Value evaluate(std::string_view text) { return evaluate(*parse_expr(text)); }

RationalFunction to_rational_function(const Expr& e, std::string_view variable) {
  using P = Polynomial<Rational>;
  return std::visit(
      [&](const auto& n) -> RationalFunction {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Number>) {
          return P(parse_decimal(n.text));
        } else if constexpr (std::is_same_v<T, Symbol>) {
          if (n.name != variable)
            throw Error(ErrorCode::DomainError, "at byte " + std::to_string(e.offset) + ": unknown symbol '" +
                                                    n.name + "' (variable is '" + std::string(variable) + "')");
          return P::monomial(1);
        } else if constexpr (std::is_same_v<T, Unary>) {
          auto v = to_rational_function(*n.operand, variable);
          return n.op == '-' ? -v : v;
        } else if constexpr (std::is_same_v<T, Binary>) {
          auto a = to_rational_function(*n.lhs, variable);
          auto b = to_rational_function(*n.rhs, variable);
          switch (n.op) {
            case '+': return a + b;
            case '-': return a - b;
            case '*': return a * b;
            default: return a / b;
          }
        } else if constexpr (std::is_same_v<T, Power>) {
          if (n.exponent.denominator() != 1)
            throw Error(ErrorCode::NonRationalExponent,
                        "at byte " + std::to_string(e.offset) + ": integer exponent required");
          auto base = to_rational_function(*n.base, variable);
          std::int64_t k = n.exponent.numerator();
          RationalFunction result(P(Rational(1)));
          for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) result = result * base;
          return k < 0 ? RationalFunction(P(Rational(1))) / result : result;
        } else {
          unsupported(e, "function calls are not allowed in a rational function");
        }
      },
      e.node);
}

}  // namespace hyperdelta::lang
