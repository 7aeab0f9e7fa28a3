#include <hyperdelta/lang/eval.hpp>
#include <hyperdelta/seqring.hpp>

#include <numeric>

namespace hyperdelta::seq {

std::string_view to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "Yes";
    case Answer::No: return "No";
    case Answer::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view to_string(Ideal i) { return i == Ideal::EventuallyZero ? "F_ez" : "F_null"; }

namespace {

using P = Polynomial<Rational>;

bool is_constant_symbolic(const SeqNumber& s) {
  return s.kind() == SeqNumber::Kind::Symbolic && s.generator().is_polynomial() &&
         s.generator().numerator().degree() <= 0;
}

Rational constant_value(const SeqNumber& s) { return s.generator().numerator().coefficient(0); }

template <typename Op>
SeqNumber combine(const SeqNumber& a, const SeqNumber& b, Op op) {
  using Kind = SeqNumber::Kind;
  if (a.kind() == Kind::Symbolic && b.kind() == Kind::Symbolic)
    return SeqNumber::symbolic(op(a.generator(), b.generator()));

  const bool a_periodic = a.kind() == Kind::Periodic || is_constant_symbolic(a);
  const bool b_periodic = b.kind() == Kind::Periodic || is_constant_symbolic(b);
  if (a_periodic && b_periodic) {
    auto pattern_of = [](const SeqNumber& s) {
      return s.kind() == Kind::Periodic ? s.pattern() : std::vector<Rational>{constant_value(s)};
    };
    const auto pa = pattern_of(a), pb = pattern_of(b);
    const std::size_t period = std::lcm(pa.size(), pb.size());
    std::vector<Rational> out(period);
    for (std::size_t k = 0; k < period; ++k) out[k] = op(pa[k % pa.size()], pb[k % pb.size()]);
    return SeqNumber::periodic(std::move(out));
  }

  const std::uint64_t start = std::max(a.start_index(), b.start_index());
  const std::uint64_t horizon = std::max(a.probe_horizon(), b.probe_horizon());
  return SeqNumber::opaque([a, b, op](std::uint64_t n) { return Real(op(a.value(n), b.value(n))); }, horizon, start);
}

}  // namespace

SeqNumber SeqNumber::symbolic(RationalFunction generator) {
  SeqNumber s;
  s.kind_ = Kind::Symbolic;
  s.start_ = static_cast<std::uint64_t>(largest_positive_integer_root(generator.denominator())) + 1;
  s.gen_ = std::move(generator);
  return s;
}

SeqNumber SeqNumber::constant(const Rational& c) { return symbolic(RationalFunction(P(c))); }

SeqNumber SeqNumber::periodic(std::vector<Rational> pattern) {
  if (pattern.empty()) throw Error(ErrorCode::DomainError, "empty periodic pattern");
  SeqNumber s;
  s.kind_ = Kind::Periodic;
  s.pattern_ = std::move(pattern);
  return s;
}

SeqNumber SeqNumber::opaque(Closure f, std::uint64_t probe_horizon, std::uint64_t start) {
  if (!f) throw Error(ErrorCode::DomainError, "opaque sequence needs a closure");
  if (probe_horizon < start + 3) throw Error(ErrorCode::DomainError, "probe horizon too short");
  SeqNumber s;
  s.kind_ = Kind::Opaque;
  s.closure_ = std::move(f);
  s.horizon_ = probe_horizon;
  s.start_ = start;
  return s;
}

SeqNumber SeqNumber::parse(std::string_view text) {
  return symbolic(lang::to_rational_function(*lang::parse_expr(text), "n"));
}

const RationalFunction& SeqNumber::generator() const {
  if (kind_ != Kind::Symbolic) throw Error(ErrorCode::DomainError, "sequence has no symbolic generator");
  return gen_;
}

const std::vector<Rational>& SeqNumber::pattern() const {
  if (kind_ != Kind::Periodic) throw Error(ErrorCode::DomainError, "sequence is not periodic");
  return pattern_;
}

Real SeqNumber::value(std::uint64_t n) const {
  if (n < start_) throw Error(ErrorCode::DomainError, "sequence index below its start index");
  switch (kind_) {
    case Kind::Symbolic: return to_real(gen_(Rational(n)));
    case Kind::Periodic: return to_real(pattern_[(n - 1) % pattern_.size()]);
    case Kind::Opaque: return closure_(n);
  }
  return Real(0);
}

SeqNumber operator+(const SeqNumber& a, const SeqNumber& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}

SeqNumber operator*(const SeqNumber& a, const SeqNumber& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}

SeqNumber SeqNumber::operator-() const { return SeqNumber::constant(Rational(-1)) * *this; }

SeqNumber operator-(const SeqNumber& a, const SeqNumber& b) { return a + (-b); }

SeqNumber seq_add(const SeqNumber& a, const SeqNumber& b) { return a + b; }
SeqNumber seq_mul(const SeqNumber& a, const SeqNumber& b) { return a * b; }

Answer in_ideal(const SeqNumber& a, Ideal which) {
  switch (a.kind()) {
    case SeqNumber::Kind::Symbolic: {
      const auto& g = a.generator();
      if (g.is_zero()) return Answer::Yes;
      if (which == Ideal::EventuallyZero) return Answer::No;
      return g.numerator().degree() < g.denominator().degree() ? Answer::Yes : Answer::No;
    }
    case SeqNumber::Kind::Periodic: {
      for (const auto& x : a.pattern())
        if (x != 0) return Answer::No;
      return Answer::Yes;
    }
    case SeqNumber::Kind::Opaque: break;
  }

  const std::uint64_t first = a.start_index(), last = a.probe_horizon();
  const std::uint64_t quarter = std::max<std::uint64_t>(1, (last - first + 1) / 4);
  Real head = 0, tail = 0;
  for (std::uint64_t n = first; n < first + quarter; ++n) head = max(head, Real(abs(a.value(n))));
  for (std::uint64_t n = last - quarter + 1; n <= last; ++n) tail = max(tail, Real(abs(a.value(n))));

  if (which == Ideal::EventuallyZero) return tail != 0 ? Answer::No : Answer::Unknown;
  if (tail != 0 && tail * 2 >= head) return Answer::No;
  return Answer::Unknown;
}

Answer equals_mod(const SeqNumber& a, const SeqNumber& b, Ideal which) { return in_ideal(a - b, which); }

std::pair<SeqNumber, SeqNumber> zero_divisor_witness() {
  return {SeqNumber::periodic({Rational(1), Rational(0)}), SeqNumber::periodic({Rational(0), Rational(1)})};
}

Limit seq_standard_part(const SeqNumber& a) {
  Limit out;
  switch (a.kind()) {
    case SeqNumber::Kind::Symbolic: {
      const auto& g = a.generator();
      const int dn = g.numerator().degree(), dd = g.denominator().degree();
      if (dn > dd) throw Error(ErrorCode::NotConvergent, "numerator degree exceeds denominator degree (Infinite)");
      out.exact = true;
      out.exact_value = (g.is_zero() || dn < dd) ? Rational(0) : Rational(g.numerator().leading() / g.denominator().leading());
      out.value = to_real(out.exact_value);
      return out;
    }
    case SeqNumber::Kind::Periodic: {
      const auto& p = a.pattern();
      for (const auto& x : p)
        if (x != p.front()) throw Error(ErrorCode::NotConvergent, "non-constant periodic sequence");
      out.exact = true;
      out.exact_value = p.front();
      out.value = to_real(out.exact_value);
      return out;
    }
    case SeqNumber::Kind::Opaque: break;
  }
  out.value = a.value(a.probe_horizon());
  return out;
}

SeqNumber at_reciprocal_index(const std::vector<std::pair<std::int64_t, Rational>>& terms) {
  RationalFunction sum;
  for (const auto& [q, c] : terms) {
    if (q >= 0) sum = sum + RationalFunction(P(c), P::monomial(static_cast<std::size_t>(q)));
    else sum = sum + RationalFunction(P::monomial(static_cast<std::size_t>(-q), c));
  }
  return SeqNumber::symbolic(std::move(sum));
}

}  // namespace hyperdelta::seq
