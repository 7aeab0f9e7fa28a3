#include "commands.hpp"

#include "args.hpp"

#include <hyperdelta/kernels.hpp>
#include <hyperdelta/lang/eval.hpp>
#include <hyperdelta/lang/expr.hpp>
#include <hyperdelta/lang/printer.hpp>
#include <hyperdelta/mvt.hpp>
#include <hyperdelta/oracle/pendulum.hpp>
#include <hyperdelta/oracle/quadrature.hpp>
#include <hyperdelta/oracle/shadows.hpp>
#include <hyperdelta/seqring.hpp>
#include <hyperdelta/serialize.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace hyperdelta::cli {

using nlohmann::json;

namespace {

std::string dec(const Real& x) { return to_decimal(x, settings().digits); }

// Doubles print exactly as they appear in JSON.
std::string dbl(double x) { return json(x).dump(); }

std::string text(const SeriesNumber& s) { return lang::format_series(s, settings().digits); }

json exponent_json(const Exponent& q) { return {q.numerator(), q.denominator()}; }

TestFunction parse_function(const std::string& source, std::string_view flag) {
  try {
    return TestFunction::parse(source);
  } catch (const Error& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

oracle::RealFunction as_double(const TestFunction& f) {
  return [f](double x) { return to_double(f.value(Real(x))); };
}

std::vector<std::pair<double, double>> sample(double lo, double hi, int n, const std::function<double(double)>& g) {
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i <= n; ++i) {
    const double x = lo + (hi - lo) * i / n;
    pts.emplace_back(x, g(x));
  }
  return pts;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string exponent_text(const std::optional<Exponent>& q) { return q ? to_string(*q) : "none (exact zero)"; }

}  // namespace

Output run_eval(const EvalOptions& o) {
  const auto expr = lang::parse_expr(o.expr);
  const lang::Value v = lang::evaluate(*expr);
  Output out;
  out.doc = {{"expr", o.expr}};
  if (const auto* c = std::get_if<Classification>(&v)) {
    out.doc["classification"] = std::string(to_string(*c));
    out.human = std::string(to_string(*c)) + "\n";
    return out;
  }
  const auto& s = std::get<SeriesNumber>(v);
  out.doc["value"] = to_json(s);
  out.doc["text"] = text(s);
  out.doc["classification"] = std::string(to_string(classify(s)));
  std::ostringstream h;
  h << text(s) << "\n";
  h << "classification: " << to_string(classify(s)) << "\n";
  if (is_finite(s)) {
    const Complex st = complex_standard_part(s);
    if (s.is_real()) {
      out.doc["st"] = to_double(st.re);
      out.doc["st_decimal"] = dec(st.re);
      h << "st: " << dec(st.re) << "\n";
    } else {
      out.doc["st_complex"] = {dec(st.re), dec(st.im)};
      h << "st: " << dec(st.re) << " + " << dec(st.im) << "*i\n";
    }
  }
  out.human = h.str();
  return out;
}

Output run_sift(const SiftOptions& o) {
  const TestFunction f = parse_function(o.f, "--f");
  if (f.kind() == TestFunction::Kind::Rational) throw UsageError("--f: sift takes 'poly:' or 'trig:' functions");
  const Real a = parse_real(o.a, "--a");
  const SeriesNumber alpha = eta_power(o.alpha_exp, "--alpha-exp");
  if (!o.eps.empty() && !o.eps_exp.empty()) throw UsageError("--eps and --eps-exp are exclusive");
  SeriesNumber eps;
  if (!o.eps.empty()) {
    const Real e = parse_real(o.eps, "--eps");
    if (e <= 0) throw UsageError("--eps: half-width must be positive");
    eps = SeriesNumber(e);
  } else {
    eps = eta_power(o.eps_exp.empty() ? "1/2" : o.eps_exp, "--eps-exp");
  }

  const kernels::SiftReport r = kernels::sift(f, a, alpha, eps);
  Output out;
  out.doc = to_json(r);
  out.doc["f"] = f.description();
  out.doc["a"] = dec(a);
  out.doc["alpha"] = to_json(alpha);
  out.doc["eps"] = to_json(eps);

  std::ostringstream h;
  h << "value:     " << text(r.value) << "\n"
    << "st:        " << dec(r.st) << "\n"
    << "expected:  " << dec(r.expected) << "\n"
    << "T = eps/alpha: " << to_string(r.ratio_class) << "\n"
    << "laugwitz:  " << yes_no(r.laugwitz_ok) << "\n"
    << "residual leading exponent: " << exponent_text(r.residual_leading_exponent) << "\n";

  if (o.oracle) {
    // Numeric shadow at eta = 1e-8.
    const double eta = 1e-8;
    const double alpha_r = std::pow(eta, to_double(to_real(alpha.leading_exponent())));
    const double eps_r = o.eps.empty() ? std::pow(eta, to_double(to_real(eps.leading_exponent())))
                                       : to_double(standard_part(eps));
    const double value = oracle::sift_integral(as_double(f), to_double(a), alpha_r, eps_r);
    const double st = to_double(r.st);
    const double err = st == 0 ? std::abs(value) : std::abs(value - st) / std::abs(st);
    out.doc["oracle"] = {{"eta", eta}, {"alpha", alpha_r}, {"eps", eps_r}, {"value", value},
                         {"deviation", err}, {"deviation_kind", st == 0 ? "absolute" : "relative"}};
    h << "oracle at eta=1e-8: " << dbl(value) << " (" << (st == 0 ? "absolute" : "relative") << " deviation "
      << dbl(err) << ")\n";
  }
  out.human = h.str();

  svg::Plot plot{"Cauchy kernel F(mu) alpha/(alpha^2+(mu-a)^2), " + f.description(), "mu", "integrand", {}};
  const double ad = to_double(a);
  for (double al : {0.2, 0.1, 0.05}) {
    auto g = [&](double mu) { return to_double(f.value(Real(mu))) * al / (al * al + (mu - ad) * (mu - ad)); };
    plot.series.push_back({"alpha = " + dbl(al), sample(ad - 1, ad + 1, 400, g)});
  }
  out.plot = plot;
  return out;
}

Output run_sokhotski(const SokhotskiOptions& o) {
  const TestFunction phi = parse_function(o.phi, "--phi");
  if (phi.kind() != TestFunction::Kind::Rational) throw UsageError("--phi: sokhotski takes 'rat:' functions");
  const SeriesNumber alpha = eta_power(o.alpha_exp, "--alpha-exp");
  const kernels::SokhotskiReport r = kernels::sokhotski(phi, alpha);
  const Real expected_delta = -pi() * r.phi_at_zero;

  Output out;
  out.doc = {{"phi", phi.description()},
             {"alpha", to_json(alpha)},
             {"value", to_json(r.value)},
             {"st", {{"re", to_double(r.st.re)}, {"im", to_double(r.st.im)}}},
             {"pv_part", to_double(r.pv_part)},
             {"pv_part_decimal", dec(r.pv_part)},
             {"delta_part", to_double(r.delta_part)},
             {"delta_part_decimal", dec(r.delta_part)},
             {"phi_at_zero", to_double(r.phi_at_zero)},
             {"expected_delta_part", to_double(expected_delta)},
             {"pv_oracle", r.pv_oracle},
             {"delta_ok", r.delta_ok},
             {"pv_ok", r.pv_ok}};
  std::ostringstream h;
  h << "value:      " << text(r.value) << "\n"
    << "pv part:    " << dec(r.pv_part) << "  (oracle " << dbl(r.pv_oracle) << ", " << (r.pv_ok ? "agrees" : "DISAGREES")
    << ")\n"
    << "delta part: " << dec(r.delta_part) << "  (-pi*phi(0) = " << dec(expected_delta) << ", "
    << (r.delta_ok ? "agrees" : "DISAGREES") << ")\n";
  out.human = h.str();

  const double al = 0.1;
  auto phi_d = as_double(phi);
  svg::Plot plot{"phi(x)/(x + i alpha), alpha = 0.1, " + phi.description(), "x", "value", {}};
  plot.series.push_back({"Re", sample(-4, 4, 800, [&](double x) { return phi_d(x) * x / (x * x + al * al); })});
  plot.series.push_back({"Im", sample(-4, 4, 800, [&](double x) { return -phi_d(x) * al / (x * x + al * al); })});
  out.plot = plot;
  return out;
}

Output run_fourier(const FourierOptions& o) {
  const Real x = parse_real(o.x, "--x");
  const Real mu = parse_real(o.mu, "--mu");
  const SeriesNumber eps = eta_power(o.eps_exp, "--eps-exp");
  const SeriesNumber k = kernels::fourier_kernel(x, mu, eps);
  const SeriesNumber direct = kernels::fourier_kernel_direct(x, mu, eps);
  const bool agree = approx_equal(k, direct, settings().tolerance);

  Output out;
  out.doc = {{"x", dec(x)},
             {"mu", dec(mu)},
             {"eps", to_json(eps)},
             {"kernel", to_json(k)},
             {"kernel_text", text(k)},
             {"classification", std::string(to_string(classify(k)))},
             {"direct_agrees", agree}};
  std::ostringstream h;
  h << "kernel:         " << text(k) << "\n"
    << "classification: " << to_string(classify(k)) << "\n"
    << "direct complex evaluation agrees: " << yes_no(agree) << "\n";
  if (!o.f_at_x.empty()) {
    const Real fx = parse_real(o.f_at_x, "--f-at-x");
    const SeriesNumber red = kernels::fourier_reduced_integral(fx, x, eps);
    const Real st = standard_part(red);
    const Real expected = 2 * pi() * fx;
    out.doc["reduced"] = {{"value", to_json(red)},          {"st", to_double(st)},
                          {"st_decimal", dec(st)},          {"expected", to_double(expected)},
                          {"expected_decimal", dec(expected)}};
    h << "reduced integral: " << text(red) << "\n"
      << "st:               " << dec(st) << "  (2*pi*f(x) = " << dec(expected) << ")\n";
  }
  out.human = h.str();

  svg::Plot plot{"Fourier kernel at real eps", "x - mu", "kernel", {}};
  for (double e : {0.3, 0.1, 0.03}) {
    auto g = [e](double d) { return to_double(kernels::fourier_kernel_value(Real(d), Real(e))); };
    plot.series.push_back({"eps = " + dbl(e), sample(-M_PI, M_PI, 600, g)});
  }
  out.plot = plot;
  return out;
}

Output run_heaviside(const HeavisideOptions& o) {
  const SeriesNumber alpha = eta_power(o.alpha_exp, "--alpha-exp");
  std::vector<std::string> xs = o.x;
  if (xs.empty()) xs = {"-2", "-1", "-0.5", "-0.1", "0", "0.1", "0.5", "1", "2"};

  Output out;
  Table table{{"x", "st", "unit_step", "on_zigzag"}, {}};
  json samples = json::array();
  std::vector<Real> reals;
  std::ostringstream h;
  for (const auto& s : xs) {
    const Real x = parse_real(s, "--x");
    reals.push_back(x);
    const Real st = kernels::heaviside_st(x, alpha);
    const Real unit = kernels::to_unit_step(st);
    const bool on = kernels::on_zigzag(x, st);
    samples.push_back({{"x", to_double(x)},
                       {"x_decimal", dec(x)},
                       {"st", to_double(st)},
                       {"st_decimal", dec(st)},
                       {"unit_step", to_double(unit)},
                       {"unit_step_decimal", dec(unit)},
                       {"on_zigzag", on}});
    table.rows.push_back({dec(x), dec(st), dec(unit), yes_no(on)});
    h << "x = " << dec(x) << "  st(arctan(x/alpha)) = " << dec(st) << "  unit step = " << dec(unit) << "\n";
  }
  const bool ok = kernels::zigzag_check(reals, alpha);
  const kernels::PiMultiple mass = kernels::kernel_mass(alpha);
  out.doc = {{"alpha", to_json(alpha)},
             {"samples", samples},
             {"zigzag_ok", ok},
             {"mass", {{"pi_multiple", exponent_json(mass.multiple)}, {"value", to_double(mass.value())}}}};
  h << "zigzag: " << (ok ? "all samples on Z" : "OFF the zigzag") << "\n"
    << "integral of alpha/(alpha^2+x^2) over R = " << to_string(mass.multiple) << "*pi\n";
  out.human = h.str();
  out.table = table;

  svg::Plot plot{"arctan(x/alpha) and the zigzag Z", "x", "y", {}};
  for (double al : {0.3, 0.1, 0.03})
    plot.series.push_back({"alpha = " + dbl(al), sample(-2, 2, 800, [al](double x) { return std::atan(x / al); })});
  plot.series.push_back({"Z", {{-2, -M_PI / 2}, {0, -M_PI / 2}, {0, M_PI / 2}, {2, M_PI / 2}}, true});
  out.plot = plot;
  return out;
}

Output run_dirac(const DiracOptions& o) {
  const SeriesNumber alpha = eta_power(o.alpha_exp, "--alpha-exp");
  const TestFunction f = parse_function(o.f, "--f");
  if (f.kind() == TestFunction::Kind::Rational) throw UsageError("--f: dirac takes 'poly:' or 'trig:' functions");
  std::vector<std::string> ps = o.probes;
  if (ps.empty()) ps = {"-10", "-1", "-0.1", "0.1", "1", "10"};
  std::vector<Real> probes;
  for (const auto& p : ps) probes.push_back(parse_real(p, "--probe"));

  const kernels::DiracReport r = kernels::dirac_conditions(alpha, f, probes);
  Output out;
  json pj = json::array();
  Table table{{"x", "classification"}, {}};
  for (const auto& [x, k] : r.probes) {
    pj.push_back({{"x", to_double(x)}, {"classification", std::string(to_string(k))}});
    table.rows.push_back({dec(x), std::string(to_string(k))});
  }
  const Real window_st = standard_part(r.unit_window_mass);
  out.doc = {{"alpha", to_json(alpha)},
             {"f", f.description()},
             {"mass", exponent_json(r.mass)},
             {"mass_ok", r.mass_ok},
             {"unit_window_mass", {{"value", to_json(r.unit_window_mass)}, {"st", to_double(window_st)}}},
             {"probes", pj},
             {"locality_ok", r.locality_ok},
             {"sifting", to_json(r.sifting)},
             {"f_at_zero", to_double(r.f_at_zero)},
             {"sift_st", to_double(r.sift_st)},
             {"sift_st_decimal", dec(r.sift_st)},
             {"sifting_ok", r.sifting_ok}};
  std::ostringstream h;
  h << "mass over R:       " << to_string(r.mass) << (r.mass_ok ? "  (exactly 1)" : "  (NOT 1)") << "\n"
    << "mass over [-1, 1]: " << text(r.unit_window_mass) << "\n";
  for (const auto& [x, k] : r.probes) h << "delta(" << dec(x) << "): " << to_string(k) << "\n";
  h << "sifting st:        " << dec(r.sift_st) << "  (f(0) = " << dec(r.f_at_zero) << ", "
    << (r.sifting_ok ? "equal" : "DIFFERENT") << ")\n";
  out.human = h.str();
  out.table = table;

  svg::Plot plot{"normalized Cauchy kernel (1/pi) alpha/(alpha^2+x^2)", "x", "delta_alpha(x)", {}};
  for (double al : {0.2, 0.1, 0.05})
    plot.series.push_back(
        {"alpha = " + dbl(al), sample(-1, 1, 600, [al](double x) { return al / (al * al + x * x) / M_PI; })});
  out.plot = plot;
  return out;
}

Output run_mvt(const MvtOptions& o) {
  const TestFunction p = parse_function(o.p, "--p");
  if (p.kind() != TestFunction::Kind::Polynomial) throw UsageError("--p: mvt takes 'poly:' functions");
  const Real x0 = parse_real(o.x0, "--x0");
  const SeriesNumber h = eta_power(o.h_exp, "--h-exp");
  const MvtSolution sol = mvt_theta(p.as_polynomial(), x0, h);
  const Real st = standard_part(sol.theta);
  const auto residual_order = order_of(sol.residual);

  Output out;
  out.doc = {{"p", p.description()},
             {"x0", dec(x0)},
             {"h", to_json(h)},
             {"theta", to_json(sol.theta)},
             {"theta_text", text(sol.theta)},
             {"st", to_double(st)},
             {"st_decimal", dec(st)},
             {"degenerate", sol.degenerate},
             {"iterations", sol.iterations},
             {"residual", to_json(sol.residual)},
             {"residual_leading_exponent", to_json(residual_order)}};
  std::ostringstream hs;
  hs << "theta:    " << text(sol.theta) << "\n"
     << "st:       " << dec(st) << "\n"
     << "degenerate: " << yes_no(sol.degenerate) << "  iterations: " << sol.iterations << "\n"
     << "residual leading exponent: " << exponent_text(residual_order) << "\n";
  out.human = hs.str();
  return out;
}

namespace {

seq::Ideal parse_ideal(const std::string& s) {
  if (s == "ez" || s == "F_ez") return seq::Ideal::EventuallyZero;
  if (s == "null" || s == "F_null") return seq::Ideal::Null;
  throw UsageError("--ideal: expected 'ez' or 'null', got '" + s + "'");
}

seq::SeqNumber parse_sequence(const std::string& s, std::string_view flag) {
  try {
    return seq::SeqNumber::parse(s);
  } catch (const Error& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

std::string rational_text(const Rational& q) { return q.str(); }

}  // namespace

Output run_seq(const SeqOptions& o) {
  Output out;
  std::ostringstream h;
  if (o.witness) {
    const auto [e, d] = seq::zero_divisor_witness();
    const seq::Answer product = seq::in_ideal(e * d, seq::Ideal::EventuallyZero);
    const seq::Answer first = seq::in_ideal(e, seq::Ideal::EventuallyZero);
    const seq::Answer second = seq::in_ideal(d, seq::Ideal::EventuallyZero);
    const seq::Answer sum = seq::equals_mod(e + d, seq::SeqNumber::constant(1), seq::Ideal::Null);
    const bool ok = product == seq::Answer::Yes && first == seq::Answer::No && second == seq::Answer::No &&
                    sum == seq::Answer::Yes;
    out.doc = {{"witness",
                {{"a", "(1, 0, 1, 0, ...)"},
                 {"b", "(0, 1, 0, 1, ...)"},
                 {"product_in_ez", std::string(to_string(product))},
                 {"a_in_ez", std::string(to_string(first))},
                 {"b_in_ez", std::string(to_string(second))},
                 {"sum_equals_one_mod_null", std::string(to_string(sum))},
                 {"ok", ok}}}};
    h << "a = (1, 0, 1, 0, ...), b = (0, 1, 0, 1, ...)\n"
      << "a*b in F_ez: " << to_string(product) << "\n"
      << "a in F_ez: " << to_string(first) << ", b in F_ez: " << to_string(second) << "\n"
      << "a + b = 1 mod F_null: " << to_string(sum) << "\n"
      << (ok ? "zero divisors: the quotient is not a field\n" : "witness FAILED\n");
    out.human = h.str();
    return out;
  }
  if (o.gen.empty()) throw UsageError("seq: --gen is required unless --witness is given");
  const seq::SeqNumber s = parse_sequence(o.gen, "--gen");
  out.doc["generator"] = to_string(s.generator(), "n");

  if (!o.equals.empty()) {
    if (o.ideal.empty()) throw UsageError("--equals needs --ideal");
    const seq::SeqNumber b = parse_sequence(o.equals, "--equals");
    const seq::Answer ans = seq::equals_mod(s, b, parse_ideal(o.ideal));
    out.doc["equals"] = to_string(b.generator(), "n");
    out.doc["ideal"] = std::string(to_string(parse_ideal(o.ideal)));
    out.doc["equals_mod"] = std::string(to_string(ans));
    out.human = std::string(to_string(ans)) + "\n";
    return out;
  }
  if (!o.ideal.empty() && !o.st) {
    const seq::Answer ans = seq::in_ideal(s, parse_ideal(o.ideal));
    out.doc["ideal"] = std::string(to_string(parse_ideal(o.ideal)));
    out.doc["in_ideal"] = std::string(to_string(ans));
    out.human = std::string(to_string(ans)) + "\n";
    return out;
  }
  if (o.st) {
    const seq::Limit l = seq::seq_standard_part(s);  // NotConvergent exits 1
    out.doc["st"] = {{"value", to_double(l.value)}, {"decimal", dec(l.value)}, {"exact", rational_text(l.exact_value)}};
    out.human = (l.exact ? rational_text(l.exact_value) : dec(l.value)) + "\n";
    return out;
  }
  const seq::Answer ez = seq::in_ideal(s, seq::Ideal::EventuallyZero);
  const seq::Answer null = seq::in_ideal(s, seq::Ideal::Null);
  out.doc["in_ez"] = std::string(to_string(ez));
  out.doc["in_null"] = std::string(to_string(null));
  h << "generator: " << to_string(s.generator(), "n") << "\n"
    << "in F_ez: " << to_string(ez) << "\nin F_null: " << to_string(null) << "\n";
  try {
    const seq::Limit l = seq::seq_standard_part(s);
    out.doc["st"] = {{"value", to_double(l.value)}, {"decimal", dec(l.value)}, {"exact", rational_text(l.exact_value)}};
    h << "st: " << rational_text(l.exact_value) << "\n";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotConvergent) throw;
    out.doc["st"] = nullptr;
    h << "st: does not converge\n";
  }
  out.human = h.str();
  return out;
}

Output run_pendulum(const PendulumOptions& o) {
  std::vector<oracle::PendulumModel> models;
  if (o.model == "linear") models = {oracle::PendulumModel::Linear};
  else if (o.model == "nonlinear") models = {oracle::PendulumModel::Nonlinear};
  else if (o.model == "both") models = {oracle::PendulumModel::Linear, oracle::PendulumModel::Nonlinear};
  else throw UsageError("--model: expected linear, nonlinear or both");
  std::vector<double> cs = o.amplitudes;
  if (cs.empty()) cs = {0.5};

  Output out;
  Table table{{"model", "C", "dt", "period"}, {}};
  json runs = json::array();
  std::ostringstream h;
  svg::Plot plot{"pendulum phi(t)", "t [s]", "phi [rad]", {}};
  double t0 = 0;
  for (auto model : models) {
    for (double c : cs) {
      oracle::PendulumRun run{o.g, o.length, c, o.dt, model};
      const double period = oracle::pendulum_period(run);
      t0 = oracle::linear_period(run);
      const double ratio = period / t0;
      runs.push_back({{"model", std::string(to_string(model))},
                      {"C", c},
                      {"dt", o.dt},
                      {"period", period},
                      {"period_ratio", ratio}});
      table.rows.push_back({std::string(to_string(model)), dbl(c), dbl(o.dt), dbl(period)});
      h << to_string(model) << " C=" << dbl(c) << ": period " << dbl(period) << " s, ratio to 2*pi*sqrt(l/g) "
        << dbl(ratio) << "\n";
      plot.series.push_back({std::string(to_string(model)) + " C=" + dbl(c), oracle::pendulum_trace(run, 2 * t0),
                             model == oracle::PendulumModel::Linear});
    }
  }
  out.doc = {{"g", o.g}, {"length", o.length}, {"linear_period", t0}, {"runs", runs}};
  if (runs.size() == 1) {
    out.doc["period"] = runs[0]["period"];
    out.doc["period_ratio"] = runs[0]["period_ratio"];
  }
  h << "2*pi*sqrt(l/g) = " << dbl(t0) << " s\n";
  out.human = h.str();
  out.table = table;
  out.plot = plot;
  return out;
}

namespace {

double parse_bound(const std::string& s) {
  if (s == "inf" || s == "+inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  return to_double(parse_real(s, "bound"));
}

struct CorpusEntry {
  std::string function;
  double a = 0, b = 0;
  std::optional<double> pole;
};

// "[pv@C ]<test function> on [a,b]"
CorpusEntry parse_description(const std::string& d) {
  CorpusEntry e;
  std::string rest = d;
  if (rest.rfind("pv@", 0) == 0) {
    const auto space = rest.find(' ');
    if (space == std::string::npos) throw UsageError("corpus: malformed pv prefix in '" + d + "'");
    e.pole = to_double(parse_real(rest.substr(3, space - 3), "pv pole"));
    rest = rest.substr(space + 1);
  }
  const auto on = rest.rfind(" on [");
  const auto comma = rest.find(',', on == std::string::npos ? 0 : on);
  if (on == std::string::npos || comma == std::string::npos || rest.back() != ']')
    throw UsageError("corpus: expected '<function> on [a,b]', got '" + d + "'");
  e.function = rest.substr(0, on);
  e.a = parse_bound(rest.substr(on + 5, comma - on - 5));
  e.b = parse_bound(rest.substr(comma + 1, rest.size() - comma - 2));
  return e;
}

double run_entry(const CorpusEntry& e, double tol) {
  const TestFunction f = parse_function(e.function, "corpus");
  const auto g = as_double(f);
  if (e.pole) {
    const double c = *e.pole;
    // f is declared with its pole at c; the PV oracle takes f itself.
    return oracle::pv_integrate(g, c, e.a, e.b, tol).value;
  }
  return oracle::integrate(g, e.a, e.b, tol).value;
}

}  // namespace

Output run_oracle(const OracleOptions& o) {
  Output out;
  std::ostringstream h;
  if (!o.corpus.empty()) {
    std::ifstream in(o.corpus);
    if (!in) throw UsageError("--corpus: cannot open " + o.corpus);
    auto rows = csv::read(in);
    if (!rows.empty() && !rows.front().empty() && rows.front().front() == "description") rows.erase(rows.begin());
    Table table{{"description", "closed_form_value", "tolerance", "computed", "error", "pass"}, {}};
    json entries = json::array();
    int passed = 0;
    for (const auto& row : rows) {
      if (row.size() != 3) throw UsageError("--corpus: every row needs description,closed_form_value,tolerance");
      const CorpusEntry e = parse_description(row[0]);
      const double closed = to_double(parse_real(row[1], "closed_form_value"));
      const double tol = std::stod(row[2]);
      const double value = run_entry(e, std::min(tol / 10, 1e-10));
      const double err = std::abs(value - closed);
      const bool pass = err <= tol * std::max(1.0, std::abs(closed));
      passed += pass;
      entries.push_back({{"description", row[0]},
                         {"closed_form_value", closed},
                         {"tolerance", tol},
                         {"computed", value},
                         {"error", err},
                         {"pass", pass}});
      table.rows.push_back({row[0], dbl(closed), dbl(tol), dbl(value), dbl(err), yes_no(pass)});
      h << (pass ? "PASS " : "FAIL ") << row[0] << ": " << dbl(value) << " vs " << dbl(closed) << " (error "
        << dbl(err) << ")\n";
    }
    out.doc = {{"entries", entries},
               {"passed", passed},
               {"total", static_cast<int>(rows.size())},
               {"all_passed", passed == static_cast<int>(rows.size())}};
    h << passed << "/" << rows.size() << " corpus entries passed\n";
    out.human = h.str();
    out.table = table;
    return out;
  }
  if (o.f.empty()) throw UsageError("oracle: give --corpus or --f");
  const TestFunction f = parse_function(o.f, "--f");

  if (o.extrapolate) {
    const double a = to_double(parse_real(o.center, "--center"));
    const auto g = as_double(f);
    const double p = o.eps_power;
    if (!(p > 0)) throw UsageError("--eps-power must be positive");
    auto family = [&](double alpha) { return oracle::sift_integral(g, a, alpha, std::pow(alpha, p)); };
    const auto ladder = oracle::geometric_ladder(o.ladder_start, o.ladder_ratio, o.ladder_count);
    // The truncation error is O(1/T) = O(alpha^(1-p)) for a wide window.
    const double order = p < 1 ? 1 - p : 1.0;
    const auto ex = oracle::alpha_extrapolate(family, ladder, order);
    json values = json::array();
    for (double al : ladder) values.push_back(family(al));
    out.doc = {{"f", f.description()},     {"center", a},        {"eps_power", p},
               {"ladder", ladder},         {"values", values},   {"order", order},
               {"limit", ex.value},        {"error_estimate", ex.error_estimate}};
    h << "extrapolated limit: " << dbl(ex.value) << " (error estimate " << dbl(ex.error_estimate) << ")\n";
    out.human = h.str();
    return out;
  }

  CorpusEntry e;
  e.function = o.f;
  e.a = o.a.empty() ? -INFINITY : parse_bound(o.a);
  e.b = o.b.empty() ? INFINITY : parse_bound(o.b);
  if (!o.pv.empty()) e.pole = to_double(parse_real(o.pv, "--pv"));
  const auto g = as_double(f);
  const auto r = e.pole ? oracle::pv_integrate(g, *e.pole, e.a, e.b, o.tol) : oracle::integrate(g, e.a, e.b, o.tol);
  out.doc = {{"f", f.description()}, {"a", e.a}, {"b", e.b}, {"value", r.value},
             {"error_estimate", r.error_estimate}, {"evaluations", r.evaluations}};
  if (e.pole) out.doc["pv"] = *e.pole;
  h << dbl(r.value) << "  (error estimate " << dbl(r.error_estimate) << ", " << r.evaluations << " evaluations)\n";
  out.human = h.str();
  return out;
}

}  // namespace hyperdelta::cli
