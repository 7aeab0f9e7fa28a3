// hyperdelta: command-line front end for the series engine, the delta
// kernels and the numeric oracle.
//
// Exit codes: 0 success, 1 computation error, 2 usage error.

#include "args.hpp"
#include "commands.hpp"

#include <hyperdelta/error.hpp>
#include <hyperdelta/scalar.hpp>

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <map>
#include <set>

using namespace hyperdelta;
using namespace hyperdelta::cli;

namespace {

void flatten(const nlohmann::json& j, const std::string& prefix, std::vector<csv::Row>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), rows);
  } else {
    rows.push_back({prefix, j.is_string() ? j.get<std::string>() : j.dump()});
  }
}

void emit_csv(const Output& out) {
  if (out.table) {
    csv::write_row(std::cout, out.table->header);
    for (const auto& r : out.table->rows) csv::write_row(std::cout, r);
    return;
  }
  std::vector<csv::Row> rows;
  flatten(out.doc, "", rows);
  csv::write_row(std::cout, {"key", "value"});
  for (const auto& r : rows) csv::write_row(std::cout, r);
}

int fail(bool json, int code, std::string_view kind, const std::string& message) {
  std::cerr << "hyperdelta: " << message << "\n";
  if (json) std::cout << nlohmann::json{{"error", {{"code", kind}, {"message", message}}}}.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated power series in an infinitesimal eta, delta kernels and a numeric oracle", "hyperdelta"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();

  bool json = false, csv_mode = false;
  std::string plot_path, trunc = "8";
  unsigned precision = 40;
  auto* json_flag = app.add_flag("--json", json, "Emit one JSON document on stdout");
  app.add_flag("--csv", csv_mode, "Emit CSV on stdout")->excludes(json_flag);
  app.add_option("--plot", plot_path, "Write a static SVG plot to PATH")->type_name("PATH");
  app.add_option("--precision", precision, "Significant decimal digits of coefficients (>= 16)")
      ->type_name("DIGITS")
      ->check(CLI::Range(16u, 100000u));
  app.add_option("--trunc", trunc, "Relative truncation order, a positive rational such as 8 or 17/2")
      ->type_name("ORDER");

  EvalOptions eval_o;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression in eta, e.g. 'st((1+eta)^2)'");
  eval->add_option("expr", eval_o.expr, "Expression over eta, i, pi with st, arctan, classify, exp, log, sin, cos, O")
      ->required();

  SiftOptions sift_o;
  auto* sift = app.add_subcommand("sift", "Cauchy sifting integral over a symmetric window");
  sift->add_option("--f", sift_o.f, "Test function, e.g. 'poly: 1 + 2*x - x^3' or 'trig: 1 + cos(x)'")->required();
  sift->add_option("--a", sift_o.a, "Window center (real)");
  sift->add_option("--alpha-exp", sift_o.alpha_exp, "alpha = eta^q");
  auto* eps_exp = sift->add_option("--eps-exp", sift_o.eps_exp, "Half-width eps = eta^q (default 1/2)");
  sift->add_option("--eps", sift_o.eps, "Half-width as an appreciable positive real")->excludes(eps_exp);
  sift->add_flag("--oracle", sift_o.oracle, "Also evaluate the integral numerically at eta = 1e-8");

  SokhotskiOptions sok_o;
  auto* sok = app.add_subcommand("sokhotski", "Integral of phi(x)/(x + i alpha) over R");
  sok->add_option("--phi", sok_o.phi, "Rational test function, e.g. 'rat: (1)/(1+x^2)'")->required();
  sok->add_option("--alpha-exp", sok_o.alpha_exp, "alpha = eta^q");

  FourierOptions four_o;
  auto* four = app.add_subcommand("fourier", "Cauchy's 1827 Fourier kernel and its reduced integral");
  four->add_option("--x", four_o.x, "Point x (real)")->required();
  four->add_option("--mu", four_o.mu, "Point mu (real)");
  four->add_option("--eps-exp", four_o.eps_exp, "eps = eta^q");
  four->add_option("--f-at-x", four_o.f_at_x, "f(x); also evaluates the reduced integral (needs 0 < x < 2 pi)");

  HeavisideOptions hv_o;
  auto* hv = app.add_subcommand("heaviside", "st(arctan(x/alpha)) and the zigzag Z");
  hv->add_option("--x", hv_o.x, "Sample points (repeatable; default a 9-point grid)");
  hv->add_option("--alpha-exp", hv_o.alpha_exp, "alpha = eta^q");

  DiracOptions dirac_o;
  auto* dirac = app.add_subcommand("dirac", "Dirac's conditions for the normalized Cauchy kernel");
  dirac->add_option("--alpha-exp", dirac_o.alpha_exp, "alpha = eta^q");
  dirac->add_option("--f", dirac_o.f, "Test function for the sifting check");
  dirac->add_option("--probe", dirac_o.probes, "Probe points (repeatable; default +-0.1, +-1, +-10)");

  MvtOptions mvt_o;
  auto* mvt = app.add_subcommand("mvt", "Mean value theorem parameter theta for an infinitesimal step");
  mvt->add_option("--p", mvt_o.p, "Polynomial, e.g. 'poly: x^3'")->required();
  mvt->add_option("--x0", mvt_o.x0, "Base point (real)");
  mvt->add_option("--h-exp", mvt_o.h_exp, "h = eta^q");

  SeqOptions seq_o;
  auto* seqc = app.add_subcommand("seq", "Sequence ring R^N modulo F_ez / F_null");
  seqc->add_option("--gen", seq_o.gen, "Rational generator in n, e.g. '(2*n^2+1)/(n^2)'");
  seqc->add_flag("--st", seq_o.st, "Print the standard part (the limit)");
  seqc->add_option("--ideal", seq_o.ideal, "Ideal for membership or --equals: ez | null");
  seqc->add_option("--equals", seq_o.equals, "Second generator for equality modulo --ideal");
  seqc->add_flag("--witness", seq_o.witness, "Show the zero-divisor witness");

  PendulumOptions pend_o;
  auto* pend = app.add_subcommand("pendulum", "Pendulum period by RK4, linear or nonlinear");
  pend->add_option("--C", pend_o.amplitudes, "Amplitude in radians (repeatable; default 0.5)");
  pend->add_option("--model", pend_o.model, "linear | nonlinear | both");
  pend->add_option("--dt", pend_o.dt, "Time step in seconds");
  pend->add_option("--g", pend_o.g, "Gravity in m/s^2");
  pend->add_option("--length", pend_o.length, "Length in m");

  OracleOptions or_o;
  auto* orc = app.add_subcommand("oracle", "Numeric quadrature, PV quadrature and alpha-extrapolation");
  orc->add_option("--corpus", or_o.corpus, "CSV of description,closed_form_value,tolerance");
  orc->add_option("--f", or_o.f, "Integrand as a test function");
  orc->add_option("--a", or_o.a, "Lower bound (real or -inf; default -inf)");
  orc->add_option("--b", or_o.b, "Upper bound (real or inf; default inf)");
  orc->add_option("--pv", or_o.pv, "Principal value about this pole");
  orc->add_option("--tol", or_o.tol, "Requested tolerance");
  orc->add_flag("--extrapolate", or_o.extrapolate, "Richardson-extrapolate the windowed sift of --f as alpha -> 0");
  orc->add_option("--center", or_o.center, "Sift window center");
  orc->add_option("--eps-power", or_o.eps_power, "Window half-width eps = alpha^p");
  orc->add_option("--ladder-start", or_o.ladder_start, "Largest alpha");
  orc->add_option("--ladder-ratio", or_o.ladder_ratio, "Ladder ratio");
  orc->add_option("--ladder-count", or_o.ladder_count, "Ladder length (>= 3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
    app.exit(e);
    return 2;
  }

  const std::set<CLI::App*> plottable{sift, sok, four, hv, dirac, pend};
  std::map<CLI::App*, std::function<Output()>> dispatch{
      {eval, [&] { return run_eval(eval_o); }},      {sift, [&] { return run_sift(sift_o); }},
      {sok, [&] { return run_sokhotski(sok_o); }},   {four, [&] { return run_fourier(four_o); }},
      {hv, [&] { return run_heaviside(hv_o); }},     {dirac, [&] { return run_dirac(dirac_o); }},
      {mvt, [&] { return run_mvt(mvt_o); }},         {seqc, [&] { return run_seq(seq_o); }},
      {pend, [&] { return run_pendulum(pend_o); }},  {orc, [&] { return run_oracle(or_o); }},
  };
  CLI::App* chosen = app.get_subcommands().front();

  try {
    const Exponent order = parse_exponent(trunc, "--trunc");
    if (order <= 0) throw UsageError("--trunc: order must be positive");
    configure(precision, order);
    if (!plot_path.empty() && !plottable.count(chosen))
      throw UsageError("--plot is not available for '" + chosen->get_name() + "'");
    const Output out = dispatch.at(chosen)();
    if (!plot_path.empty()) svg::write(*out.plot, plot_path);
    if (json) std::cout << out.doc.dump(2) << "\n";
    else if (csv_mode) emit_csv(out);
    else std::cout << out.human;
    return 0;
  } catch (const UsageError& e) {
    return fail(json, 2, "Usage", e.what());
  } catch (const Error& e) {
    // Malformed expressions are bad input, not failed computations.
    const bool usage = e.code() == ErrorCode::SyntaxError || e.code() == ErrorCode::NonRationalExponent;
    return fail(json, usage ? 2 : 1, to_string(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(json, 1, "Internal", e.what());
  }
}
