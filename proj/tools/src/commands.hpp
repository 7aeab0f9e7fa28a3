#pragma once

#include "csv.hpp"
#include "svg.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hyperdelta::cli {

struct Table {
  csv::Row header;
  std::vector<csv::Row> rows;
};

/// What a subcommand produced. Every mode renders from the same values.
struct Output {
  nlohmann::json doc;
  std::string human;
  std::optional<Table> table;  // CSV form; key,value pairs of doc otherwise
  std::optional<svg::Plot> plot;
};

struct EvalOptions {
  std::string expr;
};

struct SiftOptions {
  std::string f;
  std::string a = "0";
  std::string alpha_exp = "1";
  std::string eps_exp;  // eps = eta^q
  std::string eps;      // or an appreciable real
  bool oracle = false;
};

struct SokhotskiOptions {
  std::string phi;
  std::string alpha_exp = "1";
};

struct FourierOptions {
  std::string x;
  std::string mu = "0";
  std::string eps_exp = "1";
  std::string f_at_x;  // reduced integral when set
};

struct HeavisideOptions {
  std::vector<std::string> x;
  std::string alpha_exp = "1";
};

struct DiracOptions {
  std::string alpha_exp = "1";
  std::string f = "poly: 1 + x";
  std::vector<std::string> probes;
};

struct MvtOptions {
  std::string p;
  std::string x0 = "0";
  std::string h_exp = "1";
};

struct SeqOptions {
  std::string gen;
  bool st = false;
  std::string ideal;   // ez | null
  std::string equals;  // second generator
  bool witness = false;
};

struct PendulumOptions {
  std::vector<double> amplitudes;
  std::string model = "nonlinear";  // linear | nonlinear | both
  double dt = 1e-3;
  double g = 9.80665;
  double length = 1.0;
};

struct OracleOptions {
  std::string corpus;
  std::string f;
  std::string a, b;
  std::string pv;
  double tol = 1e-10;
  bool extrapolate = false;  // windowed sift ladder
  std::string center = "0";
  double eps_power = 0.5;    // eps = alpha^p
  double ladder_start = 1e-2;
  double ladder_ratio = 0.1;
  int ladder_count = 4;
};

Output run_eval(const EvalOptions& o);
Output run_sift(const SiftOptions& o);
Output run_sokhotski(const SokhotskiOptions& o);
Output run_fourier(const FourierOptions& o);
Output run_heaviside(const HeavisideOptions& o);
Output run_dirac(const DiracOptions& o);
Output run_mvt(const MvtOptions& o);
Output run_seq(const SeqOptions& o);
Output run_pendulum(const PendulumOptions& o);
Output run_oracle(const OracleOptions& o);

}  // namespace hyperdelta::cli
