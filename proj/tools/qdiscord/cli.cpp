// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qdiscord/analysis.hpp"
#include "qdiscord/csv.hpp"
#include "qdiscord/error.hpp"
#include "qdiscord/lmg.hpp"
#include "qdiscord/tfim.hpp"
#include "qdiscord/xxz.hpp"

namespace qdiscord::cli {

namespace {

constexpr const char* kThreadsEnv = "QDISCORD_THREADS";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename T>
T require(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required option ") + flag);
  return *v;
}

int thread_count(const RunConfig& cfg) {
  if (cfg.threads) return std::max(1, *cfg.threads);
  if (const char* env = std::getenv(kThreadsEnv)) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      throw UsageError(std::string(kThreadsEnv) + " is not an integer");
    }
  }
  return 1;
}

analysis::GridSpec grid(const RunConfig& cfg, double from, double to, int steps) {
  analysis::GridSpec g{cfg.from.value_or(from), cfg.to.value_or(to), cfg.steps.value_or(steps)};
  if (g.steps < 1) throw UsageError("--steps must be >= 1");
  if (!(g.from < g.to)) throw UsageError("--from must be below --to");
  return g;
}

analysis::GridSpec required_grid(const RunConfig& cfg) {
  return grid(cfg, require(cfg.from, "--from"), require(cfg.to, "--to"), require(cfg.steps, "--steps"));
}

int lattice_size(const RunConfig& cfg) {
  if (cfg.model == "tfim" || cfg.model == "xxz") return require(cfg.sites, "--L");
  return 0;
}

bool same_mode(const RunConfig& cfg) {
  if (cfg.mode == "same") return true;
  if (cfg.mode == "different") return false;
  throw UsageError("--mode must be 'same' or 'different'");
}

analysis::PointEvaluator evaluator(const RunConfig& cfg, int sites) {
  if (cfg.model == "tfim") return [sites](double g) { return tfim::tfim_report({g, sites}); };
  if (cfg.model == "xxz") return [sites](double d) { return xxz::xxz_report({d, sites}); };
  if (cfg.model == "lmg") {
    const bool same = same_mode(cfg);
    return [same](double l) { return lmg::lmg_report({l, same}); };
  }
  if (cfg.model == "xstate") throw UsageError("model 'xstate' has no control parameter to sweep");
  throw UsageError("unknown model '" + cfg.model + "'");
}

double point_parameter(const RunConfig& cfg) {
  if (cfg.model == "tfim") return require(cfg.g, "--g");
  if (cfg.model == "xxz") return require(cfg.delta, "--delta");
  if (cfg.model == "lmg") return require(cfg.lambda, "--lambda");
  throw UsageError("unknown model '" + cfg.model + "'");
}

void print_report(std::ostream& out, const CorrelationReport& r) {
  const std::pair<const char*, double> fields[] = {
      {"Gxx", r.spin.gxx},       {"Gyy", r.spin.gyy},        {"Gzz", r.spin.gzz},       {"Gz", r.spin.gz_a},
      {"c1", r.coeffs.c1},       {"c2", r.coeffs.c2},        {"c3", r.coeffs.c3},       {"c4", r.coeffs.c4},
      {"c5", r.coeffs.c5},       {"I", r.mutual_info},       {"C", r.classical},        {"Q", r.discord},
      {"theta_opt", r.optimal_angles.theta},                 {"phi_opt", r.optimal_angles.phi},
  };
  for (const auto& [key, value] : fields) out << key << '=' << csv::format_number(value) << '\n';
}

// Buffers the whole payload, then writes it; a failed write leaves no file.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& payload) {
  if (cfg.out.empty()) {
    out << payload;
    return;
  }
  {
    std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
    if (file && (file << payload) && file.flush()) return;
  }
  std::error_code ec;
  std::filesystem::remove(cfg.out, ec);
  throw Error(ErrorCode::io_error, "cannot write " + cfg.out);
}

int cmd_point(const RunConfig& cfg, std::ostream& out) {
  CorrelationReport r;
  if (cfg.model == "xstate") {
    r = quantum_discord(xstate_from_coeffs({cfg.c[0], cfg.c[1], cfg.c[2], cfg.c[3], cfg.c[4]}));
  } else {
    const double param = point_parameter(cfg);
    r = evaluator(cfg, lattice_size(cfg))(param);
  }
  std::ostringstream os;
  print_report(os, r);
  emit(cfg, out, os.str());
  return kOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const int sites = lattice_size(cfg);
  const analysis::GridSpec g = required_grid(cfg);
  if (g.steps < 2) throw UsageError("a sweep needs --steps >= 2");
  const auto table = analysis::sweep(cfg.model, sites, g, evaluator(cfg, sites), thread_count(cfg));
  std::ostringstream os;
  csv::write_sweep(os, table);
  emit(cfg, out, os.str());
  return kOk;
}

std::string fit_summary(const analysis::ScalingFit& fit) {
  std::ostringstream os;
  os << "# fit:";
  for (std::size_t k = 0; k < fit.coefficients.size(); ++k) {
    os << " a" << k << '=' << csv::format_number(fit.coefficients[k]);
  }
  os << " rms=" << csv::format_number(fit.rms) << '\n';
  os << "# window: L=" << csv::format_number(fit.min_size) << ".." << csv::format_number(fit.max_size)
     << " log=base2\n";
  return os.str();
}

int cmd_scaling(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.input.empty()) {
    std::ifstream in(cfg.input);
    if (!in) throw Error(ErrorCode::io_error, "cannot read " + cfg.input);
    std::string line;
    std::vector<double> sizes;
    std::vector<double> values;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#' || line.rfind("L,", 0) == 0) continue;
      const auto comma = line.find(',');
      if (comma == std::string::npos) throw Error(ErrorCode::io_error, "expected 'L,value' rows");
      sizes.push_back(std::stod(line.substr(0, comma)));
      values.push_back(std::stod(line.substr(comma + 1)));
    }
    const auto fit = analysis::scaling_fit(sizes, values, cfg.degree.value_or(1));
    emit(cfg, out, fit_summary(fit));
    return kOk;
  }

  if (cfg.sizes.size() < 4) throw UsageError("--sizes needs at least four entries");
  if (!std::is_sorted(cfg.sizes.begin(), cfg.sizes.end())) throw UsageError("--sizes must be ascending");
  analysis::ScalingRequest request;
  if (cfg.quantity == "dC") {
    request.column = analysis::Column::classical;
    request.order = 1;
    request.kind = analysis::ExtremumKind::minimum;
    request.degree = 1;
  } else if (cfg.quantity == "d2Q") {
    request.column = analysis::Column::discord;
    request.order = 2;
    request.kind = analysis::ExtremumKind::maximum;
    request.degree = 2;
  } else {
    throw UsageError("--quantity must be dC or d2Q");
  }
  if (cfg.degree) request.degree = *cfg.degree;
  request.grid = grid(cfg, 0.5, 1.5, 1000);
  request.threads = thread_count(cfg);
  RunConfig model_cfg = cfg;
  const auto study =
      analysis::scaling_study(cfg.sizes, request, [&](int size) { return evaluator(model_cfg, size); });

  std::ostringstream os;
  os << "L,param,value\n";
  for (const auto& p : study.points) {
    os << p.size << ',' << csv::format_number(p.extremum.param) << ',' << csv::format_number(p.extremum.value)
       << '\n';
  }
  os << fit_summary(study.fit);
  emit(cfg, out, os.str());
  return kOk;
}

struct ColumnRef {
  analysis::Column column;
  bool absolute;
};

ColumnRef parse_column_ref(std::string name) {
  bool absolute = false;
  if (name.rfind("abs_", 0) == 0) {
    absolute = true;
    name = name.substr(4);
  }
  try {
    return {analysis::parse_column(name), absolute};
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

int cmd_crossing(const RunConfig& cfg, std::ostream& out) {
  const auto comma = cfg.columns.find(',');
  if (comma == std::string::npos) throw UsageError("--columns expects A,B");
  const ColumnRef a = parse_column_ref(cfg.columns.substr(0, comma));
  const ColumnRef b = parse_column_ref(cfg.columns.substr(comma + 1));
  const int sites = lattice_size(cfg);
  const analysis::GridSpec g = required_grid(cfg);
  const auto eval = evaluator(cfg, sites);
  const auto table = analysis::sweep(cfg.model, sites, g, eval, thread_count(cfg));
  std::function<double(double)> difference;
  if (cfg.refine) {
    difference = [&](double x) {
      const CorrelationReport r = eval(x);
      double va = analysis::column_value(r, a.column);
      double vb = analysis::column_value(r, b.column);
      if (a.absolute) va = std::abs(va);
      if (b.absolute) vb = std::abs(vb);
      return va - vb;
    };
  }
  const double x = analysis::find_crossing(analysis::column(table, a.column, a.absolute),
                                           analysis::column(table, b.column, b.absolute), difference,
                                           cfg.tolerance.value_or(1e-9));
  emit(cfg, out, "crossing=" + csv::format_number(x) + '\n');
  return kOk;
}

std::vector<std::string> config_arguments(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::vector<std::string> args;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line without '=': " + line);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "config") continue;
    args.push_back("--" + key + "=" + value);
  }
  return args;
}

// Config-file entries go right after the subcommand so later command-line
// flags override them (every option keeps its last value).
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty() || args.empty()) return args;
  std::vector<std::string> out{args.front()};
  for (auto& a : config_arguments(path)) out.push_back(std::move(a));
  out.insert(out.end(), args.begin() + 1, args.end());
  return out;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  sub->add_option("--model", cfg.model, "tfim | xxz | lmg | xstate")->required();
  sub->add_option("--g", cfg.g, "transverse field (tfim)");
  sub->add_option("--delta", cfg.delta, "anisotropy (xxz)");
  sub->add_option("--lambda", cfg.lambda, "level splitting (lmg)");
  sub->add_option("--L", cfg.sites, "ring size (tfim, xxz)");
  sub->add_option("--mode", cfg.mode, "lmg mode pair: same | different");
  sub->add_option("--from", cfg.from, "grid start");
  sub->add_option("--to", cfg.to, "grid end");
  sub->add_option("--steps", cfg.steps, "grid intervals");
  sub->add_option("--sizes", cfg.sizes, "comma-separated ring sizes")->delimiter(',');
  sub->add_option("--out", cfg.out, "output file (default stdout)");
  sub->add_option("--threads", cfg.threads, std::string("worker threads (default $") + kThreadsEnv + " or 1)");
  sub->add_option("--config", "key=value file; command-line flags take precedence");
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Classical correlation and quantum discord of two-spin reduced states"};
  app.require_subcommand(1);

  CLI::App* point = app.add_subcommand("point", "evaluate one parameter point");
  add_common(point, cfg);
  point->add_option("--c1", cfg.c[0], "xstate coefficient c1");
  point->add_option("--c2", cfg.c[1], "xstate coefficient c2");
  point->add_option("--c3", cfg.c[2], "xstate coefficient c3");
  point->add_option("--c4", cfg.c[3], "xstate coefficient c4");
  point->add_option("--c5", cfg.c[4], "xstate coefficient c5");

  CLI::App* sweep = app.add_subcommand("sweep", "sweep the control parameter and emit CSV");
  add_common(sweep, cfg);

  CLI::App* scaling = app.add_subcommand("scaling", "finite-size scaling of derivative extrema");
  add_common(scaling, cfg);
  scaling->add_option("--quantity", cfg.quantity, "dC (min of dC/dg) | d2Q (max of d2Q/dg2)");
  scaling->add_option("--degree", cfg.degree, "polynomial degree in log2 L");
  scaling->add_option("--input", cfg.input, "fit an existing 'L,value' table instead of sweeping");
  scaling->get_option("--model")->required(false);

  CLI::App* crossing = app.add_subcommand("crossing", "locate where two columns cross");
  add_common(crossing, cfg);
  crossing->add_option("--columns", cfg.columns, "A,B (prefix abs_ for absolute value)")->required();
  crossing->add_option("--refine", cfg.refine, "refine on the model (true/false)");
  crossing->add_option("--tolerance", cfg.tolerance, "refinement tolerance");

  try {
    std::vector<std::string> args = expand_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (point->parsed()) return cmd_point(cfg, out);
    if (sweep->parsed()) return cmd_sweep(cfg, out);
    if (scaling->parsed()) return cmd_scaling(cfg, out);
    if (crossing->parsed()) return cmd_crossing(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::invalid_argument ? kUsage : kNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}

}  // namespace qdiscord::cli
