#include "rsm/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "rsm/discretization.hpp"
#include "rsm/eigensolver.hpp"
#include "rsm/io.hpp"

namespace rsm::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename F>
decltype(auto) with_precision(Precision p, F&& f) {
  if (p == Precision::Extended) return f.template operator()<long double>();
  return f.template operator()<double>();
}

const char* precision_name(Precision p) { return p == Precision::Extended ? "extended" : "double"; }

bool has_exact_reference(const std::string& potential) { return potential == "sho"; }

struct ResolvedLengths {
  double length_x = 0.0;
  double length_y = 0.0;
  double next_x = 0.0;
  double next_y = 0.0;
  std::string source;
};

/// Basis sizes sampled when a curve is built on the fly for one N: the
/// neighbours make the interpolant exact at both N and N + 1.
std::vector<int> local_curve_sizes(int n_basis) {
  if (n_basis < 3) return {2, 3, 4};
  return {n_basis - 1, n_basis, n_basis + 1};
}

template <typename Scalar>
ResolvedLengths resolve_lengths(const RunConfig& c, const SeparablePotential& shape,
                                bool need_next) {
  if (c.auto_length && c.length) throw UsageError("--length and --auto are mutually exclusive");
  if (!c.auto_length && !c.length) throw UsageError("give either --length or --auto");
  ResolvedLengths r;
  if (!c.auto_length) {
    r.length_x = *c.length;
    r.length_y = c.length_y.value_or(*c.length);
    r.next_x = r.length_x;
    r.next_y = r.length_y;
    r.source = "explicit";
    return r;
  }
  if (c.length_y) throw UsageError("--length-y needs an explicit --length");

  const auto builder = centred_builder(shape);
  if (!shape.is_xy_symmetric()) {
    if (!c.curve_file.empty()) {
      throw UsageError("curve files hold square boxes; asymmetric potentials are optimised per run");
    }
    const auto here = find_optimal_domain<Scalar>(c.n_basis, builder, c.bracket);
    r.length_x = here.length_x;
    r.length_y = here.length_y;
    if (need_next) {
      const auto next = find_optimal_domain<Scalar>(c.n_basis + 1, builder, c.bracket);
      r.next_x = next.length_x;
      r.next_y = next.length_y;
    }
    r.source = "optimized";
    return r;
  }

  std::optional<LhatCurve> curve;
  if (!c.curve_file.empty() && std::filesystem::exists(c.curve_file)) {
    curve = io::load_curve(c.curve_file);
    r.source = "curve-file";
  } else if (c.no_auto_curve) {
    throw UsageError(c.curve_file.empty() ? "--no-auto-curve needs --curve-file"
                                          : "curve file " + c.curve_file + " does not exist");
  } else {
    const auto sizes = local_curve_sizes(c.n_basis);
    curve = build_curve<Scalar>(sizes, builder, c.bracket);
    if (!c.curve_file.empty()) io::save_curve(c.curve_file, *curve);
    r.source = "curve-built";
  }
  r.length_x = r.length_y = curve->length_at(c.n_basis);
  r.next_x = r.next_y = curve->length_at(c.n_basis + 1);
  return r;
}

nlohmann::ordered_json report_json(const ErrorReport& r, const Cluster& cluster,
                                   std::optional<double> overlap) {
  nlohmann::ordered_json j;
  j["index"] = r.state;
  j["energy"] = r.energy;
  j["cluster_first"] = cluster.first;
  j["cluster_size"] = cluster.size;
  if (r.delta_E) j["delta_E"] = *r.delta_E;
  if (r.delta_hat_E) j["delta_hat_E"] = *r.delta_hat_E;
  if (overlap) j["overlap_next"] = *overlap;
  if (r.delta_psi) {
    j["delta_psi"] = *r.delta_psi;
    j["grid_M"] = r.grid_M;
  }
  return j;
}

void check_run_config(const RunConfig& c) {
  if (c.n_basis < 2) throw UsageError("--n-basis must be >= 2");
  const long dim = static_cast<long>(c.n_basis) * c.n_basis;
  if (c.states < 1 || c.states > dim) {
    throw UsageError("--states must lie in [1, " + std::to_string(dim) + "]");
  }
  if (c.grid_out && *c.grid_out < 2) throw UsageError("--grid needs at least 2 points");
  if (c.grid_out && c.out.empty()) throw UsageError("--grid export from solve needs --out");
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: '" + text + "'");
    }
    if (used != s.size()) throw UsageError("not an integer list: '" + text + "'");
    return v;
  };
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() < 2 || parts.size() > 3) throw UsageError("range must be lo:hi or lo:hi:step");
    const int lo = to_int(parts[0]);
    const int hi = to_int(parts[1]);
    const int step = parts.size() == 3 ? to_int(parts[2]) : 1;
    if (step < 1 || hi < lo) throw UsageError("range needs lo <= hi and a positive step");
    for (int v = lo; v <= hi; v += step) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ',');) {
    if (!p.empty()) out.push_back(to_int(p));
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

nlohmann::ordered_json cmd_solve(const RunConfig& c) {
  check_run_config(c);
  const SeparablePotential shape = parse_potential(c.potential, c.alpha);

  return with_precision(c.precision, [&]<typename Scalar>() {
    const auto start = Clock::now();
    const ResolvedLengths lengths = resolve_lengths<Scalar>(c, shape, c.precision_report);
    const double t_lengths = seconds_since(start);

    const BasisSpec basis{c.n_basis, lengths.length_x, lengths.length_y};
    const auto solve_start = Clock::now();
    const auto sol =
        solve(assemble<Scalar>(basis, shape.with_domain(basis.length_x, basis.length_y)));
    const double t_solve = seconds_since(solve_start);

    std::optional<EigenSolution<Scalar>> next;
    double t_next = 0.0;
    if (c.precision_report) {
      const auto next_start = Clock::now();
      const BasisSpec nb{c.n_basis + 1, lengths.next_x, lengths.next_y};
      next.emplace(solve(assemble<Scalar>(nb, shape.with_domain(nb.length_x, nb.length_y))));
      t_next = seconds_since(next_start);
    }

    const auto clusters = cluster_degeneracies(sol.energies(), c.degeneracy_tol);
    const bool exact = has_exact_reference(c.potential);
    const int psi_grid = c.grid_out.value_or(kDefaultPsiGrid);

    nlohmann::ordered_json doc;
    doc["command"] = "solve";
    nlohmann::ordered_json& cfg = doc["config"];
    cfg["potential"] = c.potential;
    cfg["potential_terms"] = shape.to_string();
    cfg["alpha"] = c.alpha;
    cfg["n_basis"] = c.n_basis;
    cfg["length_mode"] = c.auto_length ? "auto" : "explicit";
    cfg["states"] = c.states;
    cfg["grid"] = c.grid_out ? nlohmann::ordered_json(*c.grid_out) : nlohmann::ordered_json();
    cfg["precision_report"] = c.precision_report;
    cfg["precision"] = precision_name(c.precision);
    cfg["degeneracy_tolerance"] = c.degeneracy_tol;
    doc["length_x"] = basis.length_x;
    doc["length_y"] = basis.length_y;
    doc["length_source"] = lengths.source;
    if (next) {
      doc["next_length_x"] = lengths.next_x;
      doc["next_length_y"] = lengths.next_y;
    }

    nlohmann::ordered_json energies = nlohmann::ordered_json::array();
    nlohmann::ordered_json states = nlohmann::ordered_json::array();
    for (Eigen::Index k = 0; k < c.states; ++k) {
      ErrorReport r;
      r.state = k;
      r.energy = static_cast<double>(sol.energy(k));
      r.grid_M = psi_grid;
      const Cluster cl = cluster_of(clusters, k);
      if (exact) {
        r.delta_E = static_cast<double>(delta_E<Scalar>(sol.energy(k), Scalar(sho_exact_energy(k))));
        if (k == 0 && cl.size == 1) {
          r.delta_psi = delta_psi(sol, k, ShoReference{0, 0}, psi_grid, c.degeneracy_tol);
        }
      }
      std::optional<double> overlap;
      if (next) {
        const auto est = estimate_error(sol, *next, k, c.degeneracy_tol);
        r.delta_hat_E = est.delta_hat_E;
        overlap = est.overlap;
        if (est.reordered) {
          std::clog << "warning: state " << k << " overlaps its N+1 partner only by "
                    << est.overlap << "; levels may have reordered\n";
        }
      }
      energies.push_back(r.energy);
      states.push_back(report_json(r, cl, overlap));
    }
    doc["energies"] = std::move(energies);
    doc["states"] = std::move(states);

    if (c.grid_out) {
      for (Eigen::Index k = 0; k < c.states; ++k) {
        WavefunctionGrid g{basis.length_x, basis.length_y,
                           wavefunction_grid(sol, k, *c.grid_out).template cast<double>()};
        std::ostringstream os;
        write_grid(os, g);
        write_text_file(c.out + ".state" + std::to_string(k) + ".grid", os.str());
      }
    }

    if (c.timing) {
      nlohmann::ordered_json& t = doc["timing_seconds"];
      t["lengths"] = t_lengths;
      t["solve"] = t_solve;
      if (next) t["solve_next"] = t_next;
      t["total"] = seconds_since(start);
    }
    return doc;
  });
}

LhatCurve cmd_optimize(const OptimizeConfig& c) {
  if (c.n_values.empty()) throw UsageError("optimize needs at least one basis size");
  const SeparablePotential shape = parse_potential(c.potential, c.alpha);
  if (!shape.is_xy_symmetric()) {
    throw UsageError("curve files hold square boxes; the potential is not x<->y symmetric");
  }
  return with_precision(c.precision, [&]<typename Scalar>() {
    return build_curve<Scalar>(c.n_values, centred_builder(shape), c.bracket);
  });
}

ConvergenceTable cmd_convergence(const ConvergenceConfig& c) {
  if (c.n_range.empty()) throw UsageError("convergence needs at least one basis size");
  for (int n : c.n_range) {
    if (n < 2) throw UsageError("basis sizes must be >= 2");
  }
  const SeparablePotential shape = parse_potential(c.potential, c.alpha);
  if (!shape.is_xy_symmetric()) {
    throw UsageError("convergence studies run on square boxes; the potential is not x<->y symmetric");
  }
  const auto builder = centred_builder(shape);
  const bool exact = has_exact_reference(c.potential);

  return with_precision(c.precision, [&]<typename Scalar>() {
    std::optional<LhatCurve> curve;
    if (!c.curve_file.empty() && std::filesystem::exists(c.curve_file)) {
      curve = io::load_curve(c.curve_file);
    } else {
      std::set<int> sizes(c.n_range.begin(), c.n_range.end());
      int extra = *sizes.rbegin();
      if (!exact) sizes.insert(++extra);  // the estimator also needs L-hat(N + 1)
      while (sizes.size() < 3) sizes.insert(++extra);
      const std::vector<int> list(sizes.begin(), sizes.end());
      curve = build_curve<Scalar>(list, builder, c.bracket);
      if (!c.curve_file.empty()) io::save_curve(c.curve_file, *curve);
    }

    ConvergenceTable table;
    table.error_kind = exact ? "delta_E" : "delta_hat_E";
    for (int n : c.n_range) {
      const double length = curve->length_at(n);
      const Scalar e = state_energy<Scalar>(n, length, length, builder, c.state);
      Scalar reference;
      if (exact) {
        reference = Scalar(sho_exact_energy(static_cast<std::size_t>(c.state)));
      } else {
        const double next_length = curve->length_at(n + 1);
        reference = state_energy<Scalar>(n + 1, next_length, next_length, builder, c.state);
      }
      table.rows.push_back({n, length, static_cast<double>(e),
                            static_cast<double>(delta_E<Scalar>(e, reference))});
    }
    return table;
  });
}

WavefunctionGrid cmd_grid(const GridConfig& c) {
  RunConfig run = c.run;
  run.states = 1;
  check_run_config(run);
  if (c.grid < 2) throw UsageError("--grid needs at least 2 points");
  const long dim = static_cast<long>(run.n_basis) * run.n_basis;
  if (c.state < 0 || c.state >= dim) {
    throw UsageError("--state must lie in [0, " + std::to_string(dim - 1) + "]");
  }
  const SeparablePotential shape = parse_potential(run.potential, run.alpha);
  return with_precision(run.precision, [&]<typename Scalar>() {
    const auto lengths = resolve_lengths<Scalar>(run, shape, false);
    const BasisSpec basis{run.n_basis, lengths.length_x, lengths.length_y};
    const auto sol =
        solve(assemble<Scalar>(basis, shape.with_domain(basis.length_x, basis.length_y)));
    return WavefunctionGrid{basis.length_x, basis.length_y,
                            wavefunction_grid(sol, c.state, c.grid).template cast<double>()};
  });
}

void write_grid(std::ostream& out, const WavefunctionGrid& grid) {
  const auto m = static_cast<int>(grid.values.rows());
  out << "x y psi\n";
  for (int i = 0; i < m; ++i) {
    const std::string x = io::format_number(grid_coordinate(grid.length_x, i, m));
    for (int j = 0; j < m; ++j) {
      out << x << ' ' << io::format_number(grid_coordinate(grid.length_y, j, m)) << ' '
          << io::format_number(grid.values(i, j)) << '\n';
    }
  }
}

void write_convergence(std::ostream& out, const ConvergenceTable& table) {
  out << "N L_hat E " << table.error_kind << '\n';
  for (const auto& r : table.rows) {
    out << r.n_basis << ' ' << io::format_number(r.length) << ' ' << io::format_number(r.energy)
        << ' ' << io::format_number(r.error) << '\n';
  }
}

namespace {

struct CommonOptions {
  std::string potential = "sho";
  double alpha = 1.0;
  std::string bracket = "2,30";
  std::string precision = "double";
  std::string out;

  LengthBracket parsed_bracket() const {
    const auto comma = bracket.find(',');
    if (comma == std::string::npos) throw UsageError("--bracket expects lo,hi");
    try {
      return {std::stod(bracket.substr(0, comma)), std::stod(bracket.substr(comma + 1))};
    } catch (const std::exception&) {
      throw UsageError("--bracket expects two numbers lo,hi");
    }
  }
  Precision parsed_precision() const {
    return precision == "extended" ? Precision::Extended : Precision::Double;
  }
};

void add_common(CLI::App* app, CommonOptions& o) {
  app->add_option("--potential", o.potential,
                  "sho | qcd | none | term list such as '1*(x)^2*(y)^2 + 0.5*x^4'");
  app->add_option("--alpha", o.alpha, "coupling of the qcd potential")->check(CLI::PositiveNumber);
  app->add_option("--bracket", o.bracket, "length bracket lo,hi for the optimal-length search");
  app->add_option("--precision", o.precision, "arithmetic for assembly and eigensolve")
      ->check(CLI::IsMember({"double", "extended"}));
  app->add_option("--out", o.out, "output path (stdout when omitted)");
}

void add_run_options(CLI::App* app, RunConfig& c, double& length, double& length_y) {
  app->add_option("--n-basis", c.n_basis, "basis functions per axis")->check(CLI::PositiveNumber);
  app->add_option("--length", length, "box length (Lx, and Ly unless --length-y)")
      ->check(CLI::PositiveNumber);
  app->add_option("--length-y", length_y, "box length along y")->check(CLI::PositiveNumber);
  app->add_flag("--auto", c.auto_length, "use the optimal length from an L-hat curve");
  app->add_option("--curve-file", c.curve_file, "L-hat curve file (read, or written when built)");
  app->add_flag("--no-auto-curve", c.no_auto_curve, "fail instead of building a missing curve");
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bound states of the 2D Schroedinger equation in an optimised sine basis", "rsm"};
  app.require_subcommand(1);

  CommonOptions common;
  RunConfig run_cfg;
  double length = 0.0;
  double length_y = 0.0;
  auto* solve_cmd = app.add_subcommand("solve", "assemble, solve and report the lowest states");
  add_common(solve_cmd, common);
  add_run_options(solve_cmd, run_cfg, length, length_y);
  solve_cmd->add_option("--states", run_cfg.states, "number of lowest states to report");
  int grid_out = 0;
  solve_cmd->add_option("--grid", grid_out, "also write M x M wavefunction grids next to --out");
  solve_cmd->add_flag("--precision-report", run_cfg.precision_report,
                      "estimate errors from a second solve at N+1");
  solve_cmd->add_option("--degeneracy-tol", run_cfg.degeneracy_tol, "relative gap for clusters")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--timing", run_cfg.timing, "include wall-clock timings");

  OptimizeConfig opt_cfg;
  std::string n_values = "6,10,14,18,22";
  std::string opt_curve;
  auto* optimize_cmd = app.add_subcommand("optimize", "optimal box length per N, as a curve file");
  add_common(optimize_cmd, common);
  optimize_cmd->add_option("--n-values", n_values, "basis sizes, list a,b,c or range lo:hi:step");
  optimize_cmd->add_option("--curve-file", opt_curve, "same as --out");

  ConvergenceConfig conv_cfg;
  std::string n_range;
  auto* conv_cmd = app.add_subcommand("convergence", "ground-state error versus N");
  add_common(conv_cmd, common);
  conv_cmd->add_option("--n-range", n_range, "basis sizes, lo:hi:step or a,b,c")->required();
  conv_cmd->add_option("--curve-file", conv_cfg.curve_file, "L-hat curve file");
  conv_cmd->add_option("--state", conv_cfg.state, "state index")->check(CLI::NonNegativeNumber);

  GridConfig grid_cfg;
  auto* grid_cmd = app.add_subcommand("grid", "wavefunction of one state on an M x M grid");
  add_common(grid_cmd, common);
  add_run_options(grid_cmd, grid_cfg.run, length, length_y);
  grid_cmd->add_option("--state", grid_cfg.state, "state index")->check(CLI::NonNegativeNumber);
  grid_cmd->add_option("--grid", grid_cfg.grid, "points per axis");

  std::vector<std::string> argv_store;
  argv_store.emplace_back("rsm");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto fill_run = [&](RunConfig& c, CLI::App* sub) {
    c.potential = common.potential;
    c.alpha = common.alpha;
    c.bracket = common.parsed_bracket();
    c.precision = common.parsed_precision();
    c.out = common.out;
    if (sub->count("--length") > 0) c.length = length;
    if (sub->count("--length-y") > 0) c.length_y = length_y;
  };

  try {
    if (solve_cmd->parsed()) {
      fill_run(run_cfg, solve_cmd);
      if (solve_cmd->count("--grid") > 0) run_cfg.grid_out = grid_out;
      emit(common.out, io::to_json_text(cmd_solve(run_cfg)), out);
    } else if (optimize_cmd->parsed()) {
      opt_cfg.potential = common.potential;
      opt_cfg.alpha = common.alpha;
      opt_cfg.bracket = common.parsed_bracket();
      opt_cfg.precision = common.parsed_precision();
      opt_cfg.n_values = parse_int_list(n_values);
      const auto curve = cmd_optimize(opt_cfg);
      std::ostringstream os;
      io::write_curve(os, curve);
      emit(common.out.empty() ? opt_curve : common.out, os.str(), out);
    } else if (conv_cmd->parsed()) {
      conv_cfg.potential = common.potential;
      conv_cfg.alpha = common.alpha;
      conv_cfg.bracket = common.parsed_bracket();
      conv_cfg.precision = common.parsed_precision();
      conv_cfg.n_range = parse_int_list(n_range);
      std::ostringstream os;
      write_convergence(os, cmd_convergence(conv_cfg));
      emit(common.out, os.str(), out);
    } else if (grid_cmd->parsed()) {
      fill_run(grid_cfg.run, grid_cmd);
      std::ostringstream os;
      write_grid(os, cmd_grid(grid_cfg));
      emit(common.out, os.str(), out);
    }
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace rsm::cli
