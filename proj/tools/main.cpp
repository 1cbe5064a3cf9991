#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "entx/explorer.hpp"
#include "entx/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitImpossible = 2;
constexpr int kExitVerifyFailed = 3;

entx::Recipe load_recipe(const std::string& source) {
  if (source == "fig2") {
    return entx::optimal_recipe();
  }
  std::ifstream in(source);
  if (!in) {
    throw std::runtime_error("cannot open recipe file: " + source);
  }
  json j;
  in >> j;
  return entx::recipe_from_json(j);
}

entx::DensityMatrix load_state(const std::string& source) {
  if (source == "maximally-mixed") {
    return entx::maximally_mixed(2);
  }
  if (source.rfind("basis:", 0) == 0) {
    std::vector<entx::Spin> labels;
    for (char c : source.substr(6)) {
      if (c == 'u') {
        labels.push_back(entx::Spin::up);
      } else if (c == 'd') {
        labels.push_back(entx::Spin::down);
      } else {
        throw std::runtime_error("basis labels must be 'u' or 'd' characters");
      }
    }
    return entx::DensityMatrix::from_pure(entx::basis_state(labels));
  }
  if (source.rfind("random:", 0) == 0) {
    const std::uint64_t seed = std::stoull(source.substr(7));
    return entx::random_density(2, seed);
  }
  std::ifstream in(source);
  if (!in) {
    throw std::runtime_error("cannot open state file: " + source);
  }
  json j;
  in >> j;
  return entx::density_from_json(j);
}

//! Grid argument: either per-axis point counts ("201" or "201,101"), laid
//! out strictly inside (0, pi) as k*pi/(n+1), or explicit inclusive ranges
//! "a_min:a_max:count,b_min:b_max:count" in radians.
entx::GridSpec parse_grid(const std::string& text) {
  if (text.empty()) {
    return entx::GridSpec::default_grid();
  }

  auto split = [](const std::string& s, char delim) {
    std::vector<std::string> parts;
    std::stringstream stream(s);
    std::string item;
    while (std::getline(stream, item, delim)) {
      parts.push_back(item);
    }
    return parts;
  };

  const auto axes = split(text, ',');
  if (axes.empty() || axes.size() > 2) {
    throw std::runtime_error("grid must describe one or two axes");
  }

  auto parse_axis = [&](const std::string& axis) {
    const auto fields = split(axis, ':');
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;
    if (fields.size() == 1) {
      count = std::stoi(fields[0]);
      if (count < 1) {
        throw std::runtime_error("grid point count must be positive");
      }
      const double step = M_PI / static_cast<double>(count + 1);
      lo = step;
      hi = static_cast<double>(count) * step;
    } else if (fields.size() == 3) {
      lo = std::stod(fields[0]);
      hi = std::stod(fields[1]);
      count = std::stoi(fields[2]);
    } else {
      throw std::runtime_error("grid axis must be COUNT or MIN:MAX:COUNT");
    }
    return std::tuple<double, double, int>{lo, hi, count};
  };

  const auto a = parse_axis(axes[0]);
  const auto b = axes.size() == 2 ? parse_axis(axes[1]) : a;

  entx::GridSpec spec;
  std::tie(spec.theta_a_min, spec.theta_a_max, spec.theta_a_count) = a;
  std::tie(spec.theta_b_min, spec.theta_b_max, spec.theta_b_count) = b;
  spec.validate();
  return spec;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + out_path);
  }
  out << text;
  if (!out) {
    throw std::runtime_error("failed to write output file: " + out_path);
  }
}

struct AngleOptions {
  double theta_a = 0.0;
  double theta_b = 0.0;
  double theta_a_pi = 0.0;
  double theta_b_pi = 0.0;
  bool a_in_pi = false;
  bool b_in_pi = false;
  double omega_t = 0.0;
  bool include_free = false;

  void add_to(CLI::App& cmd, double default_theta = 0.0) {
    theta_a = theta_b = default_theta;
    auto* a = cmd.add_option("--theta-a", theta_a, "interaction angle g_A*tau_A in radians");
    auto* b = cmd.add_option("--theta-b", theta_b, "interaction angle g_B*tau_B in radians");
    auto* api = cmd.add_option("--theta-a-pi", theta_a_pi, "theta_a in units of pi");
    auto* bpi = cmd.add_option("--theta-b-pi", theta_b_pi, "theta_b in units of pi");
    api->excludes(a);
    bpi->excludes(b);
    cmd.add_flag("--include-free", include_free, "evolve with the free Hamiltonian included");
    cmd.add_option("--omega-t", omega_t, "free-evolution phase angle Omega*tau per interval");
    cmd.callback([this, api, bpi] {
      a_in_pi = api->count() > 0;
      b_in_pi = bpi->count() > 0;
    });
  }

  entx::CouplingParams params() const {
    return {a_in_pi ? theta_a_pi * M_PI : theta_a,
            b_in_pi ? theta_b_pi * M_PI : theta_b, omega_t};
  }
};

json params_to_json(const entx::CouplingParams& p, bool include_free) {
  return {{"theta_a", p.theta_a},
          {"theta_b", p.theta_b},
          {"omega_t", p.omega_t},
          {"include_free", include_free}};
}

int cmd_simulate(const AngleOptions& angles, const std::string& recipe_source,
                 const std::string& state_source, const std::string& out_path) {
  const entx::Recipe recipe = load_recipe(recipe_source);
  const entx::DensityMatrix rho = load_state(state_source);
  const entx::CouplingParams params = angles.params();

  json report = {{"schema_version", 1},
                 {"command", "simulate"},
                 {"recipe", entx::recipe_to_json(recipe)},
                 {"params", params_to_json(params, angles.include_free)}};
  try {
    const entx::ProtocolResult result =
        entx::run_protocol(rho, recipe, params, angles.include_free);
    report["yield"] = result.yield_p;
    report["concurrence"] = entx::concurrence(result.state).value;
    try {
      report["fidelity_to_target"] =
          entx::fidelity_pure(result.state, entx::target_state(params));
    } catch (const entx::DegenerateStateError&) {
      report["fidelity_to_target"] = nullptr;
    }
    report["final_state"] = entx::density_to_json(result.state);
  } catch (const entx::ImpossibleOutcomeError& e) {
    report["error"] = "impossible-outcome";
    report["probability"] = e.probability();
    emit(report.dump(2) + "\n", out_path);
    return kExitImpossible;
  }
  emit(report.dump(2) + "\n", out_path);
  return kExitOk;
}

int cmd_sweep(const std::string& recipe_source, const std::string& grid_text,
              const std::string& format, const std::string& out_path) {
  const entx::Recipe recipe = load_recipe(recipe_source);
  const entx::GridSpec grid = parse_grid(grid_text);
  const entx::SweepResult result = entx::sweep(recipe, grid);
  if (format == "csv") {
    std::ostringstream csv;
    entx::write_sweep_csv(result, csv);
    emit(csv.str(), out_path);
  } else {
    emit(entx::sweep_to_json(result).dump(2) + "\n", out_path);
  }
  return kExitOk;
}

int cmd_recipes(const std::string& grid_text, const std::string& out_path) {
  const entx::GridSpec grid = parse_grid(grid_text);
  json reports = json::array();
  for (const entx::Recipe& recipe : entx::enumerate_recipes()) {
    reports.push_back(entx::optimum_to_json(entx::find_optimum(entx::sweep(recipe, grid))));
  }
  const json report = {{"schema_version", 1},
                       {"command", "recipes"},
                       {"reports", std::move(reports)}};
  emit(report.dump(2) + "\n", out_path);
  return kExitOk;
}

int cmd_verify(std::uint64_t seed, std::optional<double> tol_override) {
  const auto results = entx::run_verification(seed, tol_override);
  int failures = 0;
  for (const auto& check : results) {
    std::cout << (check.passed ? "[PASS] " : "[FAIL] ") << check.name
              << "  max-error=" << check.max_error << "  tol=" << check.tolerance
              << "\n";
    failures += check.passed ? 0 : 1;
  }
  std::cout << "verification: " << (results.size() - failures) << "/"
            << results.size() << " checks passed\n";
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

int cmd_init_demo(const AngleOptions& angles, const std::string& state_source,
                  const std::string& out_path) {
  const entx::DensityMatrix rho = load_state(state_source);
  const entx::CouplingParams params = angles.params();
  const auto [final_state, fidelity] = entx::initialization_demo(rho, params);
  const json report = {{"schema_version", 1},
                       {"command", "init-demo"},
                       {"params", params_to_json(params, false)},
                       {"fidelity_to_up_up", fidelity},
                       {"final_state", entx::density_to_json(final_state)}};
  emit(report.dump(2) + "\n", out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact simulator of a three-pass, post-selected entanglement "
               "extraction protocol for two qubits coupled through a mediator"};
  app.require_subcommand(1);

  std::string recipe_source = "fig2";
  std::string state_source = "maximally-mixed";
  std::string grid_text;
  std::string format = "csv";
  std::string out_path;
  std::uint64_t seed = 20250811;
  double tol = 0.0;

  AngleOptions sim_angles;
  auto* simulate = app.add_subcommand("simulate", "run the three-pass protocol on a state");
  sim_angles.add_to(*simulate);
  simulate->add_option("--recipe", recipe_source, "built-in recipe name (fig2) or recipe JSON path");
  simulate->add_option("--state", state_source,
                       "maximally-mixed | basis:<u/d labels> | random:<seed> | density JSON path");
  simulate->add_option("--out", out_path, "write the JSON report here instead of stdout");

  auto* sweep_cmd = app.add_subcommand("sweep", "tabulate concurrence and yield over a parameter grid");
  sweep_cmd->add_option("--recipe", recipe_source, "built-in recipe name (fig2) or recipe JSON path");
  sweep_cmd->add_option("--grid", grid_text, "COUNT[,COUNT] or MIN:MAX:COUNT[,MIN:MAX:COUNT]");
  sweep_cmd->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* recipes_cmd = app.add_subcommand("recipes", "compare the four interaction orderings");
  recipes_cmd->add_option("--grid", grid_text, "COUNT[,COUNT] or MIN:MAX:COUNT[,MIN:MAX:COUNT]");
  recipes_cmd->add_option("--out", out_path, "output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "run the invariant and oracle-equivalence checks");
  verify_cmd->add_option("--seed", seed, "seed for the random draws");
  auto* tol_opt = verify_cmd->add_option("--tol", tol, "override every check tolerance");

  AngleOptions init_angles;
  auto* init_cmd = app.add_subcommand("init-demo",
                                      "two unconditional transfer passes toward |up up>");
  init_angles.add_to(*init_cmd, M_PI / 2.0);
  init_cmd->add_option("--state", state_source,
                       "maximally-mixed | basis:<u/d labels> | random:<seed> | density JSON path");
  init_cmd->add_option("--out", out_path, "write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (simulate->parsed()) {
      return cmd_simulate(sim_angles, recipe_source, state_source, out_path);
    }
    if (sweep_cmd->parsed()) {
      return cmd_sweep(recipe_source, grid_text, format, out_path);
    }
    if (recipes_cmd->parsed()) {
      return cmd_recipes(grid_text, out_path);
    }
    if (verify_cmd->parsed()) {
      std::optional<double> tol_override;
      if (tol_opt->count() > 0) {
        tol_override = tol;
      }
      return cmd_verify(seed, tol_override);
    }
    if (init_cmd->parsed()) {
      return cmd_init_demo(init_angles, state_source, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
