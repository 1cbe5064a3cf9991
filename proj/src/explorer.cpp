#include "entx/explorer.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <system_error>

namespace entx {

namespace {

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    values.push_back(lo);
    return values;
  }
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (int i = 0; i < count; ++i) {
    values.push_back(lo + static_cast<double>(i) * step);
  }
  return values;
}

//! Shortest round-trip decimal representation, for stable CSV bytes.
std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc{}) {
    throw std::runtime_error("failed to format floating-point value");
  }
  return std::string(buf, res.ptr);
}

constexpr double kQualifyTol = 1e-6;       // concurrence filter for optima
constexpr double kSimultaneousTol = 1e-9;  // both metrics must reach 1

}  // namespace

GridSpec GridSpec::default_grid() {
  const double step = M_PI / 204.0;
  GridSpec spec;
  spec.theta_a_min = 2.0 * step;
  spec.theta_a_max = 202.0 * step;
  spec.theta_a_count = 201;
  spec.theta_b_min = spec.theta_a_min;
  spec.theta_b_max = spec.theta_a_max;
  spec.theta_b_count = 201;
  return spec;
}

void GridSpec::validate() const {
  const bool a_ok = theta_a_count >= 1 && std::isfinite(theta_a_min) &&
                    std::isfinite(theta_a_max) && theta_a_min <= theta_a_max;
  const bool b_ok = theta_b_count >= 1 && std::isfinite(theta_b_min) &&
                    std::isfinite(theta_b_max) && theta_b_min <= theta_b_max;
  if (!a_ok || !b_ok) {
    throw std::invalid_argument("grid spec must have nonempty ranges and positive counts");
  }
  if ((theta_a_count > 1 && theta_a_min == theta_a_max) ||
      (theta_b_count > 1 && theta_b_min == theta_b_max)) {
    throw std::invalid_argument("grid spec has zero step for a multi-point axis");
  }
}

std::vector<double> GridSpec::theta_a_values() const {
  return linspace(theta_a_min, theta_a_max, theta_a_count);
}

std::vector<double> GridSpec::theta_b_values() const {
  return linspace(theta_b_min, theta_b_max, theta_b_count);
}

std::array<Recipe, 4> enumerate_recipes() {
  constexpr ProcessSpec last{Direction::rightward, Spin::down, Spin::up};
  std::array<Recipe, 4> recipes;
  std::size_t i = 0;
  for (Direction first : {Direction::rightward, Direction::leftward}) {
    for (Direction second : {Direction::rightward, Direction::leftward}) {
      recipes[i++] = Recipe{{{{first, Spin::up, Spin::down},
                              {second, Spin::up, Spin::down},
                              last}}};
    }
  }
  return recipes;
}

SweepResult sweep(const Recipe& recipe, const GridSpec& spec) {
  spec.validate();
  const auto a_values = spec.theta_a_values();
  const auto b_values = spec.theta_b_values();

  SweepResult result{recipe, spec, {}};
  result.grid.reserve(a_values.size() * b_values.size());

  for (double theta_a : a_values) {
    for (double theta_b : b_values) {
      const CouplingParams params{theta_a, theta_b, 0.0};
      const ComplexMatrix v = pipeline_operator(recipe, params);
      // Input |down down><down down| is pure, so the conditional output is
      // the normalized last column of the pipeline operator.
      const ComplexVector extracted = v.col(3);
      const double yield = extracted.squaredNorm();
      if (yield <= kDefaultEpsP) {
        result.grid.push_back({theta_a, theta_b, std::nullopt, 0.0});
        continue;
      }
      ComplexMatrix conditional = extracted * extracted.adjoint() / yield;
      const double c = concurrence(DensityMatrix(2, std::move(conditional))).value;
      result.grid.push_back({theta_a, theta_b, c, yield});
    }
  }
  return result;
}

OptimumReport find_optimum(const SweepResult& result) {
  if (result.grid.empty()) {
    throw std::invalid_argument("find_optimum: empty grid");
  }

  const SweepPoint* best_qualifying = nullptr;
  const SweepPoint* best_product = nullptr;
  double best_product_value = -1.0;

  // Row-major scan with strict improvement keeps the lexicographically
  // smallest point among ties.
  for (const SweepPoint& point : result.grid) {
    if (!point.concurrence.has_value()) {
      continue;
    }
    const double c = *point.concurrence;
    if (c >= 1.0 - kQualifyTol) {
      if (best_qualifying == nullptr ||
          point.normalized_yield > best_qualifying->normalized_yield) {
        best_qualifying = &point;
      }
    }
    const double product = c * point.normalized_yield;
    if (product > best_product_value) {
      best_product_value = product;
      best_product = &point;
    }
  }

  OptimumReport report;
  report.recipe = result.recipe;
  if (best_qualifying != nullptr) {
    report.theta_a = best_qualifying->theta_a;
    report.theta_b = best_qualifying->theta_b;
    report.concurrence_at_best = *best_qualifying->concurrence;
    report.normalized_yield_at_best = best_qualifying->normalized_yield;
    report.simultaneous_max =
        report.concurrence_at_best >= 1.0 - kSimultaneousTol &&
        report.normalized_yield_at_best >= 1.0 - kSimultaneousTol;
    if (!report.simultaneous_max) {
      report.note = "no grid point reaches concurrence and normalized yield 1 "
                    "within 1e-9; best qualifying point reported";
    }
  } else if (best_product != nullptr) {
    report.theta_a = best_product->theta_a;
    report.theta_b = best_product->theta_b;
    report.concurrence_at_best = *best_product->concurrence;
    report.normalized_yield_at_best = best_product->normalized_yield;
    report.simultaneous_max = false;
    report.note = "no grid point reaches concurrence 1 within 1e-6; point "
                  "maximizing concurrence * yield reported";
  } else {
    // Every grid point annihilates the input; report the first one.
    const SweepPoint& point = result.grid.front();
    report.theta_a = point.theta_a;
    report.theta_b = point.theta_b;
    report.concurrence_at_best = 0.0;
    report.normalized_yield_at_best = 0.0;
    report.simultaneous_max = false;
    report.note = "pipeline annihilates the input at every grid point";
  }
  return report;
}

std::pair<DensityMatrix, double> initialization_demo(const DensityMatrix& rho,
                                                     const CouplingParams& params) {
  if (rho.num_qubits() != 2) {
    throw std::invalid_argument("initialization_demo expects a 2-qubit state");
  }
  ComplexMatrix mediator_up = ComplexMatrix::Zero(2, 2);
  mediator_up(0, 0) = 1.0;

  auto transfer_pass = [&](const ComplexMatrix& state, Coupling which) {
    const ComplexMatrix u = propagator(which, params);
    const ComplexMatrix joint = linalg::tensor(state, mediator_up);
    const ComplexMatrix evolved = u * joint * u.adjoint();
    return linalg::partial_trace(evolved, {2, 2, 2}, 2);
  };

  ComplexMatrix state = transfer_pass(rho.matrix(), Coupling::XA);
  state = transfer_pass(state, Coupling::XB);
  DensityMatrix final_state(2, std::move(state));
  const double fidelity =
      fidelity_pure(final_state, basis_state({Spin::up, Spin::up}));
  return {std::move(final_state), fidelity};
}

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
  out << "theta_a,theta_b,concurrence,normalized_yield\n";
  for (const SweepPoint& point : result.grid) {
    out << format_double(point.theta_a) << ',' << format_double(point.theta_b)
        << ',';
    if (point.concurrence.has_value()) {
      out << format_double(*point.concurrence);
    }
    out << ',' << format_double(point.normalized_yield) << '\n';
  }
}

nlohmann::json sweep_to_json(const SweepResult& result) {
  nlohmann::json grid = nlohmann::json::array();
  for (const SweepPoint& point : result.grid) {
    nlohmann::json record = {{"theta_a", point.theta_a},
                             {"theta_b", point.theta_b},
                             {"normalized_yield", point.normalized_yield}};
    if (point.concurrence.has_value()) {
      record["concurrence"] = *point.concurrence;
    } else {
      record["concurrence"] = nullptr;
    }
    grid.push_back(std::move(record));
  }
  return {{"schema_version", 1},
          {"recipe", recipe_to_json(result.recipe)},
          {"grid", std::move(grid)}};
}

nlohmann::json optimum_to_json(const OptimumReport& report) {
  nlohmann::json j = {
      {"recipe", recipe_to_json(report.recipe)},
      {"best_point", {{"theta_a", report.theta_a}, {"theta_b", report.theta_b}}},
      {"concurrence_at_best", report.concurrence_at_best},
      {"normalized_yield_at_best", report.normalized_yield_at_best},
      {"simultaneous_max", report.simultaneous_max}};
  if (!report.note.empty()) {
    j["note"] = report.note;
  }
  return j;
}

}  // namespace entx
