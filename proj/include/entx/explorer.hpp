#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "entx/entanglement.hpp"
#include "entx/processes.hpp"

namespace entx {

//! Rectangular parameter grid; each axis is an inclusive linspace
//! (a single-point axis sits at its minimum).
struct GridSpec {
  double theta_a_min = 0.0;
  double theta_a_max = 0.0;
  int theta_a_count = 1;
  double theta_b_min = 0.0;
  double theta_b_max = 0.0;
  int theta_b_count = 1;

  //! 201 points per axis with spacing pi/204, from pi/102 to 101*pi/102.
  //! Stays strictly inside (0, pi), is symmetric under theta -> pi - theta,
  //! and contains the optimum (pi/4, pi/2) exactly.
  static GridSpec default_grid();

  std::vector<double> theta_a_values() const;
  std::vector<double> theta_b_values() const;

  void validate() const;  // throws std::invalid_argument
};

struct SweepPoint {
  double theta_a;
  double theta_b;
  //! Absent where the pipeline annihilates the input (no conditional state).
  std::optional<double> concurrence;
  double normalized_yield;
};

//! Row-major grid of per-point records: theta_a is the slow axis.
struct SweepResult {
  Recipe recipe;
  GridSpec spec;
  std::vector<SweepPoint> grid;
};

//! Best grid point of a sweep. simultaneous_max is set only when both the
//! concurrence and the normalized yield reach 1 within 1e-9 at that point.
struct OptimumReport {
  Recipe recipe;
  double theta_a = 0.0;
  double theta_b = 0.0;
  double concurrence_at_best = 0.0;
  double normalized_yield_at_best = 0.0;
  bool simultaneous_max = false;
  std::string note;
};

//! The four interaction orderings: the third pass is fixed to
//! (rightward, down -> up); the first two passes are up -> down with each
//! direction choice. The optimal_recipe() ordering is among them.
std::array<Recipe, 4> enumerate_recipes();

//! Concurrence and normalized yield (success probability per unit of the
//! |down down> population) of the pipeline applied to |down down><down down|,
//! evaluated at every grid point, assembled row-major.
SweepResult sweep(const Recipe& recipe, const GridSpec& spec);

//! Maximizes normalized yield over the points whose concurrence reaches 1
//! within 1e-6; when no point qualifies, falls back to the largest
//! concurrence * yield product as a diagnostic. Ties break toward the
//! lexicographically smallest (theta_a, theta_b).
OptimumReport find_optimum(const SweepResult& result);

//! Two unconditional state-transfer passes (mediator prepared |up>, X-A then
//! X-B, mediator traced out, no post-selection) applied to rho; at
//! theta = pi/2 each pass deposits |up> on its qubit. Returns the final
//! state and its fidelity to |up up>.
std::pair<DensityMatrix, double> initialization_demo(const DensityMatrix& rho,
                                                     const CouplingParams& params);

// CSV schema: header theta_a,theta_b,concurrence,normalized_yield; absent
// concurrence is an empty field. JSON mirrors the same records.
void write_sweep_csv(const SweepResult& result, std::ostream& out);
nlohmann::json sweep_to_json(const SweepResult& result);
nlohmann::json optimum_to_json(const OptimumReport& report);

}  // namespace entx
