#pragma once

#include <array>

#include <json.hpp>

#include "entx/errors.hpp"
#include "entx/hamiltonians.hpp"
#include "entx/states.hpp"

namespace entx {

//! Probabilities at or below this are treated as impossible outcomes.
inline constexpr double kDefaultEpsP = 1e-12;

//! Travel direction of the mediator: rightward means X interacts with A
//! first and then with B; leftward is the opposite order.
enum class Direction { rightward, leftward };

std::string to_string(Direction d);
Direction direction_from_string(const std::string& s);

//! One mediator pass: preparation, two consecutive interactions in the
//! given order, post-selected measurement outcome on the mediator.
struct ProcessSpec {
  Direction direction;
  Spin prepared;
  Spin outcome;
};

//! An ordered triple of passes; the third is applied last.
struct Recipe {
  std::array<ProcessSpec, 3> processes;
};

//! The rightward/leftward/rightward sequence with up->down, up->down,
//! down->up post-selections; the ordering that admits a simultaneous
//! concurrence and yield maximum.
Recipe optimal_recipe();

struct ProcessResult {
  DensityMatrix state;
  double probability;
};

struct ProtocolResult {
  DensityMatrix state;
  double yield_p;
};

//! Conditional operator <outcome|_X U_second U_first |prepared>_X reduced to
//! the 4-dim A (x) B space. Always computed from the full 8-dim propagators;
//! operator norm is at most 1.
ComplexMatrix kraus_operator(const ProcessSpec& spec,
                             const CouplingParams& params,
                             bool include_free = false);

//! Post-selected update rho -> K rho K^dag / p with p = Tr(K rho K^dag).
//! Throws ImpossibleOutcomeError when p <= eps_p.
ProcessResult apply_process(const DensityMatrix& rho, const ProcessSpec& spec,
                            const CouplingParams& params,
                            bool include_free = false,
                            double eps_p = kDefaultEpsP);

//! Ordered product K3 K2 K1 of the three per-pass operators.
ComplexMatrix pipeline_operator(const Recipe& recipe,
                                const CouplingParams& params,
                                bool include_free = false);

//! Full three-pass protocol: final state V rho V^dag / P and overall success
//! probability P = Tr(V rho V^dag). Equals the sequential composition of
//! three apply_process calls, with the per-pass probabilities multiplying.
ProtocolResult run_protocol(const DensityMatrix& rho, const Recipe& recipe,
                            const CouplingParams& params,
                            bool include_free = false,
                            double eps_p = kDefaultEpsP);

//! Independent evaluation of one pass on the full 8-dim space: tensor the
//! prepared mediator onto rho, evolve, project the mediator on the outcome,
//! trace it out, normalize. Must agree with apply_process.
ProcessResult full_space_oracle(const DensityMatrix& rho,
                                const ProcessSpec& spec,
                                const CouplingParams& params,
                                bool include_free = false,
                                double eps_p = kDefaultEpsP);

// Recipe JSON schema: list of exactly three objects
// {"direction": "rightward"|"leftward", "prepared": "up"|"down",
//  "outcome": "up"|"down"}.
nlohmann::json recipe_to_json(const Recipe& recipe);
Recipe recipe_from_json(const nlohmann::json& j);

}  // namespace entx
