#include "entx/processes.hpp"

#include <stdexcept>
#include <utility>

namespace entx {

namespace {

Eigen::Index spin_index(Spin s) { return s == Spin::up ? 0 : 1; }

ComplexMatrix pass_unitary(const ProcessSpec& spec, const CouplingParams& params,
                           bool include_free) {
  const Coupling first =
      spec.direction == Direction::rightward ? Coupling::XA : Coupling::XB;
  const Coupling second =
      spec.direction == Direction::rightward ? Coupling::XB : Coupling::XA;
  return propagator(second, params, include_free) *
         propagator(first, params, include_free);
}

}  // namespace

std::string to_string(Direction d) {
  return d == Direction::rightward ? "rightward" : "leftward";
}

Direction direction_from_string(const std::string& s) {
  if (s == "rightward") {
    return Direction::rightward;
  }
  if (s == "leftward") {
    return Direction::leftward;
  }
  throw std::invalid_argument("unknown direction '" + s +
                              "' (expected \"rightward\" or \"leftward\")");
}

Recipe optimal_recipe() {
  return Recipe{{{{Direction::rightward, Spin::up, Spin::down},
                  {Direction::leftward, Spin::up, Spin::down},
                  {Direction::rightward, Spin::down, Spin::up}}}};
}

ComplexMatrix kraus_operator(const ProcessSpec& spec,
                             const CouplingParams& params, bool include_free) {
  const ComplexMatrix u = pass_unitary(spec, params, include_free);
  const Eigen::Index in = spin_index(spec.prepared);
  const Eigen::Index out = spin_index(spec.outcome);
  // Indexing on A (x) B (x) X: full index = 4a + 2b + x.
  ComplexMatrix k(4, 4);
  for (Eigen::Index row = 0; row < 4; ++row) {
    for (Eigen::Index col = 0; col < 4; ++col) {
      k(row, col) = u(2 * row + out, 2 * col + in);
    }
  }
  return k;
}

ProcessResult apply_process(const DensityMatrix& rho, const ProcessSpec& spec,
                            const CouplingParams& params, bool include_free,
                            double eps_p) {
  if (rho.num_qubits() != 2) {
    throw std::invalid_argument("apply_process expects a 2-qubit state");
  }
  const ComplexMatrix k = kraus_operator(spec, params, include_free);
  ComplexMatrix updated = k * rho.matrix() * k.adjoint();
  const double probability = updated.trace().real();
  if (probability <= eps_p) {
    throw ImpossibleOutcomeError(probability);
  }
  updated /= probability;
  return {DensityMatrix(2, std::move(updated)), probability};
}

ComplexMatrix pipeline_operator(const Recipe& recipe,
                                const CouplingParams& params,
                                bool include_free) {
  ComplexMatrix v = ComplexMatrix::Identity(4, 4);
  for (const ProcessSpec& spec : recipe.processes) {
    v = kraus_operator(spec, params, include_free) * v;
  }
  return v;
}

ProtocolResult run_protocol(const DensityMatrix& rho, const Recipe& recipe,
                            const CouplingParams& params, bool include_free,
                            double eps_p) {
  if (rho.num_qubits() != 2) {
    throw std::invalid_argument("run_protocol expects a 2-qubit state");
  }
  const ComplexMatrix v = pipeline_operator(recipe, params, include_free);
  ComplexMatrix extracted = v * rho.matrix() * v.adjoint();
  const double yield_p = extracted.trace().real();
  if (yield_p <= eps_p) {
    throw ImpossibleOutcomeError(yield_p);
  }
  extracted /= yield_p;
  return {DensityMatrix(2, std::move(extracted)), yield_p};
}

ProcessResult full_space_oracle(const DensityMatrix& rho,
                                const ProcessSpec& spec,
                                const CouplingParams& params,
                                bool include_free, double eps_p) {
  if (rho.num_qubits() != 2) {
    throw std::invalid_argument("full_space_oracle expects a 2-qubit state");
  }
  const ComplexMatrix u = pass_unitary(spec, params, include_free);

  ComplexMatrix prepared = ComplexMatrix::Zero(2, 2);
  prepared(spin_index(spec.prepared), spin_index(spec.prepared)) = 1.0;
  ComplexMatrix outcome = ComplexMatrix::Zero(2, 2);
  outcome(spin_index(spec.outcome), spin_index(spec.outcome)) = 1.0;

  const ComplexMatrix joint = linalg::tensor(rho.matrix(), prepared);
  const ComplexMatrix evolved = u * joint * u.adjoint();
  const ComplexMatrix project = linalg::tensor(linalg::identity(4), outcome);
  const ComplexMatrix selected = project * evolved * project;

  const double probability = selected.trace().real();
  if (probability <= eps_p) {
    throw ImpossibleOutcomeError(probability);
  }
  ComplexMatrix reduced = linalg::partial_trace(selected, {2, 2, 2}, 2);
  reduced /= probability;
  return {DensityMatrix(2, std::move(reduced)), probability};
}

nlohmann::json recipe_to_json(const Recipe& recipe) {
  nlohmann::json j = nlohmann::json::array();
  for (const ProcessSpec& spec : recipe.processes) {
    j.push_back({{"direction", to_string(spec.direction)},
                 {"prepared", to_string(spec.prepared)},
                 {"outcome", to_string(spec.outcome)}});
  }
  return j;
}

Recipe recipe_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw std::invalid_argument("recipe JSON must be a list of exactly 3 processes");
  }
  Recipe recipe{};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& p = j.at(i);
    if (!p.is_object()) {
      throw std::invalid_argument("recipe process must be an object");
    }
    recipe.processes[i] = ProcessSpec{
        direction_from_string(p.at("direction").get<std::string>()),
        spin_from_string(p.at("prepared").get<std::string>()),
        spin_from_string(p.at("outcome").get<std::string>())};
  }
  return recipe;
}

}  // namespace entx
