#include "entx/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "entx/entanglement.hpp"
#include "entx/explorer.hpp"
#include "entx/processes.hpp"

namespace entx {

namespace {

using linalg::max_abs;

class Draws {
 public:
  explicit Draws(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng_() >> 11) * 0x1.0p-53);
  }

  CouplingParams params() {
    return {uniform(0.0, M_PI), uniform(0.0, M_PI), uniform(0.0, 2.0 * M_PI)};
  }

  std::uint64_t raw() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

ProcessSpec random_spec(Draws& draws) {
  const auto bits = draws.raw();
  return ProcessSpec{(bits & 1) != 0 ? Direction::rightward : Direction::leftward,
                     (bits & 2) != 0 ? Spin::up : Spin::down,
                     (bits & 4) != 0 ? Spin::up : Spin::down};
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

struct Suite {
  Draws draws;
  std::optional<double> tol_override;
  std::vector<CheckResult> results;

  void record(const std::string& name, double max_error, double default_tol) {
    const double tol = tol_override.value_or(default_tol);
    results.push_back({name, max_error, tol, max_error <= tol});
  }
};

void check_generator_algebra(Suite& s) {
  double worst_free = 0.0;
  double worst_number = 0.0;
  const ComplexMatrix number = excitation_number();
  for (int i = 0; i < 100; ++i) {
    const CouplingParams p = s.draws.params();
    const ComplexMatrix free = h_free(p.omega_t);
    const ComplexMatrix xa = h_int_xa(p.theta_a);
    const ComplexMatrix xb = h_int_xb(p.theta_b);
    worst_free = std::max(worst_free, max_abs(commutator(free, xa)));
    worst_free = std::max(worst_free, max_abs(commutator(free, xb)));
    worst_number = std::max(worst_number, max_abs(commutator(number, free + xa + xb)));
  }
  s.record("free-commutes-with-couplings", worst_free, 1e-12);
  s.record("excitation-number-conservation", worst_number, 1e-12);
}

void check_propagators(Suite& s) {
  double worst_unitary = 0.0;
  double worst_number = 0.0;
  double worst_sector = 0.0;
  const ComplexMatrix number = excitation_number();
  const ComplexMatrix eye = linalg::identity(8);
  for (int i = 0; i < 100; ++i) {
    const CouplingParams p = s.draws.params();
    for (Coupling which : {Coupling::XA, Coupling::XB}) {
      for (bool include_free : {false, true}) {
        const ComplexMatrix u = propagator(which, p, include_free);
        worst_unitary = std::max(worst_unitary, max_abs(u * u.adjoint() - eye));
        worst_number =
            std::max(worst_number, max_abs(u * number * u.adjoint() - number));
        // Cross-sector elements: basis states with different up-spin counts.
        for (Eigen::Index row = 0; row < 8; ++row) {
          for (Eigen::Index col = 0; col < 8; ++col) {
            const int row_n = static_cast<int>(std::lround(number(row, row).real()));
            const int col_n = static_cast<int>(std::lround(number(col, col).real()));
            if (row_n != col_n) {
              worst_sector = std::max(worst_sector, std::abs(u(row, col)));
            }
          }
        }
      }
    }
  }
  s.record("propagator-unitarity", worst_unitary, 1e-10);
  s.record("propagator-conserves-excitation", worst_number, 1e-10);
  s.record("propagator-sector-block-diagonal", worst_sector, 1e-12);
}

void check_kraus_channel(Suite& s) {
  double worst_complete = 0.0;
  double worst_trace = 0.0;
  const ComplexMatrix eye = linalg::identity(4);
  for (int i = 0; i < 100; ++i) {
    const CouplingParams p = s.draws.params();
    const ProcessSpec base = random_spec(s.draws);
    const ComplexMatrix k_up =
        kraus_operator({base.direction, base.prepared, Spin::up}, p);
    const ComplexMatrix k_down =
        kraus_operator({base.direction, base.prepared, Spin::down}, p);
    worst_complete = std::max(
        worst_complete,
        max_abs(k_up.adjoint() * k_up + k_down.adjoint() * k_down - eye));
    const DensityMatrix rho = random_density(2, s.draws.raw());
    const ComplexMatrix unconditional = k_up * rho.matrix() * k_up.adjoint() +
                                        k_down * rho.matrix() * k_down.adjoint();
    worst_trace =
        std::max(worst_trace, std::abs(unconditional.trace().real() - 1.0));
  }
  s.record("kraus-completeness", worst_complete, 1e-10);
  s.record("unconditional-trace-preservation", worst_trace, 1e-10);
}

void check_excitation_bookkeeping(Suite& s) {
  // A prepared-up, outcome-down pass must raise the A+B excitation count by
  // exactly one on every basis state it does not annihilate.
  double worst = 0.0;
  auto ups_in = [](Eigen::Index idx) {
    return static_cast<int>(2 - ((idx >> 1) & 1) - (idx & 1));
  };
  for (int i = 0; i < 50; ++i) {
    const CouplingParams p = s.draws.params();
    for (Direction d : {Direction::rightward, Direction::leftward}) {
      const ComplexMatrix k = kraus_operator({d, Spin::up, Spin::down}, p);
      for (Eigen::Index col = 0; col < 4; ++col) {
        for (Eigen::Index row = 0; row < 4; ++row) {
          if (ups_in(row) != ups_in(col) + 1) {
            worst = std::max(worst, std::abs(k(row, col)));
          }
        }
      }
    }
  }
  s.record("raising-pass-excitation-bookkeeping", worst, 1e-12);
}

void check_oracle_equivalence(Suite& s) {
  double worst_state = 0.0;
  double worst_prob = 0.0;
  double worst_free_prob = 0.0;
  double worst_free_conc = 0.0;
  int done = 0;
  while (done < 100) {
    const CouplingParams p = s.draws.params();
    const ProcessSpec spec = random_spec(s.draws);
    const DensityMatrix rho = random_density(2, s.draws.raw());
    ProcessResult direct{maximally_mixed(2), 0.0};
    ProcessResult oracle{maximally_mixed(2), 0.0};
    try {
      direct = apply_process(rho, spec, p);
      oracle = full_space_oracle(rho, spec, p);
    } catch (const ImpossibleOutcomeError&) {
      continue;  // both paths must agree that the outcome is impossible
    }
    worst_state = std::max(worst_state,
                           max_abs(direct.state.matrix() - oracle.state.matrix()));
    worst_prob = std::max(worst_prob,
                          std::abs(direct.probability - oracle.probability));

    // Free-phase invariance: probabilities and downstream concurrence are
    // insensitive to the free Hamiltonian at resonance.
    const ProcessResult with_free = apply_process(rho, spec, p, true);
    const ProcessResult oracle_free = full_space_oracle(rho, spec, p, true);
    worst_free_prob = std::max(
        worst_free_prob, std::abs(with_free.probability - direct.probability));
    worst_free_prob = std::max(
        worst_free_prob, std::abs(oracle_free.probability - direct.probability));
    worst_free_conc =
        std::max(worst_free_conc, std::abs(concurrence(with_free.state).value -
                                           concurrence(direct.state).value));
    ++done;
  }
  s.record("kraus-vs-full-space-state", worst_state, 1e-10);
  s.record("kraus-vs-full-space-probability", worst_prob, 1e-10);
  s.record("free-phase-invariance-probability", worst_free_prob, 1e-10);
  s.record("free-phase-invariance-concurrence", worst_free_conc, 1e-10);
}

void check_protocol(Suite& s) {
  double worst_rank = 0.0;
  double worst_product = 0.0;
  double worst_state = 0.0;
  double worst_yield = 0.0;
  double worst_conc = 0.0;
  const Recipe recipe = optimal_recipe();
  int done = 0;
  while (done < 100) {
    const CouplingParams p = s.draws.params();
    const DensityMatrix rho = random_density(2, s.draws.raw());

    const ComplexMatrix v = pipeline_operator(recipe, p);
    ComplexMatrix gram = v.adjoint() * v;
    gram = (gram + gram.adjoint().eval()) / 2.0;
    // Rank one: all squared singular values but the first vanish.
    worst_rank = std::max(
        worst_rank, std::abs(linalg::eig_hermitian(gram).eigenvalues(1)));

    ProtocolResult direct{maximally_mixed(2), 0.0};
    try {
      direct = run_protocol(rho, recipe, p);
    } catch (const ImpossibleOutcomeError&) {
      continue;
    }
    double product = 1.0;
    DensityMatrix stage = rho;
    bool impossible = false;
    for (const ProcessSpec& spec : recipe.processes) {
      try {
        ProcessResult r = apply_process(stage, spec, p);
        product *= r.probability;
        stage = std::move(r.state);
      } catch (const ImpossibleOutcomeError&) {
        impossible = true;
        break;
      }
    }
    if (!impossible) {
      worst_product = std::max(worst_product, std::abs(product - direct.yield_p));
      worst_state = std::max(worst_state,
                             max_abs(stage.matrix() - direct.state.matrix()));
    }

    const double rho_dd = rho.matrix()(3, 3).real();
    worst_yield = std::max(
        worst_yield, std::abs(direct.yield_p - analytic_yield(p) * rho_dd));
    if (rho_dd > 1e-6) {
      worst_conc = std::max(worst_conc, std::abs(concurrence(direct.state).value -
                                                 analytic_concurrence(p)));
    }
    ++done;
  }
  s.record("pipeline-rank-one", worst_rank, 1e-10);
  s.record("sequential-probabilities-multiply", worst_product, 1e-12);
  s.record("sequential-state-composition", worst_state, 1e-10);
  s.record("protocol-yield-closed-form", worst_yield, 1e-10);
  s.record("protocol-concurrence-closed-form", worst_conc, 1e-9);
}

}  // namespace

std::vector<CheckResult> run_verification(std::uint64_t seed,
                                          std::optional<double> tol_override) {
  Suite suite{Draws(seed), tol_override, {}};
  check_generator_algebra(suite);
  check_propagators(suite);
  check_kraus_channel(suite);
  check_excitation_bookkeeping(suite);
  check_oracle_equivalence(suite);
  check_protocol(suite);
  return suite.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace entx
