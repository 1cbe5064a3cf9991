// Closed-form expressions for the three post-selected pass operators and
// their composition, entered entry by entry from the analytic expansions.
// These are frozen expected values for tests; the library never uses them.
//
// Basis order on A (x) B: |uu>, |ud>, |du>, |dd| (up = 0). With
// s_a = sin(theta_a), c_a = cos(theta_a), s_b = sin(theta_b),
// c_b = cos(theta_b):
//
//   rightward up->down:  -i [ s_a |u><d|_A (x) (|d><d| + c_b |u><u|)_B
//                            + s_b (|u><u| + c_a |d><d|)_A (x) |u><d|_B ]
//   leftward  up->down:  -i [ s_a |u><d|_A (x) (|u><u| + c_b |d><d|)_B
//                            + s_b (|d><d| + c_a |u><u|)_A (x) |u><d|_B ]
//   rightward down->up:  -i [ s_a |d><u|_A (x) (|u><u| + c_b |d><d|)_B
//                            + s_b (|d><d| + c_a |u><u|)_A (x) |d><u|_B ]
//
// and the three-pass composition is the rank-one map
//   2 i s_a c_a s_b (c_a s_b |ud> + s_a |du>) <dd|.
#pragma once

#include <cmath>

#include "entx/hamiltonians.hpp"
#include "entx/linalg.hpp"

namespace closed_forms {

using entx::Complex;
using entx::ComplexMatrix;

inline constexpr Complex kMinusI{0.0, -1.0};

struct Trig {
  double sa, ca, sb, cb;
  explicit Trig(const entx::CouplingParams& p)
      : sa(std::sin(p.theta_a)),
        ca(std::cos(p.theta_a)),
        sb(std::sin(p.theta_b)),
        cb(std::cos(p.theta_b)) {}
};

inline ComplexMatrix rightward_raising(const entx::CouplingParams& p) {
  const Trig t(p);
  ComplexMatrix k = ComplexMatrix::Zero(4, 4);
  k(0, 1) = t.sb;
  k(0, 2) = t.sa * t.cb;
  k(1, 3) = t.sa;
  k(2, 3) = t.ca * t.sb;
  return kMinusI * k;
}

inline ComplexMatrix leftward_raising(const entx::CouplingParams& p) {
  const Trig t(p);
  ComplexMatrix k = ComplexMatrix::Zero(4, 4);
  k(0, 1) = t.ca * t.sb;
  k(0, 2) = t.sa;
  k(1, 3) = t.sa * t.cb;
  k(2, 3) = t.sb;
  return kMinusI * k;
}

inline ComplexMatrix rightward_lowering(const entx::CouplingParams& p) {
  const Trig t(p);
  ComplexMatrix k = ComplexMatrix::Zero(4, 4);
  k(1, 0) = t.ca * t.sb;
  k(2, 0) = t.sa;
  k(3, 1) = t.sa * t.cb;
  k(3, 2) = t.sb;
  return kMinusI * k;
}

inline ComplexMatrix three_pass_composition(const entx::CouplingParams& p) {
  const Trig t(p);
  const Complex factor = Complex{0.0, 2.0} * t.sa * t.ca * t.sb;
  ComplexMatrix v = ComplexMatrix::Zero(4, 4);
  v(1, 3) = factor * t.ca * t.sb;
  v(2, 3) = factor * t.sa;
  return v;
}

}  // namespace closed_forms
