#pragma once

#include <stdexcept>
#include <string>

namespace entx {

//! Thrown when a post-selected outcome has (numerically) zero probability.
//! Carries the offending probability so callers can report it.
class ImpossibleOutcomeError : public std::runtime_error {
 public:
  explicit ImpossibleOutcomeError(double probability)
      : std::runtime_error("post-selected outcome has vanishing probability (" +
                           std::to_string(probability) + ")"),
        probability_(probability) {}

  double probability() const noexcept { return probability_; }

 private:
  double probability_;
};

//! Thrown when a closed-form state or metric is requested at a parameter
//! point where the extracted state does not exist (normalization vanishes).
class DegenerateStateError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace entx
