#pragma once

#include <functional>
#include <string>
#include <vector>

#include "made/autodiff.hpp"

namespace made {

struct ParameterCheck {
  std::string name;
  double max_relative_error = 0.0;
  std::size_t checked = 0;
  /// Coordinates skipped because one-sided differences disagree (kink).
  std::size_t excluded = 0;
};

struct GradCheckReport {
  std::vector<ParameterCheck> parameters;
  double max_relative_error = 0.0;
  std::size_t excluded = 0;
};

/// Compares tape gradients with central differences, perturbing every
/// coordinate of every listed parameter by +-h.
///
/// Relative error is |a - n| / max(|a|, |n|, 1e-6). Throws NumericError if the
/// closure returns a non-finite loss.
GradCheckReport finite_difference_check(const std::function<Var(Tape&)>& loss_fn,
                                        const std::vector<Parameter*>& params, double h = 1e-5);

}  // namespace made
