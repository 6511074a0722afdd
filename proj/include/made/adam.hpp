#pragma once

#include <cstdint>
#include <vector>

#include "made/autodiff.hpp"

namespace made {

struct AdamConfig {
  double learning_rate = 0.01;
  double beta1 = 0.5;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  /// Added to the gradient as weight_decay * value before the moment updates.
  double weight_decay = 5e-4;
};

struct AdamState {
  std::vector<Tensor> m;
  std::vector<Tensor> v;
  std::uint64_t t = 0;
};

/// Adam with bias correction over a fixed parameter list.
class Adam {
 public:
  Adam(std::vector<Parameter*> params, AdamConfig config);

  /// Applies one update and zeroes every gradient. Throws UsageError if a
  /// parameter has not received a gradient since the last step.
  void step();
  void zero_grad();

  void set_learning_rate(double lr) { config_.learning_rate = lr; }
  double learning_rate() const { return config_.learning_rate; }
  const AdamConfig& config() const { return config_; }
  const AdamState& state() const { return state_; }
  const std::vector<Parameter*>& parameters() const { return params_; }

 private:
  std::vector<Parameter*> params_;
  AdamConfig config_;
  AdamState state_;
};

/// Global L2 norm of the gradients; rescales them in place when it exceeds max_norm.
double clip_grad_norm(const std::vector<Parameter*>& params, double max_norm);

/// lr * factor^(floor(epoch / period)).
double step_decay(double base_lr, double factor, std::size_t period, std::size_t epoch);

}  // namespace made
