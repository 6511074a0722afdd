#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "made/adam.hpp"
#include "made/gnn.hpp"
#include "made/json_io.hpp"

namespace made {

struct TrainSchedule {
  std::size_t epochs = 200;
  double learning_rate = 0.01;
  double decay = 0.1;
  std::size_t decay_period = 40;
  /// Samples whose gradients are averaged per optimizer step.
  std::size_t batch_size = 1;
  double beta1 = 0.5;
  double beta2 = 0.999;
  double weight_decay = 5e-4;

  AdamConfig adam() const { return {learning_rate, beta1, beta2, 1e-8, weight_decay}; }
  void validate() const;
};

/// One JSON object per epoch.
class TrainLog {
 public:
  void add(Json entry) { entries_.push_back(std::move(entry)); }
  const std::vector<Json>& entries() const { return entries_; }
  void write_jsonl(const std::filesystem::path& path) const;

 private:
  std::vector<Json> entries_;
};

struct SampleLoss {
  Var loss;
  /// Clip this sample's gradient to this L2 norm before accumulation (0 = off).
  double clip = 0.0;
  /// Index into the group names reported in the log.
  std::size_t group = 0;
};

using SampleLossFn = std::function<SampleLoss(Tape&, std::size_t sample)>;

struct LoopOptions {
  std::vector<std::string> groups{"loss"};
  /// Called after every epoch with the 0-based epoch index.
  std::function<void(std::size_t)> on_epoch;
};

struct LoopResult {
  std::size_t epochs_completed = 0;
  bool diverged = false;
  std::string failure;
};

/// Shuffled mini-batch loop with step-decayed Adam. On a non-finite loss the
/// parameters are restored to the start of the failing epoch and the loop stops.
LoopResult run_training_loop(const std::vector<Parameter*>& params, const std::vector<std::size_t>& samples,
                             const SampleLossFn& loss_fn, const TrainSchedule& schedule, std::uint64_t seed,
                             TrainLog* log, const LoopOptions& options = {});

/// Cross-entropy of one graph under the model (optionally masked).
Var graph_ce(GnnModel& model, Tape& tape, const Graph& g, int label, const MaskFn* masks = nullptr);

/// Plain cross-entropy training on the listed graphs.
LoopResult train_graph_ce(GnnModel& model, const GraphDataset& ds, const std::vector<std::size_t>& ids,
                          const TrainSchedule& schedule, std::uint64_t seed, TrainLog* log = nullptr);

/// Per-graph cross-entropy under the unmasked model.
std::vector<double> per_sample_losses(GnnModel& model, const GraphDataset& ds, const std::vector<std::size_t>& ids);

/// Full-batch node training: one optimizer step per epoch on the listed nodes.
LoopResult train_node_ce(GnnModel& model, const NodeDataset& ds, const std::vector<std::size_t>& nodes,
                         const TrainSchedule& schedule, std::uint64_t seed, TrainLog* log = nullptr,
                         const MaskFn* masks = nullptr);

}  // namespace made
