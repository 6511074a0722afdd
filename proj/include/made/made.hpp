#pragma once

#include <cstdint>
#include <vector>

#include "made/gnn.hpp"
#include "made/isolation.hpp"
#include "made/training.hpp"

namespace made {

/// Mean cosine similarity of each node's projection to its neighbors'
/// projections; isolated nodes score 1.0.
std::vector<double> natural_scores(const Tensor& projections, std::size_t n, const std::vector<Edge>& edges);

/// Top ceil(beta * n) nodes by score, ties to the lower index; sorted ascending.
std::vector<std::size_t> select_clean_nodes(const std::vector<double>& scores, double beta);

/// Edge weights: 1 when both endpoints are clean, otherwise the projection
/// cosine clamped to [0, 1]. Self-loops: 1 for clean nodes, otherwise the mean
/// of incident edge weights.
LayerMaskVars compute_edge_masks(Tape& tape, Var projections, const Graph& g,
                                 const std::vector<std::size_t>& clean);

/// Mask function recomputing projections, natural scores, V_clean and masks
/// from the current parameters at every layer. If `record` is given, the
/// plain values of every layer are appended to it.
MaskFn made_masks(GnnModel& model, const Graph& g, MaskSet* record = nullptr);

/// Softmax probability of the stored label.
Var loss_adv(Var logits, int label);
/// Cross-entropy of the masked logits plus lambda times the mean row L2 gap
/// between masked and unmasked logits.
Var loss_clean(Var masked, Var unmasked, std::span<const int> labels, double lambda);

struct MadeConfig {
  ModelConfig model;
  TrainSchedule schedule;
  std::size_t epoch_warm = 10;
  double alpha1 = 0.1;
  double alpha2 = 0.5;
  /// Gradient-norm cap for adversarial steps.
  double unlearn_clip = 5.0;
};

struct MadeResult {
  GnnModel model;
  IsolationResult isolation;
  TrainLog log;
  LoopResult loop;
};

/// Homophily and warm-up isolation followed by masked training with the
/// adversarial loss on D_bad and the clean loss on D_clean.
MadeResult train_made(const GraphDataset& ds, const MadeConfig& config, std::uint64_t seed);

/// Logits (1 x C) of one graph under MADE masks.
Tensor infer_made(GnnModel& model, const Graph& g, MaskSet* record = nullptr);

// ---------------------------------------------------------------- node task

/// Hard masks: 1 on edges whose endpoints are both clean, 0 otherwise. Suspect
/// nodes keep their self-loop.
LayerMask node_task_masks(const Graph& g, const std::vector<bool>& suspect);

struct NodeMadeConfig {
  ModelConfig model;
  TrainSchedule schedule;
  std::size_t epoch_warm = 50;
  double alpha1 = 0.1;
  double alpha2 = 0.5;
  double unlearn_clip = 5.0;
  /// Flag low-homophily nodes again at inference.
  bool redetect = true;
};

struct NodeMadeResult {
  GnnModel model;
  IsolationResult isolation;
  TrainLog log;
  LoopResult loop;
  std::vector<int> pseudo_labels;  // from the warm-up model
};

/// Pseudo-label homophily over the train nodes of a warm-up model.
HomophilyStats node_homophily_stats(const Graph& g, const std::vector<int>& pseudo, const std::vector<std::size_t>& nodes);

NodeMadeResult train_made_node(const NodeDataset& ds, const NodeMadeConfig& config, std::uint64_t seed);

/// Per-node logits for `nodes` under the node-task masks.
Tensor infer_made_node(GnnModel& model, const Graph& g, const IsolationResult& isolation, bool redetect,
                       const std::vector<std::size_t>& nodes);

}  // namespace made
