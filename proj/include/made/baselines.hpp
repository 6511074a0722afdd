#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "made/gnn.hpp"
#include "made/graph.hpp"
#include "made/isolation.hpp"
#include "made/training.hpp"

namespace made {

enum class Method { Vanilla, EdgeDropout, Finetune, Abl, SimilarityPrune, Made };

Method parse_method(const std::string& s);
std::string to_string(Method m);

struct BaselineConfig {
  Method method = Method::Vanilla;
  double dropout_p = 0.2;
  std::size_t finetune_epochs = 40;
  double abl_gamma = 0.5;
  /// Fraction of the train split isolated by ABL (injection-rate estimate).
  double abl_isolation_rate = 0.1;
  std::size_t abl_warm_epochs = 10;
  std::size_t unlearn_epochs = 5;
  /// Unlearning runs at this multiple of the base learning rate.
  double unlearn_lr_scale = 0.1;
  double unlearn_clip = 5.0;
  double prune_tau = 0.01;

  void validate() const;
};

struct TrainedModel {
  GnnModel model;
  TrainLog log;
  LoopResult loop;
};

/// Gradient ascent on the cross-entropy of the listed graphs (whole-graph
/// unlearning), each sample's gradient clipped to `clip`.
LoopResult unlearn_graphs(GnnModel& model, const GraphDataset& ds, const std::vector<std::size_t>& ids,
                          const TrainSchedule& schedule, const BaselineConfig& baseline, std::uint64_t seed,
                          TrainLog* log = nullptr);

/// Vanilla training followed by whole-graph unlearning of `unlearn`.
/// An empty set leaves the vanilla model untouched.
TrainedModel train_then_unlearn(const GraphDataset& ds, const ModelConfig& config, const TrainSchedule& schedule,
                                const std::vector<std::size_t>& unlearn, const BaselineConfig& baseline,
                                std::uint64_t seed);

TrainedModel train_vanilla(const GraphDataset& ds, const ModelConfig& config, const TrainSchedule& schedule,
                           std::uint64_t seed);

/// Each epoch every edge of every visited graph is dropped with probability p.
/// Drops come from a stream separate from the model and shuffling streams.
TrainedModel edge_dropout_train(const GraphDataset& ds, const ModelConfig& config, const TrainSchedule& schedule,
                                double p, std::uint64_t seed);

/// Continues plain cross-entropy training on D_clean at 0.1x the base rate.
TrainedModel finetune_defense(GnnModel model, const GraphDataset& ds, const std::vector<std::size_t>& d_clean,
                              const TrainSchedule& schedule, std::size_t epochs, std::uint64_t seed);

struct AblResult {
  TrainedModel trained;
  std::vector<std::size_t> isolated;  // sorted
  std::vector<double> warm_losses;    // parallel to the train split
};

/// Warm-up with CE * sign(CE - gamma), isolation of the lowest-loss fraction,
/// training on the remaining graphs, then whole-graph unlearning of the isolated ones.
AblResult abl_defense(const GraphDataset& ds, const ModelConfig& config, const TrainSchedule& schedule,
                      const BaselineConfig& baseline, std::uint64_t seed);

/// Edge similarity of raw features in [0, 1]: Jaccard when both rows are 0/1,
/// otherwise cosine floored at 0. Identical rows score 1.
double feature_similarity(std::span<const double> a, std::span<const double> b);
/// Drops every edge whose endpoint similarity is below tau.
Graph similarity_prune(const Graph& g, double tau);
GraphDataset similarity_prune(const GraphDataset& ds, double tau);

}  // namespace made
