#pragma once

#include <cstdint>
#include <vector>

#include "made/attack.hpp"
#include "made/gnn.hpp"
#include "made/training.hpp"

namespace made {

/// Mean cosine similarity of raw endpoint features over the edges; 1.0 for an edgeless graph.
double graph_homophily(const Graph& g);

/// Fraction of v's 2-hop ego-graph neighbors sharing v's pseudo-label; 1.0 when v is isolated.
double node_homophily(std::size_t v, const std::vector<std::vector<std::size_t>>& adj, const std::vector<int>& pseudo);

struct HomophilyStats {
  std::vector<std::size_t> ids;
  std::vector<double> scores;  // parallel to ids
  double mu = 0.0;
  double sigma = 0.0;          // population standard deviation
};

/// Scores for the listed samples, with mu and sigma over those samples.
HomophilyStats homophily_stats(std::vector<std::size_t> ids, std::vector<double> scores);
HomophilyStats graph_homophily_stats(const GraphDataset& ds, const std::vector<std::size_t>& ids);

/// Ids whose score lies outside [mu - sigma, mu + sigma]; empty when sigma == 0.
std::vector<std::size_t> deviant_range_select(const HomophilyStats& stats);

struct WarmupResult {
  std::vector<double> losses;  // parallel to the trained ids
  /// Mean loss per epoch over the `tracked` ids and over the rest (when tracking).
  std::vector<double> tracked_curve;
  std::vector<double> other_curve;
  LoopResult loop;
};

/// Plain cross-entropy warm-up followed by one pass of per-sample losses.
/// When `tracked` is non-empty the per-epoch mean losses of the tracked ids
/// and of the remaining ids are recorded.
WarmupResult warmup_train(GnnModel& model, const GraphDataset& ds, const std::vector<std::size_t>& ids,
                          std::size_t epoch_warm, const TrainSchedule& schedule, std::uint64_t seed,
                          const std::vector<std::size_t>& tracked = {});

struct IsolationResult {
  std::vector<std::size_t> d_h, d_l, d_bad, d_clean;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  std::vector<std::size_t> ids;  // training ids the selection ran over
  std::vector<double> losses;    // warm-up loss per id
  HomophilyStats homophily;

  bool in_bad(std::size_t id) const;
  bool in_clean(std::size_t id) const;
};

/// ceil(rate * n) with a tolerance for representation error in rate * n.
std::size_t rate_count(double rate, std::size_t n);

/// Builds D_bad (size ceil(alpha1 * N)) from the homophily-flagged ids,
/// truncated by largest deviation or topped up with the lowest-loss ids, and
/// D_clean as the ceil(alpha2 * N) highest-loss ids outside D_bad.
IsolationResult form_subsets(const std::vector<std::size_t>& ids, const std::vector<double>& losses,
                             const std::vector<std::size_t>& d_h, const HomophilyStats& stats, double alpha1,
                             double alpha2);

Json to_json(const IsolationResult& r);
IsolationResult isolation_from_json(const Json& j);

struct IsolationQuality {
  double precision = 0.0;
  double recall = 0.0;
  double precision_max = 0.0;
  double recall_max = 0.0;
  bool empty = false;  // D_bad empty, precision undefined
};

IsolationQuality isolation_precision_recall(const std::vector<std::size_t>& d_bad,
                                            const std::vector<std::size_t>& poisoned);

}  // namespace made
