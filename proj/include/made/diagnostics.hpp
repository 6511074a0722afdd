#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "made/attack.hpp"
#include "made/baselines.hpp"
#include "made/made.hpp"
#include "made/tensor.hpp"
#include "made/text.hpp"

namespace made {

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
/// descending. Converged once the off-diagonal Frobenius norm is at most
/// tol times the matrix norm; throws NumericError after max_sweeps.
std::vector<double> symmetric_eigenvalues(const Tensor& a, double tol = 1e-10, std::size_t max_sweeps = 100);

/// Singular values (descending) from the eigenvalues of the smaller Gram matrix.
std::vector<double> feature_spectrum(const Tensor& x);

struct NodeFeatureStacks {
  Tensor backdoor;  // trigger nodes of every poisoned graph
  Tensor clean;     // host nodes of the same graphs
};

NodeFeatureStacks stack_node_features(const GraphDataset& poisoned, const PoisonRecord& record);

CsvTable spectrum_csv(const std::vector<double>& backdoor, const std::vector<double>& clean);

struct NodeGradient {
  std::size_t graph = 0;
  std::size_t node = 0;
  bool malicious = false;
  double norm = 0.0;
  bool operator==(const NodeGradient&) const = default;
};

/// L2 norm of the input-feature gradient of each node's cross-entropy loss
/// (taken against the graph's stored label), tagged by ledger membership.
std::vector<NodeGradient> gradient_magnitudes(GnnModel& model, const GraphDataset& ds,
                                              const std::vector<std::size_t>& ids, const PoisonRecord& record);

CsvTable gradients_csv(const std::vector<NodeGradient>& grads);

/// Two-sample Kolmogorov-Smirnov statistic.
double ks_distance(std::vector<double> a, std::vector<double> b);

struct SweepRow {
  std::string method;  // "whole_graph" or "made"
  double rate = 0.0;
  std::size_t unlearned = 0;
  double asr = 0.0;
  double acc = 0.0;
};

/// Whole-graph unlearning of a growing fraction of the true poisons (nested
/// subsets in a seeded order) on top of one vanilla model, plus one MADE run.
std::vector<SweepRow> unlearn_rate_sweep(const PoisonedGraphs& poisoned, const TriggerSpec& spec,
                                         const MadeConfig& made, const BaselineConfig& baseline,
                                         const std::vector<double>& rates, std::uint64_t seed);

CsvTable sweep_csv(const std::vector<SweepRow>& rows);

struct LossCurves {
  std::vector<double> poisoned;
  std::vector<double> clean;
};

/// Per-epoch mean warm-up loss of the poisoned and the clean train graphs.
LossCurves warmup_loss_curves(const GraphDataset& ds, const PoisonRecord& record, const ModelConfig& config,
                              const TrainSchedule& schedule, std::size_t epochs, std::uint64_t seed);

CsvTable loss_curves_csv(const LossCurves& curves);

}  // namespace made
