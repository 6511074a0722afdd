#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "made/attack.hpp"
#include "made/gnn.hpp"
#include "made/graph.hpp"
#include "made/isolation.hpp"

namespace made {

/// Predicted class of a whole graph.
using GraphPredictor = std::function<int(const Graph&)>;
/// Predicted classes of the listed nodes of a graph.
using NodePredictor = std::function<std::vector<int>(const Graph&, const std::vector<std::size_t>&)>;

GraphPredictor plain_predictor(GnnModel& model);
/// Prediction through the MADE masks.
GraphPredictor made_predictor(GnnModel& model);
/// Prunes low-similarity edges before the plain forward.
GraphPredictor pruned_predictor(GnnModel& model, double tau);

NodePredictor plain_node_predictor(GnnModel& model);
NodePredictor made_node_predictor(GnnModel& model, const IsolationResult& isolation, bool redetect);

/// Top-1 accuracy over the listed graphs.
double compute_acc(const GraphPredictor& predict, const GraphDataset& ds, const std::vector<std::size_t>& ids);

/// Fraction of triggered copies predicted as the target, over the listed
/// graphs whose label differs from the target.
double compute_asr(const GraphPredictor& predict, const GraphDataset& ds, const std::vector<std::size_t>& ids,
                   const TriggerSpec& spec, std::uint64_t seed);

double compute_node_acc(const NodePredictor& predict, const NodeDataset& ds, const std::vector<std::size_t>& nodes);

/// Each eligible node is evaluated on its own copy of the graph carrying one
/// trigger attached to that node.
double compute_node_asr(const NodePredictor& predict, const NodeDataset& ds, const std::vector<std::size_t>& nodes,
                        const TriggerSpec& spec, std::uint64_t seed);

}  // namespace made
