#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "made/graph.hpp"
#include "made/json_io.hpp"
#include "made/rng.hpp"

namespace made {

enum class FeatureMode { Random, Mean, OnehotRare };

FeatureMode parse_feature_mode(const std::string& s);
std::string to_string(FeatureMode m);

/// Per-column statistics of the node features a trigger must blend into.
struct FeatureStats {
  std::vector<double> min, max, mean;
  std::size_t attribute_dim = 0;
  /// Occurrences of each tag column; empty when the features carry no tags.
  std::vector<std::size_t> tag_counts;
};

FeatureStats feature_stats(const GraphDataset& ds);
FeatureStats feature_stats(const NodeDataset& ds);

struct TriggerConfig {
  std::size_t size = 4;
  double edge_density = 0.8;
  FeatureMode feature_mode = FeatureMode::Random;
  std::size_t attach_count = 1;
  int target_label = 0;
};

struct TriggerSpec {
  std::size_t size = 0;
  std::vector<Edge> edges;  // over 0..size-1
  Tensor features;          // size x d
  std::size_t attach_count = 1;
  int target_label = 0;
  FeatureMode feature_mode = FeatureMode::Random;
  std::uint64_t seed = 0;
  friend bool operator==(const TriggerSpec&, const TriggerSpec&) = default;
};

/// Connected Erdos-Renyi trigger (resampled until connected) with features
/// drawn per config.feature_mode.
TriggerSpec make_trigger(const FeatureStats& stats, const TriggerConfig& config, std::uint64_t seed);

struct Injection {
  Graph graph;
  std::vector<std::size_t> injected;  // appended trigger node indices
  std::vector<std::size_t> hosts;     // host nodes wired to the trigger
};

/// Appends the trigger as nodes n..n+t-1, wires attach_count distinct hosts
/// each to one random trigger node, and relabels the graph to the target.
Injection inject_graph_trigger(const Graph& graph, const TriggerSpec& spec, Rng& rng);

/// Same wiring as inject_graph_trigger but the label is kept.
Injection apply_trigger_for_eval(const Graph& graph, const TriggerSpec& spec, Rng& rng);

struct PoisonRecord {
  std::vector<std::size_t> poisoned_ids;             // sorted sample ids
  std::vector<std::vector<std::size_t>> injected;    // per poisoned id
  std::vector<int> original_labels;                  // per poisoned id
  double injection_rate = 0.0;
  friend bool operator==(const PoisonRecord&, const PoisonRecord&) = default;

  bool contains(std::size_t id) const;
};

struct PoisonedGraphs {
  GraphDataset dataset;
  PoisonRecord record;
};

/// Poisons round(alpha * |train|) train graphs drawn uniformly among those
/// whose label differs from the target. The test split is untouched.
PoisonedGraphs poison_graph_dataset(const GraphDataset& ds, const TriggerSpec& spec, double alpha, std::uint64_t seed);

struct PoisonedNodes {
  NodeDataset dataset;
  /// poisoned_ids are victim node indices; injected holds each victim's trigger copy.
  PoisonRecord record;
};

/// Each victim (a train node with a non-target label) receives a private
/// trigger copy; victim labels are flipped. Trigger nodes carry the target
/// label and belong to no split.
PoisonedNodes inject_node_trigger(const NodeDataset& ds, const TriggerSpec& spec, std::size_t victim_count,
                                  std::uint64_t seed);

/// Attaches one trigger copy to every listed node at once; labels unchanged.
NodeDataset apply_node_trigger_for_eval(const NodeDataset& ds, const TriggerSpec& spec,
                                        const std::vector<std::size_t>& nodes, std::uint64_t seed);

Json to_json(const TriggerSpec& spec);
TriggerSpec trigger_from_json(const Json& j);
Json to_json(const PoisonRecord& record);
PoisonRecord poison_record_from_json(const Json& j);

}  // namespace made
