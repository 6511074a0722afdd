#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "made/edge.hpp"
#include "made/tensor.hpp"

namespace made {

/// One sample: undirected simple graph with dense node features.
struct Graph {
  std::size_t id = 0;
  std::size_t num_nodes = 0;
  std::vector<Edge> edges;  // canonical (u < v), sorted, no duplicates
  Tensor features;          // num_nodes x d
  int label = 0;
  /// Index into GraphDataset::tag_values per node, or empty when untagged.
  std::vector<int> node_tags;

  std::size_t feature_dim() const { return features.cols(); }
  friend bool operator==(const Graph&, const Graph&) = default;
};

/// Canonicalizes, sorts and deduplicates; drops self-loops.
std::vector<Edge> canonical_edges(std::vector<Edge> edges);

/// Throws ValidationError on out-of-range endpoints, unsorted or duplicate
/// edges, self-loops or a feature matrix of the wrong shape.
void validate_graph(const Graph& g);

std::vector<std::vector<std::size_t>> adjacency_lists(std::size_t n, const std::vector<Edge>& edges);
std::vector<std::size_t> degrees(std::size_t n, const std::vector<Edge>& edges);
bool is_connected(std::size_t n, const std::vector<Edge>& edges);

struct Split {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
  friend bool operator==(const Split&, const Split&) = default;
};

struct GraphDataset {
  std::string name;
  std::vector<Graph> graphs;
  std::size_t num_classes = 0;
  std::size_t feature_dim = 0;
  /// Leading feature columns holding continuous node attributes; the rest is
  /// a one-hot encoding of node tags.
  std::size_t attribute_dim = 0;
  std::vector<int> tag_values;    // original tag for each one-hot column
  std::vector<int> label_values;  // original graph label for each class index
  Split split;

  std::vector<int> labels() const;
  friend bool operator==(const GraphDataset&, const GraphDataset&) = default;
};

void validate_dataset(const GraphDataset& ds);

struct NodeDataset {
  std::string name;
  Graph graph;
  std::vector<int> labels;
  std::size_t num_classes = 0;
  std::vector<std::size_t> train;
  std::vector<std::size_t> val;
  std::vector<std::size_t> test;
  friend bool operator==(const NodeDataset&, const NodeDataset&) = default;
};

void validate_node_dataset(const NodeDataset& ds);

}  // namespace made
