#pragma once

#include <cstdint>

#include "made/graph.hpp"

namespace made {

struct SbmConfig {
  std::size_t num_nodes = 100;
  std::size_t num_classes = 2;
  double intra_p = 0.2;
  double inter_p = 0.01;
  std::size_t feature_dim = 8;
  double noise = 1.0;
};

/// Stochastic block model with balanced contiguous blocks; node features are
/// a per-class N(0, 1) mean vector plus noise * N(0, 1). Splits are empty.
NodeDataset generate_synthetic_node_graph(const SbmConfig& config, std::uint64_t seed);

/// Molecule-like corpus: 2000 graphs, 400/1600 class sizes, 38 element tags
/// and 4 attributes (x, y, charge, valence), ~15.7 nodes per graph.
GraphDataset generate_aids_like(std::uint64_t seed);

/// Protein-like corpus: 1113 graphs, 663/450 class sizes, 3 secondary-structure
/// tags and 1 attribute (segment length), ~39 nodes per graph.
GraphDataset generate_proteins_like(std::uint64_t seed);

/// Newman modularity of a node partition (used for generator checks).
double modularity(std::size_t n, const std::vector<Edge>& edges, const std::vector<int>& community);

}  // namespace made
