#pragma once

#include <cstdint>
#include <vector>

#include "made/graph.hpp"

namespace made {

/// Stratified split with round(fraction * N) train samples; per-class quotas
/// use largest-remainder rounding. Falls back to an unstratified shuffle (with
/// a warning) when some class has fewer than 2 samples. Index lists are sorted.
Split stratified_split(const std::vector<int>& labels, double train_fraction, std::uint64_t seed);

void split_dataset(GraphDataset& ds, double train_fraction, std::uint64_t seed);

/// Train / validation / test node sets; the remainder after train and val is test.
void split_nodes(NodeDataset& ds, double train_fraction, double val_fraction, std::uint64_t seed);

}  // namespace made
