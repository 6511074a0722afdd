#pragma once

#include <filesystem>

#include "made/graph.hpp"

namespace made {

/// Edge list (`i j` per line), features CSV (`id,f0,f1,...`) and labels CSV
/// (`id,label`), all headerless with dense ids 0..n-1. Splits are left empty.
NodeDataset parse_node_dataset(const std::filesystem::path& edges, const std::filesystem::path& features,
                               const std::filesystem::path& labels);

void write_node_dataset(const NodeDataset& ds, const std::filesystem::path& edges,
                        const std::filesystem::path& features, const std::filesystem::path& labels);

}  // namespace made
