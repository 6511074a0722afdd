#pragma once

#include <filesystem>
#include <string>

#include "made/graph.hpp"

namespace made {

/// Reads `<dir>/<name>_A.txt`, `_graph_indicator.txt`, `_graph_labels.txt` and
/// the optional `_node_labels.txt` / `_node_attributes.txt`.
///
/// Node features are [attributes | one-hot(tag)]; a graph with neither file
/// gets a single constant feature. Graph labels are remapped to 0..C-1 in
/// ascending order of the original values. The split is left empty.
GraphDataset parse_tu_dataset(const std::filesystem::path& dir, const std::string& name);

/// Writes the files parse_tu_dataset reads. Doubles use the shortest
/// round-trip representation, so parse(write(ds)) reproduces ds exactly.
void write_tu_dataset(const GraphDataset& ds, const std::filesystem::path& dir);

}  // namespace made
