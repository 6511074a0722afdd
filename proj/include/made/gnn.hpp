#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "made/autodiff.hpp"
#include "made/graph.hpp"
#include "made/json_io.hpp"

namespace made {

enum class Architecture { Gcn, Sage };

Architecture parse_architecture(const std::string& s);
std::string to_string(Architecture a);

enum class Task { Graph, Node };

struct ModelConfig {
  Architecture architecture = Architecture::Gcn;
  std::vector<std::size_t> hidden{128, 128};  // one entry per layer
  std::size_t feature_dim = 0;
  std::size_t num_classes = 2;
  Task task = Task::Graph;
  double beta = 0.9;
  double lambda = 5.0;

  std::size_t layers() const { return hidden.size(); }
  std::size_t layer_input_dim(std::size_t k) const { return k == 0 ? feature_dim : hidden[k - 1]; }
  void validate() const;
};

/// Differentiable masks for one layer: one weight per graph edge plus the
/// self-loop weight of every node.
struct LayerMaskVars {
  Var edge_weights;
  Var diag;
};

/// Called once per layer with that layer's input embeddings.
using MaskFn = std::function<LayerMaskVars(Tape&, std::size_t layer, Var h)>;

/// Plain mask values for one layer.
struct LayerMask {
  std::vector<double> edge;
  std::vector<double> diag;
  friend bool operator==(const LayerMask&, const LayerMask&) = default;
};

struct MaskSet {
  std::vector<LayerMask> layers;
  std::vector<std::vector<double>> scores;       // natural scores per layer
  std::vector<std::vector<std::size_t>> clean;   // V_clean per layer
};

/// Uses the same fixed masks at every listed layer.
MaskFn fixed_masks(std::vector<LayerMask> layers);

struct ForwardOptions {
  const MaskFn* masks = nullptr;
  /// Graph task: readout rows (all when empty). Node task: output rows (all when empty).
  std::vector<std::size_t> nodes;
  /// Optional input leaf replacing a constant copy of the graph features.
  Var input;
};

/// K message-passing layers with one linear projection head per layer, then a
/// mean readout (graph task) and a linear classifier.
class GnnModel {
 public:
  GnnModel() = default;
  GnnModel(ModelConfig config, std::uint64_t seed);

  const ModelConfig& config() const { return config_; }

  /// Final-layer node embeddings (n x hidden.back()).
  Var embeddings(Tape& tape, const Graph& g, const ForwardOptions& opts = {});
  /// Graph task: 1 x C. Node task: |nodes| x C.
  Var forward(Tape& tape, const Graph& g, const ForwardOptions& opts = {});
  /// Rows of logits, one per graph, in order.
  Var forward_batch(Tape& tape, const std::vector<const Graph*>& graphs, const MaskFn* masks = nullptr);

  /// Projection of a layer input: h (n x d_in) -> n x hidden[layer].
  Var project(Tape& tape, std::size_t layer, Var h);

  std::vector<Parameter*> parameters();
  std::vector<Parameter*> gnn_parameters();
  std::vector<Parameter*> head_parameters();

  Parameter& weight(std::size_t k) { return layers_[k].weight; }
  Parameter& neighbor_weight(std::size_t k) { return layers_[k].weight_neigh; }
  Parameter& bias(std::size_t k) { return layers_[k].bias; }
  Parameter& head(std::size_t k) { return layers_[k].head; }
  Parameter& classifier() { return classifier_; }
  Parameter& classifier_bias() { return classifier_bias_; }

  Json to_json() const;
  static GnnModel from_json(const Json& j);

 private:
  struct Layer {
    Parameter weight;
    Parameter weight_neigh;  // GraphSAGE only
    Parameter bias;
    Parameter head;
  };

  Var layer_forward(Tape& tape, std::size_t k, const Graph& g, Var h, const LayerMaskVars* mask);

  ModelConfig config_;
  std::vector<Layer> layers_;
  Parameter classifier_;
  Parameter classifier_bias_;
};

/// argmax per row (ties to the lower index).
std::vector<int> argmax_rows(const Tensor& logits);

}  // namespace made
