#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "made/edge.hpp"
#include "made/tensor.hpp"

namespace made {

/// Trainable tensor. Gradients from every Tape::backward that touched the
/// parameter are summed into grad() until zero_grad().
class Parameter {
 public:
  Parameter() = default;
  Parameter(std::string name, Tensor value);

  const std::string& name() const { return name_; }
  Tensor& value() { return value_; }
  const Tensor& value() const { return value_; }
  Tensor& grad() { return grad_; }
  const Tensor& grad() const { return grad_; }
  bool has_grad() const { return has_grad_; }
  void mark_grad() { has_grad_ = true; }
  void zero_grad();

 private:
  std::string name_;
  Tensor value_;
  Tensor grad_;
  bool has_grad_ = false;
};

class Tape;

/// Handle to a value recorded on a Tape.
struct Var {
  Tape* tape = nullptr;
  std::size_t index = 0;

  bool valid() const { return tape != nullptr; }
  const Tensor& value() const;
};

/// Linear record of operations for reverse-mode differentiation.
///
/// Nodes are appended in evaluation order, so reverse index order is a valid
/// topological order for the backward sweep. backward() may be called once per
/// recorded graph; call clear() before recording the next one.
class Tape {
 public:
  using BackwardFn = std::function<void(Tape&, std::size_t self)>;

  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  Var constant(Tensor value);
  /// Leaf that requires grad but is not a Parameter (e.g. input features).
  Var variable(Tensor value);
  /// Leaf bound to a Parameter; the same Parameter always maps to the same Var.
  Var parameter(Parameter& p);
  Var record(Tensor value, std::initializer_list<Var> inputs, BackwardFn backward);
  Var record(Tensor value, std::span<const Var> inputs, BackwardFn backward);

  const Tensor& value(Var v) const { return value(v.index); }
  const Tensor& value(std::size_t i) const {
    const Node& n = nodes_[i];
    return n.param ? n.param->value() : n.value;
  }
  bool requires_grad(Var v) const { return nodes_[v.index].requires_grad; }
  bool requires_grad(std::size_t i) const { return nodes_[i].requires_grad; }

  /// Gradient of the last backward() target w.r.t. v (zeros if unreached).
  Tensor grad(Var v) const;
  /// Mutable gradient buffer used by backward rules; allocated on first use.
  Tensor& grad_buffer(std::size_t i);
  const Tensor& upstream(std::size_t self) const { return nodes_[self].grad; }

  /// Populates gradients of a scalar loss on every requires_grad node and
  /// accumulates them into bound Parameters (parameters that received no
  /// gradient path are marked with zero contributions).
  void backward(Var loss);
  void clear();
  std::size_t size() const { return nodes_.size(); }

 private:
  struct Node {
    Tensor value;  // unused for parameter leaves, which read the Parameter directly
    Tensor grad;
    BackwardFn backward;
    Parameter* param = nullptr;
    bool requires_grad = false;
  };

  std::vector<Node> nodes_;
  std::unordered_map<Parameter*, std::size_t> param_index_;
};

/// Differentiable operations. All inputs must live on the same tape.
namespace ad {

Var matmul(Var a, Var b);
Var add(Var a, Var b);
Var sub(Var a, Var b);
Var mul(Var a, Var b);
Var scale(Var a, double s);
/// a (n x c) plus a broadcast row (c values).
Var add_row(Var a, Var row);
/// Multiplies row i of a by v[i].
Var scale_rows(Var a, Var v);
Var relu(Var a);
Var clamp(Var a, double lo, double hi);
Var sum(Var a);
/// Column means over all rows (or the listed rows) -> 1 x c.
Var mean_rows(Var a);
Var mean_rows(Var a, std::span<const std::size_t> rows);
Var gather_rows(Var a, std::span<const std::size_t> rows);
/// Vertical concatenation of matrices with equal column counts.
Var concat_rows(std::span<const Var> parts);
Var l2_norm(Var a);
/// Mean over rows of the per-row L2 norm.
Var mean_row_norm(Var a);
Var cosine_similarity(Var u, Var v);
/// Cosine similarity of row pairs (u, v) for each edge -> vector of edges.size().
Var edge_cosine(Var p, std::span<const Edge> edges);
/// Mean over rows of -log softmax(logits)[label].
Var softmax_cross_entropy(Var logits, std::span<const int> labels);
/// Mean over rows of softmax(logits)[label].
Var softmax_probability(Var logits, std::span<const int> labels);
/// Symmetric n x n matrix with edge weights off the diagonal and diag on it.
Var dense_adjacency(std::size_t n, std::span<const Edge> edges, Var edge_weights, Var diag);
/// D^{-1/2} A D^{-1/2} with D the row sums of A (epsilon-guarded).
Var gcn_normalize(Var adjacency);
/// A_ij / max(sum_j A_ij, eps).
Var row_normalize(Var adjacency);
/// Per-node self-loop mask: 1 for nodes flagged clean, otherwise the mean of
/// incident edge weights (1 for isolated nodes).
Var incident_mean(Var edge_weights, std::span<const Edge> edges, std::size_t n, const std::vector<bool>& clean);

}  // namespace ad

/// Plain-value helpers shared by the ops and their oracles.
double cosine(std::span<const double> u, std::span<const double> v);
Tensor matmul(const Tensor& a, const Tensor& b);

inline constexpr double kNormEpsilon = 1e-12;

}  // namespace made
