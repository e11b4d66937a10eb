#pragma once

#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "stop/tensor.hpp"

namespace stop {

// node id -> gradient tensor (leaves only).
using GradMap = std::unordered_map<int, Tensor>;

// Reverse-mode tape. Ops append nodes in execution order, which is a valid
// topological order by construction. backward() walks the record once in
// reverse, accumulating cotangents, then clears the tape.
//
// Backward closures receive the node's output gradient plus one span per
// recorded input; a span is empty when that input needs no gradient (constant
// input, or a subgraph no gradient reaches). Closures must accumulate (+=)
// into the spans, never overwrite.
class Tape {
 public:
  using BackwardFn = std::function<void(
      std::span<const double> g_out, const std::vector<std::span<double>>& g_in)>;

  // Registers a trainable leaf. Sets t.tape / t.node / t.grad_enabled.
  void watch(Tensor& t);

  // Records an op node. inputs holds the node ids of tape-resident inputs,
  // -1 for constants (kept for positional alignment with the closure's
  // gradient spans). Returns the new node id.
  int record(std::vector<int> inputs, int64_t out_size, BackwardFn fn);

  // Reverse accumulation from a scalar loss. Returns gradients for every
  // watched leaf (zero tensors for leaves the loss does not reach) and clears
  // the tape.
  GradMap backward(const Tensor& loss);

  size_t node_count() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  void clear() { nodes_.clear(); }

 private:
  struct Node {
    std::vector<int> inputs;
    int64_t out_size = 0;
    BackwardFn fn;     // null for leaves
    Shape leaf_shape;  // set for leaves only
  };
  std::vector<Node> nodes_;
};

}  // namespace stop
