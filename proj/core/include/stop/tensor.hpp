#pragma once

#include <cassert>
#include <cmath>
#include <initializer_list>
#include <memory>
#include <vector>

#include "stop/common.hpp"

namespace stop {

class Tape;

using Shape = std::vector<int>;

int64_t shape_numel(const Shape& s);
std::string shape_str(const Shape& s);

// Dense row-major 64-bit-float tensor. Value semantics with shared storage;
// storage is treated as immutable once an op has produced the tensor. A
// tensor may carry a tape handle (tape + node id); node < 0 means constant.
// grad_enabled marks trainable leaves only -- intermediates on the tape keep
// it false and never appear in gradient maps.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape shape);
  static Tensor full(Shape shape, double value);
  static Tensor from(Shape shape, std::vector<double> values);
  static Tensor scalar(double value);
  // Entries iid normal(0, stddev).
  static Tensor randn(Shape shape, Rng& rng, double stddev = 1.0);

  const Shape& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  int dim(int i) const { return shape_[static_cast<size_t>(i)]; }
  int64_t size() const { return size_; }
  bool defined() const { return static_cast<bool>(store_); }

  const double* data() const { return store_->data(); }
  double* mutable_data() { return store_->data(); }
  double value() const {
    assert(size_ == 1);
    return (*store_)[0];
  }
  double at(std::initializer_list<int> idx) const;

  // Same storage, new shape; element count must match. A reshaped view keeps
  // the source's tape node, so gradients flow through unchanged.
  Tensor reshaped(Shape shape) const;

  // Deep copy of the values, detached from any tape.
  Tensor clone() const;
  // Same storage, no tape participation.
  Tensor detached() const;

  Tape* tape = nullptr;
  int node = -1;
  bool grad_enabled = false;

  bool on_tape() const { return tape != nullptr && node >= 0; }

 private:
  Shape shape_;
  int64_t size_ = 0;
  std::shared_ptr<std::vector<double>> store_;
};

// Throws ContractError if any entry is NaN/Inf. Compiled to a no-op check in
// NDEBUG builds via the assert in callers.
bool all_finite(const Tensor& t);

#ifndef NDEBUG
#define STOP_CHECK_FINITE(t) assert(::stop::all_finite(t))
#else
#define STOP_CHECK_FINITE(t) ((void)0)
#endif

}  // namespace stop
