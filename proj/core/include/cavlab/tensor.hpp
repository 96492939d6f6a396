#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace cavlab {

// Dense row-major float32 tensor. Shape is a list of extents and
// product(shape) always equals the number of stored values. Values are
// expected to stay finite; ensure_finite() turns a NaN/Inf into an error at
// contract boundaries (training steps, checkpoint io, attribution output).
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> shape);
  Tensor(std::vector<std::size_t> shape, std::vector<float> values);

  static Tensor zeros(std::vector<std::size_t> shape) { return Tensor(std::move(shape)); }
  static Tensor full(std::vector<std::size_t> shape, float value);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t extent(std::size_t axis) const;
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  float* data() { return data_.data(); }
  const float* data() const { return data_.data(); }
  std::span<float> values() { return data_; }
  std::span<const float> values() const { return data_; }

  float& operator[](std::size_t i) { return data_[i]; }
  float operator[](std::size_t i) const { return data_[i]; }

  // 2-D accessors (row-major); only valid for rank-2 tensors.
  float& operator()(std::size_t row, std::size_t col) {
    return data_[row * shape_[1] + col];
  }
  float operator()(std::size_t row, std::size_t col) const {
    return data_[row * shape_[1] + col];
  }

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

  // Throws ContractViolation naming `what` when any value is NaN/Inf.
  void ensure_finite(std::string_view what) const;

 private:
  std::vector<std::size_t> shape_;
  std::vector<float> data_;
};

std::size_t shape_product(const std::vector<std::size_t>& shape);

}  // namespace cavlab
