#include "cavlab/tensor.hpp"

#include <cmath>
#include <string>

#include "cavlab/errors.hpp"

namespace cavlab {

std::size_t shape_product(const std::vector<std::size_t>& shape) {
  std::size_t n = 1;
  for (std::size_t e : shape) n *= e;
  return n;
}

Tensor::Tensor(std::vector<std::size_t> shape)
    : shape_(std::move(shape)), data_(shape_product(shape_), 0.0f) {}

Tensor::Tensor(std::vector<std::size_t> shape, std::vector<float> values)
    : shape_(std::move(shape)), data_(std::move(values)) {
  if (shape_product(shape_) != data_.size()) {
    throw ContractViolation("tensor shape/value count mismatch: shape product " +
                            std::to_string(shape_product(shape_)) + " vs " +
                            std::to_string(data_.size()) + " values");
  }
}

Tensor Tensor::full(std::vector<std::size_t> shape, float value) {
  Tensor t(std::move(shape));
  for (float& v : t.data_) v = value;
  return t;
}

std::size_t Tensor::extent(std::size_t axis) const {
  if (axis >= shape_.size()) {
    throw ContractViolation("tensor axis " + std::to_string(axis) + " out of range");
  }
  return shape_[axis];
}

void Tensor::ensure_finite(std::string_view what) const {
  double sum = 0.0;
  for (float v : data_) sum += v;
  // Finite floats cannot overflow a double sum, so a non-finite sum implies a
  // non-finite element.
  if (!std::isfinite(sum)) {
    throw ContractViolation(std::string(what) + ": tensor contains NaN/Inf");
  }
}

}  // namespace cavlab
