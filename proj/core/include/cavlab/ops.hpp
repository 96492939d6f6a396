#pragma once

#include <span>

#include "cavlab/tensor.hpp"

namespace cavlab {

// y = x W + b with x:[n,in], W:[in,out], b:[out] -> y:[n,out].
Tensor affine_forward(const Tensor& x, const Tensor& w, const Tensor& b);

struct AffineGrads {
  Tensor dx;  // [n,in]
  Tensor dw;  // [in,out]
  Tensor db;  // [out]
};

// Analytic gradients of affine_forward given upstream dL/dy and the cached
// forward inputs.
AffineGrads affine_backward(const Tensor& upstream, const Tensor& x, const Tensor& w);

// In-place SGD with L2 regularization: param -= lr * (grad + l2 * param).
// Throws DivergenceError when the gradient contains NaN/Inf.
void sgd_step(Tensor& param, const Tensor& grad, float lr, float l2);

// u.v / (|u||v|), accumulated in double, clamped to [-1,1].
// Throws ContractViolation on zero-norm input or dimension mismatch.
double cosine_similarity(std::span<const float> u, std::span<const float> v);
double cosine_similarity(std::span<const double> u, std::span<const double> v);

Tensor relu(const Tensor& x);
Tensor relu_backward(const Tensor& upstream, const Tensor& pre);
Tensor sigmoid(const Tensor& x);
Tensor sigmoid_backward(const Tensor& upstream, const Tensor& out);

double mse_loss(const Tensor& pred, const Tensor& target);
Tensor mse_grad(const Tensor& pred, const Tensor& target);
double bce_loss(const Tensor& prob, const Tensor& target);
Tensor bce_sigmoid_logit_grad(const Tensor& prob, const Tensor& target);

}  // namespace cavlab
