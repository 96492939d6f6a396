#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

// Low-level dense kernels shared by the float32 production path and the
// float64 reference path used for finite-difference oracles. All inner
// reductions accumulate in double regardless of the storage type T.

namespace cavlab::detail {

// c[n,m] = a[n,k] * b[k,m] (+ bias[m] if given). Processes four rows of `a`
// per pass so each row of `b` is loaded once per block.
template <typename T>
void matmul(const T* a, const T* b, const T* bias, T* c, std::size_t n,
            std::size_t k, std::size_t m) {
  std::vector<double> acc(4 * m);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t j = 0; j < m; ++j)
        acc[r * m + j] = bias ? static_cast<double>(bias[j]) : 0.0;
    const T* a0 = a + i * k;
    const T* a1 = a0 + k;
    const T* a2 = a1 + k;
    const T* a3 = a2 + k;
    for (std::size_t p = 0; p < k; ++p) {
      const double x0 = a0[p], x1 = a1[p], x2 = a2[p], x3 = a3[p];
      const T* bp = b + p * m;
      double* r0 = acc.data();
      double* r1 = r0 + m;
      double* r2 = r1 + m;
      double* r3 = r2 + m;
      for (std::size_t j = 0; j < m; ++j) {
        const double w = bp[j];
        r0[j] += x0 * w;
        r1[j] += x1 * w;
        r2[j] += x2 * w;
        r3[j] += x3 * w;
      }
    }
    for (std::size_t r = 0; r < 4; ++r) {
      T* cr = c + (i + r) * m;
      for (std::size_t j = 0; j < m; ++j) cr[j] = static_cast<T>(acc[r * m + j]);
    }
  }
  for (; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      acc[j] = bias ? static_cast<double>(bias[j]) : 0.0;
    const T* ai = a + i * k;
    for (std::size_t p = 0; p < k; ++p) {
      const double x = ai[p];
      const T* bp = b + p * m;
      for (std::size_t j = 0; j < m; ++j) acc[j] += x * static_cast<double>(bp[j]);
    }
    T* ci = c + i * m;
    for (std::size_t j = 0; j < m; ++j) ci[j] = static_cast<T>(acc[j]);
  }
}

template <typename T>
std::vector<T> transposed(const T* a, std::size_t rows, std::size_t cols) {
  std::vector<T> t(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j * rows + i] = a[i * cols + j];
  return t;
}

// y = x W + b with x:[n,in], W:[in,out], b:[out].
template <typename T>
void affine_forward(const T* x, const T* w, const T* b, T* y, std::size_t n,
                    std::size_t in, std::size_t out) {
  matmul(x, w, b, y, n, in, out);
}

// Gradients of y = x W + b given upstream dL/dy.
//   dx = up * W^T, dW = x^T * up, db = column sums of up.
// Any of dx/dw/db may be null to skip that output.
template <typename T>
void affine_backward(const T* up, const T* x, const T* w, T* dx, T* dw, T* db,
                     std::size_t n, std::size_t in, std::size_t out) {
  if (dx) {
    const std::vector<T> wt = transposed(w, in, out);
    matmul(up, wt.data(), static_cast<const T*>(nullptr), dx, n, out, in);
  }
  if (dw) {
    const std::vector<T> xt = transposed(x, n, in);
    matmul(xt.data(), up, static_cast<const T*>(nullptr), dw, in, n, out);
  }
  if (db) {
    for (std::size_t j = 0; j < out; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += up[i * out + j];
      db[j] = static_cast<T>(s);
    }
  }
}

template <typename T>
void relu(const T* x, T* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i] > T(0) ? x[i] : T(0);
}

// d relu / dx at exactly 0 is defined as 0 (strict comparison).
template <typename T>
void relu_backward(const T* up, const T* pre, T* dx, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dx[i] = pre[i] > T(0) ? up[i] : T(0);
}

template <typename T>
void sigmoid(const T* x, T* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    y[i] = static_cast<T>(1.0 / (1.0 + std::exp(-static_cast<double>(x[i]))));
}

// Uses the forward output y = sigmoid(x): dx = up * y * (1 - y).
template <typename T>
void sigmoid_backward(const T* up, const T* y, T* dx, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double s = y[i];
    dx[i] = static_cast<T>(static_cast<double>(up[i]) * s * (1.0 - s));
  }
}

// Mean squared error over all elements; double accumulation.
template <typename T>
double mse_loss(const T* pred, const T* target, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = static_cast<double>(pred[i]) - static_cast<double>(target[i]);
    s += d * d;
  }
  return s / static_cast<double>(n);
}

// dL/dpred for mse_loss.
template <typename T>
void mse_grad(const T* pred, const T* target, T* g, std::size_t n) {
  const double inv = 2.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = static_cast<T>((static_cast<double>(pred[i]) - target[i]) * inv);
}

// Binary cross entropy, mean over all elements, probabilities clamped away
// from {0,1}.
template <typename T>
double bce_loss(const T* prob, const T* target, std::size_t n) {
  constexpr double eps = 1e-7;
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double p = static_cast<double>(prob[i]);
    if (p < eps) p = eps;
    if (p > 1.0 - eps) p = 1.0 - eps;
    const double y = target[i];
    s -= y * std::log(p) + (1.0 - y) * std::log(1.0 - p);
  }
  return s / static_cast<double>(n);
}

// Combined gradient of mean BCE through a sigmoid output, taken at the
// pre-activation: dL/dlogit = (p - y)/n. Numerically stable for saturated
// probabilities.
template <typename T>
void bce_sigmoid_logit_grad(const T* prob, const T* target, T* g, std::size_t n) {
  const double inv = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = static_cast<T>((static_cast<double>(prob[i]) - target[i]) * inv);
}

}  // namespace cavlab::detail
