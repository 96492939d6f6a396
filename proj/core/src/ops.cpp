#include "cavlab/ops.hpp"

#include <cmath>
#include <string>

#include "cavlab/errors.hpp"
#include "cavlab/kernels.hpp"

namespace cavlab {

namespace {

void require_rank2(const Tensor& t, const char* name) {
  if (t.rank() != 2)
    throw ContractViolation(std::string(name) + ": expected rank-2 tensor, got rank " +
                            std::to_string(t.rank()));
}

}  // namespace

Tensor affine_forward(const Tensor& x, const Tensor& w, const Tensor& b) {
  require_rank2(x, "affine_forward x");
  require_rank2(w, "affine_forward W");
  const std::size_t n = x.extent(0), in = x.extent(1);
  const std::size_t out = w.extent(1);
  if (w.extent(0) != in)
    throw ContractViolation("affine_forward: x columns " + std::to_string(in) +
                            " != W rows " + std::to_string(w.extent(0)));
  if (b.size() != out)
    throw ContractViolation("affine_forward: bias size " + std::to_string(b.size()) +
                            " != W columns " + std::to_string(out));
  Tensor y({n, out});
  detail::affine_forward(x.data(), w.data(), b.data(), y.data(), n, in, out);
  return y;
}

AffineGrads affine_backward(const Tensor& upstream, const Tensor& x, const Tensor& w) {
  require_rank2(upstream, "affine_backward upstream");
  require_rank2(x, "affine_backward x");
  require_rank2(w, "affine_backward W");
  const std::size_t n = x.extent(0), in = x.extent(1), out = w.extent(1);
  if (w.extent(0) != in || upstream.extent(0) != n || upstream.extent(1) != out)
    throw ContractViolation("affine_backward: shape mismatch");
  AffineGrads g{Tensor({n, in}), Tensor({in, out}), Tensor({out})};
  detail::affine_backward(upstream.data(), x.data(), w.data(), g.dx.data(),
                          g.dw.data(), g.db.data(), n, in, out);
  return g;
}

void sgd_step(Tensor& param, const Tensor& grad, float lr, float l2) {
  if (!param.same_shape(grad))
    throw ContractViolation("sgd_step: param/grad shape mismatch");
  if (!(lr > 0.0f)) throw ContractViolation("sgd_step: lr must be > 0");
  if (l2 < 0.0f) throw ContractViolation("sgd_step: l2 must be >= 0");
  float* p = param.data();
  const float* g = grad.data();
  double probe = 0.0;
  for (std::size_t i = 0; i < param.size(); ++i) {
    probe += g[i];
    p[i] -= lr * (g[i] + l2 * p[i]);
  }
  // A finite-element gradient always sums finite in double.
  if (!std::isfinite(probe)) throw DivergenceError("sgd_step: non-finite gradient");
}

namespace {

template <typename T>
double cosine_impl(std::span<const T> u, std::span<const T> v) {
  if (u.size() != v.size())
    throw ContractViolation("cosine_similarity: dimension mismatch (" +
                            std::to_string(u.size()) + " vs " +
                            std::to_string(v.size()) + ")");
  if (u.empty()) throw ContractViolation("cosine_similarity: empty vectors");
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double a = u[i], b = v[i];
    dot += a * b;
    nu += a * a;
    nv += b * b;
  }
  if (nu == 0.0 || nv == 0.0)
    throw ContractViolation("cosine_similarity: zero-norm input");
  double c = dot / (std::sqrt(nu) * std::sqrt(nv));
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  return c;
}

}  // namespace

double cosine_similarity(std::span<const float> u, std::span<const float> v) {
  return cosine_impl(u, v);
}

double cosine_similarity(std::span<const double> u, std::span<const double> v) {
  return cosine_impl(u, v);
}

Tensor relu(const Tensor& x) {
  Tensor y(x.shape());
  detail::relu(x.data(), y.data(), x.size());
  return y;
}

Tensor relu_backward(const Tensor& upstream, const Tensor& pre) {
  if (!upstream.same_shape(pre))
    throw ContractViolation("relu_backward: shape mismatch");
  Tensor dx(pre.shape());
  detail::relu_backward(upstream.data(), pre.data(), dx.data(), pre.size());
  return dx;
}

Tensor sigmoid(const Tensor& x) {
  Tensor y(x.shape());
  detail::sigmoid(x.data(), y.data(), x.size());
  return y;
}

Tensor sigmoid_backward(const Tensor& upstream, const Tensor& out) {
  if (!upstream.same_shape(out))
    throw ContractViolation("sigmoid_backward: shape mismatch");
  Tensor dx(out.shape());
  detail::sigmoid_backward(upstream.data(), out.data(), dx.data(), out.size());
  return dx;
}

double mse_loss(const Tensor& pred, const Tensor& target) {
  if (!pred.same_shape(target)) throw ContractViolation("mse_loss: shape mismatch");
  return detail::mse_loss(pred.data(), target.data(), pred.size());
}

Tensor mse_grad(const Tensor& pred, const Tensor& target) {
  if (!pred.same_shape(target)) throw ContractViolation("mse_grad: shape mismatch");
  Tensor g(pred.shape());
  detail::mse_grad(pred.data(), target.data(), g.data(), pred.size());
  return g;
}

double bce_loss(const Tensor& prob, const Tensor& target) {
  if (!prob.same_shape(target)) throw ContractViolation("bce_loss: shape mismatch");
  return detail::bce_loss(prob.data(), target.data(), prob.size());
}

Tensor bce_sigmoid_logit_grad(const Tensor& prob, const Tensor& target) {
  if (!prob.same_shape(target))
    throw ContractViolation("bce_sigmoid_logit_grad: shape mismatch");
  Tensor g(prob.shape());
  detail::bce_sigmoid_logit_grad(prob.data(), target.data(), g.data(), prob.size());
  return g;
}

}  // namespace cavlab
