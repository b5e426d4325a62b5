#include "subspace/optimizer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace subspace {

void OptimizerConfig::validate() const {
  if (steps < 1) throw std::invalid_argument("OptimizerConfig: steps must be >= 1");
  if (!(learning_rate > 0.0)) throw std::invalid_argument("OptimizerConfig: learning_rate must be positive");
  if (beta1 < 0.0 || beta1 >= 1.0 || beta2 < 0.0 || beta2 >= 1.0)
    throw std::invalid_argument("OptimizerConfig: beta parameters must lie in [0, 1)");
  if (!(eps_hat > 0.0)) throw std::invalid_argument("OptimizerConfig: eps_hat must be positive");
  if (grad_clip && !(*grad_clip > 0.0))
    throw std::invalid_argument("OptimizerConfig: grad_clip must be positive");
}

namespace {

Eigen::VectorXd pack_grad(const FourierModel& m, const ParamGradient& g) {
  Eigen::VectorXd flat(m.param_count());
  const int nn = m.neuron_count();
  flat.head(nn) = g.weights;
  for (int s = 0; s < nn; ++s) flat.segment(nn + s * m.dim, m.dim) = g.directions.row(s);
  flat.tail(nn) = g.biases;
  return flat;
}

}  // namespace

MinimizeResult minimize(const FourierModel& init, const LossFn& loss, const OptimizerConfig& cfg) {
  cfg.validate();

  FourierModel model = init;
  Eigen::VectorXd theta = pack(model);
  Eigen::VectorXd m1 = Eigen::VectorXd::Zero(theta.size());
  Eigen::VectorXd m2 = Eigen::VectorXd::Zero(theta.size());

  MinimizeResult result;
  result.loss_trace.reserve(cfg.steps + 1);

  Eigen::VectorXd best_theta = theta;
  double best = std::numeric_limits<double>::infinity();

  const auto record = [&](double value) {
    if (!std::isfinite(value)) throw std::runtime_error("divergence; reduce learning_rate");
    result.loss_trace.push_back(value);
    if (value < best) {
      best = value;
      best_theta = theta;
    }
  };

  for (int step = 0; step < cfg.steps; ++step) {
    const LossValue lv = loss(model);
    record(lv.total);

    Eigen::VectorXd grad = pack_grad(model, lv.grad);
    if (!grad.allFinite()) throw std::runtime_error("divergence; reduce learning_rate");
    if (cfg.grad_clip) {
      const double norm = grad.norm();
      if (norm > *cfg.grad_clip) grad *= *cfg.grad_clip / norm;
    }

    m1 = cfg.beta1 * m1 + (1.0 - cfg.beta1) * grad;
    m2 = cfg.beta2 * m2 + (1.0 - cfg.beta2) * grad.cwiseProduct(grad);
    const double c1 = 1.0 - std::pow(cfg.beta1, step + 1);
    const double c2 = 1.0 - std::pow(cfg.beta2, step + 1);
    theta.array() -=
        cfg.learning_rate * (m1.array() / c1) / ((m2.array() / c2).sqrt() + cfg.eps_hat);
    unpack(theta, model);
  }

  // Loss at the final iterate, so the trace covers every parameter vector seen.
  record(loss(model).total);

  unpack(best_theta, model);
  result.model = std::move(model);
  result.best_loss = best;
  return result;
}

}  // namespace subspace
