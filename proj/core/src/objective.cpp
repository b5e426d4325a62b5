#include "subspace/objective.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace subspace {

namespace {

double ackley(double x, double y) {
  return -20.0 * std::exp(-0.2 * std::sqrt(0.5 * (x * x + y * y))) -
         std::exp(0.5 * (std::cos(2.0 * std::numbers::pi * x) +
                         std::cos(2.0 * std::numbers::pi * y))) +
         std::numbers::e + 20.0;
}

void target_values(const TargetFn& target, const Eigen::MatrixXd& nodes,
                   Eigen::VectorXd& re, Eigen::VectorXd& im) {
  re.resize(nodes.cols());
  im.resize(nodes.cols());
  for (Eigen::Index l = 0; l < nodes.cols(); ++l) {
    const std::complex<double> t = target(nodes.col(l));
    re[l] = t.real();
    im[l] = t.imag();
  }
}

}  // namespace

TargetFn empirical_char_fn(const Eigen::MatrixXd& points) {
  if (points.cols() < 1) throw std::invalid_argument("empirical_char_fn: empty point list");
  if (!points.allFinite()) throw std::invalid_argument("empirical_char_fn: non-finite points");
  Eigen::MatrixXd pts = points;
  return TargetFn(
      [pts](const Eigen::VectorXd& x) -> std::complex<double> {
        if (x.size() != pts.rows())
          throw std::invalid_argument("empirical_char_fn: dimension mismatch");
        const Eigen::ArrayXd dots = (pts.transpose() * x).array();
        const double inv_n = 1.0 / static_cast<double>(pts.cols());
        return {dots.cos().sum() * inv_n, -dots.sin().sum() * inv_n};
      },
      "empirical-char-fn");
}

TargetFn sdr_target(double radial_weight) {
  if (!std::isfinite(radial_weight)) throw std::invalid_argument("sdr_target: non-finite weight");
  return TargetFn(
      [radial_weight](const Eigen::VectorXd& x) -> std::complex<double> {
        if (x.size() < 2) throw std::invalid_argument("sdr_target: needs dimension >= 2");
        double v = ackley(x[0], x[1]);
        if (x.norm() <= 1.0) v += radial_weight;
        return {v, 0.0};
      },
      "ackley-plus-ball");
}

PenaltyState PenaltyState::initial(int dim, int rank, int count) {
  return PenaltyState{Projector::zero(dim, rank), Eigen::MatrixXd::Zero(dim, count),
                      Eigen::MatrixXd::Zero(dim, count)};
}

PenaltyState PenaltyState::from_model(const FourierModel& previous, const Projector& p,
                                      const NodeSet& xi) {
  if (p.dim() != xi.dim()) throw std::invalid_argument("PenaltyState: dimension mismatch");
  const Eigen::MatrixXd act = hidden_activations(previous, xi.nodes);
  PenaltyState s{p, {}, {}};
  grad_batch(previous, act, s.frozen_re, s.frozen_im);
  return s;
}

double data_term(const FourierModel& m, const TargetFn& target, const NodeSet& nu) {
  const Eigen::MatrixXd act = hidden_activations(m, nu.nodes);
  Eigen::VectorXd vre, vim, tre, tim;
  eval_batch(m, act, vre, vim);
  target_values(target, nu.nodes, tre, tim);
  return ((vre - tre).squaredNorm() + (vim - tim).squaredNorm()) /
         static_cast<double>(nu.count());
}

double penalty_term(const FourierModel& m, const PenaltyState& state, const NodeSet& xi) {
  if (state.frozen_re.cols() != xi.count() || state.frozen_im.cols() != xi.count()) {
    throw std::invalid_argument("penalty_term: node count mismatch with frozen gradients");
  }
  const Eigen::MatrixXd act = hidden_activations(m, xi.nodes);
  Eigen::MatrixXd gre, gim;
  grad_batch(m, act, gre, gim);
  const Eigen::MatrixXd& p = state.projector.matrix();
  return ((gre - p * state.frozen_re).squaredNorm() +
          (gim - p * state.frozen_im).squaredNorm()) /
         static_cast<double>(xi.count());
}

SymMatrix gram_matrix(const FourierModel& m, const NodeSet& xi) {
  const Eigen::MatrixXd act = hidden_activations(m, xi.nodes);
  Eigen::MatrixXd gre, gim;
  grad_batch(m, act, gre, gim);
  const double inv_k = 1.0 / static_cast<double>(xi.count());
  Eigen::MatrixXd b = inv_k * (gre * gre.transpose() + gim * gim.transpose());
  return SymMatrix(b);
}

LossValue total_loss(const FourierModel& m, const TargetFn& target, const NodeSet& nu,
                     const PenaltyState& state, const NodeSet& xi, double lambda) {
  InnerObjective obj(target, nu, state, xi, lambda);
  return obj(m);
}

InnerObjective::InnerObjective(const TargetFn& target, const NodeSet& nu, PenaltyState state,
                               const NodeSet& xi, double lambda)
    : nu_nodes_(nu.nodes), xi_nodes_(xi.nodes), lambda_(lambda) {
  if (lambda < 0.0) throw std::invalid_argument("InnerObjective: lambda must be nonnegative");
  if (nu.dim() != xi.dim()) throw std::invalid_argument("InnerObjective: node dimension mismatch");
  if (state.frozen_re.cols() != xi.count() || state.frozen_im.cols() != xi.count()) {
    throw std::invalid_argument("InnerObjective: node count mismatch with frozen gradients");
  }
  target_values(target, nu_nodes_, target_re_, target_im_);
  if (!target_re_.allFinite() || !target_im_.allFinite()) {
    throw std::runtime_error("InnerObjective: non-finite target values");
  }
  proj_re_ = state.projector.matrix() * state.frozen_re;
  proj_im_ = state.projector.matrix() * state.frozen_im;
  terms_.value_nodes = nu_nodes_;
  terms_.grad_nodes = xi_nodes_;
}

LossValue InnerObjective::operator()(const FourierModel& m) const {
  const auto L = static_cast<double>(nu_nodes_.cols());
  const auto K = static_cast<double>(xi_nodes_.cols());

  act_nu_ = hidden_activations(m, nu_nodes_);
  eval_batch(m, act_nu_, vre_, vim_);
  vre_ -= target_re_;
  vim_ -= target_im_;
  const double data = (vre_.squaredNorm() + vim_.squaredNorm()) / L;

  act_xi_ = hidden_activations(m, xi_nodes_);
  grad_batch(m, act_xi_, gre_, gim_);
  rre_ = gre_ - proj_re_;
  rim_ = gim_ - proj_im_;
  const double penalty = (rre_.squaredNorm() + rim_.squaredNorm()) / K;

  LossValue out;
  out.data = data;
  out.penalty = penalty;
  out.total = data + lambda_ * penalty;
  if (!std::isfinite(out.total)) throw std::runtime_error("divergent loss");

  terms_.value_re = (2.0 / L) * vre_;
  terms_.value_im = (2.0 / L) * vim_;
  terms_.grad_re = (2.0 * lambda_ / K) * rre_;
  terms_.grad_im = (2.0 * lambda_ / K) * rim_;
  out.grad = loss_param_grad(m, terms_, act_nu_, act_xi_);
  return out;
}

}  // namespace subspace
