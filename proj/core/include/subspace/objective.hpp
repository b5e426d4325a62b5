#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "subspace/model.hpp"
#include "subspace/quadrature.hpp"
#include "subspace/spectral.hpp"

namespace subspace {

/// Target of the inner fit: a complex-valued function of an n-vector.
class TargetFn {
 public:
  using Fn = std::function<std::complex<double>(const Eigen::VectorXd&)>;

  TargetFn(Fn fn, std::string label) : fn_(std::move(fn)), label_(std::move(label)) {}

  std::complex<double> operator()(const Eigen::VectorXd& x) const { return fn_(x); }
  const std::string& label() const { return label_; }

 private:
  Fn fn_;
  std::string label_;
};

/// Mean of e^{-i x_j.x} over the given points (columns). Equals 1 at x = 0.
TargetFn empirical_char_fn(const Eigen::MatrixXd& points);

/// Ackley in the first two coordinates plus radial_weight times the indicator
/// of the closed unit ball. Real-valued.
TargetFn sdr_target(double radial_weight);

/// Frozen part of the inner-loop penalty: the previous projector and the
/// previous model's input-gradients at the penalty nodes.
struct PenaltyState {
  Projector projector;
  Eigen::MatrixXd frozen_re;  ///< n x K
  Eigen::MatrixXd frozen_im;  ///< n x K

  /// P = 0 and zero gradients, the state before the first iteration.
  static PenaltyState initial(int dim, int rank, int count);
  /// Gradients of `previous` at the xi nodes under projector `p`.
  static PenaltyState from_model(const FourierModel& previous, const Projector& p,
                                 const NodeSet& xi);
};

/// Mean squared deviation of the model from the target over the data nodes.
double data_term(const FourierModel& m, const TargetFn& target, const NodeSet& nu);

/// Mean squared deviation of the model's gradient field from the projected
/// frozen gradient field over the penalty nodes.
double penalty_term(const FourierModel& m, const PenaltyState& state, const NodeSet& xi);

/// Empirical Gram matrix of the model's partial derivatives over the penalty
/// nodes: B_ij = mean_s Re(conj(g_i) g_j). Symmetric PSD up to round-off.
SymMatrix gram_matrix(const FourierModel& m, const NodeSet& xi);

struct LossValue {
  double total = 0.0;
  double data = 0.0;
  double penalty = 0.0;
  ParamGradient grad;
};

/// data_term + lambda * penalty_term with its exact parameter gradient.
LossValue total_loss(const FourierModel& m, const TargetFn& target, const NodeSet& nu,
                     const PenaltyState& state, const NodeSet& xi, double lambda);

/// The inner-loop loss of one outer iteration with the constant pieces
/// (target values at the data nodes, projected frozen gradients) cached.
/// Evaluation is deterministic and reuses preallocated workspace.
class InnerObjective {
 public:
  InnerObjective(const TargetFn& target, const NodeSet& nu, PenaltyState state,
                 const NodeSet& xi, double lambda);

  LossValue operator()(const FourierModel& m) const;

  double lambda() const { return lambda_; }

 private:
  Eigen::MatrixXd nu_nodes_;   // n x L
  Eigen::VectorXd target_re_;  // L
  Eigen::VectorXd target_im_;  // L
  Eigen::MatrixXd xi_nodes_;   // n x K
  Eigen::MatrixXd proj_re_;    // n x K, P * frozen_re
  Eigen::MatrixXd proj_im_;    // n x K
  double lambda_;

  mutable LossTerms terms_;
  mutable Eigen::MatrixXd act_nu_, act_xi_, gre_, gim_, rre_, rim_;
  mutable Eigen::VectorXd vre_, vim_;
};

}  // namespace subspace
