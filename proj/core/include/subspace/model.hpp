#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>

#include <Eigen/Dense>

namespace subspace {

/// Complex-valued one-hidden-layer sigmoid network
///   value(x) = sum_{s<M} w_s sigma(a_s.x + b_s) + i sum_{s>=M} w_s sigma(a_s.x + b_s).
/// Rows 0..M-1 of the parameter arrays form the real bank, rows M..2M-1 the
/// imaginary bank.
struct FourierModel {
  int dim = 0;                 ///< input dimension n
  int width = 0;               ///< neurons per bank (2*width total)
  Eigen::VectorXd weights;     ///< 2M output weights
  Eigen::MatrixXd directions;  ///< 2M x n, row s = a_s
  Eigen::VectorXd biases;      ///< 2M

  int neuron_count() const { return 2 * width; }
  int param_count() const { return neuron_count() * (dim + 2); }

  /// Random init: a ~ N(0, 1/n) per coordinate, b ~ U(-1, 1), w ~ N(0, 1/M).
  static FourierModel random(int dim, int width, std::uint64_t seed);
  /// Same draw for a and b, but all output weights zero; evaluates to the
  /// zero function, with exactly zero input-gradient everywhere.
  static FourierModel zero_weights(int dim, int width, std::uint64_t seed);
};

/// Value of d(value)/dx at one point, split into real and imaginary parts.
struct ComplexGradient {
  Eigen::VectorXd re;
  Eigen::VectorXd im;
};

/// Gradient of a scalar loss with respect to every model parameter; shapes
/// match FourierModel.
struct ParamGradient {
  Eigen::VectorXd weights;
  Eigen::MatrixXd directions;
  Eigen::VectorXd biases;

  static ParamGradient zero(const FourierModel& m);
  bool all_finite() const;
};

std::complex<double> eval(const FourierModel& m, const Eigen::VectorXd& x);
ComplexGradient grad_x(const FourierModel& m, const Eigen::VectorXd& x);

/// Accumulated per-node adjoints of a scalar loss: for value nodes the
/// derivative of the loss with respect to Re/Im of the model value, for
/// gradient nodes with respect to Re/Im of the model's input-gradient.
/// Nodes are matrix columns.
struct LossTerms {
  Eigen::MatrixXd value_nodes;  ///< n x Lv
  Eigen::VectorXd value_re;     ///< Lv, dLoss/dRe(value)
  Eigen::VectorXd value_im;     ///< Lv, dLoss/dIm(value)
  Eigen::MatrixXd grad_nodes;   ///< n x Kg
  Eigen::MatrixXd grad_re;      ///< n x Kg, dLoss/dRe(gradient)
  Eigen::MatrixXd grad_im;      ///< n x Kg, dLoss/dIm(gradient)
};

/// Exact parameter gradient of the scalar loss described by the adjoints.
/// The gradient terms require the mixed second derivative of the sigmoid
/// layer, handled in closed form.
ParamGradient loss_param_grad(const FourierModel& m, const LossTerms& terms);

/// Variant reusing precomputed hidden activations sigma(A*nodes + b) for the
/// value and gradient node sets (2M x Lv and 2M x Kg).
ParamGradient loss_param_grad(const FourierModel& m, const LossTerms& terms,
                              const Eigen::MatrixXd& value_act, const Eigen::MatrixXd& grad_act);

/// Hidden activations sigma(A*X + b) for a batch of nodes (columns of X).
Eigen::MatrixXd hidden_activations(const FourierModel& m, const Eigen::MatrixXd& nodes);

/// Batched model values at node columns, given their activations.
void eval_batch(const FourierModel& m, const Eigen::MatrixXd& act,
                Eigen::VectorXd& re, Eigen::VectorXd& im);

/// Batched input-gradients at node columns, given their activations.
/// gre and gim come out n x P.
void grad_batch(const FourierModel& m, const Eigen::MatrixXd& act,
                Eigen::MatrixXd& gre, Eigen::MatrixXd& gim);

/// Flat parameter order used for checkpoints and the optimizer state:
/// weights, then directions row-major, then biases.
Eigen::VectorXd pack(const FourierModel& m);
void unpack(const Eigen::VectorXd& flat, FourierModel& m);

void save_model(const FourierModel& m, const std::filesystem::path& path);
FourierModel load_model(const std::filesystem::path& path);

}  // namespace subspace
