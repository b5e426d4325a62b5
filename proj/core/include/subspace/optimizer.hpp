#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "subspace/model.hpp"
#include "subspace/objective.hpp"

namespace subspace {

struct OptimizerConfig {
  int steps = 500;
  double learning_rate = 1e-2;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps_hat = 1e-8;
  std::optional<double> grad_clip;

  void validate() const;
};

struct MinimizeResult {
  FourierModel model;             ///< best-seen parameters
  std::vector<double> loss_trace; ///< loss at the parameters of each step, step 0 first
  double best_loss = 0.0;
};

using LossFn = std::function<LossValue(const FourierModel&)>;

/// Full-batch Adam over the model parameters. Returns the best-seen iterate,
/// which is never worse than the warm start. Throws on non-finite loss or
/// gradient ("divergence; reduce learning_rate").
MinimizeResult minimize(const FourierModel& init, const LossFn& loss, const OptimizerConfig& cfg);

}  // namespace subspace
