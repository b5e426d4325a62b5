#pragma once

#include <cstdint>

#include <Eigen/Dense>

namespace subspace {

/// Fixed seeded Monte-Carlo sample from an isotropic centered Gaussian.
/// Nodes are matrix columns; immutable after creation.
struct NodeSet {
  Eigen::MatrixXd nodes;  ///< n x count
  double sigma = 1.0;     ///< per-coordinate standard deviation of the generator
  std::uint64_t seed = 0;

  int dim() const { return static_cast<int>(nodes.rows()); }
  int count() const { return static_cast<int>(nodes.cols()); }
};

/// Penalty/Gram nodes: N(0, theta^2 I).
NodeSet sample_xi(int dim, int count, double theta, std::uint64_t seed);

/// Data-term nodes for characteristic-function fitting: the Fourier pair of a
/// Gaussian smoother with bandwidth eta has squared modulus N(0, (1/eta^2) I).
NodeSet sample_nu_dr(int dim, int count, double eta, std::uint64_t seed);

/// Data-term nodes for regression-function fitting: standard normal.
NodeSet sample_nu_sdr(int dim, int count, std::uint64_t seed);

}  // namespace subspace
