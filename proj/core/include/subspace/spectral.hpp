#pragma once

#include <Eigen/Dense>

namespace subspace {

/// Dense real symmetric matrix. Symmetrized on construction so downstream
/// eigensolvers always see an exactly symmetric operand.
class SymMatrix {
 public:
  explicit SymMatrix(const Eigen::MatrixXd& a);

  int dim() const { return static_cast<int>(m_.rows()); }
  double trace() const { return m_.trace(); }
  const Eigen::MatrixXd& matrix() const { return m_; }

 private:
  Eigen::MatrixXd m_;
};

/// Eigendecomposition of a symmetric matrix, eigenvalues sorted descending,
/// vectors[:, i] paired with values[i].
struct EigenPairs {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

/// Rank-k orthogonal projector (or the zero matrix, used to start the
/// alternating scheme).
class Projector {
 public:
  Projector(int n, int k, const Eigen::MatrixXd& matrix);
  static Projector zero(int n, int k);
  static Projector identity(int n);

  int dim() const { return n_; }
  int rank() const { return k_; }
  bool is_zero() const { return zero_; }
  const Eigen::MatrixXd& matrix() const { return m_; }

 private:
  Projector(int n, int k, Eigen::MatrixXd m, bool zero)
      : n_(n), k_(k), zero_(zero), m_(std::move(m)) {}
  int n_;
  int k_;
  bool zero_;
  Eigen::MatrixXd m_;
};

/// Full symmetric eigendecomposition with deterministic ordering: values
/// descending, each vector's first non-negligible coordinate made positive,
/// near-degenerate groups ordered lexicographically.
EigenPairs eigh(const SymMatrix& m);

/// Projector onto the span of the k eigenvectors with largest eigenvalues.
Projector top_k_projector(const EigenPairs& e, int k);

/// Sum of the n-k smallest eigenvalues of a PSD matrix (clamped at zero).
/// This is the low-rank penalty value for target rank k.
double ky_fan_antinorm(const SymMatrix& m, int k);

/// Independent route to the same quantity: square root of m by
/// eigendecomposition, SVD truncated at rank k, squared Frobenius residual.
/// Kept separate from ky_fan_antinorm so the two can cross-check each other.
double eckart_young_oracle(const SymMatrix& m, int k);

double frobenius_distance(const SymMatrix& a, const SymMatrix& b);

}  // namespace subspace
