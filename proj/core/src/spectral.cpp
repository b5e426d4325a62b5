#include "subspace/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace subspace {

namespace {

constexpr double kDegenerateGap = 1e-12;

// First coordinate with |v_i| above noise decides the sign.
void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-13) {
      if (v[i] < 0.0) v = -v;
      return;
    }
  }
}

bool lex_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Eigen::VectorXd psd_eigenvalues(const SymMatrix& m, const char* caller) {
  EigenPairs e = eigh(m);
  const double scale = std::max(m.trace(), 0.0);
  if (e.values.minCoeff() < -1e-6 * std::max(scale, 1e-300)) {
    throw std::invalid_argument(std::string(caller) + ": matrix not PSD");
  }
  return e.values;
}

}  // namespace

SymMatrix::SymMatrix(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("SymMatrix: matrix must be square");
  if (a.rows() < 1) throw std::invalid_argument("SymMatrix: dimension must be positive");
  m_ = 0.5 * (a + a.transpose());
}

Projector::Projector(int n, int k, const Eigen::MatrixXd& matrix)
    : n_(n), k_(k), zero_(false), m_(0.5 * (matrix + matrix.transpose())) {
  if (k < 0 || k > n) throw std::invalid_argument("Projector: rank out of range");
  if (matrix.rows() != n || matrix.cols() != n)
    throw std::invalid_argument("Projector: matrix shape mismatch");
  zero_ = m_.isZero(0.0);
}

Projector Projector::zero(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("Projector: rank out of range");
  return Projector(n, k, Eigen::MatrixXd::Zero(n, n), true);
}

Projector Projector::identity(int n) {
  return Projector(n, n, Eigen::MatrixXd::Identity(n, n), false);
}

EigenPairs eigh(const SymMatrix& m) {
  if (!m.matrix().allFinite()) throw std::invalid_argument("eigh: non-finite matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.matrix());
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigh: eigensolver failed");

  const int n = m.dim();
  EigenPairs out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  // Eigen returns ascending order; flip to descending.
  for (int i = 0; i < n; ++i) {
    out.values[i] = solver.eigenvalues()[n - 1 - i];
    out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
    fix_sign(out.vectors.col(i));
  }

  // Deterministic order inside (near-)degenerate groups.
  int start = 0;
  while (start < n) {
    int end = start + 1;
    while (end < n && std::abs(out.values[end] - out.values[start]) <= kDegenerateGap) ++end;
    if (end - start > 1) {
      std::vector<int> idx(end - start);
      std::iota(idx.begin(), idx.end(), start);
      std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return lex_less(out.vectors.col(a), out.vectors.col(b));
      });
      Eigen::MatrixXd cols(n, end - start);
      Eigen::VectorXd vals(end - start);
      for (int j = 0; j < end - start; ++j) {
        cols.col(j) = out.vectors.col(idx[j]);
        vals[j] = out.values[idx[j]];
      }
      out.vectors.middleCols(start, end - start) = cols;
      out.values.segment(start, end - start) = vals;
    }
    start = end;
  }
  return out;
}

Projector top_k_projector(const EigenPairs& e, int k) {
  const int n = static_cast<int>(e.values.size());
  if (k < 1 || k > n) throw std::invalid_argument("top_k_projector: k out of range");
  Eigen::MatrixXd p = e.vectors.leftCols(k) * e.vectors.leftCols(k).transpose();
  return Projector(n, k, p);
}

double ky_fan_antinorm(const SymMatrix& m, int k) {
  const int n = m.dim();
  if (k < 1 || k > n) throw std::invalid_argument("ky_fan_antinorm: k out of range");
  const Eigen::VectorXd values = psd_eigenvalues(m, "ky_fan_antinorm");
  double sum = 0.0;
  for (int i = k; i < n; ++i) sum += values[i];
  return std::max(sum, 0.0);
}

double eckart_young_oracle(const SymMatrix& m, int k) {
  const int n = m.dim();
  if (k < 1 || k > n) throw std::invalid_argument("eckart_young_oracle: k out of range");
  EigenPairs e = eigh(m);
  const double scale = std::max(m.trace(), 0.0);
  if (e.values.minCoeff() < -1e-6 * std::max(scale, 1e-300)) {
    throw std::invalid_argument("eckart_young_oracle: matrix not PSD");
  }
  const Eigen::VectorXd clamped = e.values.cwiseMax(0.0);
  const Eigen::MatrixXd root =
      e.vectors * clamped.cwiseSqrt().asDiagonal() * e.vectors.transpose();

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(root, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::VectorXd sv = svd.singularValues();
  for (int i = k; i < n; ++i) sv[i] = 0.0;
  const Eigen::MatrixXd truncated = svd.matrixU() * sv.asDiagonal() * svd.matrixV().transpose();
  return (root - truncated).squaredNorm();
}

double frobenius_distance(const SymMatrix& a, const SymMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("frobenius_distance: dimension mismatch");
  return (a.matrix() - b.matrix()).norm();
}

}  // namespace subspace
