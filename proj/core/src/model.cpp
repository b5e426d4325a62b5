#include "subspace/model.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "subspace/rng.hpp"

namespace subspace {

namespace {

void check_shape(const FourierModel& m) {
  const int nn = m.neuron_count();
  if (m.dim < 1 || m.width < 1) throw std::invalid_argument("FourierModel: dim and width must be positive");
  if (m.weights.size() != nn || m.biases.size() != nn || m.directions.rows() != nn ||
      m.directions.cols() != m.dim) {
    throw std::invalid_argument("FourierModel: parameter shape mismatch");
  }
}

FourierModel init_model(int dim, int width, std::uint64_t seed, bool zero_w) {
  if (dim < 1 || width < 1) throw std::invalid_argument("FourierModel: dim and width must be positive");
  FourierModel m;
  m.dim = dim;
  m.width = width;
  const int nn = 2 * width;
  m.directions.resize(nn, dim);
  m.biases.resize(nn);
  m.weights.resize(nn);
  Rng rng(seed);
  const double dir_scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int s = 0; s < nn; ++s)
    for (int j = 0; j < dim; ++j) m.directions(s, j) = dir_scale * rng.gaussian();
  for (int s = 0; s < nn; ++s) m.biases[s] = rng.uniform(-1.0, 1.0);
  if (zero_w) {
    m.weights.setZero();
  } else {
    const double w_scale = 1.0 / std::sqrt(static_cast<double>(width));
    for (int s = 0; s < nn; ++s) m.weights[s] = w_scale * rng.gaussian();
  }
  return m;
}

}  // namespace

FourierModel FourierModel::random(int dim, int width, std::uint64_t seed) {
  return init_model(dim, width, seed, false);
}

FourierModel FourierModel::zero_weights(int dim, int width, std::uint64_t seed) {
  return init_model(dim, width, seed, true);
}

ParamGradient ParamGradient::zero(const FourierModel& m) {
  ParamGradient g;
  g.weights = Eigen::VectorXd::Zero(m.neuron_count());
  g.directions = Eigen::MatrixXd::Zero(m.neuron_count(), m.dim);
  g.biases = Eigen::VectorXd::Zero(m.neuron_count());
  return g;
}

bool ParamGradient::all_finite() const {
  return weights.allFinite() && directions.allFinite() && biases.allFinite();
}

std::complex<double> eval(const FourierModel& m, const Eigen::VectorXd& x) {
  check_shape(m);
  if (x.size() != m.dim) throw std::invalid_argument("eval: dimension mismatch");
  const Eigen::ArrayXd z = (m.directions * x + m.biases).array();
  const Eigen::ArrayXd s = 1.0 / (1.0 + (-z).exp());
  const int M = m.width;
  const double re = m.weights.head(M).dot(s.head(M).matrix());
  const double im = m.weights.tail(M).dot(s.tail(M).matrix());
  return {re, im};
}

ComplexGradient grad_x(const FourierModel& m, const Eigen::VectorXd& x) {
  check_shape(m);
  if (x.size() != m.dim) throw std::invalid_argument("grad_x: dimension mismatch");
  const Eigen::ArrayXd z = (m.directions * x + m.biases).array();
  const Eigen::ArrayXd s = 1.0 / (1.0 + (-z).exp());
  const Eigen::ArrayXd c = m.weights.array() * s * (1.0 - s);  // w_s * sigma'(z_s)
  const int M = m.width;
  ComplexGradient g;
  g.re = m.directions.topRows(M).transpose() * c.head(M).matrix();
  g.im = m.directions.bottomRows(M).transpose() * c.tail(M).matrix();
  return g;
}

Eigen::MatrixXd hidden_activations(const FourierModel& m, const Eigen::MatrixXd& nodes) {
  check_shape(m);
  if (nodes.rows() != m.dim) throw std::invalid_argument("hidden_activations: dimension mismatch");
  Eigen::MatrixXd z = m.directions * nodes;
  z.colwise() += m.biases;
  return (1.0 / (1.0 + (-z.array()).exp())).matrix();
}

void eval_batch(const FourierModel& m, const Eigen::MatrixXd& act,
                Eigen::VectorXd& re, Eigen::VectorXd& im) {
  const int M = m.width;
  re.noalias() = act.topRows(M).transpose() * m.weights.head(M);
  im.noalias() = act.bottomRows(M).transpose() * m.weights.tail(M);
}

void grad_batch(const FourierModel& m, const Eigen::MatrixXd& act,
                Eigen::MatrixXd& gre, Eigen::MatrixXd& gim) {
  const int M = m.width;
  const Eigen::MatrixXd coeff =
      (act.array() * (1.0 - act.array())).colwise() * m.weights.array();
  gre.noalias() = m.directions.topRows(M).transpose() * coeff.topRows(M);
  gim.noalias() = m.directions.bottomRows(M).transpose() * coeff.bottomRows(M);
}

ParamGradient loss_param_grad(const FourierModel& m, const LossTerms& terms) {
  Eigen::MatrixXd value_act, grad_act;
  if (terms.value_nodes.cols() > 0) value_act = hidden_activations(m, terms.value_nodes);
  if (terms.grad_nodes.cols() > 0) grad_act = hidden_activations(m, terms.grad_nodes);
  return loss_param_grad(m, terms, value_act, grad_act);
}

ParamGradient loss_param_grad(const FourierModel& m, const LossTerms& terms,
                              const Eigen::MatrixXd& value_act, const Eigen::MatrixXd& grad_act) {
  check_shape(m);
  const int M = m.width;
  ParamGradient g = ParamGradient::zero(m);

  if (terms.value_nodes.cols() > 0) {
    if (terms.value_re.size() != terms.value_nodes.cols() ||
        terms.value_im.size() != terms.value_nodes.cols()) {
      throw std::invalid_argument("loss_param_grad: value adjoint count mismatch");
    }
    if (!terms.value_re.allFinite() || !terms.value_im.allFinite()) {
      throw std::runtime_error("loss_param_grad: divergent loss");
    }
    const auto& s = value_act;
    const Eigen::MatrixXd d = (s.array() * (1.0 - s.array())).matrix();

    g.weights.head(M).noalias() = s.topRows(M) * terms.value_re;
    g.weights.tail(M).noalias() = s.bottomRows(M) * terms.value_im;

    // Per-node adjoint spread over the bank's sigmoid slopes.
    Eigen::MatrixXd ca(2 * M, s.cols());
    ca.topRows(M) = d.topRows(M).array().rowwise() * terms.value_re.transpose().array();
    ca.bottomRows(M) = d.bottomRows(M).array().rowwise() * terms.value_im.transpose().array();
    g.biases.array() += m.weights.array() * ca.rowwise().sum().array();
    g.directions.noalias() += m.weights.asDiagonal() * (ca * terms.value_nodes.transpose());
  }

  if (terms.grad_nodes.cols() > 0) {
    const Eigen::Index kg = terms.grad_nodes.cols();
    if (terms.grad_re.cols() != kg || terms.grad_im.cols() != kg ||
        terms.grad_re.rows() != m.dim || terms.grad_im.rows() != m.dim) {
      throw std::invalid_argument("loss_param_grad: gradient adjoint shape mismatch");
    }
    if (!terms.grad_re.allFinite() || !terms.grad_im.allFinite()) {
      throw std::runtime_error("loss_param_grad: divergent loss");
    }
    const auto& s = grad_act;
    const Eigen::ArrayXXd d = s.array() * (1.0 - s.array());
    const Eigen::ArrayXXd q = d * (1.0 - 2.0 * s.array());  // sigma''

    // t(s, l) = a_s . adjoint_l, per bank.
    Eigen::MatrixXd t(2 * M, kg);
    t.topRows(M).noalias() = m.directions.topRows(M) * terms.grad_re;
    t.bottomRows(M).noalias() = m.directions.bottomRows(M) * terms.grad_im;

    const Eigen::ArrayXXd dt = d * t.array();
    const Eigen::ArrayXXd qt = q * t.array();
    g.weights += dt.rowwise().sum().matrix();
    g.biases.array() += m.weights.array() * qt.rowwise().sum().array();

    Eigen::MatrixXd da(2 * M, m.dim);
    da.noalias() = qt.matrix() * terms.grad_nodes.transpose();
    da.topRows(M).noalias() += d.topRows(M).matrix() * terms.grad_re.transpose();
    da.bottomRows(M).noalias() += d.bottomRows(M).matrix() * terms.grad_im.transpose();
    g.directions.noalias() += m.weights.asDiagonal() * da;
  }

  if (!g.all_finite()) throw std::runtime_error("loss_param_grad: divergent loss");
  return g;
}

Eigen::VectorXd pack(const FourierModel& m) {
  check_shape(m);
  Eigen::VectorXd flat(m.param_count());
  const int nn = m.neuron_count();
  flat.head(nn) = m.weights;
  for (int s = 0; s < nn; ++s) flat.segment(nn + s * m.dim, m.dim) = m.directions.row(s);
  flat.tail(nn) = m.biases;
  return flat;
}

void unpack(const Eigen::VectorXd& flat, FourierModel& m) {
  const int nn = m.neuron_count();
  if (flat.size() != m.param_count()) throw std::invalid_argument("unpack: size mismatch");
  m.weights = flat.head(nn);
  for (int s = 0; s < nn; ++s) m.directions.row(s) = flat.segment(nn + s * m.dim, m.dim);
  m.biases = flat.tail(nn);
}

void save_model(const FourierModel& m, const std::filesystem::path& path) {
  check_shape(m);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_model: cannot open " + path.string());
  out << m.dim << " " << m.width << "\n";
  const Eigen::VectorXd flat = pack(m);
  char buf[32];
  for (Eigen::Index i = 0; i < flat.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", flat[i]);
    out << buf << "\n";
  }
}

FourierModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_model: cannot open " + path.string());
  FourierModel m;
  if (!(in >> m.dim >> m.width)) throw std::runtime_error("load_model: bad header");
  if (m.dim < 1 || m.width < 1) throw std::runtime_error("load_model: bad header");
  m.weights.resize(m.neuron_count());
  m.directions.resize(m.neuron_count(), m.dim);
  m.biases.resize(m.neuron_count());
  Eigen::VectorXd flat(m.param_count());
  for (Eigen::Index i = 0; i < flat.size(); ++i) {
    if (!(in >> flat[i])) throw std::runtime_error("load_model: truncated file");
  }
  unpack(flat, m);
  return m;
}

}  // namespace subspace
