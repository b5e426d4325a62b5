#include "subspace/quadrature.hpp"

#include <stdexcept>

#include "subspace/rng.hpp"

namespace subspace {

namespace {

NodeSet gaussian_nodes(int dim, int count, double sigma, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("node sampling: dimension must be positive");
  if (count < 1) throw std::invalid_argument("node sampling: count must be positive");
  NodeSet set;
  set.sigma = sigma;
  set.seed = seed;
  set.nodes.resize(dim, count);
  Rng rng(seed);
  for (int l = 0; l < count; ++l)
    for (int i = 0; i < dim; ++i) set.nodes(i, l) = sigma * rng.gaussian();
  return set;
}

}  // namespace

NodeSet sample_xi(int dim, int count, double theta, std::uint64_t seed) {
  if (!(theta > 0.0)) throw std::invalid_argument("sample_xi: theta must be positive");
  return gaussian_nodes(dim, count, theta, seed);
}

NodeSet sample_nu_dr(int dim, int count, double eta, std::uint64_t seed) {
  if (!(eta > 0.0)) throw std::invalid_argument("sample_nu_dr: eta must be positive");
  return gaussian_nodes(dim, count, 1.0 / eta, seed);
}

NodeSet sample_nu_sdr(int dim, int count, std::uint64_t seed) {
  return gaussian_nodes(dim, count, 1.0, seed);
}

}  // namespace subspace
