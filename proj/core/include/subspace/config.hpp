#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "subspace/optimizer.hpp"

namespace subspace {

enum class Task { Dr, DrCross, Sdr };

std::string task_name(Task t);
Task parse_task(const std::string& name);

struct SeedSet {
  std::uint64_t data = 1;
  std::uint64_t nodes = 2;
  std::uint64_t model = 3;
};

/// Configuration error carrying the offending field name in the message.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when the inner solver diverges; maps to CLI exit code 3.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  Task task = Task::Dr;
  int dim = 6;             ///< n
  int rank = 2;            ///< k
  int num_points = 100;    ///< N
  int outer_iters = 75;    ///< T
  int xi_count = 1000;     ///< K
  int nu_count = 1000;     ///< L
  std::vector<int> widths{200};      ///< M, sweep allowed
  std::vector<double> lambdas{100.0};
  double eta = 0.1;
  std::optional<double> theta;       ///< defaults to 1/eta when unset
  double eps = 0.01;
  double radial_weight = 100.0;      ///< C
  SeedSet seeds;
  std::filesystem::path output_dir = "runs";
  OptimizerConfig optimizer;
  bool resample_nodes = false;
  int num_seeds = 10;                ///< seed count for pca-compare
  bool plots = false;
  std::filesystem::path data_file;   ///< optional external point CSV for dr

  double theta_value() const { return theta ? *theta : 1.0 / eta; }
  int width() const { return widths.front(); }

  /// Throws ConfigError naming the first invalid field.
  void validate() const;
};

}  // namespace subspace
