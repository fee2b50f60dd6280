#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liealg/core.hpp"
#include "liealg/data.hpp"
#include "liealg/json_io.hpp"
#include "liealg/objective.hpp"

namespace liealg {

/// Hyperparameters for full-batch gradient descent on the empirical risk.
struct TrainConfig {
  double learning_rate = 0.5;
  std::size_t max_epochs = 2000;
  double plateau_tol = 1e-9;
  std::size_t plateau_window = 20;
  /// Standard deviation of the Gaussian initial entries; <= 0 means 1/n.
  double init_scale = 0.0;
  std::uint64_t seed = 0;
  /// Rescale A to unit Frobenius norm after every step.
  bool renormalize = true;
  double eps = kDefaultSkipEps;
  /// Starting point; overrides the random initialization when set.
  std::optional<Matrix> initial;

  /// Throws InputError for non-positive rates, windows, or tolerances.
  void validate() const;
  double effective_init_scale(std::size_t n) const;
};

enum class StopReason { max_epochs, plateau };

std::string to_string(StopReason r);

struct TrainResult {
  Matrix a_learned;
  /// Risk at the starting point followed by the risk after each epoch.
  std::vector<double> loss_history;
  std::size_t epochs_run = 0;
  StopReason stop_reason = StopReason::max_epochs;
  std::size_t used_final = 0;
  std::size_t skipped_final = 0;

  double final_risk() const { return loss_history.back(); }
};

class InitializationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gaussian initial generator for d. Redraws (up to 100 attempts) while any
/// pair has ||A x|| <= eps under the draw. Pairs whose displacement is itself
/// degenerate are skipped for every A and do not trigger redraws.
Matrix init_generator(const Dataset& d, const TrainConfig& cfg);

/// Minimizes the empirical risk by A <- A - lr * grad, halving the step (up
/// to 30 times) whenever it would raise the risk. Stops once the risk has
/// improved by less than plateau_tol over plateau_window epochs, when no
/// descent step exists, or at max_epochs.
TrainResult train(const Dataset& d, const TrainConfig& cfg);

json config_to_json(const TrainConfig& cfg);

/// Model file: {"n", "A", "loss_history", "config", "stop_reason", ...}.
json model_to_json(const TrainResult& r, const TrainConfig& cfg);

struct Model {
  Matrix a;
  std::vector<double> loss_history;
  std::string stop_reason;
};

Model model_from_json(const json& j);
void write_model(const TrainResult& r, const TrainConfig& cfg, const std::filesystem::path& path);
Model read_model(const std::filesystem::path& path);

}  // namespace liealg
