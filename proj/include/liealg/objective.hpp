#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "liealg/core.hpp"
#include "liealg/data.hpp"

namespace liealg {

// Rectified cosine distance between the displacement d = y - x and the
// predicted velocity u = A x:
//
//     loss(A; x, y) = 1 - |d . u| / (||d|| ||u||)
//
// For small group parameters y - x ~ t A x, so the loss vanishes when A is
// the true generator up to a nonzero scale. The loss is invariant under
// A -> cA and d -> cd for any c != 0. Samples with ||d|| <= eps or
// ||u|| <= eps are skipped (the loss is undefined there) and counted.

inline constexpr double kDefaultSkipEps = 1e-12;

/// Every sample was skipped, so the risk is undefined.
class DegenerateDatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite-difference probe crossed a skip boundary; the oracle is not valid there.
class OracleInvalidError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LossBreakdown {
  double total = 0.0;     ///< sum over used samples, in dataset order
  std::size_t used = 0;
  std::size_t skipped = 0;
  std::vector<std::optional<double>> per_sample;  ///< filled only on request

  double mean() const { return used ? total / static_cast<double>(used) : 0.0; }
};

/// Per-sample loss in [0, 1], or nullopt for a skipped sample.
std::optional<double> sample_loss(const Matrix& a, const DataPair& p, double eps = kDefaultSkipEps);

/// Throws DegenerateDatasetError if every sample is skipped.
LossBreakdown empirical_risk(const Matrix& a, const Dataset& d, double eps = kDefaultSkipEps,
                             bool keep_per_sample = false);

/// Gradient of sample_loss with respect to a, or nullopt where the sample is
/// skipped. With s = d . u the gradient is
///   -( sign(s) d x^T / (||d|| ||u||) - |s| u x^T / (||d|| ||u||^3) ),
/// taking sign(0) = 0.
std::optional<Matrix> sample_gradient(const Matrix& a, const DataPair& p, double eps = kDefaultSkipEps);

/// Sum of sample gradients in dataset order. Throws DegenerateDatasetError
/// if every sample is skipped.
Matrix risk_gradient(const Matrix& a, const Dataset& d, double eps = kDefaultSkipEps);

/// Value of a scalar function of a matrix plus the number of samples it used.
struct RiskProbe {
  double value = 0.0;
  std::size_t used = 0;
};
using RiskFunction = std::function<RiskProbe(const Matrix&)>;

/// Central differences (f(a + h E_jk) - f(a - h E_jk)) / 2h for every entry.
/// Throws OracleInvalidError when the used count differs between the two
/// probes of any entry.
Matrix finite_diff_gradient(const RiskFunction& f, const Matrix& a, double h = 1e-6);

/// finite_diff_gradient of empirical_risk over d.
Matrix finite_diff_gradient(const Matrix& a, const Dataset& d, double h = 1e-6,
                            double eps = kDefaultSkipEps);

}  // namespace liealg
