#pragma once

#include <optional>

#include "liealg/core.hpp"
#include "liealg/data.hpp"
#include "liealg/json_io.hpp"

namespace liealg {

// Generators are only identifiable up to a nonzero scale (including sign),
// so recovery is measured on that equivalence class.

/// Unit Frobenius norm, signed so that the entry of largest magnitude is
/// positive (earliest row-major entry wins ties). Throws InputError for a
/// zero matrix.
Matrix canonicalize(const Matrix& a);

/// |<a, b>_F| / (||a||_F ||b||_F), in [0, 1]; 1 iff a and b are proportional.
double alignment(const Matrix& a, const Matrix& b);

/// max over t on a uniform grid over [0, 2 pi] of | ||e^{ta} x|| - ||x|| | / ||x||.
/// Zero for any generator whose orbits are circles centred at the origin.
double orbit_radial_deviation(const Matrix& a, const Vector& x, std::size_t grid_points = 360);

struct EvalReport {
  std::optional<double> alignment;  ///< only when the true generator is known
  double heldout_risk_mean = 0.0;
  double orbit_radial_deviation = 0.0;
  Matrix canonical_a;
  std::size_t used = 0;
  std::size_t skipped = 0;
};

EvalReport evaluate_model(const Matrix& a, const Dataset& heldout,
                          const std::optional<Matrix>& a_true = std::nullopt,
                          std::size_t orbit_grid_points = 360, double eps = 1e-12);

json report_to_json(const EvalReport& r);

}  // namespace liealg
