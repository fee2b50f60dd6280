#include "liealg/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "liealg/expm.hpp"
#include "liealg/objective.hpp"

namespace liealg {

Matrix canonicalize(const Matrix& a) {
  const double norm = frobenius_norm(a);
  if (!(norm > 0.0)) throw InputError("canonicalize: zero matrix");
  const auto v = a.values();
  std::size_t largest = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[largest])) largest = i;
  }
  return ((v[largest] < 0.0 ? -1.0 : 1.0) / norm) * a;
}

double alignment(const Matrix& a, const Matrix& b) {
  const double na = frobenius_norm(a);
  const double nb = frobenius_norm(b);
  if (!(na > 0.0) || !(nb > 0.0)) throw InputError("alignment: zero matrix");
  return std::min(1.0, std::abs(frobenius_inner(a, b)) / (na * nb));
}

double orbit_radial_deviation(const Matrix& a, const Vector& x, std::size_t grid_points) {
  if (grid_points < 8) throw InputError("orbit_radial_deviation: need at least 8 grid points");
  const double radius = vec_norm(x);
  if (!(radius > 0.0)) throw InputError("orbit_radial_deviation: zero source point");
  double worst = 0.0;
  for (const auto& s : orbit(a, x, linspace(0.0, 2.0 * std::numbers::pi, grid_points))) {
    worst = std::max(worst, std::abs(vec_norm(s.point) - radius) / radius);
  }
  return worst;
}

EvalReport evaluate_model(const Matrix& a, const Dataset& heldout, const std::optional<Matrix>& a_true,
                          std::size_t orbit_grid_points, double eps) {
  if (heldout.empty()) throw InputError("evaluate_model: empty dataset");
  if (a.dim() != heldout.n) {
    throw InputError("evaluate_model: model dimension " + std::to_string(a.dim()) +
                     " differs from data dimension " + std::to_string(heldout.n));
  }
  if (a_true && a_true->dim() != a.dim()) {
    throw InputError("evaluate_model: true generator dimension differs from the model");
  }

  const LossBreakdown risk = empirical_risk(a, heldout, eps);
  EvalReport r;
  r.heldout_risk_mean = risk.mean();
  r.used = risk.used;
  r.skipped = risk.skipped;
  r.canonical_a = canonicalize(a);
  r.orbit_radial_deviation = orbit_radial_deviation(a, heldout.pairs.front().x, orbit_grid_points);
  if (a_true) r.alignment = alignment(a, *a_true);
  return r;
}

json report_to_json(const EvalReport& r) {
  json j;
  j["alignment"] = r.alignment ? json(*r.alignment) : json(nullptr);
  j["heldout_risk_mean"] = r.heldout_risk_mean;
  j["orbit_radial_deviation"] = r.orbit_radial_deviation;
  j["canonical_a"] = matrix_to_json(r.canonical_a);
  j["used"] = r.used;
  j["skipped"] = r.skipped;
  return j;
}

}  // namespace liealg
