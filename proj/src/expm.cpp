#include "liealg/expm.hpp"

#include <cmath>
#include <string>

namespace liealg {

namespace {

// The scaled matrix has norm <= 1/2, so terms shrink at least geometrically;
// this bound is only reached for absurdly small tolerances.
constexpr int kMaxTaylorTerms = 200;

}  // namespace

Matrix expm(const Matrix& a, double tol) {
  if (!a.is_finite()) throw InputError("expm: matrix has non-finite entries");
  if (!(tol > 0.0)) throw InputError("expm: tolerance must be positive");

  const std::size_t n = a.dim();
  const double norm = frobenius_norm(a);
  int s = 0;
  if (norm > 0.0) s = std::max(0, static_cast<int>(std::ceil(std::log2(norm))) + 1);

  const Matrix scaled = std::ldexp(1.0, -s) * a;
  Matrix sum = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (int k = 1; k <= kMaxTaylorTerms; ++k) {
    term = (1.0 / k) * matmul(term, scaled);
    sum += term;
    if (frobenius_norm(term) <= tol) break;
  }

  for (int i = 0; i < s; ++i) sum = matmul(sum, sum);
  return sum;
}

Vector flow(const Matrix& a, double t, const Vector& x, double tol) {
  if (a.dim() != x.size()) {
    throw InputError("flow: generator is " + std::to_string(a.dim()) + "x" +
                     std::to_string(a.dim()) + " but point has dimension " +
                     std::to_string(x.size()));
  }
  return mat_vec_mul(expm(t * a, tol), x);
}

Vector tangent(const Matrix& a, const Vector& x) { return mat_vec_mul(a, x); }

std::vector<OrbitSample> orbit(const Matrix& a, const Vector& x, const std::vector<double>& t_grid,
                               double tol) {
  if (t_grid.empty()) throw InputError("orbit: empty parameter grid");
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > t_grid[i - 1])) throw InputError("orbit: grid must be strictly increasing");
  }
  std::vector<OrbitSample> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) out.push_back({t, flow(a, t, x, tol)});
  return out;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {lo};
  std::vector<double> out(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

}  // namespace liealg
