#pragma once

#include <vector>

#include "liealg/core.hpp"

namespace liealg {

inline constexpr double kDefaultExpmTol = 1e-12;

/// Matrix exponential by scaling and squaring.
///
/// The scaling exponent is s = max(0, ceil(log2 ||a||_F) + 1), so the scaled
/// matrix a / 2^s has Frobenius norm at most 1/2. Its Taylor series is summed
/// until the next term has Frobenius norm <= tol, and the result is squared
/// s times. Throws InputError for non-finite input or tol <= 0.
Matrix expm(const Matrix& a, double tol = kDefaultExpmTol);

/// e^{t a} x, the one-parameter group acting on x.
Vector flow(const Matrix& a, double t, const Vector& x, double tol = kDefaultExpmTol);

/// a x: velocity of the orbit through x at t = 0.
Vector tangent(const Matrix& a, const Vector& x);

struct OrbitSample {
  double t = 0.0;
  Vector point;
};

/// Samples flow(a, t, x) at each grid value. The grid must be nonempty and
/// strictly increasing; output order follows the grid.
std::vector<OrbitSample> orbit(const Matrix& a, const Vector& x, const std::vector<double>& t_grid,
                               double tol = kDefaultExpmTol);

/// n points evenly spaced on [lo, hi], endpoints included (n >= 2), or {lo} for n == 1.
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace liealg
