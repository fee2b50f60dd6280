#include "liealg/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace liealg {

namespace {

void require_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw InputError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                     " vs " + std::to_string(b) + ")");
  }
}

bool all_finite(std::span<const double> xs) noexcept {
  return std::all_of(xs.begin(), xs.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

bool Vector::is_finite() const noexcept { return all_finite(data_); }

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) : n_(rows.size()) {
  data_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw InputError("Matrix: rows must form a square matrix");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
  Matrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  Matrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw InputError("Matrix: rows must form a square matrix");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * m.n_));
  }
  return m;
}

std::vector<std::vector<double>> Matrix::rows() const {
  std::vector<std::vector<double>> out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    auto first = data_.begin() + static_cast<std::ptrdiff_t>(r * n_);
    out[r].assign(first, first + static_cast<std::ptrdiff_t>(n_));
  }
  return out;
}

bool Matrix::is_finite() const noexcept { return all_finite(data_); }

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same(n_, other.n_, "matrix addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same(n_, other.n_, "matrix subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(double s) noexcept {
  for (double& x : data_) x *= s;
  return *this;
}

double dot(const Vector& a, const Vector& b) {
  require_same(a.size(), b.size(), "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double vec_norm(const Vector& v) noexcept {
  double s = 0.0;
  for (double x : v.values()) s += x * x;
  return std::sqrt(s);
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same(a.size(), b.size(), "vector addition");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same(a.size(), b.size(), "vector subtraction");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector operator*(double s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

Vector mat_vec_mul(const Matrix& m, const Vector& v) {
  require_same(m.dim(), v.size(), "mat_vec_mul");
  const std::size_t n = m.dim();
  Vector out(n);
  for (std::size_t r = 0; r < n; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < n; ++c) s += m(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  require_same(a.dim(), b.dim(), "matmul");
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const double ark = a(r, k);
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(double s, Matrix m) noexcept { return m *= s; }

double frobenius_inner(const Matrix& a, const Matrix& b) {
  require_same(a.dim(), b.dim(), "frobenius_inner");
  const auto av = a.values();
  const auto bv = b.values();
  double s = 0.0;
  for (std::size_t i = 0; i < av.size(); ++i) s += av[i] * bv[i];
  return s;
}

double frobenius_norm(const Matrix& m) noexcept {
  double s = 0.0;
  for (double x : m.values()) s += x * x;
  return std::sqrt(s);
}

void add_outer(Matrix& acc, double scale, const Vector& u, const Vector& v) {
  require_same(acc.dim(), u.size(), "add_outer");
  require_same(acc.dim(), v.size(), "add_outer");
  const std::size_t n = acc.dim();
  for (std::size_t r = 0; r < n; ++r) {
    const double su = scale * u[r];
    for (std::size_t c = 0; c < n; ++c) acc(r, c) += su * v[c];
  }
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os.precision(17);
  os << '[';
  for (std::size_t r = 0; r < m.dim(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.dim(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace liealg
