#include "liealg/objective.hpp"

#include <cmath>

namespace liealg {

namespace {

struct SampleTerms {
  Vector d;
  Vector u;
  double s;
  double norm_d;
  double norm_u;
};

std::optional<SampleTerms> terms(const Matrix& a, const DataPair& p, double eps) {
  Vector d = p.y - p.x;
  Vector u = mat_vec_mul(a, p.x);
  const double norm_d = vec_norm(d);
  const double norm_u = vec_norm(u);
  if (norm_d <= eps || norm_u <= eps) return std::nullopt;
  const double s = dot(d, u);
  return SampleTerms{std::move(d), std::move(u), s, norm_d, norm_u};
}

double sign(double v) { return static_cast<double>((v > 0.0) - (v < 0.0)); }

void accumulate_gradient(Matrix& acc, const SampleTerms& st, const Vector& x) {
  const double denom = st.norm_d * st.norm_u;
  add_outer(acc, -sign(st.s) / denom, st.d, x);
  add_outer(acc, std::abs(st.s) / (denom * st.norm_u * st.norm_u), st.u, x);
}

void require_nonempty(const Dataset& d) {
  if (d.empty()) throw InputError("empty dataset");
}

}  // namespace

std::optional<double> sample_loss(const Matrix& a, const DataPair& p, double eps) {
  const auto st = terms(a, p, eps);
  if (!st) return std::nullopt;
  double cosine = std::abs(st->s) / (st->norm_d * st->norm_u);
  // rounding can push the cosine a hair past 1; NaN must pass through
  if (cosine > 1.0) cosine = 1.0;
  return 1.0 - cosine;
}

LossBreakdown empirical_risk(const Matrix& a, const Dataset& d, double eps, bool keep_per_sample) {
  require_nonempty(d);
  LossBreakdown out;
  if (keep_per_sample) out.per_sample.reserve(d.size());
  for (const auto& p : d.pairs) {
    const auto loss = sample_loss(a, p, eps);
    if (loss) {
      out.total += *loss;
      ++out.used;
    } else {
      ++out.skipped;
    }
    if (keep_per_sample) out.per_sample.push_back(loss);
  }
  if (out.used == 0) throw DegenerateDatasetError("degenerate dataset: every sample was skipped");
  return out;
}

std::optional<Matrix> sample_gradient(const Matrix& a, const DataPair& p, double eps) {
  const auto st = terms(a, p, eps);
  if (!st) return std::nullopt;
  Matrix g(a.dim());
  accumulate_gradient(g, *st, p.x);
  return g;
}

Matrix risk_gradient(const Matrix& a, const Dataset& d, double eps) {
  require_nonempty(d);
  Matrix g(a.dim());
  std::size_t used = 0;
  for (const auto& p : d.pairs) {
    const auto st = terms(a, p, eps);
    if (!st) continue;
    accumulate_gradient(g, *st, p.x);
    ++used;
  }
  if (used == 0) throw DegenerateDatasetError("degenerate dataset: every sample was skipped");
  return g;
}

Matrix finite_diff_gradient(const RiskFunction& f, const Matrix& a, double h) {
  if (!(h > 0.0)) throw InputError("finite_diff_gradient: step must be positive");
  Matrix g(a.dim());
  Matrix probe = a;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) {
      const double orig = probe(r, c);
      probe(r, c) = orig + h;
      const RiskProbe plus = f(probe);
      probe(r, c) = orig - h;
      const RiskProbe minus = f(probe);
      probe(r, c) = orig;
      if (plus.used != minus.used) {
        throw OracleInvalidError("finite_diff_gradient: skip boundary crossed at entry (" +
                                 std::to_string(r) + ", " + std::to_string(c) + ")");
      }
      g(r, c) = (plus.value - minus.value) / (2.0 * h);
    }
  }
  return g;
}

Matrix finite_diff_gradient(const Matrix& a, const Dataset& d, double h, double eps) {
  return finite_diff_gradient(
      [&](const Matrix& m) {
        const auto risk = empirical_risk(m, d, eps);
        return RiskProbe{risk.total, risk.used};
      },
      a, h);
}

}  // namespace liealg
