#include "liealg/trainer.hpp"

#include <cmath>

#include "liealg/rng.hpp"

namespace liealg {

namespace {

constexpr int kMaxInitAttempts = 100;
constexpr int kMaxHalvings = 30;

bool all_predictions_nondegenerate(const Matrix& a, const Dataset& d, double eps) {
  for (const auto& p : d.pairs) {
    if (vec_norm(mat_vec_mul(a, p.x)) <= eps) return false;
  }
  return true;
}

void normalize(Matrix& a) {
  const double norm = frobenius_norm(a);
  if (norm > 0.0) a *= 1.0 / norm;
}

// Risk at a, or nullopt when every sample is skipped there.
std::optional<LossBreakdown> try_risk(const Matrix& a, const Dataset& d, double eps) {
  try {
    return empirical_risk(a, d, eps);
  } catch (const DegenerateDatasetError&) {
    return std::nullopt;
  }
}

void check_finite(double loss, std::size_t epoch) {
  if (!std::isfinite(loss)) {
    throw TrainingError("non-finite risk at epoch " + std::to_string(epoch));
  }
}

}  // namespace

void TrainConfig::validate() const {
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) throw InputError("learning rate must be positive");
  if (max_epochs == 0) throw InputError("max_epochs must be positive");
  if (!(plateau_tol >= 0.0)) throw InputError("plateau_tol must be nonnegative");
  if (plateau_window == 0) throw InputError("plateau_window must be positive");
  if (!(eps > 0.0)) throw InputError("eps must be positive");
  if (!std::isfinite(init_scale)) throw InputError("init_scale must be finite");
  if (initial && !initial->is_finite()) throw InputError("initial generator must be finite");
}

double TrainConfig::effective_init_scale(std::size_t n) const {
  return init_scale > 0.0 ? init_scale : 1.0 / static_cast<double>(n);
}

std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::max_epochs: return "max_epochs";
    case StopReason::plateau: return "plateau";
  }
  return "unknown";
}

Matrix init_generator(const Dataset& d, const TrainConfig& cfg) {
  if (d.n == 0) throw InputError("init_generator: dimension must be at least 1");
  Rng rng(cfg.seed);
  const double scale = cfg.effective_init_scale(d.n);
  for (int attempt = 0; attempt < kMaxInitAttempts; ++attempt) {
    Matrix a(d.n);
    for (double& v : a.values()) v = scale * rng.normal();
    if (all_predictions_nondegenerate(a, d, cfg.eps)) return a;
  }
  throw InitializationError("init_generator: every draw left some A x degenerate after " +
                            std::to_string(kMaxInitAttempts) + " attempts");
}

TrainResult train(const Dataset& d, const TrainConfig& cfg) {
  cfg.validate();
  if (d.empty()) throw InputError("train: empty dataset");
  d.validate();
  if (cfg.initial && cfg.initial->dim() != d.n) {
    throw InputError("train: initial generator dimension differs from the dataset");
  }

  TrainResult r;
  Matrix a = cfg.initial ? *cfg.initial : init_generator(d, cfg);
  LossBreakdown risk = empirical_risk(a, d, cfg.eps);
  check_finite(risk.total, 0);
  r.loss_history.push_back(risk.total);

  r.stop_reason = StopReason::max_epochs;
  for (std::size_t epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
    const Matrix grad = risk_gradient(a, d, cfg.eps);

    bool accepted = false;
    double step = cfg.learning_rate;
    for (int k = 0; k <= kMaxHalvings; ++k, step *= 0.5) {
      Matrix candidate = a - step * grad;
      if (cfg.renormalize) normalize(candidate);
      const auto cand_risk = try_risk(candidate, d, cfg.eps);
      if (!cand_risk) continue;
      check_finite(cand_risk->total, epoch);
      if (cand_risk->total <= risk.total) {
        a = std::move(candidate);
        risk = *cand_risk;
        accepted = true;
        break;
      }
    }

    r.epochs_run = epoch;
    r.loss_history.push_back(risk.total);
    if (!accepted) {
      r.stop_reason = StopReason::plateau;
      break;
    }
    if (epoch >= cfg.plateau_window) {
      const double earlier = r.loss_history[epoch - cfg.plateau_window];
      if (earlier - risk.total < cfg.plateau_tol) {
        r.stop_reason = StopReason::plateau;
        break;
      }
    }
  }

  r.a_learned = std::move(a);
  r.used_final = risk.used;
  r.skipped_final = risk.skipped;
  return r;
}

json config_to_json(const TrainConfig& cfg) {
  json j;
  j["learning_rate"] = cfg.learning_rate;
  j["max_epochs"] = cfg.max_epochs;
  j["plateau_tol"] = cfg.plateau_tol;
  j["plateau_window"] = cfg.plateau_window;
  j["init_scale"] = cfg.init_scale;
  j["seed"] = cfg.seed;
  j["renormalize"] = cfg.renormalize;
  j["eps"] = cfg.eps;
  return j;
}

json model_to_json(const TrainResult& r, const TrainConfig& cfg) {
  json j;
  j["n"] = r.a_learned.dim();
  j["A"] = matrix_to_json(r.a_learned);
  j["loss_history"] = r.loss_history;
  j["config"] = config_to_json(cfg);
  j["config"]["init_scale"] = cfg.effective_init_scale(r.a_learned.dim());
  j["stop_reason"] = to_string(r.stop_reason);
  j["epochs_run"] = r.epochs_run;
  j["used_final"] = r.used_final;
  j["skipped_final"] = r.skipped_final;
  return j;
}

Model model_from_json(const json& j) {
  try {
    Model m;
    m.a = matrix_from_json(j.at("A"));
    if (j.at("n").get<std::size_t>() != m.a.dim()) throw InputError("model: n disagrees with A");
    if (j.contains("loss_history")) m.loss_history = j["loss_history"].get<std::vector<double>>();
    if (j.contains("stop_reason")) m.stop_reason = j["stop_reason"].get<std::string>();
    return m;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed model JSON: ") + e.what());
  }
}

void write_model(const TrainResult& r, const TrainConfig& cfg, const std::filesystem::path& path) {
  write_text_file(path, dump_json(model_to_json(r, cfg), 2) + "\n");
}

Model read_model(const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return model_from_json(j);
}

}  // namespace liealg
