#include "liealg/cli.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include <CLI11.hpp>

#include "liealg/data.hpp"
#include "liealg/evaluate.hpp"
#include "liealg/figure.hpp"
#include "liealg/json_io.hpp"
#include "liealg/trainer.hpp"

namespace liealg {

namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenArgs {
  std::string preset;
  std::string generator_path;
  std::size_t dim = 0;
  std::size_t count = 0;
  double t_min = 0.0;
  double t_max = kToyTMax;
  std::uint64_t seed = 42;
  std::string output;
};

struct TrainArgs {
  std::string input;
  std::string output;
  double holdout = 0.0;
  bool no_renormalize = false;
  TrainConfig cfg;
};

struct EvalArgs {
  std::string model;
  std::string input;
  std::string true_generator;
  double holdout = 0.0;
  std::size_t grid = 360;
  std::string output;
};

struct FigureArgs {
  std::string model;
  std::string point = "1,0";
  std::string output;
  std::string orbit_csv;
  bool no_true_orbit = false;
  FigureSpec spec;
};

Matrix load_generator(const std::string& spec) {
  if (spec == "so2") return so2_generator();
  return matrix_from_json(json::parse(read_text_file(spec)));
}

Vector parse_point(const std::string& text) {
  std::vector<double> coords;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string field = text.substr(start, comma - start);
    double v = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
      throw UsageError("cannot parse point '" + text + "'");
    }
    coords.push_back(v);
    start = comma + 1;
  }
  return Vector(std::move(coords));
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  if (a.preset.empty() == a.generator_path.empty()) {
    throw UsageError("gen: give exactly one of --preset or --generator");
  }
  if (!a.preset.empty() && a.preset != "so2") throw UsageError("gen: unknown preset '" + a.preset + "'");
  const Matrix generator = a.preset == "so2" ? so2_generator() : load_generator(a.generator_path);
  if (a.dim != 0 && a.dim != generator.dim()) {
    throw UsageError("gen: --dim " + std::to_string(a.dim) + " but generator is " +
                     std::to_string(generator.dim()) + "x" + std::to_string(generator.dim()));
  }
  if (!(a.t_min < a.t_max)) throw UsageError("gen: need --t-min < --t-max");

  const Dataset d = generate_pairs(generator, a.count, a.t_min, a.t_max, a.seed);
  write_dataset(d, a.output);

  json line;
  line["command"] = "gen";
  line["output"] = a.output;
  line["sidecar"] = sidecar_path(a.output).string();
  line["n"] = d.n;
  line["count"] = d.size();
  out << dump_json(line) << '\n';
  return kExitOk;
}

int cmd_train(TrainArgs a, std::ostream& out) {
  a.cfg.renormalize = !a.no_renormalize;
  const Dataset all = read_dataset(a.input);
  const Dataset d = a.holdout > 0.0 ? split_tail(all, a.holdout).first : all;
  const TrainResult r = train(d, a.cfg);
  write_model(r, a.cfg, a.output);

  json line;
  line["command"] = "train";
  line["output"] = a.output;
  line["n"] = d.n;
  line["final_risk"] = r.final_risk();
  line["final_risk_mean"] = r.final_risk() / static_cast<double>(r.used_final);
  line["epochs"] = r.epochs_run;
  line["stop_reason"] = to_string(r.stop_reason);
  line["used"] = r.used_final;
  line["skipped"] = r.skipped_final;
  out << dump_json(line) << '\n';
  return kExitOk;
}

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const Model model = read_model(a.model);
  const Dataset all = read_dataset(a.input);
  if (all.n != model.a.dim()) {
    throw InputError("eval: model is " + std::to_string(model.a.dim()) + "-dimensional but " +
                     a.input + " is " + std::to_string(all.n) + "-dimensional");
  }
  const Dataset heldout = a.holdout > 0.0 ? split_tail(all, a.holdout).second : all;
  std::optional<Matrix> truth;
  if (!a.true_generator.empty()) truth = load_generator(a.true_generator);

  const EvalReport report = evaluate_model(model.a, heldout, truth, a.grid);
  const json j = report_to_json(report);
  if (!a.output.empty()) write_text_file(a.output, dump_json(j, 2) + "\n");
  out << dump_json(j) << '\n';
  return kExitOk;
}

int cmd_figure(FigureArgs a, std::ostream& out) {
  const Model model = read_model(a.model);
  a.spec.source_point = parse_point(a.point);
  a.spec.include_true_orbit = !a.no_true_orbit;
  const FigureData fig = build_figure(model.a, a.spec);

  fs::path csv_path = a.orbit_csv;
  if (csv_path.empty()) {
    csv_path = a.output;
    csv_path.replace_extension(".orbit.csv");
  }
  write_text_file(a.output, render_svg(fig, a.spec));
  write_text_file(csv_path, orbit_csv(fig));

  json line;
  line["command"] = "figure";
  line["svg"] = a.output;
  line["orbit_csv"] = csv_path.string();
  line["points"] = fig.learned_orbit.size();
  out << dump_json(line) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Learn the generator of a one-parameter matrix group from data pairs", "liealg"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate synthetic pairs from a known generator");
  gen_cmd->add_option("--preset", gen.preset, "Built-in generator (so2)");
  gen_cmd->add_option("--generator", gen.generator_path, "JSON file holding the generator matrix")
      ->check(CLI::ExistingFile);
  gen_cmd->add_option("--dim", gen.dim, "Expected dimension of the generator")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--count", gen.count, "Number of pairs")->required()
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  gen_cmd->add_option("--t-min", gen.t_min, "Exclusive lower end of the parameter range");
  gen_cmd->add_option("--t-max", gen.t_max, "Inclusive upper end of the parameter range (default pi/30)");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("-o,--output", gen.output, "Output CSV path")->required();

  TrainArgs tr;
  auto* train_cmd = app.add_subcommand("train", "Fit a generator by gradient descent");
  train_cmd->add_option("-i,--input", tr.input, "Dataset CSV")->required()->check(CLI::ExistingFile);
  train_cmd->add_option("-o,--output", tr.output, "Model JSON path")->required();
  train_cmd->add_option("--seed", tr.cfg.seed, "Initialization seed");
  train_cmd->add_option("--lr", tr.cfg.learning_rate, "Initial step size")->check(CLI::PositiveNumber);
  train_cmd->add_option("--max-epochs", tr.cfg.max_epochs, "Epoch limit")->check(CLI::PositiveNumber);
  train_cmd->add_option("--plateau-tol", tr.cfg.plateau_tol, "Minimum improvement over the window")
      ->check(CLI::NonNegativeNumber);
  train_cmd->add_option("--plateau-window", tr.cfg.plateau_window, "Plateau window in epochs")
      ->check(CLI::PositiveNumber);
  train_cmd->add_option("--init-scale", tr.cfg.init_scale, "Std. dev. of initial entries (default 1/n)")
      ->check(CLI::PositiveNumber);
  train_cmd->add_option("--eps", tr.cfg.eps, "Skip threshold for degenerate samples")->check(CLI::PositiveNumber);
  train_cmd->add_option("--holdout", tr.holdout, "Exclude this trailing fraction of rows")
      ->check(CLI::Range(0.0, 0.99));
  train_cmd->add_flag("--no-renormalize", tr.no_renormalize, "Do not rescale A to unit norm each step");

  EvalArgs ev;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a model on a dataset");
  eval_cmd->add_option("--model", ev.model, "Model JSON")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("-i,--input", ev.input, "Dataset CSV")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--true-generator", ev.true_generator, "so2 or a JSON matrix file");
  eval_cmd->add_option("--holdout", ev.holdout, "Evaluate on this trailing fraction of rows")
      ->check(CLI::Range(0.0, 0.99));
  eval_cmd->add_option("--grid", ev.grid, "Orbit grid points")->check(CLI::Range(std::size_t{8}, std::size_t{1000000}));
  eval_cmd->add_option("-o,--output", ev.output, "Also write the report to this file");

  FigureArgs fg;
  auto* fig_cmd = app.add_subcommand("figure", "Draw the learned orbit through a point as SVG");
  fig_cmd->add_option("--model", fg.model, "Model JSON")->required()->check(CLI::ExistingFile);
  fig_cmd->add_option("--point", fg.point, "Source point as x,y");
  fig_cmd->add_option("-o,--output", fg.output, "SVG path")->required();
  fig_cmd->add_option("--orbit-csv", fg.orbit_csv, "Orbit samples CSV (default <output>.orbit.csv)");
  fig_cmd->add_option("--grid", fg.spec.orbit_grid_points, "Orbit grid points")
      ->check(CLI::Range(std::size_t{8}, std::size_t{1000000}));
  fig_cmd->add_option("--width", fg.spec.width, "Canvas width in pixels")->check(CLI::PositiveNumber);
  fig_cmd->add_option("--height", fg.spec.height, "Canvas height in pixels")->check(CLI::PositiveNumber);
  fig_cmd->add_flag("--no-true-orbit", fg.no_true_orbit, "Omit the reference circle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*train_cmd) return cmd_train(tr, out);
    if (*eval_cmd) return cmd_eval(ev, out);
    if (*fig_cmd) return cmd_figure(fg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"liealg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace liealg
