#include "liealg/data.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string_view>

#include "liealg/expm.hpp"

namespace liealg {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

double parse_field(std::string_view field, std::size_t row, std::size_t col) {
  double value = 0.0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  if (!field.empty() && *first == '+') ++first;
  const auto res = std::from_chars(first, last, value);
  if (field.empty() || res.ec != std::errc{} || res.ptr != last || !std::isfinite(value)) {
    throw ParseError(row, "column " + std::to_string(col + 1) + ": not a finite number: '" +
                              std::string(field) + "'");
  }
  return value;
}

void check_header(const std::vector<std::string_view>& fields, std::size_t& n, bool& has_t) {
  has_t = !fields.empty() && fields.back() == "t";
  const std::size_t coords = fields.size() - (has_t ? 1 : 0);
  if (coords == 0 || coords % 2 != 0) {
    throw ParseError(1, "header must be x0..x{n-1},y0..y{n-1}[,t]");
  }
  n = coords / 2;
  for (std::size_t i = 0; i < n; ++i) {
    if (fields[i] != "x" + std::to_string(i) || fields[n + i] != "y" + std::to_string(i)) {
      throw ParseError(1, "header must be x0..x{n-1},y0..y{n-1}[,t]");
    }
  }
}

}  // namespace

ParseError::ParseError(std::size_t row, const std::string& message)
    : std::runtime_error(row ? "row " + std::to_string(row) + ": " + message : message), row_(row) {}

void Dataset::validate() const {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    if (p.x.size() != n || p.y.size() != n) {
      throw InputError("pair " + std::to_string(i) + " does not have dimension " + std::to_string(n));
    }
    if (!p.x.is_finite() || !p.y.is_finite()) {
      throw InputError("pair " + std::to_string(i) + " has non-finite coordinates");
    }
  }
}

Matrix so2_generator() { return Matrix{{0.0, 1.0}, {-1.0, 0.0}}; }

Vector sample_unit_sphere(std::size_t n, Rng& rng) {
  if (n == 0) throw InputError("sample_unit_sphere: dimension must be at least 1");
  if (n == 1) return Vector{rng.uniform() < 0.5 ? -1.0 : 1.0};
  if (n == 2) {
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    return Vector{std::cos(theta), std::sin(theta)};
  }
  while (true) {
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = rng.normal();
    const double norm = vec_norm(v);
    if (norm > 1e-300) return (1.0 / norm) * v;
  }
}

Dataset generate_pairs(const Matrix& a_true, std::size_t count, double t_min, double t_max,
                       std::uint64_t seed) {
  if (count == 0) throw InputError("generate_pairs: count must be at least 1");
  if (!std::isfinite(t_min) || !std::isfinite(t_max) || !(t_min < t_max)) {
    throw InputError("generate_pairs: need finite t_min < t_max");
  }
  if (a_true.dim() == 0 || !a_true.is_finite()) {
    throw InputError("generate_pairs: generator must be a finite nonempty matrix");
  }

  Rng rng(seed);
  Dataset d;
  d.n = a_true.dim();
  d.pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Vector x = sample_unit_sphere(d.n, rng);
    double t = t_min;
    while (t <= t_min) t = t_max - rng.uniform() * (t_max - t_min);
    Vector y = flow(a_true, t, x);
    d.pairs.push_back({std::move(x), std::move(y), t});
  }
  d.provenance = Provenance{a_true, t_min, t_max, seed};
  return d;
}

std::pair<Dataset, Dataset> split_tail(const Dataset& d, double fraction) {
  if (!(fraction >= 0.0 && fraction < 1.0)) throw InputError("holdout fraction must lie in [0, 1)");
  const auto held = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(d.size())));
  if (fraction > 0.0 && (held == 0 || held >= d.size())) {
    throw InputError("holdout fraction leaves an empty split for " + std::to_string(d.size()) + " pairs");
  }
  Dataset head{d.n, {}, d.provenance};
  Dataset tail{d.n, {}, d.provenance};
  const std::size_t cut = d.size() - held;
  head.pairs.assign(d.pairs.begin(), d.pairs.begin() + static_cast<std::ptrdiff_t>(cut));
  tail.pairs.assign(d.pairs.begin() + static_cast<std::ptrdiff_t>(cut), d.pairs.end());
  return {std::move(head), std::move(tail)};
}

std::string dataset_to_csv(const Dataset& d) {
  d.validate();
  std::size_t with_t = 0;
  for (const auto& p : d.pairs) with_t += p.t_true.has_value();
  if (with_t != 0 && with_t != d.size()) {
    throw InputError("dataset_to_csv: t_true must be present on all pairs or none");
  }
  const bool has_t = with_t != 0;

  std::string out;
  for (std::size_t i = 0; i < d.n; ++i) out += (i ? ",x" : "x") + std::to_string(i);
  for (std::size_t i = 0; i < d.n; ++i) out += ",y" + std::to_string(i);
  if (has_t) out += ",t";
  out += '\n';

  for (const auto& p : d.pairs) {
    for (std::size_t i = 0; i < d.n; ++i) {
      if (i) out += ',';
      out += format_double(p.x[i]);
    }
    for (std::size_t i = 0; i < d.n; ++i) out += ',' + format_double(p.y[i]);
    if (has_t) out += ',' + format_double(*p.t_true);
    out += '\n';
  }
  return out;
}

Dataset dataset_from_csv(const std::string& text) {
  std::string_view rest(text);
  std::size_t row = 0;
  bool have_header = false;
  bool has_t = false;
  Dataset d;

  while (!rest.empty()) {
    const std::size_t eol = rest.find('\n');
    std::string_view line = rest.substr(0, eol);
    rest = eol == std::string_view::npos ? std::string_view{} : rest.substr(eol + 1);
    ++row;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) {
      if (!have_header) throw ParseError(row, "missing header");
      continue;
    }

    const auto fields = split_fields(line);
    if (!have_header) {
      check_header(fields, d.n, has_t);
      have_header = true;
      continue;
    }

    const std::size_t expected = 2 * d.n + (has_t ? 1 : 0);
    if (fields.size() != expected) {
      throw ParseError(row, "expected " + std::to_string(expected) + " fields, got " +
                                std::to_string(fields.size()));
    }
    DataPair p{Vector(d.n), Vector(d.n), std::nullopt};
    for (std::size_t i = 0; i < d.n; ++i) {
      p.x[i] = parse_field(fields[i], row, i);
      p.y[i] = parse_field(fields[d.n + i], row, d.n + i);
    }
    if (has_t) p.t_true = parse_field(fields[2 * d.n], row, 2 * d.n);
    d.pairs.push_back(std::move(p));
  }
  if (!have_header) throw ParseError(0, "empty dataset file");
  return d;
}

json provenance_to_json(const Dataset& d) {
  json j;
  j["n"] = d.n;
  j["count"] = d.size();
  if (d.provenance) {
    const auto& p = *d.provenance;
    if (p.seed) j["seed"] = *p.seed;
    if (p.t_min) j["t_min"] = *p.t_min;
    if (p.t_max) j["t_max"] = *p.t_max;
    if (p.generator) j["generator"] = matrix_to_json(*p.generator);
  }
  return j;
}

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path) {
  auto p = csv_path;
  p.replace_extension(".meta.json");
  return p;
}

void write_dataset(const Dataset& d, const std::filesystem::path& path) {
  write_text_file(path, dataset_to_csv(d));
  write_text_file(sidecar_path(path), dump_json(provenance_to_json(d), 2) + "\n");
}

Dataset read_dataset(const std::filesystem::path& path) {
  Dataset d = dataset_from_csv(read_text_file(path));
  const auto meta_path = sidecar_path(path);
  if (!std::filesystem::exists(meta_path)) return d;

  json meta;
  try {
    meta = json::parse(read_text_file(meta_path));
  } catch (const json::exception& e) {
    throw ParseError(0, meta_path.string() + ": " + e.what());
  }
  try {
    if (meta.at("n").get<std::size_t>() != d.n || meta.at("count").get<std::size_t>() != d.size()) {
      throw ParseError(0, meta_path.string() + ": n/count disagree with " + path.string());
    }
    Provenance p;
    if (meta.contains("seed")) p.seed = meta["seed"].get<std::uint64_t>();
    if (meta.contains("t_min")) p.t_min = meta["t_min"].get<double>();
    if (meta.contains("t_max")) p.t_max = meta["t_max"].get<double>();
    if (meta.contains("generator")) p.generator = matrix_from_json(meta["generator"]);
    d.provenance = std::move(p);
  } catch (const json::exception& e) {
    throw ParseError(0, meta_path.string() + ": " + e.what());
  }
  return d;
}

}  // namespace liealg
