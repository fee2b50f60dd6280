#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liealg/core.hpp"
#include "liealg/json_io.hpp"
#include "liealg/rng.hpp"

namespace liealg {

/// pi / 30, the upper end of the toy experiment's parameter range.
inline constexpr double kToyTMax = 0.10471975511965977;

/// One observation before (x) and after (y) the unknown group action.
struct DataPair {
  Vector x;
  Vector y;
  std::optional<double> t_true;  ///< known only for synthetic data
};

/// How a synthetic dataset was produced.
struct Provenance {
  std::optional<Matrix> generator;
  std::optional<double> t_min;
  std::optional<double> t_max;
  std::optional<std::uint64_t> seed;
};

struct Dataset {
  std::size_t n = 0;
  std::vector<DataPair> pairs;
  std::optional<Provenance> provenance;

  std::size_t size() const noexcept { return pairs.size(); }
  bool empty() const noexcept { return pairs.empty(); }

  /// Throws InputError unless every pair has dimension n and finite entries.
  void validate() const;
};

/// Malformed dataset file. row() is the 1-based line number in the CSV
/// (the header is line 1), or 0 for file-level problems.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t row, const std::string& message);
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

/// Generator of plane rotations, [[0, 1], [-1, 0]].
Matrix so2_generator();

/// Uniform point on the unit sphere in R^n. For n == 2 this is
/// (cos theta, sin theta) with theta uniform on [0, 2 pi); for n >= 3 a
/// normalized Gaussian vector; for n == 1 a random sign.
Vector sample_unit_sphere(std::size_t n, Rng& rng);

/// Draws count pairs: x uniform on the unit sphere, t uniform on
/// (t_min, t_max], y = exp(t a_true) x. Deterministic in seed.
Dataset generate_pairs(const Matrix& a_true, std::size_t count, double t_min, double t_max,
                       std::uint64_t seed);

/// Splits off the last round(fraction * size) pairs as a held-out set.
/// fraction must lie in [0, 1); both halves must be nonempty when fraction > 0.
std::pair<Dataset, Dataset> split_tail(const Dataset& d, double fraction);

std::string dataset_to_csv(const Dataset& d);
Dataset dataset_from_csv(const std::string& text);

json provenance_to_json(const Dataset& d);

/// Sidecar file holding provenance: "toy.csv" -> "toy.meta.json".
std::filesystem::path sidecar_path(const std::filesystem::path& csv_path);

/// Writes the CSV and its JSON sidecar.
void write_dataset(const Dataset& d, const std::filesystem::path& path);

/// Reads the CSV and, when present, its sidecar.
Dataset read_dataset(const std::filesystem::path& path);

}  // namespace liealg
