#include "liealg/json_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace liealg {

namespace {

void dump_impl(const json& v, int indent, int depth, std::string& out) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };

  switch (v.type()) {
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(key).dump();
        out += indent < 0 ? ":" : ": ";
        dump_impl(item, indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      // rows of numbers stay on one line
      const bool flat = std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_number(); });
      out += '[';
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += flat && indent >= 0 ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        dump_impl(item, indent, depth + 1, out);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case json::value_t::number_float: {
      const double x = v.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        return;
      }
      std::string s = format_double(x);
      // keep the value typed as a float when it is re-read
      if (s.find_first_of(".e") == std::string::npos) s += ".0";
      out += s;
      return;
    }
    default:
      out += v.dump();
      return;
  }
}

}  // namespace

std::string format_double(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

std::string dump_json(const json& value, int indent) {
  std::string out;
  dump_impl(value, indent, 0, out);
  return out;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (const auto& row : m.rows()) rows.push_back(row);
  return rows;
}

Matrix matrix_from_json(const json& value) {
  if (value.is_object()) {
    if (value.contains("generator")) return matrix_from_json(value.at("generator"));
    if (value.contains("A")) return matrix_from_json(value.at("A"));
    throw InputError("matrix JSON object needs a \"generator\" or \"A\" field");
  }
  if (!value.is_array() || value.empty()) throw InputError("matrix JSON must be a nonempty array of rows");
  std::vector<std::vector<double>> rows;
  for (const auto& row : value) {
    if (!row.is_array()) throw InputError("matrix JSON rows must be arrays");
    std::vector<double> r;
    for (const auto& x : row) {
      if (!x.is_number()) throw InputError("matrix JSON entries must be numbers");
      r.push_back(x.get<double>());
    }
    rows.push_back(std::move(r));
  }
  Matrix m = Matrix::from_rows(rows);
  if (!m.is_finite()) throw InputError("matrix JSON has non-finite entries");
  return m;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
  out.close();
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace liealg
