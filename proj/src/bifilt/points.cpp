#include "mph/bifilt/points.hpp"

#include <cmath>
#include <string>
#include <string_view>

#include "mph/core/errors.hpp"
#include "mph/core/grade.hpp"

namespace mph::bifilt {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool skippable(std::string_view line) {
  line = trim(line);
  return line.empty() || line.front() == '#';
}

std::vector<double> split_reals(std::string_view line, bool commas_only, std::size_t line_no) {
  std::vector<double> out;
  if (commas_only) {
    while (true) {
      auto pos = line.find(',');
      auto field = trim(line.substr(0, pos));
      if (field.empty()) throw ParseError("empty field", line_no);
      out.push_back(parse_real(field, line_no));
      if (pos == std::string_view::npos) break;
      line.remove_prefix(pos + 1);
    }
    return out;
  }
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ',' || std::isspace(static_cast<unsigned char>(line[i])))) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ',' && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(parse_real(line.substr(i, j - i), line_no));
    i = j;
  }
  return out;
}

}  // namespace

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> dense) : n_(n), d_(std::move(dense)) {
  if (d_.size() != n * n) throw ContractError("distance table has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (d_[i * n + i] != 0.0) throw ContractError("nonzero diagonal in distance matrix at " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      double v = d_[i * n + j];
      if (!(v >= 0.0) || std::isinf(v)) throw ContractError("invalid distance at (" + std::to_string(i) + ", " +
                                                            std::to_string(j) + ")");
      if (v != d_[j * n + i]) throw ContractError("distance matrix is not symmetric");
    }
  }
}

PointCloud load_points(std::istream& in, bool function_column) {
  PointCloud cloud;
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto fields = split_reals(line, true, line_no);
    if (width == 0) {
      width = fields.size();
      if (function_column && width < 2) throw ParseError("need coordinates and a function value", line_no);
    } else if (fields.size() != width) {
      throw ParseError("expected " + std::to_string(width) + " fields, found " + std::to_string(fields.size()),
                       line_no);
    }
    if (function_column) {
      values.push_back(fields.back());
      fields.pop_back();
    }
    cloud.points.push_back(std::move(fields));
  }
  if (cloud.points.empty()) throw ParseError("no points in input", line_no);
  if (function_column) cloud.values = std::move(values);
  return cloud;
}

DistanceMatrix load_distances(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_n = false;
  while (!have_n && std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto t = trim(line);
    auto v = parse_real(t, line_no);
    if (v < 1 || v != std::floor(v)) throw ParseError("point count must be a positive integer", line_no);
    n = static_cast<std::size_t>(v);
    have_n = true;
  }
  if (!have_n) throw ParseError("empty distance file", line_no);
  std::vector<double> dense(n * n, 0.0);
  std::size_t row = 1;
  while (row < n && std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto fields = split_reals(line, false, line_no);
    if (fields.size() == row + 1 && fields.back() == 0.0) fields.pop_back();
    if (fields.size() != row)
      throw ParseError("row " + std::to_string(row) + " needs " + std::to_string(row) + " distances", line_no);
    for (std::size_t j = 0; j < row; ++j) {
      if (!(fields[j] >= 0.0)) throw ParseError("negative distance", line_no);
      dense[row * n + j] = dense[j * n + row] = fields[j];
    }
    ++row;
  }
  if (row < n) throw ParseError("distance file ends after " + std::to_string(row) + " of " + std::to_string(n) +
                                " rows", line_no);
  while (std::getline(in, line)) {
    ++line_no;
    if (!skippable(line)) throw ParseError("unexpected trailing data", line_no);
  }
  return DistanceMatrix(n, std::move(dense));
}

DistanceMatrix pairwise_distances(const PointCloud& cloud) {
  const std::size_t n = cloud.size();
  if (n == 0) throw ContractError("empty point cloud");
  std::vector<double> dense(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < cloud.points[i].size(); ++k) {
        double t = cloud.points[i][k] - cloud.points[j][k];
        s += t * t;
      }
      dense[i * n + j] = dense[j * n + i] = std::sqrt(s);
    }
  return DistanceMatrix(n, std::move(dense));
}

}  // namespace mph::bifilt
