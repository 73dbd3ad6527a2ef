#include "starfan/datagen.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "starfan/rng.hpp"

namespace starfan {

LabeledDataset sample_star_dataset(const Fan& fan, const GenSpec& spec) {
  if (spec.count < 1) throw Error(Errc::ParseError, "count must be >= 1");
  if (!(spec.noise > 0.5) || !(spec.noise <= 1.0))
    throw Error(Errc::ParseError, "noise must be in (0.5, 1]");
  if (spec.a_true.size() != fan.num_rays())
    throw Error(Errc::DimensionError, "a_true length does not match the fan's ray count");
  const int d = fan.dim();
  Rng rng(spec.seed);
  LabeledDataset data;
  data.points.reserve(spec.count);
  data.labels.reserve(spec.count);
  Vector x(d);
  while (int(data.points.size()) < spec.count) {
    // rejection from the cube onto the unit ball
    for (int j = 0; j < d; ++j) x[j] = rng.uniform(-1.0, 1.0);
    if (x.squaredNorm() > 1.0) continue;
    int y = classify(fan, spec.a_true, x);
    if (rng.uniform01() >= spec.noise) y = 1 - y;
    data.points.push_back(x);
    data.labels.push_back(y);
  }
  return data;
}

LabeledDataset read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw Error(Errc::ParseError, path + ": empty file");

  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
  };

  const auto header = split(line);
  if (header.size() < 2 || header.back() != "y")
    throw Error(Errc::ParseError, path + ": expected header x1,...,xd,y");
  const int d = int(header.size()) - 1;
  for (int j = 0; j < d; ++j)
    if (header[j] != "x" + std::to_string(j + 1))
      throw Error(Errc::ParseError, path + ": expected header x1,...,xd,y");

  LabeledDataset data;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const auto cells = split(line);
    if (int(cells.size()) != d + 1)
      throw Error(Errc::ParseError, path + ": row " + std::to_string(row) + " has " +
                                        std::to_string(cells.size()) + " cells, expected " +
                                        std::to_string(d + 1));
    Vector x(d);
    for (int j = 0; j <= d; ++j) {
      errno = 0;
      char* end = nullptr;
      const double v = std::strtod(cells[j].c_str(), &end);
      if (end == cells[j].c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(v))
        throw Error(Errc::ParseError, path + ": row " + std::to_string(row) + ", column " +
                                          std::to_string(j + 1) + ": bad number '" + cells[j] +
                                          "'");
      if (j < d) {
        x[j] = v;
      } else {
        if (v != 0.0 && v != 1.0)
          throw Error(Errc::LabelError, path + ": row " + std::to_string(row) +
                                            ": label must be 0 or 1, got '" + cells[j] + "'");
        data.labels.push_back(int(v));
      }
    }
    data.points.push_back(std::move(x));
  }
  return data;
}

void write_csv(const LabeledDataset& data, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path);
  const int d = data.dim();
  for (int j = 0; j < d; ++j) out << "x" << (j + 1) << ",";
  out << "y\n";
  char buf[40];
  for (int i = 0; i < data.size(); ++i) {
    for (int j = 0; j < d; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", data.points[i][j]);
      out << buf << ",";
    }
    out << data.labels[i] << "\n";
  }
  if (!out) throw Error(Errc::ParseError, "short write to " + path);
}

LabeledDataset line_dataset_1d(const std::string& variant) {
  const double xs[] = {-4, -3, -2, -1, 1, 2, 3, 4};
  const int listed[] = {0, 1, 1, 1, 1, 1, 0, 0};
  LabeledDataset data;
  for (int i = 0; i < 8; ++i) {
    Vector x(1);
    x[0] = xs[i];
    data.points.push_back(x);
    if (variant == "listed")
      data.labels.push_back(listed[i]);
    else if (variant == "complemented")
      data.labels.push_back(1 - listed[i]);
    else
      throw Error(Errc::ParseError, "unknown label variant '" + variant + "'");
  }
  return data;
}

LabeledDataset diagonal_dataset_2d() {
  LabeledDataset data;
  for (int k = 1; k <= 3; ++k) {
    Vector x(2);
    x[0] = x[1] = double(k);
    data.points.push_back(x);
    data.labels.push_back(k == 2 ? 1 : 0);
  }
  return data;
}

}  // namespace starfan
