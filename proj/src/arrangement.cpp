#include "starfan/arrangement.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <thread>

#include "starfan/simplex.hpp"

namespace starfan {

namespace {

int thread_budget() {
  if (const char* env = std::getenv("STARFAN_THREADS")) {
    const int k = std::atoi(env);
    if (k >= 1) return k;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? int(hw) : 1;
}

void parallel_rows(int rows, const std::function<void(int)>& body) {
  const int workers = std::min(thread_budget(), std::max(rows, 1));
  if (workers <= 1) {
    for (int r = 0; r < rows; ++r) body(r);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int r = w; r < rows; r += workers) body(r);
    });
  for (auto& th : pool) th.join();
}

// Max-min-slack LP for a partial sign assignment over points 0..k-1.
// Variables: a' = a - lo (n of them) and the open-side slack s, all >= 0.
struct SlackLp {
  bool feasible = false;
  Vector witness;  // full a, only meaningful when feasible
  double slack = 0.0;
  bool has_open = false;
};

SlackLp solve_slack_lp(const DataMatrix& A, const std::vector<int>& signs, int k,
                       const Box& box) {
  const int n = A.n;
  int n_open = 0;
  for (int i = 0; i < k; ++i) n_open += signs[i];

  double s_cap = 1.0;
  for (int i = 0; i < k; ++i) {
    double reach = 0.0;
    for (const auto& [j, v] : A.rows[i]) reach += v * box.hi[j];
    s_cap = std::max(s_cap, reach);
  }

  const int rows = k + n + 1;
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(rows, n + 1);
  Eigen::VectorXd b(rows);
  for (int i = 0; i < k; ++i) {
    double offset = 0.0;
    for (const auto& [j, v] : A.rows[i]) offset += v * box.lo[j];
    if (signs[i] == 0) {
      for (const auto& [j, v] : A.rows[i]) M(i, j) = v;
      b[i] = 1.0 - offset;
    } else {
      for (const auto& [j, v] : A.rows[i]) M(i, j) = -v;
      M(i, n) = 1.0;
      b[i] = offset - 1.0;
    }
  }
  for (int j = 0; j < n; ++j) {
    M(k + j, j) = 1.0;
    b[k + j] = box.hi[j] - box.lo[j];
  }
  M(k + n, n) = 1.0;
  b[k + n] = s_cap;

  Eigen::VectorXd c = Eigen::VectorXd::Zero(n + 1);
  c[n] = 1.0;

  const LpResult lp = simplex_maximize(M, b, c);
  SlackLp out;
  out.has_open = n_open > 0;
  if (lp.status != LpStatus::Optimal) return out;
  out.feasible = true;
  out.witness = box.lo + lp.x.head(n);
  out.slack = lp.x[n];
  return out;
}

}  // namespace

std::vector<Chamber> enumerate_chambers(const DataMatrix& A, const std::vector<int>& labels,
                                        const Box& box, int max_points, double strict_eps) {
  const int m = A.size();
  if (m > max_points)
    throw Error(Errc::TooManyPoints, std::to_string(m) + " points exceed the cap of " +
                                         std::to_string(max_points));
  if (box.lo.size() != A.n || box.hi.size() != A.n)
    throw Error(Errc::DimensionError, "box dimension does not match parameter dimension");
  for (int j = 0; j < A.n; ++j)
    if (!(box.lo[j] > 0.0) || box.lo[j] >= box.hi[j])
      throw Error(Errc::InfeasibleBox, "need 0 < lo < hi in every coordinate");

  std::vector<Chamber> chambers;
  std::vector<int> signs(m, 0);

  // Depth-first over sign vectors (0 branch first => lexicographic output);
  // an infeasible prefix prunes all its completions.
  auto recurse = [&](auto&& self, int depth) -> void {
    const SlackLp lp = solve_slack_lp(A, signs, depth, box);
    if (!lp.feasible || (lp.has_open && lp.slack < strict_eps)) return;
    if (depth == m) {
      Chamber ch;
      ch.sign_vector = signs;
      ch.witness = ParamVector(lp.witness);
      ch.report = zero_one_loss(A, labels, ch.witness);
      if (lp.has_open) {
        ch.margin = lp.slack;
      } else {
        // all-closed chamber: report the smallest closed-side slack instead
        ch.margin = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i)
          ch.margin = std::min(ch.margin, 1.0 - A.dot(i, lp.witness));
      }
      chambers.push_back(std::move(ch));
      return;
    }
    signs[depth] = 0;
    self(self, depth + 1);
    signs[depth] = 1;
    self(self, depth + 1);
    signs[depth] = 0;
  };
  recurse(recurse, 0);
  return chambers;
}

std::map<int, int> level_set_summary(const std::vector<Chamber>& chambers) {
  std::map<int, int> hist;
  for (const auto& ch : chambers) ++hist[ch.report.err];
  return hist;
}

std::vector<int> segment_profile(const DataMatrix& A, const std::vector<int>& labels,
                                 const ParamVector& a_from, const ParamVector& a_to,
                                 int steps) {
  std::vector<int> profile;
  for (int k = 0; k < steps; ++k) {
    const double u = steps > 1 ? double(k) / double(steps - 1) : 0.0;
    const ParamVector a(((1.0 - u) * a_from.a + u * a_to.a).eval());
    profile.push_back(zero_one_loss(A, labels, a).err);
  }
  return profile;
}

TranslationalGrid translational_grid(const Fan& fan, const LabeledDataset& data,
                                     const ParamVector& a, const GridSpec& grid) {
  if (fan.dim() != 2) throw Error(Errc::DimensionError, "translation grids are 2-D only");
  TranslationalGrid out;
  out.spec = grid;
  out.err.assign(grid.ny, std::vector<int>(grid.nx, 0));
  out.signature.assign(grid.ny, std::vector<uint64_t>(grid.nx, 0));

  parallel_rows(grid.ny, [&](int iy) {
    Vector t(2);
    for (int ix = 0; ix < grid.nx; ++ix) {
      t[0] = grid.x0 + ix * grid.step;
      t[1] = grid.y0 + iy * grid.step;
      int err = 0;
      uint64_t sig = 0;
      for (int i = 0; i < data.size(); ++i) {
        const bool inside = translation_membership(fan, a, data.points[i], t);
        if (inside && i < 64) sig |= uint64_t(1) << i;
        const int pred = inside ? 0 : 1;
        if (pred != data.labels[i]) ++err;
      }
      out.err[iy][ix] = err;
      out.signature[iy][ix] = sig;
    }
  });
  return out;
}

int count_zero_components(const TranslationalGrid& grid) {
  const int ny = int(grid.err.size());
  const int nx = ny ? int(grid.err[0].size()) : 0;
  std::vector<std::vector<bool>> seen(ny, std::vector<bool>(nx, false));
  int components = 0;
  std::vector<std::pair<int, int>> stack;
  for (int y = 0; y < ny; ++y)
    for (int x = 0; x < nx; ++x) {
      if (grid.err[y][x] != 0 || seen[y][x]) continue;
      ++components;
      stack.push_back({y, x});
      seen[y][x] = true;
      while (!stack.empty()) {
        auto [cy, cx] = stack.back();
        stack.pop_back();
        const int dy[] = {1, -1, 0, 0}, dx[] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
          const int ny2 = cy + dy[k], nx2 = cx + dx[k];
          if (ny2 < 0 || ny2 >= ny || nx2 < 0 || nx2 >= nx) continue;
          if (seen[ny2][nx2] || grid.err[ny2][nx2] != 0) continue;
          seen[ny2][nx2] = true;
          stack.push_back({ny2, nx2});
        }
      }
    }
  return components;
}

PathProfile joint_path_witness(const Fan& fan, const LabeledDataset& data,
                               const ParamVector& a1, const Vector& t1,
                               const ParamVector& a2, const Vector& t2, int steps) {
  PathProfile out;
  for (int k = 0; k <= steps; ++k) {
    const double u = double(k) / double(steps);
    const ParamVector a(((1.0 - u) * a1.a + u * a2.a).eval());
    const Vector t = (1.0 - u) * t1 + u * t2;
    const int err = joint_loss(fan, data, a, t).err;
    out.err.push_back(err);
    out.max_err = std::max(out.max_err, err);
  }
  return out;
}

}  // namespace starfan
