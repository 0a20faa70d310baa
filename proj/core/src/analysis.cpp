// SPDX-License-Identifier: Apache-2.0
#include "qdiscord/analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <mutex>
#include <thread>

#include "qdiscord/error.hpp"

namespace qdiscord::analysis {

double GridSpec::at(std::size_t i) const noexcept {
  if (i == static_cast<std::size_t>(steps)) return to;
  return from + static_cast<double>(i) * step();
}

std::vector<double> GridSpec::values() const {
  std::vector<double> v(points());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = at(i);
  return v;
}

namespace {

struct NamedColumn {
  std::string_view name;
  Column column;
};

constexpr NamedColumn kColumns[] = {
    {"Gxx", Column::gxx}, {"Gyy", Column::gyy},     {"Gzz", Column::gzz},   {"Gz", Column::gz},
    {"c1", Column::c1},   {"c2", Column::c2},       {"c3", Column::c3},     {"c4", Column::c4},
    {"c5", Column::c5},   {"I", Column::mutual_info}, {"C", Column::classical}, {"Q", Column::discord},
    {"theta_opt", Column::theta}, {"phi_opt", Column::phi},
};

}  // namespace

Column parse_column(std::string_view name) {
  for (const auto& c : kColumns) {
    if (c.name == name) return c.column;
  }
  throw Error(ErrorCode::invalid_argument, "unknown column '" + std::string(name) + "'");
}

std::string_view column_name(Column c) noexcept {
  for (const auto& named : kColumns) {
    if (named.column == c) return named.name;
  }
  return "?";
}

double column_value(const CorrelationReport& r, Column c) noexcept {
  switch (c) {
    case Column::gxx: return r.spin.gxx;
    case Column::gyy: return r.spin.gyy;
    case Column::gzz: return r.spin.gzz;
    case Column::gz: return r.spin.gz_a;
    case Column::c1: return r.coeffs.c1;
    case Column::c2: return r.coeffs.c2;
    case Column::c3: return r.coeffs.c3;
    case Column::c4: return r.coeffs.c4;
    case Column::c5: return r.coeffs.c5;
    case Column::mutual_info: return r.mutual_info;
    case Column::classical: return r.classical;
    case Column::discord: return r.discord;
    case Column::theta: return r.optimal_angles.theta;
    case Column::phi: return r.optimal_angles.phi;
  }
  return 0.0;
}

Series column(const SweepTable& t, Column c, bool absolute) {
  Series s;
  for (const auto& row : t.rows) {
    s.params.push_back(row.param);
    const double v = column_value(row.report, c);
    s.values.push_back(absolute ? std::abs(v) : v);
    s.one_sided.push_back(false);
  }
  return s;
}

SweepTable sweep(std::string model, int sites, const GridSpec& grid, const PointEvaluator& evaluate, int threads) {
  if (grid.steps < 2 || !(grid.from < grid.to)) {
    throw Error(ErrorCode::invalid_argument, "sweep needs from < to and at least 3 points");
  }
  SweepTable table;
  table.model = std::move(model);
  table.sites = sites;
  table.grid = grid;
  table.rows.resize(grid.points());

  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::size_t failed_index = table.rows.size();
  std::string failure;

  auto worker = [&] {
    for (std::size_t i = next++; i < table.rows.size(); i = next++) {
      try {
        table.rows[i].param = grid.at(i);
        table.rows[i].report = evaluate(table.rows[i].param);
      } catch (const std::exception& e) {
        const std::lock_guard lock(failure_mutex);
        if (i < failed_index) {
          failed_index = i;
          failure = e.what();
        }
      }
    }
  };

  const int n_threads = std::clamp(threads, 1, static_cast<int>(table.rows.size()));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  if (failed_index < table.rows.size()) {
    throw Error(ErrorCode::sweep_point_failed,
                "point " + std::to_string(failed_index) + " (param " + std::to_string(grid.at(failed_index)) +
                    "): " + failure);
  }
  return table;
}

Series differentiate(const Series& s, int order) {
  if (order != 1 && order != 2) throw Error(ErrorCode::invalid_argument, "derivative order must be 1 or 2");
  const std::size_t n = s.params.size();
  if (n < static_cast<std::size_t>(order) + 2 || s.values.size() != n) {
    throw Error(ErrorCode::grid_too_coarse, "need at least order + 2 points");
  }
  const double h = (s.params.back() - s.params.front()) / static_cast<double>(n - 1);
  if (!(h > 0.0)) throw Error(ErrorCode::grid_too_coarse, "grid must be strictly increasing");
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs((s.params[i] - s.params[i - 1]) - h) > 1e-6 * h) {
      throw Error(ErrorCode::grid_too_coarse, "grid is not uniform");
    }
  }
  const auto& y = s.values;
  Series d;
  d.params = s.params;
  d.values.resize(n);
  d.one_sided.assign(n, false);
  if (order == 1) {
    for (std::size_t i = 1; i + 1 < n; ++i) d.values[i] = (y[i + 1] - y[i - 1]) / (2.0 * h);
    d.values[0] = (y[1] - y[0]) / h;
    d.values[n - 1] = (y[n - 1] - y[n - 2]) / h;
  } else {
    const double h2 = h * h;
    for (std::size_t i = 1; i + 1 < n; ++i) d.values[i] = (y[i + 1] - 2.0 * y[i] + y[i - 1]) / h2;
    d.values[0] = (y[2] - 2.0 * y[1] + y[0]) / h2;
    d.values[n - 1] = (y[n - 1] - 2.0 * y[n - 2] + y[n - 3]) / h2;
  }
  d.one_sided[0] = true;
  d.one_sided[n - 1] = true;
  return d;
}

Series differentiate(const SweepTable& t, Column c, int order) { return differentiate(column(t, c), order); }

Extremum locate_extremum(const Series& s, ExtremumKind kind) {
  const std::size_t n = s.values.size();
  if (n < 3) throw Error(ErrorCode::grid_too_coarse, "need at least three points");
  const double sign = kind == ExtremumKind::maximum ? 1.0 : -1.0;
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (sign * s.values[i] > sign * s.values[best]) best = i;
  }
  const bool flagged = !s.one_sided.empty() && s.one_sided[best];
  if (best == 0 || best + 1 == n || flagged) {
    throw Error(ErrorCode::extremum_on_boundary, "extremum at grid edge, param " + std::to_string(s.params[best]));
  }
  const double x0 = s.params[best - 1];
  const double x1 = s.params[best];
  const double x2 = s.params[best + 1];
  const double y0 = s.values[best - 1];
  const double y1 = s.values[best];
  const double y2 = s.values[best + 1];
  Extremum e{x1, y1, best};
  // Vertex of the interpolating parabola (general spacing).
  const double num = (x1 - x0) * (x1 - x0) * (y1 - y2) - (x1 - x2) * (x1 - x2) * (y1 - y0);
  const double den = (x1 - x0) * (y1 - y2) - (x1 - x2) * (y1 - y0);
  if (den != 0.0) {
    const double x = x1 - 0.5 * num / den;
    if (x >= x0 && x <= x2) {
      const double l0 = (x - x1) * (x - x2) / ((x0 - x1) * (x0 - x2));
      const double l1 = (x - x0) * (x - x2) / ((x1 - x0) * (x1 - x2));
      const double l2 = (x - x0) * (x - x1) / ((x2 - x0) * (x2 - x1));
      e.param = x;
      e.value = l0 * y0 + l1 * y1 + l2 * y2;
    }
  }
  return e;
}

double ScalingFit::operator()(double size) const {
  const double x = std::log2(size);
  double v = 0.0;
  double p = 1.0;
  for (double a : coefficients) {
    v += a * p;
    p *= x;
  }
  return v;
}

ScalingFit scaling_fit(std::span<const double> sizes, std::span<const double> values, int degree) {
  if (degree != 1 && degree != 2) throw Error(ErrorCode::invalid_argument, "fit degree must be 1 or 2");
  if (sizes.size() != values.size()) throw Error(ErrorCode::invalid_argument, "sizes and values differ in length");
  if (sizes.size() < static_cast<std::size_t>(degree) + 2) {
    throw Error(ErrorCode::rank_deficient, "need at least degree + 2 sizes");
  }
  const auto rows = static_cast<Eigen::Index>(sizes.size());
  const Eigen::Index cols = degree + 1;
  Eigen::MatrixXd design(rows, cols);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const double size = sizes[static_cast<std::size_t>(r)];
    if (!(size > 0.0)) throw Error(ErrorCode::invalid_argument, "sizes must be positive");
    const double x = std::log2(size);
    double p = 1.0;
    for (Eigen::Index c = 0; c < cols; ++c) {
      design(r, c) = p;
      p *= x;
    }
    rhs(r) = values[static_cast<std::size_t>(r)];
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  qr.setThreshold(1e-10);
  if (qr.rank() < cols) throw Error(ErrorCode::rank_deficient, "fewer distinct sizes than coefficients");
  const Eigen::VectorXd a = qr.solve(rhs);

  ScalingFit fit;
  fit.coefficients.assign(a.data(), a.data() + a.size());
  fit.rms = std::sqrt((design * a - rhs).squaredNorm() / static_cast<double>(rows));
  fit.min_size = *std::min_element(sizes.begin(), sizes.end());
  fit.max_size = *std::max_element(sizes.begin(), sizes.end());
  return fit;
}

double find_crossing(const Series& a, const Series& b, const std::function<double(double)>& difference,
                     double tolerance) {
  const std::size_t n = a.values.size();
  if (n < 2 || b.values.size() != n || a.params != b.params) {
    throw Error(ErrorCode::invalid_argument, "series must share a grid of at least two points");
  }
  auto sign = [](double v) { return (v > 0.0) - (v < 0.0); };
  int crossings = 0;
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::size_t last = n;
  for (std::size_t i = 0; i < n; ++i) {
    const int s = sign(a.values[i] - b.values[i]);
    if (s == 0) continue;
    if (last < n && s != sign(a.values[last] - b.values[last])) {
      ++crossings;
      lo = last;
      hi = i;
    }
    last = i;
  }
  if (crossings == 0) throw Error(ErrorCode::no_crossing, "columns do not cross on the grid");
  if (crossings > 1) throw Error(ErrorCode::multiple_crossings, std::to_string(crossings) + " sign changes");

  const double x0 = a.params[lo];
  const double x1 = a.params[hi];
  const double d0 = a.values[lo] - b.values[lo];
  const double d1 = a.values[hi] - b.values[hi];
  double root = x0 - d0 * (x1 - x0) / (d1 - d0);
  if (difference) {
    const double f0 = difference(x0);
    const double f1 = difference(x1);
    if (f0 == 0.0) return x0;
    if (f1 == 0.0) return x1;
    if (sign(f0) == sign(f1)) throw Error(ErrorCode::no_crossing, "model difference does not bracket the crossing");
    std::uintmax_t max_iter = 200;
    const auto bracket = boost::math::tools::toms748_solve(
        difference, x0, x1, f0, f1, [tolerance](double l, double r) { return std::abs(r - l) <= tolerance; },
        max_iter);
    root = 0.5 * (bracket.first + bracket.second);
  }
  return root;
}

ScalingStudy scaling_study(std::span<const int> sizes, const ScalingRequest& request,
                           const std::function<PointEvaluator(int size)>& model) {
  if (sizes.size() < 4) throw Error(ErrorCode::invalid_argument, "scaling needs at least four sizes");
  ScalingStudy study;
  std::vector<double> xs;
  std::vector<double> ys;
  for (int size : sizes) {
    const SweepTable table = sweep("", size, request.grid, model(size), request.threads);
    const Series d = request.order == 0 ? column(table, request.column)
                                        : differentiate(table, request.column, request.order);
    const Extremum e = locate_extremum(d, request.kind);
    study.points.push_back({size, e});
    xs.push_back(size);
    ys.push_back(e.value);
  }
  study.fit = scaling_fit(xs, ys, request.degree);
  return study;
}

}  // namespace qdiscord::analysis
