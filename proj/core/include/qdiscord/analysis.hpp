// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdiscord/correlations.hpp"

namespace qdiscord::analysis {

/// Uniform grid with `steps` intervals, i.e. steps + 1 points including both ends.
struct GridSpec {
  double from = 0.0;
  double to = 1.0;
  int steps = 1;

  [[nodiscard]] std::size_t points() const noexcept { return static_cast<std::size_t>(steps) + 1; }
  [[nodiscard]] double step() const noexcept { return (to - from) / steps; }
  [[nodiscard]] double at(std::size_t i) const noexcept;
  [[nodiscard]] std::vector<double> values() const;
};

enum class Column { gxx, gyy, gzz, gz, c1, c2, c3, c4, c5, mutual_info, classical, discord, theta, phi };

/// Accepts the CSV header names (Gxx, c1, I, C, Q, theta_opt, ...).
Column parse_column(std::string_view name);
std::string_view column_name(Column c) noexcept;
double column_value(const CorrelationReport& r, Column c) noexcept;

struct SweepRow {
  double param = 0.0;
  CorrelationReport report;
};

struct SweepTable {
  std::string model;
  int sites = 0;  ///< 0 when the model has no lattice size
  GridSpec grid;
  std::vector<SweepRow> rows;
};

/// One column of a table (or a derived quantity) on its grid. `one_sided`
/// marks lower-order endpoint estimates produced by differentiate().
struct Series {
  std::vector<double> params;
  std::vector<double> values;
  std::vector<bool> one_sided;
};

Series column(const SweepTable& t, Column c, bool absolute = false);

using PointEvaluator = std::function<CorrelationReport(double param)>;

/// Evaluates every grid point (in parallel when threads > 1) and returns rows
/// in grid order. Failures abort with Error(sweep_point_failed) naming the
/// lowest failing index.
SweepTable sweep(std::string model, int sites, const GridSpec& grid, const PointEvaluator& evaluate, int threads = 1);

/// Central differences on the interior, one-sided at the endpoints.
/// Throws Error(grid_too_coarse) for fewer than order + 2 points or a
/// non-uniform grid.
Series differentiate(const Series& s, int order);
Series differentiate(const SweepTable& t, Column c, int order);

enum class ExtremumKind { minimum, maximum };

struct Extremum {
  double param = 0.0;
  double value = 0.0;
  std::size_t index = 0;  ///< best grid point
};

/// Best grid point refined by the vertex of the parabola through it and its
/// neighbours. Throws Error(extremum_on_boundary) when the best point is an
/// endpoint or a one-sided estimate.
Extremum locate_extremum(const Series& s, ExtremumKind kind);

/// a0 + a1 log2 L (+ a2 log2^2 L) fitted by least squares.
struct ScalingFit {
  std::vector<double> coefficients;
  double rms = 0.0;
  double min_size = 0.0;
  double max_size = 0.0;

  [[nodiscard]] double operator()(double size) const;
};

ScalingFit scaling_fit(std::span<const double> sizes, std::span<const double> values, int degree);

/// Root of a(x) - b(x) bracketed by the single sign change on the grid,
/// linearly interpolated; when `difference` is given it is evaluated on the
/// underlying model to refine the bracket to `tolerance`.
/// Throws Error(no_crossing) or Error(multiple_crossings).
double find_crossing(const Series& a, const Series& b, const std::function<double(double)>& difference = {},
                     double tolerance = 1e-9);

/// Per-size extremum of a differentiated column, as used by the finite-size
/// scaling study.
struct ScalingPoint {
  int size = 0;
  Extremum extremum;
};

struct ScalingStudy {
  std::vector<ScalingPoint> points;
  ScalingFit fit;
};

struct ScalingRequest {
  Column column = Column::classical;
  int order = 1;  ///< 0 uses the column itself
  ExtremumKind kind = ExtremumKind::minimum;
  int degree = 1;
  GridSpec grid;
  int threads = 1;
};

ScalingStudy scaling_study(std::span<const int> sizes, const ScalingRequest& request,
                           const std::function<PointEvaluator(int size)>& model);

}  // namespace qdiscord::analysis
