// SPDX-License-Identifier: Apache-2.0
#include "qdiscord/csv.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "qdiscord/entropy.hpp"
#include "qdiscord/error.hpp"

namespace qdiscord::csv {

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_sweep(std::ostream& out, const analysis::SweepTable& table) {
  out << kSweepHeader << '\n';
  for (const auto& row : table.rows) {
    const CorrelationReport& r = row.report;
    const double fields[] = {
        row.param,   r.spin.gxx,  r.spin.gyy,  r.spin.gzz,     r.spin.gz_a,  r.coeffs.c1,
        r.coeffs.c2, r.coeffs.c3, r.coeffs.c4, r.coeffs.c5,    r.mutual_info, r.classical,
        r.discord,   r.optimal_angles.theta,   r.optimal_angles.phi,
    };
    out << table.model << ',' << table.sites;
    for (double f : fields) out << ',' << format_number(f);
    out << '\n';
  }
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

double parse_double(const std::string& s, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::io_error, "line " + std::to_string(line_no) + ": bad number '" + s + "'");
  }
}

}  // namespace

analysis::SweepTable read_sweep(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSweepHeader) {
    throw Error(ErrorCode::io_error, "missing or unexpected sweep header");
  }
  analysis::SweepTable table;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto cells = split(line);
    if (cells.size() != 17) {
      throw Error(ErrorCode::io_error, "line " + std::to_string(line_no) + ": expected 17 fields");
    }
    if (table.rows.empty()) {
      table.model = cells[0];
      table.sites = static_cast<int>(parse_double(cells[1], line_no));
    }
    std::vector<double> v;
    for (std::size_t k = 2; k < cells.size(); ++k) v.push_back(parse_double(cells[k], line_no));
    analysis::SweepRow row;
    row.param = v[0];
    CorrelationReport& r = row.report;
    r.spin = {v[4], v[4], v[1], v[2], v[3]};
    r.coeffs = {v[5], v[6], v[7], v[8], v[9]};
    r.spin.gz_b = r.coeffs.c4;
    r.mutual_info = v[10];
    r.classical = v[11];
    r.discord = v[12];
    r.optimal_angles = {v[13], v[14]};
    r.entropy_a = binary_entropy(0.5 * (1.0 + r.coeffs.c5));
    r.entropy_b = binary_entropy(0.5 * (1.0 + r.coeffs.c4));
    table.rows.push_back(std::move(row));
  }
  if (table.rows.size() >= 2) {
    table.grid = {table.rows.front().param, table.rows.back().param, static_cast<int>(table.rows.size()) - 1};
  }
  return table;
}

}  // namespace qdiscord::csv
