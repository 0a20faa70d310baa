// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>

#include "qdiscord/analysis.hpp"

namespace qdiscord::csv {

inline constexpr const char* kSweepHeader =
    "model,L,param,Gxx,Gyy,Gzz,Gz,c1,c2,c3,c4,c5,I,C,Q,theta_opt,phi_opt";

/// %.12g, with negative zero printed as 0.
std::string format_number(double v);

void write_sweep(std::ostream& out, const analysis::SweepTable& table);

/// Parses a file produced by write_sweep. Marginal entropies are rebuilt
/// from c4 and c5; the grid is inferred from the first and last rows.
analysis::SweepTable read_sweep(std::istream& in);

}  // namespace qdiscord::csv
