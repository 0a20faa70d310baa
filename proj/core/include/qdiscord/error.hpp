// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qdiscord {

enum class ErrorCode {
  invalid_argument,
  non_physical_state,
  degenerate_outcome,
  optimizer_stall,
  not_applicable,
  domain_error,
  sector_empty,
  no_convergence,
  symmetry_violation,
  near_degeneracy,
  grid_too_coarse,
  extremum_on_boundary,
  rank_deficient,
  no_crossing,
  multiple_crossings,
  sweep_point_failed,
  io_error,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qdiscord
