// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

namespace qdiscord {

/// Slack below zero tolerated on probabilities and eigenvalues before they
/// are treated as unphysical. Values in [-kProbabilitySlack, 0) clip to 0.
inline constexpr double kProbabilitySlack = 1e-12;

/// -x log2 x with 0 log 0 = 0. Requires x >= 0.
double entropy_term(double x) noexcept;

/// Binary entropy in bits. Throws Error(domain_error) outside [0, 1] beyond
/// kProbabilitySlack; values inside the slack are clipped.
double binary_entropy(double p);

/// Shannon entropy in bits of a spectrum, after clipping noise-level negative
/// entries. Throws Error(non_physical_state) for entries below -kProbabilitySlack.
double spectrum_entropy(std::span<const double> eigenvalues);

}  // namespace qdiscord
