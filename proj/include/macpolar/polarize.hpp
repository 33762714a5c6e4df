/*
 * Copyright 2026 the macpolar authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MACPOLAR_POLARIZE_HPP
#define MACPOLAR_POLARIZE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "macpolar/channel.hpp"

namespace macpolar {

enum class Sign : char { minus = '-', plus = '+' };

/// A (possibly empty) word over {-,+}, applied left to right.
using SignSequence = std::vector<Sign>;

/// Parses "-+-"; the empty string is the empty sequence.
SignSequence parse_sign_sequence(std::string_view text);
std::string to_string(const SignSequence& seq);

struct SynthesisOptions {
  /// Combine outputs with equal input posteriors after each transform step.
  /// Without merging the plus-branch alphabet multiplies by |Z| * prod|G_i|
  /// per level.
  bool merge_outputs = true;
  double merge_tolerance = 1e-9;
  bool prune_zero_outputs = true;
  std::size_t max_depth = 3;
  /// Keep tuple labels ("z1,z2" / "z1,z2,u1") on synthesized outputs. Only
  /// meaningful while merging is off, since merging discards the tuple
  /// structure.
  bool track_output_structure = false;
};

/// The minus branch: output alphabet Z^2,
///   W-(z1,z2 | u1) = (1 / prod|G_i|) sum_{u2} W(z1 | u1+u2) W(z2 | u2).
Mac minus_transform(const Mac& mac, const SynthesisOptions& opts = {});

/// The plus branch: output alphabet Z^2 x G_1 x ... x G_m,
///   W+(z1,z2,u1 | u2) = (1 / prod|G_i|) W(z1 | u1+u2) W(z2 | u2).
Mac plus_transform(const Mac& mac, const SynthesisOptions& opts = {});

/// W^s: left-to-right application of the sequence; the empty sequence
/// returns the input unchanged. Throws when the sequence exceeds
/// opts.max_depth.
Mac synthesize(const Mac& mac, const SignSequence& seq, const SynthesisOptions& opts = {});

/// Sufficient-statistic reduction of the output alphabet: outputs whose
/// input posteriors P(x_1..x_m | z) agree entrywise within tol are combined
/// (probabilities added); zero-probability outputs are dropped when
/// prune_zero is set. Every I_S and every support-derived quantity is
/// unchanged.
Mac merge_equivalent_outputs(const Mac& mac, double tol = 1e-9, bool prune_zero = true);

/// Drops outputs with zero total probability, keeping everything else as is.
Mac prune_zero_outputs(const Mac& mac);

}  // namespace macpolar

#endif  // MACPOLAR_POLARIZE_HPP
