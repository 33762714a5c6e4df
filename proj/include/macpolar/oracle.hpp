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

#ifndef MACPOLAR_ORACLE_HPP
#define MACPOLAR_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "macpolar/channel.hpp"
#include "macpolar/polarize.hpp"

namespace macpolar {

/// Brute-force ground truth for the algebraic verdicts: direct depth-1
/// preservation checks and depth-n averages.

struct Depth1Result {
  double lhs = 0.0;  // I_1(W-) + I_1(W+)
  double rhs = 0.0;  // 2 I_1(W)
  bool preserved = false;
};

/// Compares I_1(W-) + I_1(W+) against 2 I_1(W), synthesizing both branches
/// without output merging so the comparison carries no reduction error.
Depth1Result depth1_check(const TwoUserView& view);

struct FourierCheckResult {
  bool holds = true;
  std::string violation;  // first violating quadruple when !holds
};

/// The transform-domain equivalent of depth-1 preservation: for all
/// y1 - y2 = y1' - y2' with y1, y1' in Y^{z1} and y2, y2' in Y^{z2},
///   phat_{y1,z1} conj(phat_{y2,z2}) = phat_{y1',z1} conj(phat_{y2',z2})
/// pointwise on G1 within ratio_tol.
FourierCheckResult depth1_fourier_check(const TwoUserView& view);

struct PreservationProbe {
  SubsetMask subset = 0;
  std::size_t depth = 0;
  std::vector<double> per_sequence;  // I_S(W^s), sequences in lexicographic order (- before +)
  double average = 0.0;
  double reference = 0.0;  // I_S(W)
  double deficit = 0.0;    // reference - average, nonnegative up to rounding
};

/// Synthesizes all 2^n sign sequences (with merging) and averages I_S.
PreservationProbe average_probe(const Mac& mac, SubsetMask s, std::size_t depth,
                                const SynthesisOptions& opts = {});

/// Seeded random channel: every row is drawn uniformly from the probability
/// simplex. With `degenerate` set, whole (y, z) support blocks and single
/// entries are zeroed (keeping each row stochastic) so the support-set edge
/// paths get exercised. Deterministic in the seed.
Mac random_mac(const std::vector<GroupSpec>& groups, std::size_t output_size, std::uint64_t seed,
               bool degenerate = false);

}  // namespace macpolar

#endif  // MACPOLAR_ORACLE_HPP
