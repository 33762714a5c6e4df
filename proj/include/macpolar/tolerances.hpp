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

#ifndef MACPOLAR_TOLERANCES_HPP
#define MACPOLAR_TOLERANCES_HPP

namespace macpolar {

/// The three numeric thresholds used across the library.
///
/// The underlying theory treats "zero" and "unimodular" exactly; in floating
/// point each zero/equality test needs a threshold. support_eps decides
/// whether a probability or a transform coefficient counts as zero,
/// ratio_tol bounds drift in coefficient ratios (ratios amplify rounding,
/// hence the looser value), and oracle_tol covers information identities on
/// synthesized channels, which compound rounding through output merging.
struct Tolerances {
  double support_eps = 1e-9;
  double ratio_tol = 1e-7;
  double oracle_tol = 1e-6;

  /// Reads MACPOLAR_TOLERANCES="<support_eps>,<ratio_tol>,<oracle_tol>".
  /// Missing variable or fields keep the defaults.
  static Tolerances from_env();
};

}  // namespace macpolar

#endif  // MACPOLAR_TOLERANCES_HPP
