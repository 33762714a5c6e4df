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

#ifndef MACPOLAR_COMPAT_HPP
#define MACPOLAR_COMPAT_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "macpolar/channel.hpp"
#include "macpolar/polarize.hpp"

namespace macpolar {

/// The unimodular ratio table of a two-user channel: for every
/// (xhat, y1 - y2) in the support union, the common value
/// phat_{y1,z}(xhat) / phat_{y2,z}(xhat). Values are stored projected onto
/// the unit circle; keys are (xhat index, y index).
struct Fingerprint {
  SupportSets support;
  std::map<std::pair<std::size_t, std::size_t>, Complex> values;
};

/// A partial map G1 x G2 -> unit circle whose domain has subgroup sections
/// and which is a homomorphism in each coordinate separately on those
/// sections. The keys of `values` are the domain.
struct PseudoQuadFunction {
  GroupSpec g1;
  GroupSpec g2;
  std::map<std::pair<std::size_t, std::size_t>, Complex> values;

  bool defined(std::size_t xhat, std::size_t y) const { return values.count({xhat, y}) != 0; }
  Complex value(std::size_t xhat, std::size_t y) const { return values.at({xhat, y}); }
};

/// Exhaustive check of the two subgroup-section conditions and the two
/// coordinatewise homomorphism laws, within tol.
bool is_pseudo_quadratic(const PseudoQuadFunction& f, double tol = 1e-7);

enum class FailureStage { fingerprint_ill_defined, extension_conflict };

/// Which concrete test tripped and where. `check` is one of
/// "vanishing-dft-coefficient", "non-unimodular-ratio", "inconsistent-ratio",
/// "closure-conflict"; `detail` carries the offending tuples and values.
struct FailureEvidence {
  FailureStage stage;
  std::string check;
  std::string detail;
};

using FingerprintResult = std::variant<Fingerprint, FailureEvidence>;

/// Builds the ratio table from the posterior transforms, verifying along the
/// way that every coefficient over the support is nonvanishing, that ratios
/// are unimodular, and that ratios agree across outputs for equal
/// y-differences. Any violated check rules out preservation and is returned
/// as evidence.
FingerprintResult extract_fingerprint(const TwoUserView& view);

using ExtensionResult = std::variant<PseudoQuadFunction, FailureEvidence>;

/// Closes the fingerprint under the two product rules
///   (R1) (xhat, y1), (xhat, y2) defined  ->  (xhat, y1+y2) := product,
///   (R2) (xhat1, y), (xhat2, y) defined  ->  (xhat1+xhat2, y) := product,
/// iterating to the fixpoint. A rule assigning a value that differs from an
/// existing entry by more than tol in the complex plane is a conflict. The
/// fixpoint, when conflict-free, is a pseudo-quadratic extension.
ExtensionResult extend_to_pseudo_quadratic(const Fingerprint& fp, const GroupSpec& g1,
                                           const GroupSpec& g2, double tol = 1e-7);

struct CompatReport {
  bool compatible = false;
  std::optional<PseudoQuadFunction> witness;  // set iff compatible
  std::optional<FailureEvidence> failure;     // set iff not
};

/// The full criterion for the first user: fingerprint extraction followed by
/// pseudo-quadratic extension. Compatible channels carry the witness F.
CompatReport check_compatibility(const TwoUserView& view);

/// True when the witness reproduces every posterior-transform ratio over the
/// support, i.e. phat_{y1,z}(xhat) = F(xhat, y1-y2) * phat_{y2,z}(xhat)
/// within tol for all (xhat, z) in XZ and y1, y2 in Y^z.
bool witness_satisfies_definition(const TwoUserView& view, const PseudoQuadFunction& f, double tol);

/// Both groups cyclic of the same prime order q.
bool prime_field_applicable(const TwoUserView& view);

/// Scans a = 0..q-1 for I(X + aY; Y | Z) = 0 (within support_eps) and
/// returns the first hit. The result is nonempty exactly when the channel is
/// compatible. Requires prime_field_applicable.
std::optional<std::size_t> prime_field_shortcut(const TwoUserView& view);

/// gcd(|G1|, |G2|) == 1.
bool coprime_applicable(const TwoUserView& view);

/// For co-prime input group orders compatibility collapses to conditional
/// independence: returns I(X;Y|Z) < support_eps. Requires
/// coprime_applicable.
bool coprime_shortcut(const TwoUserView& view);

/// Runs the criterion on every proper nonempty subset of users via the
/// two-user regrouping. The region is preserved exactly when all verdicts
/// are compatible (the full set is always preserved).
std::map<SubsetMask, CompatReport> check_region(const Mac& mac, Tolerances tol = {});

/// Cross-validation path: fingerprints of W, W-, W^(-,+), ... (alternating
/// branches, merging off), one result per level, level 0 first. On
/// compatible channels each level's table must extend the previous one.
std::vector<FingerprintResult> alternating_fingerprints(const TwoUserView& view, std::size_t levels);

}  // namespace macpolar

#endif  // MACPOLAR_COMPAT_HPP
