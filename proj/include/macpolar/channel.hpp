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

#ifndef MACPOLAR_CHANNEL_HPP
#define MACPOLAR_CHANNEL_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "macpolar/abelian.hpp"
#include "macpolar/spectral.hpp"
#include "macpolar/tolerances.hpp"

namespace macpolar {

/// Subset of users {1..m} as a bitmask; bit i-1 set means user i belongs.
using SubsetMask = unsigned;

/// "{1,3}" rendering of a subset mask.
std::string subset_to_string(SubsetMask s);

/// An m-user multiple access channel: one finite Abelian input group per
/// user, a finite output alphabet 0..|Z|-1, and the transition table
/// W(z | x_1..x_m). Rows are indexed lexicographically over the input tuple
/// (user 1 most significant), columns by output index. Immutable.
class Mac {
 public:
  Mac(std::vector<GroupSpec> input_groups, std::size_t output_size, std::vector<double> table,
      std::vector<std::string> output_labels = {});

  std::size_t num_users() const { return input_groups_.size(); }
  const std::vector<GroupSpec>& input_groups() const { return input_groups_; }
  const GroupSpec& input_group(std::size_t user) const { return input_groups_.at(user); }

  /// Product of all users' groups; its canonical order is the row order.
  const GroupSpec& joint_input_group() const { return joint_group_; }
  std::size_t input_size() const { return joint_group_.size(); }
  std::size_t output_size() const { return output_size_; }

  double transition(std::size_t input_index, std::size_t z) const {
    return table_[input_index * output_size_ + z];
  }
  const std::vector<double>& table() const { return table_; }

  /// Optional human-readable output names; empty when unlabeled.
  const std::vector<std::string>& output_labels() const { return output_labels_; }

 private:
  std::vector<GroupSpec> input_groups_;
  GroupSpec joint_group_;
  std::size_t output_size_;
  std::vector<double> table_;
  std::vector<std::string> output_labels_;
};

struct ValidationIssue {
  std::size_t row;
  std::optional<std::size_t> column;  // set for range violations
  std::string what;
};

/// Row-sum and entry-range checks. Empty result means the table is a valid
/// transition matrix within tol.
std::vector<ValidationIssue> validate(const Mac& mac, double tol = 1e-9);

/// I(X_S; Z X_{S^c}) in bits, under independent uniform inputs.
double mutual_info(const Mac& mac, SubsetMask s);

/// All 2^m - 1 mutual informations defining the symmetric capacity region.
struct RegionReport {
  std::size_t num_users = 0;
  std::map<SubsetMask, double> info;  // S -> I_S(W) in bits

  /// I over the full user set: the symmetric sum-capacity.
  double sum_capacity() const;
};

RegionReport region(const Mac& mac);

/// Regroups the m inputs into the two product groups G_S and G_{S^c}
/// (user order ascending inside each). Transition values are unchanged,
/// rows are only re-indexed. Requires a proper nonempty S.
Mac two_user_reduction(const Mac& mac, SubsetMask s);

/// The support machinery of the two-user analysis, all thresholded at
/// support_eps:
///   - yz:       pairs (y, z) with P_{Y,Z}(y,z) > eps
///   - y_of_z:   Y^z, the y with (y,z) in yz
///   - dy_of_z:  differences { y1 - y2 : y1, y2 in Y^z }
///   - x_of_z:   X^z, the xhat with some y in Y^z giving |phat_{y,z}(xhat)| > eps
///   - xz:       pairs (xhat, z) with xhat in X^z
///   - xdy:      union over z of X^z x DY^z, sorted and deduplicated
struct SupportSets {
  std::vector<std::pair<std::size_t, std::size_t>> yz;
  std::vector<std::vector<std::size_t>> y_of_z;
  std::vector<std::vector<std::size_t>> dy_of_z;
  std::vector<std::vector<std::size_t>> x_of_z;
  std::vector<std::pair<std::size_t, std::size_t>> xz;
  std::vector<std::pair<std::size_t, std::size_t>> xdy;

  bool xdy_contains(std::size_t xhat, std::size_t y) const;
};

/// Working view of a two-user MAC: the joint distribution under uniform
/// inputs, posteriors p_{y,z} over G1, their transforms, and the support
/// sets. All caches are built once at construction; the view is immutable
/// afterwards and safe for concurrent reads.
class TwoUserView {
 public:
  explicit TwoUserView(Mac mac, Tolerances tol = {});

  const Mac& mac() const { return mac_; }
  const GroupSpec& g1() const { return mac_.input_group(0); }
  const GroupSpec& g2() const { return mac_.input_group(1); }
  const Tolerances& tolerances() const { return tol_; }

  double joint(std::size_t x, std::size_t y, std::size_t z) const;
  double p_yz(std::size_t y, std::size_t z) const { return pyz_[y * mac_.output_size() + z]; }
  bool in_support(std::size_t y, std::size_t z) const { return p_yz(y, z) > tol_.support_eps; }

  /// p_{y,z}(x) = P(X=x | Y=y, Z=z); requires (y,z) in the support.
  const GroupFunction& posterior(std::size_t y, std::size_t z) const;
  GroupFunction posterior(const GroupElement& y, std::size_t z) const;

  /// Cached DFT of posterior(y, z).
  const GroupFunction& posterior_dft(std::size_t y, std::size_t z) const;

  const SupportSets& support() const { return support_; }

  /// I(X;Y|Z) in bits.
  double cond_mutual_info_xy_given_z() const;

 private:
  std::size_t yz_slot(std::size_t y, std::size_t z) const;

  Mac mac_;
  Tolerances tol_;
  std::vector<double> pyz_;
  std::vector<GroupFunction> posteriors_;      // packed over support pairs
  std::vector<GroupFunction> posterior_dfts_;  // same packing
  std::vector<std::ptrdiff_t> slot_of_yz_;     // -1 when out of support
  SupportSets support_;
};

}  // namespace macpolar

#endif  // MACPOLAR_CHANNEL_HPP
