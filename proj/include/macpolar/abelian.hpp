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

#ifndef MACPOLAR_ABELIAN_HPP
#define MACPOLAR_ABELIAN_HPP

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace macpolar {

/// Reduced fraction num/den with den > 0. Carries exact phases (in turns,
/// i.e. multiples of 2*pi) so that roots of unity are never accumulated by
/// repeated multiplication.
struct Rational {
  long long num = 0;
  long long den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Builds the reduced representative with den > 0.
Rational reduced(long long num, long long den);

/// Element of a finite Abelian group Z_{N1} x ... x Z_{Nk}, stored as a
/// residue tuple with every residue already reduced modulo its factor order.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<int> residues) : residues_(std::move(residues)) {}

  const std::vector<int>& residues() const { return residues_; }
  int operator[](std::size_t i) const { return residues_[i]; }
  std::size_t rank() const { return residues_.size(); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  std::vector<int> residues_;
};

/// "(1,2)" notation used in reports and diagnostics.
std::string to_string(const GroupElement& a);

/// A finite Abelian group presented as Z_{N1} x ... x Z_{Nk}.
///
/// The presentation is the fixed coordinate system: the pairing, the
/// transforms built on it and the canonical (lexicographic) element order
/// all refer to this list of cyclic factor orders. Instances are immutable
/// and safe to share across threads.
class GroupSpec {
 public:
  /// Factor orders N_i >= 1. An empty list is the trivial group.
  explicit GroupSpec(std::vector<int> orders);

  std::size_t rank() const { return orders_.size(); }
  const std::vector<int>& orders() const { return orders_; }

  /// Group cardinality |G| = prod N_i (>= 1).
  std::size_t size() const { return size_; }

  GroupElement zero() const;
  bool valid(const GroupElement& a) const;

  /// Componentwise (a_i + b_i) mod N_i.
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  /// Componentwise (-a_i) mod N_i.
  GroupElement neg(const GroupElement& a) const;

  /// <xhat, x> = sum_i xhat_i * x_i / N_i, reduced mod 1. Exact.
  Rational pairing(const GroupElement& xhat, const GroupElement& x) const;

  /// All elements in canonical lexicographic order. This order is the
  /// index space for tables and transform vectors.
  std::vector<GroupElement> enumerate() const;
  GroupElement element(std::size_t index) const;
  std::size_t index_of(const GroupElement& a) const;

  // Index-space mirrors of the element operations, used in inner loops.
  std::size_t add_index(std::size_t a, std::size_t b) const;
  std::size_t neg_index(std::size_t a) const;
  Rational pairing_index(std::size_t xhat, std::size_t x) const;

  /// Least a > 0 with a*x = 0.
  long long element_order(const GroupElement& a) const;
  long long element_order_index(std::size_t a) const;

  /// Smallest subgroup containing the seed (always contains zero).
  std::set<GroupElement> subgroup_closure(const std::set<GroupElement>& seed) const;
  std::set<std::size_t> subgroup_closure_indices(const std::set<std::size_t>& seed) const;

  /// "Z2 x Z3"; the trivial group prints as "Z1".
  std::string to_string() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) { return a.orders_ == b.orders_; }

 private:
  void check_element(const GroupElement& a) const;

  std::vector<int> orders_;
  std::size_t size_ = 1;
  long long lcm_ = 1;
};

/// Direct product, realized by concatenating the cyclic factors. The
/// canonical order of the product is lexicographic over (a, b) pairs.
GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b);

}  // namespace macpolar

#endif  // MACPOLAR_ABELIAN_HPP
