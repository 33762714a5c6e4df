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

#include "macpolar/abelian.hpp"

#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace macpolar {

namespace {

// Cardinality cap keeping all pairing arithmetic safely inside 64 bits.
constexpr unsigned long long kMaxCardinality = 1ull << 31;

}  // namespace

Rational reduced(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    den = -den;
    num = -num;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

std::string to_string(const GroupElement& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (i > 0) os << ',';
    os << a.residues()[i];
  }
  os << ')';
  return os.str();
}

GroupSpec::GroupSpec(std::vector<int> orders) : orders_(std::move(orders)) {
  unsigned long long card = 1;
  for (int n : orders_) {
    if (n < 1) throw std::invalid_argument("GroupSpec: factor orders must be >= 1");
    card *= static_cast<unsigned long long>(n);
    if (card > kMaxCardinality) throw std::invalid_argument("GroupSpec: group too large");
    lcm_ = std::lcm(lcm_, static_cast<long long>(n));
  }
  size_ = static_cast<std::size_t>(card);
}

GroupElement GroupSpec::zero() const { return GroupElement(std::vector<int>(rank(), 0)); }

bool GroupSpec::valid(const GroupElement& a) const {
  if (a.rank() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (a[i] < 0 || a[i] >= orders_[i]) return false;
  return true;
}

void GroupSpec::check_element(const GroupElement& a) const {
  if (!valid(a)) throw std::invalid_argument("GroupSpec: element does not belong to " + to_string());
}

GroupElement GroupSpec::add(const GroupElement& a, const GroupElement& b) const {
  check_element(a);
  check_element(b);
  std::vector<int> r(rank());
  for (std::size_t i = 0; i < rank(); ++i) r[i] = (a[i] + b[i]) % orders_[i];
  return GroupElement(std::move(r));
}

GroupElement GroupSpec::neg(const GroupElement& a) const {
  check_element(a);
  std::vector<int> r(rank());
  for (std::size_t i = 0; i < rank(); ++i) r[i] = a[i] == 0 ? 0 : orders_[i] - a[i];
  return GroupElement(std::move(r));
}

Rational GroupSpec::pairing(const GroupElement& xhat, const GroupElement& x) const {
  check_element(xhat);
  check_element(x);
  long long acc = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    const long long n = orders_[i];
    const long long r = (static_cast<long long>(xhat[i]) * x[i]) % n;
    acc = (acc + r * (lcm_ / n)) % lcm_;
  }
  return reduced(acc, lcm_);
}

std::vector<GroupElement> GroupSpec::enumerate() const {
  std::vector<GroupElement> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(element(i));
  return out;
}

GroupElement GroupSpec::element(std::size_t index) const {
  if (index >= size_) throw std::out_of_range("GroupSpec: element index out of range");
  std::vector<int> r(rank());
  for (std::size_t i = rank(); i-- > 0;) {
    r[i] = static_cast<int>(index % static_cast<std::size_t>(orders_[i]));
    index /= static_cast<std::size_t>(orders_[i]);
  }
  return GroupElement(std::move(r));
}

std::size_t GroupSpec::index_of(const GroupElement& a) const {
  check_element(a);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) idx = idx * static_cast<std::size_t>(orders_[i]) + static_cast<std::size_t>(a[i]);
  return idx;
}

std::size_t GroupSpec::add_index(std::size_t a, std::size_t b) const {
  if (a >= size_ || b >= size_) throw std::out_of_range("GroupSpec: element index out of range");
  // Mixed-radix add without materializing tuples.
  std::size_t idx = 0;
  std::size_t mul = 1;
  for (std::size_t i = rank(); i-- > 0;) {
    const std::size_t n = static_cast<std::size_t>(orders_[i]);
    const std::size_t ra = a % n;
    const std::size_t rb = b % n;
    a /= n;
    b /= n;
    idx += ((ra + rb) % n) * mul;
    mul *= n;
  }
  return idx;
}

std::size_t GroupSpec::neg_index(std::size_t a) const {
  if (a >= size_) throw std::out_of_range("GroupSpec: element index out of range");
  std::size_t idx = 0;
  std::size_t mul = 1;
  for (std::size_t i = rank(); i-- > 0;) {
    const std::size_t n = static_cast<std::size_t>(orders_[i]);
    const std::size_t ra = a % n;
    a /= n;
    idx += (ra == 0 ? 0 : n - ra) * mul;
    mul *= n;
  }
  return idx;
}

Rational GroupSpec::pairing_index(std::size_t xhat, std::size_t x) const {
  if (xhat >= size_ || x >= size_) throw std::out_of_range("GroupSpec: element index out of range");
  long long acc = 0;
  for (std::size_t i = rank(); i-- > 0;) {
    const long long n = orders_[i];
    const long long rh = static_cast<long long>(xhat % static_cast<std::size_t>(n));
    const long long rx = static_cast<long long>(x % static_cast<std::size_t>(n));
    xhat /= static_cast<std::size_t>(n);
    x /= static_cast<std::size_t>(n);
    acc = (acc + ((rh * rx) % n) * (lcm_ / n)) % lcm_;
  }
  return reduced(acc, lcm_);
}

long long GroupSpec::element_order(const GroupElement& a) const {
  check_element(a);
  long long ord = 1;
  for (std::size_t i = 0; i < rank(); ++i) {
    const long long n = orders_[i];
    const long long g = std::gcd(static_cast<long long>(a[i]), n);
    ord = std::lcm(ord, n / g);
  }
  return ord;
}

long long GroupSpec::element_order_index(std::size_t a) const { return element_order(element(a)); }

std::set<std::size_t> GroupSpec::subgroup_closure_indices(const std::set<std::size_t>& seed) const {
  std::set<std::size_t> closed;
  std::deque<std::size_t> frontier;
  const std::size_t z = index_of(zero());
  closed.insert(z);
  frontier.push_back(z);
  while (!frontier.empty()) {
    const std::size_t cur = frontier.front();
    frontier.pop_front();
    for (std::size_t g : seed) {
      const std::size_t next = add_index(cur, g);
      if (closed.insert(next).second) frontier.push_back(next);
    }
  }
  return closed;
}

std::set<GroupElement> GroupSpec::subgroup_closure(const std::set<GroupElement>& seed) const {
  std::set<std::size_t> idx_seed;
  for (const auto& a : seed) idx_seed.insert(index_of(a));
  std::set<GroupElement> out;
  for (std::size_t i : subgroup_closure_indices(idx_seed)) out.insert(element(i));
  return out;
}

std::string GroupSpec::to_string() const {
  if (orders_.empty()) return "Z1";
  std::ostringstream os;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i > 0) os << " x ";
    os << 'Z' << orders_[i];
  }
  return os.str();
}

GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b) {
  std::vector<int> orders = a.orders();
  orders.insert(orders.end(), b.orders().begin(), b.orders().end());
  return GroupSpec(std::move(orders));
}

}  // namespace macpolar
