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

#include "macpolar/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace macpolar {

namespace {

GroupSpec make_joint_group(const std::vector<GroupSpec>& groups) {
  std::vector<int> orders;
  for (const GroupSpec& g : groups) orders.insert(orders.end(), g.orders().begin(), g.orders().end());
  return GroupSpec(std::move(orders));
}

double entropy_nats(const std::vector<double>& p) {
  double h = 0.0;
  for (double v : p)
    if (v > 0.0) h -= v * std::log(v);
  return h;
}

constexpr double kLn2 = 0.6931471805599453;

}  // namespace

std::string subset_to_string(SubsetMask s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (unsigned i = 0; s != 0; ++i, s >>= 1) {
    if ((s & 1u) == 0) continue;
    if (!first) os << ',';
    os << (i + 1);
    first = false;
  }
  os << '}';
  return os.str();
}

Mac::Mac(std::vector<GroupSpec> input_groups, std::size_t output_size, std::vector<double> table,
         std::vector<std::string> output_labels)
    : input_groups_(std::move(input_groups)),
      joint_group_(make_joint_group(input_groups_)),
      output_size_(output_size),
      table_(std::move(table)),
      output_labels_(std::move(output_labels)) {
  if (input_groups_.empty()) throw std::invalid_argument("Mac: at least one user required");
  if (output_size_ == 0) throw std::invalid_argument("Mac: output alphabet must be nonempty");
  if (table_.size() != joint_group_.size() * output_size_)
    throw std::invalid_argument("Mac: table shape must be (prod |G_i|) x |Z|");
  if (!output_labels_.empty() && output_labels_.size() != output_size_)
    throw std::invalid_argument("Mac: output label count must match |Z|");
}

std::vector<ValidationIssue> validate(const Mac& mac, double tol) {
  std::vector<ValidationIssue> issues;
  const std::size_t rows = mac.input_size();
  const std::size_t cols = mac.output_size();
  for (std::size_t r = 0; r < rows; ++r) {
    double sum = 0.0;
    for (std::size_t z = 0; z < cols; ++z) {
      const double v = mac.transition(r, z);
      if (v < 0.0 || v > 1.0 || !std::isfinite(v)) {
        std::ostringstream os;
        os << "entry " << v << " outside [0,1]";
        issues.push_back({r, z, os.str()});
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > tol) {
      std::ostringstream os;
      os << "row sums to " << sum;
      issues.push_back({r, std::nullopt, os.str()});
    }
  }
  return issues;
}

double mutual_info(const Mac& mac, SubsetMask s) {
  const std::size_t m = mac.num_users();
  const SubsetMask full = (1u << m) - 1u;
  if (s == 0) throw std::invalid_argument("mutual_info: subset must be nonempty");
  if ((s & ~full) != 0) throw std::invalid_argument("mutual_info: subset has users beyond m");

  const std::size_t rows = mac.input_size();
  const std::size_t cols = mac.output_size();
  const double px = 1.0 / static_cast<double>(rows);

  // Per-user decode strides and the index of x_{S^c} within G_{S^c}.
  std::vector<std::size_t> sizes(m);
  for (std::size_t i = 0; i < m; ++i) sizes[i] = mac.input_group(i).size();
  std::size_t comp_size = 1;
  for (std::size_t i = 0; i < m; ++i)
    if ((s & (1u << i)) == 0) comp_size *= sizes[i];

  std::vector<std::size_t> comp_index(rows, 0);
  for (std::size_t x = 0; x < rows; ++x) {
    std::size_t idx = 0;
    std::size_t stride = rows;
    for (std::size_t i = 0; i < m; ++i) {
      stride /= sizes[i];
      const std::size_t xi = (x / stride) % sizes[i];
      if ((s & (1u << i)) == 0) idx = idx * sizes[i] + xi;
    }
    comp_index[x] = idx;
  }

  std::vector<double> joint_xz;
  joint_xz.reserve(rows * cols);
  std::vector<double> joint_zc(cols * comp_size, 0.0);
  for (std::size_t x = 0; x < rows; ++x) {
    for (std::size_t z = 0; z < cols; ++z) {
      const double q = mac.transition(x, z) * px;
      joint_xz.push_back(q);
      joint_zc[z * comp_size + comp_index[x]] += q;
    }
  }

  double h_xs = 0.0;  // H(X_S) = sum over S of ln |G_i|, exact for uniform inputs
  for (std::size_t i = 0; i < m; ++i)
    if ((s & (1u << i)) != 0) h_xs += std::log(static_cast<double>(sizes[i]));

  const double nats = h_xs + entropy_nats(joint_zc) - entropy_nats(joint_xz);
  return nats / kLn2;
}

double RegionReport::sum_capacity() const {
  const SubsetMask full = (1u << num_users) - 1u;
  return info.at(full);
}

RegionReport region(const Mac& mac) {
  RegionReport report;
  report.num_users = mac.num_users();
  const SubsetMask full = (1u << mac.num_users()) - 1u;
  for (SubsetMask s = 1; s <= full; ++s) report.info[s] = mutual_info(mac, s);
  return report;
}

Mac two_user_reduction(const Mac& mac, SubsetMask s) {
  const std::size_t m = mac.num_users();
  const SubsetMask full = (1u << m) - 1u;
  if (s == 0 || s == full || (s & ~full) != 0)
    throw std::invalid_argument("two_user_reduction: need a proper nonempty subset");

  std::vector<int> orders_s;
  std::vector<int> orders_c;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& ords = mac.input_group(i).orders();
    auto& dst = (s & (1u << i)) != 0 ? orders_s : orders_c;
    dst.insert(dst.end(), ords.begin(), ords.end());
  }
  GroupSpec gs{orders_s};
  GroupSpec gc{orders_c};

  const std::size_t rows = mac.input_size();
  const std::size_t cols = mac.output_size();
  std::vector<std::size_t> sizes(m);
  for (std::size_t i = 0; i < m; ++i) sizes[i] = mac.input_group(i).size();

  std::vector<double> table(rows * cols, 0.0);
  for (std::size_t x = 0; x < rows; ++x) {
    std::size_t idx_s = 0;
    std::size_t idx_c = 0;
    std::size_t stride = rows;
    for (std::size_t i = 0; i < m; ++i) {
      stride /= sizes[i];
      const std::size_t xi = (x / stride) % sizes[i];
      if ((s & (1u << i)) != 0)
        idx_s = idx_s * sizes[i] + xi;
      else
        idx_c = idx_c * sizes[i] + xi;
    }
    const std::size_t new_row = idx_s * gc.size() + idx_c;
    for (std::size_t z = 0; z < cols; ++z) table[new_row * cols + z] = mac.transition(x, z);
  }
  return Mac({std::move(gs), std::move(gc)}, cols, std::move(table), mac.output_labels());
}

bool SupportSets::xdy_contains(std::size_t xhat, std::size_t y) const {
  return std::binary_search(xdy.begin(), xdy.end(), std::make_pair(xhat, y));
}

TwoUserView::TwoUserView(Mac mac, Tolerances tol) : mac_(std::move(mac)), tol_(tol) {
  if (mac_.num_users() != 2) throw std::invalid_argument("TwoUserView: channel must have exactly two users");
  const std::size_t n1 = g1().size();
  const std::size_t n2 = g2().size();
  const std::size_t nz = mac_.output_size();
  const double px = 1.0 / static_cast<double>(n1 * n2);

  pyz_.assign(n2 * nz, 0.0);
  for (std::size_t x = 0; x < n1; ++x)
    for (std::size_t y = 0; y < n2; ++y)
      for (std::size_t z = 0; z < nz; ++z) pyz_[y * nz + z] += mac_.transition(x * n2 + y, z) * px;

  slot_of_yz_.assign(n2 * nz, -1);
  support_.y_of_z.assign(nz, {});
  support_.dy_of_z.assign(nz, {});
  support_.x_of_z.assign(nz, {});

  for (std::size_t z = 0; z < nz; ++z)
    for (std::size_t y = 0; y < n2; ++y)
      if (pyz_[y * nz + z] > tol_.support_eps) {
        support_.yz.emplace_back(y, z);
        support_.y_of_z[z].push_back(y);
      }
  std::sort(support_.yz.begin(), support_.yz.end());

  // Posteriors and their transforms, packed in (y, z) lexicographic order.
  for (std::size_t y = 0; y < n2; ++y)
    for (std::size_t z = 0; z < nz; ++z) {
      const double pyz = pyz_[y * nz + z];
      if (pyz <= tol_.support_eps) continue;
      std::vector<Complex> p(n1);
      for (std::size_t x = 0; x < n1; ++x) p[x] = mac_.transition(x * n2 + y, z) * px / pyz;
      slot_of_yz_[y * nz + z] = static_cast<std::ptrdiff_t>(posteriors_.size());
      posteriors_.emplace_back(g1(), std::move(p));
      posterior_dfts_.push_back(dft(posteriors_.back()));
    }

  std::set<std::pair<std::size_t, std::size_t>> xdy;
  for (std::size_t z = 0; z < nz; ++z) {
    const auto& ys = support_.y_of_z[z];
    if (ys.empty()) continue;

    std::set<std::size_t> dy;
    for (std::size_t y1 : ys)
      for (std::size_t y2 : ys) dy.insert(g2().add_index(y1, g2().neg_index(y2)));
    support_.dy_of_z[z].assign(dy.begin(), dy.end());

    for (std::size_t xhat = 0; xhat < n1; ++xhat) {
      bool in_xz = false;
      for (std::size_t y : ys)
        if (std::abs(posterior_dft(y, z)[xhat]) > tol_.support_eps) {
          in_xz = true;
          break;
        }
      if (in_xz) {
        support_.x_of_z[z].push_back(xhat);
        support_.xz.emplace_back(xhat, z);
      }
    }
    for (std::size_t xhat : support_.x_of_z[z])
      for (std::size_t d : support_.dy_of_z[z]) xdy.emplace(xhat, d);
  }
  support_.xdy.assign(xdy.begin(), xdy.end());
}

double TwoUserView::joint(std::size_t x, std::size_t y, std::size_t z) const {
  const double px = 1.0 / static_cast<double>(g1().size() * g2().size());
  return mac_.transition(x * g2().size() + y, z) * px;
}

std::size_t TwoUserView::yz_slot(std::size_t y, std::size_t z) const {
  const std::ptrdiff_t slot = slot_of_yz_.at(y * mac_.output_size() + z);
  if (slot < 0) {
    std::ostringstream os;
    os << "posterior: pair (y=" << y << ", z=" << z << ") has zero probability";
    throw std::invalid_argument(os.str());
  }
  return static_cast<std::size_t>(slot);
}

const GroupFunction& TwoUserView::posterior(std::size_t y, std::size_t z) const {
  return posteriors_[yz_slot(y, z)];
}

GroupFunction TwoUserView::posterior(const GroupElement& y, std::size_t z) const {
  return posterior(g2().index_of(y), z);
}

const GroupFunction& TwoUserView::posterior_dft(std::size_t y, std::size_t z) const {
  return posterior_dfts_[yz_slot(y, z)];
}

double TwoUserView::cond_mutual_info_xy_given_z() const {
  const std::size_t n1 = g1().size();
  const std::size_t n2 = g2().size();
  const std::size_t nz = mac_.output_size();

  std::vector<double> pz(nz, 0.0);
  std::vector<double> pxz(n1 * nz, 0.0);
  std::vector<double> pxyz;
  pxyz.reserve(n1 * n2 * nz);
  for (std::size_t x = 0; x < n1; ++x)
    for (std::size_t y = 0; y < n2; ++y)
      for (std::size_t z = 0; z < nz; ++z) {
        const double q = joint(x, y, z);
        pxyz.push_back(q);
        pz[z] += q;
        pxz[x * nz + z] += q;
      }
  std::vector<double> pyz(pyz_);

  // I(X;Y|Z) = H(X,Z) + H(Y,Z) - H(Z) - H(X,Y,Z)
  const double nats = entropy_nats(pxz) + entropy_nats(pyz) - entropy_nats(pz) - entropy_nats(pxyz);
  return nats / kLn2;
}

}  // namespace macpolar
