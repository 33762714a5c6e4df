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

#ifndef MACPOLAR_TESTS_TEST_SUPPORT_HPP
#define MACPOLAR_TESTS_TEST_SUPPORT_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "macpolar/channel.hpp"

namespace macpolar::testing {

// Fixture channels, built directly from their defining maps.

/// Binary adder channel: Z = X + Y over the integers, outputs {0, 1, 2}.
inline Mac make_bac() {
  return Mac({GroupSpec({2}), GroupSpec({2})}, 3,
             {1, 0, 0,  //
              0, 1, 0,  //
              0, 1, 0,  //
              0, 0, 1});
}

/// Z = X AND Y on Z2 x Z2.
inline Mac make_and() {
  return Mac({GroupSpec({2}), GroupSpec({2})}, 2,
             {1, 0,  //
              1, 0,  //
              1, 0,  //
              0, 1});
}

/// Noiseless channel Z = (X, Y) on the given groups.
inline Mac make_identity(const GroupSpec& g1, const GroupSpec& g2) {
  const std::size_t n = g1.size() * g2.size();
  std::vector<double> table(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) table[i * n + i] = 1.0;
  return Mac({g1, g2}, n, std::move(table));
}

/// Output independent of both inputs.
inline Mac make_noise(const GroupSpec& g1, const GroupSpec& g2, std::size_t outputs) {
  const std::size_t n = g1.size() * g2.size();
  std::vector<double> table(n * outputs, 1.0 / static_cast<double>(outputs));
  return Mac({g1, g2}, outputs, std::move(table));
}

/// W(z | x, y) = K(z | x + a*y) on Z_q x Z_q with a random kernel K. The
/// posterior ratios reduce to the pure phase e^{j 2 pi a xhat (y1-y2) / q},
/// so these channels preserve I_1 by construction.
inline Mac make_shear(int q, std::size_t a, std::size_t outputs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = static_cast<std::size_t>(q);
  std::vector<std::vector<double>> kernel(n, std::vector<double>(outputs));
  for (auto& row : kernel) {
    double sum = 0.0;
    for (double& v : row) {
      v = -std::log(static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53);
      sum += v;
    }
    for (double& v : row) v /= sum;
  }
  std::vector<double> table(n * n * outputs);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t t = (x + a * y) % n;
      for (std::size_t z = 0; z < outputs; ++z) table[(x * n + y) * outputs + z] = kernel[t][z];
    }
  return Mac({GroupSpec({q}), GroupSpec({q})}, outputs, std::move(table));
}

// Brute-force information oracles, written against the defining sums rather
// than the entropy decompositions the library uses.

/// I(A;B) in bits from a joint table p[a * nb + b].
inline double mi_oracle_bits(const std::vector<double>& joint, std::size_t na, std::size_t nb) {
  std::vector<double> pa(na, 0.0);
  std::vector<double> pb(nb, 0.0);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b) {
      pa[a] += joint[a * nb + b];
      pb[b] += joint[a * nb + b];
    }
  double acc = 0.0;
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < nb; ++b) {
      const double p = joint[a * nb + b];
      if (p > 0.0) acc += p * std::log2(p / (pa[a] * pb[b]));
    }
  return acc;
}

/// I(X_S; Z X_{S^c}) in bits, straight from the definition.
inline double subset_info_oracle_bits(const Mac& mac, SubsetMask s) {
  const std::size_t m = mac.num_users();
  const std::size_t rows = mac.input_size();
  const std::size_t nz = mac.output_size();

  std::size_t ns = 1;
  std::size_t nc = 1;
  for (std::size_t i = 0; i < m; ++i)
    (s & (1u << i) ? ns : nc) *= mac.input_group(i).size();

  std::vector<double> joint(ns * nz * nc, 0.0);
  for (std::size_t x = 0; x < rows; ++x) {
    std::size_t idx_s = 0;
    std::size_t idx_c = 0;
    std::size_t stride = rows;
    for (std::size_t i = 0; i < m; ++i) {
      stride /= mac.input_group(i).size();
      const std::size_t xi = (x / stride) % mac.input_group(i).size();
      if (s & (1u << i))
        idx_s = idx_s * mac.input_group(i).size() + xi;
      else
        idx_c = idx_c * mac.input_group(i).size() + xi;
    }
    for (std::size_t z = 0; z < nz; ++z)
      joint[idx_s * (nz * nc) + z * nc + idx_c] +=
          mac.transition(x, z) / static_cast<double>(rows);
  }
  return mi_oracle_bits(joint, ns, nz * nc);
}

/// I(X;Y|Z) in bits for a two-user channel, via the per-z decomposition.
inline double cond_mi_oracle_bits(const Mac& mac) {
  const std::size_t n1 = mac.input_group(0).size();
  const std::size_t n2 = mac.input_group(1).size();
  const std::size_t nz = mac.output_size();
  const double px = 1.0 / static_cast<double>(n1 * n2);

  double acc = 0.0;
  for (std::size_t z = 0; z < nz; ++z) {
    double pz = 0.0;
    std::vector<double> joint(n1 * n2, 0.0);
    for (std::size_t x = 0; x < n1; ++x)
      for (std::size_t y = 0; y < n2; ++y) {
        const double v = mac.transition(x * n2 + y, z) * px;
        joint[x * n2 + y] = v;
        pz += v;
      }
    if (pz <= 0.0) continue;
    for (double& v : joint) v /= pz;
    acc += pz * mi_oracle_bits(joint, n1, n2);
  }
  return acc;
}

}  // namespace macpolar::testing

#endif  // MACPOLAR_TESTS_TEST_SUPPORT_HPP
