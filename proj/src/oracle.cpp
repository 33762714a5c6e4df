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

#include "macpolar/oracle.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace macpolar {

Depth1Result depth1_check(const TwoUserView& view) {
  SynthesisOptions exact;
  exact.merge_outputs = false;
  exact.prune_zero_outputs = true;

  Depth1Result r;
  r.lhs = mutual_info(minus_transform(view.mac(), exact), 1u) +
          mutual_info(plus_transform(view.mac(), exact), 1u);
  r.rhs = 2.0 * mutual_info(view.mac(), 1u);
  r.preserved = std::abs(r.lhs - r.rhs) < view.tolerances().oracle_tol;
  return r;
}

FourierCheckResult depth1_fourier_check(const TwoUserView& view) {
  const GroupSpec& g1 = view.g1();
  const GroupSpec& g2 = view.g2();
  const SupportSets& sup = view.support();
  const std::size_t nz = view.mac().output_size();
  const double rtol = view.tolerances().ratio_tol;

  for (std::size_t z1 = 0; z1 < nz; ++z1) {
    if (sup.y_of_z[z1].empty()) continue;
    for (std::size_t z2 = 0; z2 < nz; ++z2) {
      if (sup.y_of_z[z2].empty()) continue;
      for (std::size_t y1 : sup.y_of_z[z1])
        for (std::size_t y1p : sup.y_of_z[z1])
          for (std::size_t y2 : sup.y_of_z[z2]) {
            // y2' is pinned by y1 - y2 = y1' - y2'.
            const std::size_t y2p = g2.add_index(y2, g2.add_index(y1p, g2.neg_index(y1)));
            if (!view.in_support(y2p, z2)) continue;
            for (std::size_t xhat = 0; xhat < g1.size(); ++xhat) {
              const Complex lhs =
                  view.posterior_dft(y1, z1)[xhat] * std::conj(view.posterior_dft(y2, z2)[xhat]);
              const Complex rhs =
                  view.posterior_dft(y1p, z1)[xhat] * std::conj(view.posterior_dft(y2p, z2)[xhat]);
              if (std::abs(lhs - rhs) > rtol) {
                std::ostringstream os;
                os << "quadruple y1=" << to_string(g2.element(y1)) << " y2=" << to_string(g2.element(y2))
                   << " y1'=" << to_string(g2.element(y1p)) << " y2'=" << to_string(g2.element(y2p))
                   << " z1=" << z1 << " z2=" << z2 << " xhat=" << to_string(g1.element(xhat))
                   << ": lhs-rhs magnitude " << std::abs(lhs - rhs);
                return FourierCheckResult{false, os.str()};
              }
            }
          }
    }
  }
  return FourierCheckResult{true, {}};
}

namespace {

void probe_sequences(const Mac& mac, SubsetMask s, std::size_t remaining, const SynthesisOptions& opts,
                     std::vector<double>& out) {
  if (remaining == 0) {
    out.push_back(mutual_info(mac, s));
    return;
  }
  probe_sequences(minus_transform(mac, opts), s, remaining - 1, opts, out);
  probe_sequences(plus_transform(mac, opts), s, remaining - 1, opts, out);
}

}  // namespace

PreservationProbe average_probe(const Mac& mac, SubsetMask s, std::size_t depth,
                                const SynthesisOptions& opts) {
  if (depth > opts.max_depth) {
    std::ostringstream os;
    os << "average_probe: depth " << depth << " exceeds max depth " << opts.max_depth;
    throw std::invalid_argument(os.str());
  }
  PreservationProbe probe;
  probe.subset = s;
  probe.depth = depth;
  probe.reference = mutual_info(mac, s);
  probe.per_sequence.reserve(1u << depth);
  probe_sequences(mac, s, depth, opts, probe.per_sequence);
  double sum = 0.0;
  for (double v : probe.per_sequence) sum += v;
  probe.average = sum / static_cast<double>(probe.per_sequence.size());
  probe.deficit = probe.reference - probe.average;
  return probe;
}

namespace {

// Uniform double in (0, 1) built from raw engine output; keeps corpora
// reproducible across standard library implementations.
double unit_uniform(std::mt19937_64& rng) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u > 0.0 ? u : 0x1.0p-53;
}

}  // namespace

Mac random_mac(const std::vector<GroupSpec>& groups, std::size_t output_size, std::uint64_t seed,
               bool degenerate) {
  std::mt19937_64 rng(seed);
  std::size_t rows = 1;
  for (const GroupSpec& g : groups) rows *= g.size();
  std::vector<double> table(rows * output_size, 0.0);

  // Exponential spacings normalize to a uniform draw from the simplex.
  for (std::size_t r = 0; r < rows; ++r) {
    double sum = 0.0;
    for (std::size_t z = 0; z < output_size; ++z) {
      const double e = -std::log(unit_uniform(rng));
      table[r * output_size + z] = e;
      sum += e;
    }
    for (std::size_t z = 0; z < output_size; ++z) table[r * output_size + z] /= sum;
  }

  if (degenerate) {
    if (groups.size() == 2) {
      // Knock out whole (y, z) blocks so Y^z becomes a proper subset.
      const std::size_t n1 = groups[0].size();
      const std::size_t n2 = groups[1].size();
      for (std::size_t y = 0; y < n2; ++y) {
        std::vector<bool> keep(output_size, true);
        std::size_t kept = output_size;
        for (std::size_t z = 0; z < output_size; ++z)
          if (kept > 1 && unit_uniform(rng) < 0.3) {
            keep[z] = false;
            --kept;
          }
        for (std::size_t x = 0; x < n1; ++x)
          for (std::size_t z = 0; z < output_size; ++z)
            if (!keep[z]) table[(x * n2 + y) * output_size + z] = 0.0;
      }
    }
    // Individual zero entries, never emptying a row.
    for (std::size_t r = 0; r < rows; ++r) {
      std::size_t positive = 0;
      for (std::size_t z = 0; z < output_size; ++z)
        if (table[r * output_size + z] > 0.0) ++positive;
      for (std::size_t z = 0; z < output_size; ++z) {
        double& v = table[r * output_size + z];
        if (v > 0.0 && positive > 1 && unit_uniform(rng) < 0.15) {
          v = 0.0;
          --positive;
        }
      }
    }
    for (std::size_t r = 0; r < rows; ++r) {
      double sum = 0.0;
      for (std::size_t z = 0; z < output_size; ++z) sum += table[r * output_size + z];
      for (std::size_t z = 0; z < output_size; ++z) table[r * output_size + z] /= sum;
    }
  }
  return Mac(groups, output_size, std::move(table));
}

}  // namespace macpolar
