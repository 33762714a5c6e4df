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

#include "macpolar/polarize.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace macpolar {

namespace {

std::vector<std::size_t> addition_table(const GroupSpec& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> tab(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) tab[a * n + b] = g.add_index(a, b);
  return tab;
}

std::string output_label(const Mac& mac, std::size_t z) {
  if (!mac.output_labels().empty()) return mac.output_labels()[z];
  std::ostringstream os;
  os << z;
  return os.str();
}

Mac reduce_outputs(Mac mac, const SynthesisOptions& opts) {
  if (opts.merge_outputs) return merge_equivalent_outputs(mac, opts.merge_tolerance, opts.prune_zero_outputs);
  if (opts.prune_zero_outputs) return prune_zero_outputs(mac);
  return mac;
}

}  // namespace

SignSequence parse_sign_sequence(std::string_view text) {
  SignSequence seq;
  seq.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '-': seq.push_back(Sign::minus); break;
      case '+': seq.push_back(Sign::plus); break;
      default: throw std::invalid_argument(std::string("sign sequence: unexpected character '") + c + "'");
    }
  }
  return seq;
}

std::string to_string(const SignSequence& seq) {
  std::string s;
  s.reserve(seq.size());
  for (Sign sg : seq) s.push_back(static_cast<char>(sg));
  return s;
}

Mac minus_transform(const Mac& mac, const SynthesisOptions& opts) {
  const std::size_t nx = mac.input_size();
  const std::size_t nz = mac.output_size();
  const GroupSpec& gx = mac.joint_input_group();
  const std::vector<std::size_t> add = addition_table(gx);
  const double px = 1.0 / static_cast<double>(nx);

  std::vector<double> table(nx * nz * nz, 0.0);
  for (std::size_t u1 = 0; u1 < nx; ++u1) {
    double* row = table.data() + u1 * nz * nz;
    for (std::size_t u2 = 0; u2 < nx; ++u2) {
      const std::size_t sum = add[u1 * nx + u2];
      for (std::size_t z1 = 0; z1 < nz; ++z1) {
        const double w1 = mac.transition(sum, z1);
        if (w1 == 0.0) continue;
        const double scaled = w1 * px;
        for (std::size_t z2 = 0; z2 < nz; ++z2) row[z1 * nz + z2] += scaled * mac.transition(u2, z2);
      }
    }
  }

  std::vector<std::string> labels;
  if (opts.track_output_structure) {
    labels.reserve(nz * nz);
    for (std::size_t z1 = 0; z1 < nz; ++z1)
      for (std::size_t z2 = 0; z2 < nz; ++z2)
        labels.push_back(output_label(mac, z1) + "," + output_label(mac, z2));
  }
  return reduce_outputs(Mac(mac.input_groups(), nz * nz, std::move(table), std::move(labels)), opts);
}

Mac plus_transform(const Mac& mac, const SynthesisOptions& opts) {
  const std::size_t nx = mac.input_size();
  const std::size_t nz = mac.output_size();
  const GroupSpec& gx = mac.joint_input_group();
  const std::vector<std::size_t> add = addition_table(gx);
  const double px = 1.0 / static_cast<double>(nx);
  const std::size_t out_size = nz * nz * nx;

  std::vector<double> table(nx * out_size, 0.0);
  for (std::size_t u2 = 0; u2 < nx; ++u2) {
    double* row = table.data() + u2 * out_size;
    for (std::size_t u1 = 0; u1 < nx; ++u1) {
      const std::size_t sum = add[u1 * nx + u2];
      for (std::size_t z1 = 0; z1 < nz; ++z1) {
        const double w1 = mac.transition(sum, z1);
        if (w1 == 0.0) continue;
        const double scaled = w1 * px;
        for (std::size_t z2 = 0; z2 < nz; ++z2)
          row[(z1 * nz + z2) * nx + u1] += scaled * mac.transition(u2, z2);
      }
    }
  }

  std::vector<std::string> labels;
  if (opts.track_output_structure) {
    labels.reserve(out_size);
    for (std::size_t z1 = 0; z1 < nz; ++z1)
      for (std::size_t z2 = 0; z2 < nz; ++z2)
        for (std::size_t u1 = 0; u1 < nx; ++u1) {
          std::ostringstream os;
          os << output_label(mac, z1) << ',' << output_label(mac, z2) << ",u" << u1;
          labels.push_back(os.str());
        }
  }
  return reduce_outputs(Mac(mac.input_groups(), out_size, std::move(table), std::move(labels)), opts);
}

Mac synthesize(const Mac& mac, const SignSequence& seq, const SynthesisOptions& opts) {
  if (seq.size() > opts.max_depth) {
    std::ostringstream os;
    os << "synthesize: sequence depth " << seq.size() << " exceeds max depth " << opts.max_depth;
    throw std::invalid_argument(os.str());
  }
  Mac current = mac;
  for (Sign sg : seq) current = sg == Sign::minus ? minus_transform(current, opts) : plus_transform(current, opts);
  return current;
}

Mac prune_zero_outputs(const Mac& mac) {
  const std::size_t nx = mac.input_size();
  const std::size_t nz = mac.output_size();
  std::vector<std::size_t> keep;
  for (std::size_t z = 0; z < nz; ++z) {
    double total = 0.0;
    for (std::size_t x = 0; x < nx; ++x) total += mac.transition(x, z);
    if (total > 0.0) keep.push_back(z);
  }
  if (keep.size() == nz) return mac;

  std::vector<double> table(nx * keep.size());
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t k = 0; k < keep.size(); ++k) table[x * keep.size() + k] = mac.transition(x, keep[k]);
  std::vector<std::string> labels;
  if (!mac.output_labels().empty())
    for (std::size_t z : keep) labels.push_back(mac.output_labels()[z]);
  return Mac(mac.input_groups(), keep.size(), std::move(table), std::move(labels));
}

Mac merge_equivalent_outputs(const Mac& mac, double tol, bool prune_zero) {
  if (tol <= 0.0) throw std::invalid_argument("merge_equivalent_outputs: tolerance must be positive");
  const std::size_t nx = mac.input_size();
  const std::size_t nz = mac.output_size();

  std::vector<double> qz(nz, 0.0);
  for (std::size_t z = 0; z < nz; ++z) {
    double total = 0.0;
    for (std::size_t x = 0; x < nx; ++x) total += mac.transition(x, z);
    qz[z] = total / static_cast<double>(nx);
  }

  // Bucket by the quantized posterior, then confirm each merge with a true
  // tolerance comparison: quantization alone could split near-equal
  // posteriors across buckets, and a bucket can hold posteriors that round
  // together without actually agreeing.
  const int digits = static_cast<int>(std::ceil(-std::log10(tol)));
  const double scale = std::pow(10.0, digits);

  std::vector<std::vector<double>> class_posterior;  // representatives
  std::vector<std::vector<std::size_t>> class_members;
  std::map<std::vector<long long>, std::vector<std::size_t>> buckets;  // key -> class ids
  std::vector<std::size_t> zero_outputs;

  for (std::size_t z = 0; z < nz; ++z) {
    if (qz[z] <= 0.0) {
      zero_outputs.push_back(z);
      continue;
    }
    std::vector<double> post(nx);
    for (std::size_t x = 0; x < nx; ++x) post[x] = mac.transition(x, z) / (static_cast<double>(nx) * qz[z]);

    std::vector<long long> key(nx);
    for (std::size_t x = 0; x < nx; ++x) key[x] = std::llround(post[x] * scale);

    auto& candidates = buckets[key];
    std::size_t cls = class_posterior.size();
    for (std::size_t c : candidates) {
      bool match = true;
      for (std::size_t x = 0; x < nx && match; ++x)
        if (std::abs(class_posterior[c][x] - post[x]) > tol) match = false;
      if (match) {
        cls = c;
        break;
      }
    }
    if (cls == class_posterior.size()) {
      class_posterior.push_back(std::move(post));
      class_members.emplace_back();
      candidates.push_back(cls);
    }
    class_members[cls].push_back(z);
  }

  std::vector<std::vector<std::size_t>> groups = std::move(class_members);
  if (!prune_zero)
    for (std::size_t z : zero_outputs) groups.push_back({z});
  // Deterministic output order: by smallest member index.
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  std::vector<double> table(nx * groups.size(), 0.0);
  for (std::size_t k = 0; k < groups.size(); ++k)
    for (std::size_t z : groups[k])
      for (std::size_t x = 0; x < nx; ++x) table[x * groups.size() + k] += mac.transition(x, z);

  std::vector<std::string> labels;
  if (!mac.output_labels().empty())
    for (const auto& members : groups) labels.push_back(mac.output_labels()[members.front()]);
  return Mac(mac.input_groups(), groups.size(), std::move(table), std::move(labels));
}

}  // namespace macpolar
