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

#include "macpolar/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace macpolar {

Complex root_of_unity(const Rational& t) {
  const double angle = -2.0 * std::numbers::pi * static_cast<double>(t.num) / static_cast<double>(t.den);
  return std::polar(1.0, angle);
}

GroupFunction::GroupFunction(GroupSpec group, std::vector<Complex> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_.size())
    throw std::invalid_argument("GroupFunction: value vector length must equal |G|");
  for (const Complex& v : values_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("GroupFunction: entries must be finite");
}

GroupFunction GroupFunction::zeros(GroupSpec group) {
  const std::size_t n = group.size();
  return GroupFunction(std::move(group), std::vector<Complex>(n, Complex(0.0, 0.0)));
}

GroupFunction GroupFunction::delta(GroupSpec group, std::size_t at) {
  GroupFunction f = zeros(std::move(group));
  f[at] = Complex(1.0, 0.0);
  return f;
}

GroupFunction dft(const GroupFunction& f) {
  const GroupSpec& g = f.group();
  const std::size_t n = g.size();
  std::vector<Complex> out(n, Complex(0.0, 0.0));
  for (std::size_t xhat = 0; xhat < n; ++xhat) {
    Complex acc(0.0, 0.0);
    for (std::size_t x = 0; x < n; ++x) acc += f[x] * root_of_unity(g.pairing_index(xhat, x));
    out[xhat] = acc;
  }
  return GroupFunction(g, std::move(out));
}

GroupFunction idft(const GroupFunction& fhat) {
  const GroupSpec& g = fhat.group();
  const std::size_t n = g.size();
  std::vector<Complex> out(n, Complex(0.0, 0.0));
  for (std::size_t x = 0; x < n; ++x) {
    Complex acc(0.0, 0.0);
    for (std::size_t xhat = 0; xhat < n; ++xhat)
      acc += fhat[xhat] * std::conj(root_of_unity(g.pairing_index(xhat, x)));
    out[x] = acc / static_cast<double>(n);
  }
  return GroupFunction(g, std::move(out));
}

GroupFunction convolve(const GroupFunction& f, const GroupFunction& g) {
  if (!(f.group() == g.group())) throw std::invalid_argument("convolve: functions live on different groups");
  const GroupSpec& grp = f.group();
  const std::size_t n = grp.size();
  std::vector<Complex> out(n, Complex(0.0, 0.0));
  for (std::size_t x = 0; x < n; ++x) {
    Complex acc(0.0, 0.0);
    for (std::size_t xp = 0; xp < n; ++xp) acc += f[xp] * g[grp.add_index(x, grp.neg_index(xp))];
    out[x] = acc;
  }
  return GroupFunction(grp, std::move(out));
}

GroupFunction reverse(const GroupFunction& f) {
  const GroupSpec& g = f.group();
  const std::size_t n = g.size();
  std::vector<Complex> out(n);
  for (std::size_t x = 0; x < n; ++x) out[x] = f[g.neg_index(x)];
  return GroupFunction(g, std::move(out));
}

}  // namespace macpolar
