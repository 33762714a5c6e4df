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

#ifndef MACPOLAR_SPECTRAL_HPP
#define MACPOLAR_SPECTRAL_HPP

#include <complex>
#include <vector>

#include "macpolar/abelian.hpp"

namespace macpolar {

using Complex = std::complex<double>;

/// e^{-j 2 pi t} for an exact phase t in turns. All transform kernels go
/// through here so phases never accumulate multiplicative rounding.
Complex root_of_unity(const Rational& t);

/// Complex-valued function on a finite Abelian group, stored in the group's
/// canonical element order.
class GroupFunction {
 public:
  GroupFunction(GroupSpec group, std::vector<Complex> values);

  static GroupFunction zeros(GroupSpec group);
  /// Indicator of a single element.
  static GroupFunction delta(GroupSpec group, std::size_t at);

  const GroupSpec& group() const { return group_; }
  const std::vector<Complex>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  Complex operator[](std::size_t i) const { return values_[i]; }
  Complex& operator[](std::size_t i) { return values_[i]; }

 private:
  GroupSpec group_;
  std::vector<Complex> values_;
};

/// fhat(xhat) = sum_x f(x) e^{-j 2 pi <xhat, x>}. Direct O(|G|^2) sum; the
/// group sizes in scope never justify a fast transform.
GroupFunction dft(const GroupFunction& f);

/// f(x) = (1/|G|) sum_xhat fhat(xhat) e^{j 2 pi <xhat, x>}.
GroupFunction idft(const GroupFunction& fhat);

/// (f * g)(x) = sum_{x'} f(x') g(x - x'). Both functions must live on the
/// same group.
GroupFunction convolve(const GroupFunction& f, const GroupFunction& g);

/// f~(x) = f(-x).
GroupFunction reverse(const GroupFunction& f);

}  // namespace macpolar

#endif  // MACPOLAR_SPECTRAL_HPP
