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

#include "macpolar/tolerances.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>

namespace macpolar {

Tolerances Tolerances::from_env() {
  Tolerances tol;
  const char* raw = std::getenv("MACPOLAR_TOLERANCES");
  if (raw == nullptr) return tol;
  std::istringstream is(raw);
  std::string field;
  double* slots[3] = {&tol.support_eps, &tol.ratio_tol, &tol.oracle_tol};
  for (double* slot : slots) {
    if (!std::getline(is, field, ',')) break;
    if (field.empty()) continue;
    const double v = std::stod(field);
    if (v <= 0.0) throw std::invalid_argument("MACPOLAR_TOLERANCES: tolerances must be positive");
    *slot = v;
  }
  return tol;
}

}  // namespace macpolar
