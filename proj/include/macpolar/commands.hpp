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

#ifndef MACPOLAR_COMMANDS_HPP
#define MACPOLAR_COMMANDS_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "macpolar/channel.hpp"
#include "macpolar/tolerances.hpp"

namespace macpolar {

/// Batch commands behind the CLI. Each prints a human-readable report
/// followed by a machine-readable JSON block (after a "--- json ---"
/// marker) and returns the process exit code: 0 success, and for `check`
/// 0 = region/subset preserved, 2 = not preserved. Errors surface as
/// exceptions; the CLI maps them to exit code 1.

int cmd_region(const std::string& file, std::ostream& out, Tolerances tol = {});

int cmd_polarize(const std::string& file, const std::string& sequence, bool merge,
                 std::size_t max_depth, std::ostream& out, Tolerances tol = {});

int cmd_check(const std::string& file, std::optional<SubsetMask> subset, std::ostream& out,
              Tolerances tol = {});

int cmd_oracle(const std::string& file, std::optional<SubsetMask> subset, std::size_t depth,
               std::ostream& out, Tolerances tol = {});

}  // namespace macpolar

#endif  // MACPOLAR_COMMANDS_HPP
