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

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "macpolar/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "macpolar: multiple access channels over finite Abelian groups --\n"
      "capacity regions, polar transforms, and the Fourier test for\n"
      "whether polarization preserves the whole region"};
  app.require_subcommand(1);

  std::string file;
  std::string sequence;
  bool no_merge = false;
  std::size_t max_depth = 3;
  std::optional<unsigned> subset;
  std::size_t depth = 2;

  auto* region = app.add_subcommand("region", "print every I_S of the symmetric capacity region");
  region->add_option("file", file, "channel file (JSON)")->required();

  auto* polarize = app.add_subcommand("polarize", "synthesize W^s for a sign sequence");
  polarize->add_option("file", file, "channel file (JSON)")->required();
  polarize->add_option("--seq", sequence, "sign sequence over {-,+}, e.g. --seq=-+-");
  polarize->add_flag("--no-merge", no_merge, "keep the raw synthesized output alphabet");
  polarize->add_option("--max-depth", max_depth, "depth guard for the synthesized sequence");

  auto* check = app.add_subcommand("check", "decide region preservation via the Fourier criterion");
  check->add_option("file", file, "channel file (JSON)")->required();
  check->add_option("--subset", subset, "check a single user subset (bitmask, bit i-1 = user i)");

  auto* oracle = app.add_subcommand("oracle", "brute-force preservation probe over all 2^n sequences");
  oracle->add_option("file", file, "channel file (JSON)")->required();
  oracle->add_option("--subset", subset, "probe a single user subset (bitmask)");
  oracle->add_option("--depth", depth, "probe depth n (default 2)");

  CLI11_PARSE(app, argc, argv);

  try {
    const macpolar::Tolerances tol = macpolar::Tolerances::from_env();
    if (region->parsed()) return macpolar::cmd_region(file, std::cout, tol);
    if (polarize->parsed())
      return macpolar::cmd_polarize(file, sequence, !no_merge, max_depth, std::cout, tol);
    if (check->parsed()) return macpolar::cmd_check(file, subset, std::cout, tol);
    if (oracle->parsed()) return macpolar::cmd_oracle(file, subset, depth, std::cout, tol);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 1;
}
