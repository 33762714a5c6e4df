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

#include "macpolar/commands.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "macpolar/channel_file.hpp"
#include "macpolar/compat.hpp"
#include "macpolar/oracle.hpp"
#include "macpolar/polarize.hpp"

namespace macpolar {

namespace {

using nlohmann::json;

std::string bits6(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}

double phase_in_turns(Complex v) {
  double t = std::arg(v) / (2.0 * std::numbers::pi);
  t -= std::floor(t);
  if (t >= 1.0) t = 0.0;
  return t;
}

std::string describe(const Mac& mac, const ChannelMetadata& meta, const std::string& file) {
  std::ostringstream os;
  os << "channel";
  if (!meta.name.empty()) os << " '" << meta.name << "'";
  os << " (" << file << "): " << mac.num_users() << " users over ";
  for (std::size_t i = 0; i < mac.num_users(); ++i) {
    if (i > 0) os << " ; ";
    os << mac.input_group(i).to_string();
  }
  os << ", " << mac.output_size() << " outputs";
  return os.str();
}

void print_region_table(const RegionReport& report, std::ostream& out) {
  out << "I_S (bits):\n";
  for (const auto& [mask, value] : report.info)
    out << "  S=" << subset_to_string(mask) << "  " << bits6(value) << "\n";
  out << "dominant-face sum rate: " << bits6(report.sum_capacity()) << " bits\n";
}

json region_json(const RegionReport& report) {
  json info = json::object();
  for (const auto& [mask, value] : report.info) info[std::to_string(mask)] = value;
  return json{{"info", std::move(info)}, {"sum_capacity", report.sum_capacity()}};
}

json witness_json(const PseudoQuadFunction& f) {
  json entries = json::array();
  for (const auto& [key, value] : f.values) {
    entries.push_back(json{{"xhat", f.g1.element(key.first).residues()},
                           {"y", f.g2.element(key.second).residues()},
                           {"phase_turns", phase_in_turns(value)}});
  }
  return entries;
}

void print_witness(const PseudoQuadFunction& f, std::ostream& out) {
  out << "  witness F on " << f.values.size() << " points (xhat, y, phase in turns):\n";
  for (const auto& [key, value] : f.values)
    out << "    (" << to_string(f.g1.element(key.first)) << ", " << to_string(f.g2.element(key.second))
        << ", " << bits6(phase_in_turns(value)) << ")\n";
}

const char* stage_name(FailureStage stage) {
  return stage == FailureStage::fingerprint_ill_defined ? "fingerprint-ill-defined" : "extension-conflict";
}

/// Shortcut diagnostics for one reduced two-user channel, when applicable.
json shortcut_report(const TwoUserView& view, bool compatible, std::ostream& out) {
  if (prime_field_applicable(view)) {
    const auto a = prime_field_shortcut(view);
    const bool agrees = a.has_value() == compatible;
    out << "  prime-field shortcut: ";
    if (a)
      out << "a=" << *a;
    else
      out << "no a works";
    out << (agrees ? " (agrees with the criterion)" : " *** SHORTCUT DISAGREES WITH THE CRITERION ***")
        << "\n";
    json j{{"kind", "prime-field"}, {"agrees", agrees}};
    if (a)
      j["a"] = *a;
    else
      j["a"] = nullptr;
    return j;
  }
  if (coprime_applicable(view)) {
    const bool verdict = coprime_shortcut(view);
    const bool agrees = verdict == compatible;
    out << "  co-prime shortcut: I(X;Y|Z) " << (verdict ? "= 0" : "> 0")
        << (agrees ? " (agrees with the criterion)" : " *** SHORTCUT DISAGREES WITH THE CRITERION ***")
        << "\n";
    return json{{"kind", "coprime"}, {"verdict", verdict}, {"agrees", agrees}};
  }
  return json(nullptr);
}

}  // namespace

int cmd_region(const std::string& file, std::ostream& out, Tolerances tol) {
  (void)tol;
  const LoadedChannel loaded = load_channel(file);
  const RegionReport report = region(loaded.mac);
  out << describe(loaded.mac, loaded.meta, file) << "\n";
  print_region_table(report, out);

  json j{{"command", "region"}, {"channel", loaded.meta.name}, {"file", file}};
  j.update(region_json(report));
  out << "--- json ---\n" << j.dump() << "\n";
  return 0;
}

int cmd_polarize(const std::string& file, const std::string& sequence, bool merge,
                 std::size_t max_depth, std::ostream& out, Tolerances tol) {
  (void)tol;
  const LoadedChannel loaded = load_channel(file);
  SynthesisOptions opts;
  opts.merge_outputs = merge;
  opts.max_depth = max_depth;
  const SignSequence seq = parse_sign_sequence(sequence);
  const Mac synthesized = synthesize(loaded.mac, seq, opts);
  const RegionReport report = region(synthesized);

  out << describe(loaded.mac, loaded.meta, file) << "\n";
  out << "sequence '" << to_string(seq) << "': output alphabet " << loaded.mac.output_size() << " -> "
      << synthesized.output_size() << (merge ? " (merged)" : " (unmerged)") << "\n";
  print_region_table(report, out);

  json j{{"command", "polarize"},
         {"channel", loaded.meta.name},
         {"file", file},
         {"sequence", to_string(seq)},
         {"merged", merge},
         {"output_size", synthesized.output_size()}};
  j.update(region_json(report));
  out << "--- json ---\n" << j.dump() << "\n";
  return 0;
}

int cmd_check(const std::string& file, std::optional<SubsetMask> subset, std::ostream& out,
              Tolerances tol) {
  const LoadedChannel loaded = load_channel(file);
  const Mac& mac = loaded.mac;
  const SubsetMask full = (1u << mac.num_users()) - 1u;
  out << describe(mac, loaded.meta, file) << "\n";

  std::vector<SubsetMask> targets;
  if (subset) {
    if (*subset == 0 || (*subset & ~full) != 0)
      throw std::invalid_argument("check: --subset must be a nonempty subset of the users");
    targets.push_back(*subset);
  } else {
    for (SubsetMask s = 1; s < full; ++s) targets.push_back(s);
  }

  bool all_preserved = true;
  json subsets = json::array();
  for (SubsetMask s : targets) {
    json entry{{"mask", s}, {"users", subset_to_string(s)}};
    if (s == full) {
      // The sum over all users is conserved by every transform step, so no
      // criterion is needed for the full set.
      out << "S=" << subset_to_string(s) << ": always preserved (symmetric sum-capacity)\n";
      entry["compatible"] = true;
      entry["note"] = "sum-capacity is always preserved";
      subsets.push_back(std::move(entry));
      continue;
    }
    const TwoUserView view(two_user_reduction(mac, s), tol);
    const CompatReport report = check_compatibility(view);
    entry["compatible"] = report.compatible;
    out << "S=" << subset_to_string(s) << ": " << (report.compatible ? "compatible" : "not compatible")
        << "\n";
    if (report.compatible) {
      print_witness(*report.witness, out);
      entry["witness"] = witness_json(*report.witness);
    } else {
      out << "  failure stage: " << stage_name(report.failure->stage) << " [" << report.failure->check
          << "]\n  evidence: " << report.failure->detail << "\n";
      entry["failure"] = json{{"stage", stage_name(report.failure->stage)},
                              {"check", report.failure->check},
                              {"detail", report.failure->detail}};
      all_preserved = false;
    }
    const json sc = shortcut_report(view, report.compatible, out);
    if (!sc.is_null()) entry["shortcut"] = sc;
    subsets.push_back(std::move(entry));
  }

  if (subset)
    out << "subset " << subset_to_string(*subset) << ": " << (all_preserved ? "preserved" : "not preserved")
        << "\n";
  else
    out << "region: " << (all_preserved ? "preserved" : "not preserved") << " by polarization\n";

  json j{{"command", "check"},
         {"channel", loaded.meta.name},
         {"file", file},
         {"preserved", all_preserved},
         {"subsets", std::move(subsets)}};
  out << "--- json ---\n" << j.dump() << "\n";
  return all_preserved ? 0 : 2;
}

int cmd_oracle(const std::string& file, std::optional<SubsetMask> subset, std::size_t depth,
               std::ostream& out, Tolerances tol) {
  const LoadedChannel loaded = load_channel(file);
  const Mac& mac = loaded.mac;
  const SubsetMask full = (1u << mac.num_users()) - 1u;
  if (depth == 0) throw std::invalid_argument("oracle: depth must be >= 1");
  SynthesisOptions opts;
  opts.max_depth = depth;

  std::vector<SubsetMask> targets;
  if (subset) {
    if (*subset == 0 || (*subset & ~full) != 0)
      throw std::invalid_argument("oracle: --subset must be a nonempty subset of the users");
    targets.push_back(*subset);
  } else {
    for (SubsetMask s = 1; s <= full; ++s) targets.push_back(s);
  }

  out << describe(mac, loaded.meta, file) << "\n";
  bool any_disagreement = false;
  json probes = json::array();
  json checker = json::array();
  for (SubsetMask s : targets) {
    out << "probe S=" << subset_to_string(s) << " (reference I_S = " << bits6(mutual_info(mac, s))
        << " bits):\n";
    bool oracle_preserved = true;
    for (std::size_t n = 1; n <= depth; ++n) {
      const PreservationProbe probe = average_probe(mac, s, n, opts);
      out << "  depth " << n << ": average " << bits6(probe.average) << ", deficit "
          << bits6(probe.deficit) << "\n";
      if (std::abs(probe.deficit) > tol.oracle_tol) oracle_preserved = false;
      json pj{{"mask", s},         {"depth", n},
              {"average", probe.average}, {"reference", probe.reference},
              {"deficit", probe.deficit}, {"per_sequence", probe.per_sequence}};
      probes.push_back(std::move(pj));
    }
    if (s != full) {
      const CompatReport report = check_compatibility(TwoUserView(two_user_reduction(mac, s), tol));
      const bool agrees = report.compatible == oracle_preserved;
      out << "  criterion verdict: " << (report.compatible ? "compatible" : "not compatible");
      if (agrees)
        out << " (oracle agrees up to depth " << depth << ")\n";
      else
        out << "\n  *** DISAGREEMENT between the criterion and the depth-" << depth << " oracle ***\n";
      if (!agrees) any_disagreement = true;
      checker.push_back(json{{"mask", s}, {"compatible", report.compatible}, {"agrees", agrees}});
    }
  }
  out << "note: the probe refutes preservation only up to its depth cap; a criterion-compatible\n"
         "verdict cannot be refuted by a bounded-depth average alone.\n";

  json j{{"command", "oracle"}, {"channel", loaded.meta.name},  {"file", file},
         {"depth", depth},      {"probes", std::move(probes)},  {"checker", std::move(checker)},
         {"disagreement", any_disagreement}};
  out << "--- json ---\n" << j.dump() << "\n";
  return 0;
}

}  // namespace macpolar
