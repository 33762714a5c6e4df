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

#include "macpolar/channel_file.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace macpolar {

namespace {

using nlohmann::json;

struct Entry {
  double value = 0.0;
  bool exact = false;
  long long num = 0;  // valid when exact
  long long den = 1;
};

Entry parse_entry(const json& cell, const std::string& origin, std::size_t row, std::size_t col) {
  auto fail = [&](const std::string& what) {
    std::ostringstream os;
    os << origin << ": probabilities[" << row << "][" << col << "]: " << what;
    throw ChannelFileError(os.str());
  };
  Entry e;
  if (cell.is_number()) {
    e.value = cell.get<double>();
    return e;
  }
  if (cell.is_string()) {
    const std::string s = cell.get<std::string>();
    const auto slash = s.find('/');
    try {
      std::size_t used = 0;
      if (slash == std::string::npos) {
        e.num = std::stoll(s, &used);
        if (used != s.size()) fail("malformed rational '" + s + "'");
        e.den = 1;
      } else {
        e.num = std::stoll(s.substr(0, slash), &used);
        if (used != slash) fail("malformed rational '" + s + "'");
        e.den = std::stoll(s.substr(slash + 1), &used);
        if (used != s.size() - slash - 1) fail("malformed rational '" + s + "'");
      }
    } catch (const std::logic_error&) {
      fail("malformed rational '" + s + "'");
    }
    if (e.den <= 0) fail("denominator must be positive in '" + s + "'");
    e.exact = true;
    e.value = static_cast<double>(e.num) / static_cast<double>(e.den);
    return e;
  }
  fail("expected a number or a \"p/q\" string");
  return e;  // unreachable
}

}  // namespace

LoadedChannel parse_channel(const std::string& json_text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& err) {
    throw ChannelFileError(origin + ": " + err.what());
  }
  auto fail = [&](const std::string& what) { throw ChannelFileError(origin + ": " + what); };

  if (!doc.is_object()) fail("top level must be an object");
  if (!doc.contains("groups") || !doc["groups"].is_array() || doc["groups"].empty())
    fail("'groups' must be a nonempty array of integer lists");
  std::vector<GroupSpec> groups;
  for (const auto& g : doc["groups"]) {
    if (!g.is_array()) fail("'groups' entries must be integer lists");
    std::vector<int> orders;
    for (const auto& n : g) {
      if (!n.is_number_integer()) fail("group factor orders must be integers");
      orders.push_back(n.get<int>());
    }
    try {
      groups.emplace_back(std::move(orders));
    } catch (const std::invalid_argument& err) {
      fail(err.what());
    }
  }

  if (!doc.contains("output_size") || !doc["output_size"].is_number_integer())
    fail("'output_size' must be an integer");
  const long long zn = doc["output_size"].get<long long>();
  if (zn < 1) fail("'output_size' must be >= 1");
  const std::size_t output_size = static_cast<std::size_t>(zn);

  std::vector<std::string> labels;
  if (doc.contains("output_labels")) {
    if (!doc["output_labels"].is_array()) fail("'output_labels' must be an array of strings");
    for (const auto& l : doc["output_labels"]) labels.push_back(l.get<std::string>());
    if (labels.size() != output_size) fail("'output_labels' length must equal output_size");
  }

  std::size_t rows = 1;
  for (const GroupSpec& g : groups) rows *= g.size();
  if (!doc.contains("probabilities") || !doc["probabilities"].is_array())
    fail("'probabilities' must be an array of rows");
  if (doc["probabilities"].size() != rows) {
    std::ostringstream os;
    os << "'probabilities' must have " << rows << " rows (one per input tuple), got "
       << doc["probabilities"].size();
    fail(os.str());
  }

  std::vector<double> table(rows * output_size, 0.0);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = doc["probabilities"][r];
    if (!row.is_array() || row.size() != output_size) {
      std::ostringstream os;
      os << "probabilities[" << r << "] must be a list of " << output_size << " entries";
      fail(os.str());
    }
    bool all_exact = true;
    long long sum_num = 0;
    long long sum_den = 1;
    double sum = 0.0;
    for (std::size_t z = 0; z < output_size; ++z) {
      const Entry e = parse_entry(row[z], origin, r, z);
      if (e.value < 0.0 || e.value > 1.0) {
        std::ostringstream os;
        os << "probabilities[" << r << "][" << z << "] = " << e.value << " outside [0,1]";
        fail(os.str());
      }
      table[r * output_size + z] = e.value;
      sum += e.value;
      if (e.exact) {
        // sum_num/sum_den + num/den, reduced as we go
        const long long g = std::gcd(sum_den, e.den);
        const long long den = sum_den / g * e.den;
        sum_num = sum_num * (den / sum_den) + e.num * (den / e.den);
        sum_den = den;
        const long long g2 = std::gcd(sum_num < 0 ? -sum_num : sum_num, sum_den);
        if (g2 > 1) {
          sum_num /= g2;
          sum_den /= g2;
        }
      } else {
        all_exact = false;
      }
    }
    if (all_exact) {
      if (sum_num != sum_den) {
        std::ostringstream os;
        os << "probabilities[" << r << "]: rational row sums to " << sum_num << "/" << sum_den
           << ", expected exactly 1";
        fail(os.str());
      }
    } else if (std::abs(sum - 1.0) > 1e-9) {
      std::ostringstream os;
      os << "probabilities[" << r << "]: row sums to " << sum << ", expected 1 within 1e-9";
      fail(os.str());
    }
  }

  ChannelMetadata meta;
  if (doc.contains("metadata")) {
    const auto& md = doc["metadata"];
    if (!md.is_object()) fail("'metadata' must be an object");
    if (md.contains("name")) meta.name = md["name"].get<std::string>();
    if (md.contains("notes")) meta.notes = md["notes"].get<std::string>();
    if (md.contains("seed") && !md["seed"].is_null()) meta.seed = md["seed"].get<std::uint64_t>();
  }

  Mac mac(std::move(groups), output_size, std::move(table), std::move(labels));
  const auto issues = validate(mac);
  if (!issues.empty()) {
    std::ostringstream os;
    os << origin << ": invalid transition table:";
    for (const auto& issue : issues) {
      os << " [row " << issue.row;
      if (issue.column) os << ", column " << *issue.column;
      os << ": " << issue.what << "]";
    }
    throw ChannelFileError(os.str());
  }
  return LoadedChannel{std::move(mac), std::move(meta)};
}

LoadedChannel load_channel(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ChannelFileError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_channel(buffer.str(), path);
}

std::string channel_to_json(const Mac& mac, const ChannelMetadata& meta) {
  json doc;
  for (const GroupSpec& g : mac.input_groups()) doc["groups"].push_back(g.orders());
  doc["output_size"] = mac.output_size();
  if (!mac.output_labels().empty()) doc["output_labels"] = mac.output_labels();

  json rows = json::array();
  for (std::size_t r = 0; r < mac.input_size(); ++r) {
    json row = json::array();
    for (std::size_t z = 0; z < mac.output_size(); ++z) row.push_back(mac.transition(r, z));
    rows.push_back(std::move(row));
  }
  doc["probabilities"] = std::move(rows);

  if (!meta.name.empty() || !meta.notes.empty() || meta.seed) {
    json md = json::object();
    if (!meta.name.empty()) md["name"] = meta.name;
    if (!meta.notes.empty()) md["notes"] = meta.notes;
    if (meta.seed) md["seed"] = *meta.seed;
    doc["metadata"] = std::move(md);
  }
  return doc.dump(2) + "\n";
}

void save_channel(const Mac& mac, const std::string& path, const ChannelMetadata& meta) {
  std::ofstream out(path);
  if (!out) throw ChannelFileError(path + ": cannot open file for writing");
  out << channel_to_json(mac, meta);
}

}  // namespace macpolar
