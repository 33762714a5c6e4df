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

#ifndef MACPOLAR_CHANNEL_FILE_HPP
#define MACPOLAR_CHANNEL_FILE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "macpolar/channel.hpp"

namespace macpolar {

/// Channel files are JSON:
///   {
///     "groups": [[2],[2]],            // one factor-order list per user
///     "output_size": 3,
///     "output_labels": ["0","1","2"], // optional
///     "probabilities": [["1","0","0"], ...],
///     "metadata": {"name": "...", "seed": 1, "notes": "..."}  // optional
///   }
/// Rows follow the lexicographic order over (x_1, ..., x_m). Entries are
/// numbers or exact-rational strings "p/q"; all-rational rows must sum to 1
/// exactly, decimal rows within 1e-9.

struct ChannelMetadata {
  std::string name;
  std::string notes;
  std::optional<std::uint64_t> seed;
};

struct LoadedChannel {
  Mac mac;
  ChannelMetadata meta;
};

struct ChannelFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LoadedChannel load_channel(const std::string& path);
LoadedChannel parse_channel(const std::string& json_text, const std::string& origin = "<string>");

/// Probabilities are emitted as JSON numbers in shortest round-trip form,
/// so loading reproduces every double bit-exactly.
std::string channel_to_json(const Mac& mac, const ChannelMetadata& meta = {});
void save_channel(const Mac& mac, const std::string& path, const ChannelMetadata& meta = {});

}  // namespace macpolar

#endif  // MACPOLAR_CHANNEL_FILE_HPP
