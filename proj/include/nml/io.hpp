// Copyright 2026 The nml Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NML_IO_HPP
#define NML_IO_HPP

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nml/errors.hpp"
#include "nml/hamming_space.hpp"
#include "nml/rational.hpp"

namespace nml {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "nml/1";

/// A frame as stored on disk: the frame itself plus an optional symbol label map.
struct FrameDocument {
  LotteryFrame frame;
  std::optional<std::vector<std::string>> labels;
  /// Non-fatal findings, e.g. duplicate winners that were merged.
  std::vector<std::string> warnings;
};

namespace detail {

inline unsigned json_uint(const Json& doc, const char* key, unsigned min_value) {
  if (!doc.contains(key)) throw InvalidInput(std::string("frame: missing field \"") + key + "\"");
  const Json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < static_cast<long long>(min_value) ||
      v.get<long long>() > 1'000'000) {
    throw InvalidInput(std::string("frame: field \"") + key + "\" must be an integer >= " +
                       std::to_string(min_value));
  }
  return v.get<unsigned>();
}

}  // namespace detail

/// Parses and validates frame JSON; winners are sorted and deduplicated.
inline FrameDocument parse_frame(const std::string& text, std::uint64_t max_space = kDefaultMaxSpace) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("frame: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("frame: top level must be an object");
  const unsigned q = detail::json_uint(doc, "q", 2);
  const unsigned n = detail::json_uint(doc, "n", 1);
  space_size(q, n);

  std::optional<std::vector<std::string>> labels;
  if (doc.contains("labels")) {
    const Json& l = doc.at("labels");
    if (!l.is_array() || l.size() != q) throw InvalidInput("frame: labels must be an array of q strings");
    labels.emplace();
    for (const auto& s : l) {
      if (!s.is_string()) throw InvalidInput("frame: labels must be strings");
      labels->push_back(s.get<std::string>());
    }
    if (std::set<std::string>(labels->begin(), labels->end()).size() != labels->size()) {
      throw InvalidInput("frame: labels must be distinct");
    }
  }

  if (!doc.contains("winning") || !doc.at("winning").is_array()) {
    throw InvalidInput("frame: missing array field \"winning\"");
  }
  const Json& winning = doc.at("winning");
  if (winning.empty()) throw InvalidInput("winning set must be nonempty");

  std::vector<Outcome> outcomes;
  outcomes.reserve(winning.size());
  for (std::size_t k = 0; k < winning.size(); ++k) {
    const Json& w = winning[k];
    if (!w.is_array()) throw InvalidInput("frame: winning[" + std::to_string(k) + "] must be an array");
    if (w.size() != n) {
      throw InvalidInput("n mismatch: winning[" + std::to_string(k) + "] has length " + std::to_string(w.size()) +
                         ", expected " + std::to_string(n));
    }
    Digits digits(n);
    for (unsigned i = 0; i < n; ++i) {
      const Json& d = w[i];
      if (d.is_number_integer()) {
        const long long v = d.get<long long>();
        if (v < 0 || v >= static_cast<long long>(q)) {
          throw InvalidInput("digit out of range: winning[" + std::to_string(k) + "][" + std::to_string(i) +
                             "] = " + std::to_string(v) + " with q = " + std::to_string(q));
        }
        digits[i] = static_cast<Digit>(v);
      } else if (d.is_string() && labels) {
        const auto it = std::find(labels->begin(), labels->end(), d.get<std::string>());
        if (it == labels->end()) {
          throw InvalidInput("digit out of range: unknown label \"" + d.get<std::string>() + "\"");
        }
        digits[i] = static_cast<Digit>(it - labels->begin());
      } else {
        throw InvalidInput("frame: winning[" + std::to_string(k) + "][" + std::to_string(i) +
                           "] must be a digit" + (labels ? " or a label" : ""));
      }
    }
    outcomes.push_back(encode(digits, q));
  }

  std::vector<std::string> warnings;
  const std::size_t listed = outcomes.size();
  LotteryFrame frame(q, n, std::move(outcomes));
  if (frame.winning_count() != listed) {
    warnings.push_back("duplicate winning outcomes removed: " + std::to_string(listed) + " listed, " +
                       std::to_string(frame.winning_count()) + " distinct");
  }
  require_enumerable(q, n, max_space);
  return {std::move(frame), std::move(labels), std::move(warnings)};
}

inline FrameDocument read_frame_file(const std::string& path, std::uint64_t max_space = kDefaultMaxSpace) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open frame file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_frame(buf.str(), max_space);
}

inline Json frame_to_json(const LotteryFrame& frame,
                          const std::optional<std::vector<std::string>>& labels = std::nullopt) {
  Json doc;
  doc["q"] = frame.q();
  doc["n"] = frame.n();
  Json winning = Json::array();
  for (const auto& digits : frame.winning_digits()) winning.push_back(digits);
  doc["winning"] = std::move(winning);
  if (labels) doc["labels"] = *labels;
  return doc;
}

/// Canonical single-line serialization, newline terminated.
inline std::string write_frame(const LotteryFrame& frame,
                               const std::optional<std::vector<std::string>>& labels = std::nullopt) {
  return frame_to_json(frame, labels).dump() + "\n";
}

/// "num/den" string for JSON.
inline Json rational_json(const ExactRational& r) { return to_fraction_string(r); }

}  // namespace nml

#endif  // NML_IO_HPP
