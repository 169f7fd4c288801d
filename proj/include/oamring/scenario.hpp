/*
  Copyright 2026 The oamring Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "oamring/protocol.hpp"
#include "oamring/sensing.hpp"

namespace oamring {

/// Flat `key = value` configuration. Every physical quantity carries its unit
/// in the key name. Unknown keys and malformed values raise Configuration.
class ScenarioConfig {
 public:
  static ScenarioConfig parse(const std::string& text);
  static ScenarioConfig load(const std::string& path);

  /// Known keys with their defaults; required keys map to an empty string.
  static const std::map<std::string, std::string>& schema();

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;
  /// Explicit value or the schema default.
  std::string get(const std::string& key) const;

  double number(const std::string& key) const;
  int integer(const std::string& key) const;
  std::vector<double> numbers(const std::string& key) const;
  std::vector<std::string> words(const std::string& key) const;

  /// Throws Configuration naming the first missing required key.
  void require_complete() const;

  /// Effective configuration (defaults applied), one `key = value` per line
  /// in key order.
  std::string canonical() const;
  std::uint64_t hash() const;

  TrapSpec trap() const;
  Corrections corrections() const;
  ProtocolSpec protocol() const;

 private:
  std::map<std::string, std::string> values_;
};

std::uint64_t fnv1a64(const std::string& text) noexcept;

}  // namespace oamring
