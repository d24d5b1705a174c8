//
// Copyright 2026 The augmitl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#pragma once

#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace augmitl::cli {

using json = nlohmann::json;

// Bad flags, bad config values or missing inputs. Exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Kind { kString, kPath, kUInt, kDouble, kDoubleList, kStringList };

// The settings one subcommand accepts. Each key can come from the JSON config
// file (snake_case key) or from a flag (--kebab-case); flags win.
class SettingsBuilder {
 public:
  explicit SettingsBuilder(CLI::App* app) : app_(app) {}

  // A null fallback means "unset unless given".
  void option(const std::string& key, Kind kind, json fallback,
              const std::string& help);
  // Positional argument that may also come from the config file.
  void positional(const std::string& key, Kind kind, const std::string& help);

  // Merges defaults, the config file and flags. Throws UsageError on unknown
  // config keys, wrong types and missing required values.
  json resolve(const json& file) const;

 private:
  struct Entry {
    std::string key;
    Kind kind;
    json fallback;
    bool required = false;
    std::string raw;
    CLI::Option* opt = nullptr;
  };
  CLI::App* app_;
  std::deque<Entry> entries_;  // CLI11 binds to `raw`; addresses must be stable
};

// Typed reads from a resolved config. Absent or null keys throw UsageError.
std::string get_string(const json& cfg, const std::string& key);
std::size_t get_uint(const json& cfg, const std::string& key);
double get_double(const json& cfg, const std::string& key);
std::vector<double> get_doubles(const json& cfg, const std::string& key);
std::vector<std::string> get_strings(const json& cfg, const std::string& key);
bool has(const json& cfg, const std::string& key);

// Throws UsageError unless lo <= value <= hi.
double in_range(const json& cfg, const std::string& key, double lo, double hi);

}  // namespace augmitl::cli
