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

#include "settings.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <set>
#include <sstream>

namespace augmitl::cli {

namespace {

std::string flag_name(const std::string& key) {
  std::string out = key;
  for (char& c : out) {
    if (c == '_') c = '-';
  }
  return out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::size_t parse_uint(const std::string& key, const std::string& s) {
  std::size_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
    throw UsageError("--" + flag_name(key) + ": not a non-negative integer: " + s);
  }
  return v;
}

double parse_double(const std::string& key, const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw UsageError("--" + flag_name(key) + ": not a number: " + s);
  }
  return v;
}

json from_flag(const std::string& key, Kind kind, const std::string& raw) {
  switch (kind) {
    case Kind::kString:
    case Kind::kPath:
      return raw;
    case Kind::kUInt:
      return parse_uint(key, raw);
    case Kind::kDouble:
      return parse_double(key, raw);
    case Kind::kDoubleList: {
      json out = json::array();
      for (const auto& item : split_commas(raw)) out.push_back(parse_double(key, item));
      return out;
    }
    case Kind::kStringList: {
      json out = json::array();
      for (const auto& item : split_commas(raw)) out.push_back(item);
      return out;
    }
  }
  return nullptr;
}

bool type_ok(Kind kind, const json& v) {
  switch (kind) {
    case Kind::kString:
    case Kind::kPath:
      return v.is_string();
    case Kind::kUInt:
      return v.is_number_unsigned();
    case Kind::kDouble:
      return v.is_number();
    case Kind::kDoubleList:
      return v.is_array() &&
             std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_number(); });
    case Kind::kStringList:
      return v.is_array() &&
             std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_string(); });
  }
  return false;
}

const json& lookup(const json& cfg, const std::string& key) {
  auto it = cfg.find(key);
  if (it == cfg.end() || it->is_null()) throw UsageError("missing setting: " + key);
  return *it;
}

}  // namespace

void SettingsBuilder::option(const std::string& key, Kind kind, json fallback,
                             const std::string& help) {
  Entry& e = entries_.emplace_back();
  e.key = key;
  e.kind = kind;
  e.fallback = std::move(fallback);
  e.opt = app_->add_option("--" + flag_name(key), e.raw, help);
}

void SettingsBuilder::positional(const std::string& key, Kind kind,
                                 const std::string& help) {
  Entry& e = entries_.emplace_back();
  e.key = key;
  e.kind = kind;
  e.required = true;
  e.opt = app_->add_option(key, e.raw, help);
}

json SettingsBuilder::resolve(const json& file) const {
  if (!file.is_object()) throw UsageError("config file must hold a JSON object");
  std::set<std::string> known;
  for (const Entry& e : entries_) known.insert(e.key);
  for (const auto& [k, v] : file.items()) {
    if (!known.count(k)) {
      throw UsageError("unknown config key for '" + app_->get_name() + "': " + k);
    }
  }

  json out = json::object();
  for (const Entry& e : entries_) {
    json v = e.fallback;
    if (auto it = file.find(e.key); it != file.end()) {
      if (!it->is_null() && !type_ok(e.kind, *it)) {
        throw UsageError("config key " + e.key + " has the wrong type");
      }
      v = *it;
    }
    if (e.opt->count() > 0) v = from_flag(e.key, e.kind, e.raw);
    if (v.is_null()) {
      if (e.required) throw UsageError("missing required argument: " + e.key);
      continue;
    }
    if (e.kind == Kind::kPath && !v.get<std::string>().empty() &&
        !std::filesystem::exists(v.get<std::string>())) {
      throw UsageError(e.key + ": no such file: " + v.get<std::string>());
    }
    out[e.key] = std::move(v);
  }
  return out;
}

bool has(const json& cfg, const std::string& key) {
  auto it = cfg.find(key);
  return it != cfg.end() && !it->is_null();
}

std::string get_string(const json& cfg, const std::string& key) {
  return lookup(cfg, key).get<std::string>();
}

std::size_t get_uint(const json& cfg, const std::string& key) {
  return lookup(cfg, key).get<std::size_t>();
}

double get_double(const json& cfg, const std::string& key) {
  return lookup(cfg, key).get<double>();
}

std::vector<double> get_doubles(const json& cfg, const std::string& key) {
  return lookup(cfg, key).get<std::vector<double>>();
}

std::vector<std::string> get_strings(const json& cfg, const std::string& key) {
  return lookup(cfg, key).get<std::vector<std::string>>();
}

double in_range(const json& cfg, const std::string& key, double lo, double hi) {
  const double v = get_double(cfg, key);
  if (!(v >= lo && v <= hi)) {
    throw UsageError(key + " must be in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "], got " + std::to_string(v));
  }
  return v;
}

}  // namespace augmitl::cli
