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

#include "http_client.hpp"

#include <cctype>

#include "augmitl/error.hpp"
#include "httplib.h"

namespace augmitl::detail {

namespace {

httplib::Client make_client(const std::string& base_url,
                            const HttpOptions& opts) {
  httplib::Client cli(base_url);
  cli.set_connection_timeout(opts.connect_timeout);
  cli.set_read_timeout(opts.read_timeout);
  cli.set_write_timeout(opts.read_timeout);
  return cli;
}

nlohmann::json decode(const httplib::Result& res, const std::string& base_url,
                      const std::string& path) {
  if (!res) {
    throw TransportError(base_url + path + ": " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw ProtocolError(base_url + path + ": HTTP " +
                        std::to_string(res->status) + " " + res->body);
  }
  try {
    return nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::parse_error& e) {
    throw ProtocolError(base_url + path + ": response is not JSON: " + e.what());
  }
}

}  // namespace

JsonHttpClient::JsonHttpClient(std::string base_url, HttpOptions opts)
    : base_url_(std::move(base_url)), opts_(opts) {
  while (!base_url_.empty() && base_url_.back() == '/') base_url_.pop_back();
}

nlohmann::json JsonHttpClient::post(const std::string& path,
                                    const nlohmann::json& body) const {
  // One client per call: httplib::Client is not meant to be shared across
  // threads, and the backends may be called concurrently.
  httplib::Client cli = make_client(base_url_, opts_);
  if (!cli.is_valid()) throw TransportError("invalid backend URL: " + base_url_);
  return decode(cli.Post(path, body.dump(), "application/json"), base_url_, path);
}

nlohmann::json JsonHttpClient::get(const std::string& path_with_query) const {
  httplib::Client cli = make_client(base_url_, opts_);
  if (!cli.is_valid()) throw TransportError("invalid backend URL: " + base_url_);
  return decode(cli.Get(path_with_query), base_url_, path_with_query);
}

std::string url_encode(std::string_view s) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0xF]);
    }
  }
  return out;
}

}  // namespace augmitl::detail
