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

#include <string>
#include <utility>

#include "augmitl/classifier.hpp"
#include "json.hpp"

namespace augmitl::detail {

// Thin JSON-over-HTTP helper shared by the remote backends. Connection
// failures raise TransportError; non-200 replies or unparsable bodies raise
// ProtocolError.
class JsonHttpClient {
 public:
  JsonHttpClient(std::string base_url, HttpOptions opts);

  nlohmann::json post(const std::string& path, const nlohmann::json& body) const;
  nlohmann::json get(const std::string& path_with_query) const;

  const std::string& base_url() const { return base_url_; }

 private:
  std::string base_url_;
  HttpOptions opts_;
};

std::string url_encode(std::string_view s);

}  // namespace augmitl::detail
