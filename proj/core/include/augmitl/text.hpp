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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Byte-level text helpers. Case folding is ASCII-only; bytes >= 0x80 pass
// through unchanged so UTF-8 sequences are never split.
namespace augmitl::text {

bool is_space(char c);

std::string to_lower(std::string_view s);

// Splits on runs of ASCII whitespace. Views alias `s`.
std::vector<std::string_view> split_whitespace(std::string_view s);

// Lowercased whitespace tokens; the tokenization used for statistics and
// classifier features.
std::vector<std::string> tokenize(std::string_view s);

std::string trim(std::string_view s);
std::string collapse_whitespace(std::string_view s);

// Lowercase, trim, collapse internal whitespace, strip trailing . ! ?
std::string normalize(std::string_view s);

// Byte range [begin, end) of a token inside its source string.
struct ByteSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

std::vector<ByteSpan> whitespace_token_spans(std::string_view s);

// Number of Unicode code points in a UTF-8 string.
std::size_t codepoint_count(std::string_view s);

// Byte offset of the code point with index `cp`; `cp == codepoint_count(s)`
// maps to s.size(). Returns nullopt past the end.
std::optional<std::size_t> codepoint_to_byte(std::string_view s,
                                             std::size_t cp);

// Code point index of byte offset `byte` (must sit on a boundary).
std::size_t byte_to_codepoint(std::string_view s, std::size_t byte);

// Substring by code point range [start, end); nullopt when out of bounds.
std::optional<std::string> codepoint_substr(std::string_view s,
                                            std::size_t start,
                                            std::size_t end);

}  // namespace augmitl::text
