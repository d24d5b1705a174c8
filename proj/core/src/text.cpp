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

#include "augmitl/text.hpp"

namespace augmitl::text {

namespace {

bool is_continuation(char c) {
  return (static_cast<unsigned char>(c) & 0xC0) == 0x80;
}

bool is_terminal_punct(char c) { return c == '.' || c == '!' || c == '?'; }

}  // namespace

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<ByteSpan> whitespace_token_spans(std::string_view s) {
  std::vector<ByteSpan> spans;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    if (i == s.size()) break;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    spans.push_back({i, j});
    i = j;
  }
  return spans;
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  for (const ByteSpan& span : whitespace_token_spans(s)) {
    out.push_back(s.substr(span.begin, span.end - span.begin));
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view s) {
  std::vector<std::string> out;
  for (std::string_view tok : split_whitespace(s)) out.push_back(to_lower(tok));
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  for (std::string_view tok : split_whitespace(s)) {
    if (!out.empty()) out.push_back(' ');
    out.append(tok);
  }
  return out;
}

std::string normalize(std::string_view s) {
  std::string out = collapse_whitespace(to_lower(s));
  // "ok ." -> "ok", so strip punctuation and spaces together.
  while (!out.empty() && (is_terminal_punct(out.back()) || out.back() == ' ')) {
    out.pop_back();
  }
  return out;
}

std::size_t codepoint_count(std::string_view s) {
  std::size_t n = 0;
  for (char c : s) {
    if (!is_continuation(c)) ++n;
  }
  return n;
}

std::optional<std::size_t> codepoint_to_byte(std::string_view s,
                                             std::size_t cp) {
  std::size_t seen = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (is_continuation(s[i])) continue;
    if (seen == cp) return i;
    ++seen;
  }
  if (seen == cp) return s.size();
  return std::nullopt;
}

std::size_t byte_to_codepoint(std::string_view s, std::size_t byte) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < byte && i < s.size(); ++i) {
    if (!is_continuation(s[i])) ++n;
  }
  return n;
}

std::optional<std::string> codepoint_substr(std::string_view s,
                                            std::size_t start,
                                            std::size_t end) {
  if (start > end) return std::nullopt;
  auto b = codepoint_to_byte(s, start);
  auto e = codepoint_to_byte(s, end);
  if (!b || !e) return std::nullopt;
  return std::string(s.substr(*b, *e - *b));
}

}  // namespace augmitl::text
