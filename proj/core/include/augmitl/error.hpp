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
#include <stdexcept>
#include <string>
#include <vector>

namespace augmitl {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input; `line()` is 1-based, 0 when not line-oriented.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what
                        : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that violates a data-model invariant.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// Argument outside its documented domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Inconsistent configuration, e.g. a MITL strategy without a model.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Remote backend unreachable or timed out. Carries the ids of the
// utterances whose batch failed, when known.
class TransportError : public Error {
 public:
  TransportError(const std::string& what, std::vector<std::string> ids = {})
      : Error(what), ids_(std::move(ids)) {}
  const std::vector<std::string>& ids() const { return ids_; }

 private:
  std::vector<std::string> ids_;
};

// Remote backend answered, but not per the wire protocol.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// A surface form maps to several entity types with equal scores.
class AmbiguityError : public Error {
 public:
  using Error::Error;
};

}  // namespace augmitl
