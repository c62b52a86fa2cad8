// Copyright 2026 The strongclique Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace strongclique {

/// Precondition violated by the caller: bad label, wrong graph class,
/// malformed partition and so on.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text could not be decoded. `offset()` is the byte offset (graph6) or the
/// 1-based line number (edge lists, DIMACS), see `kind()`.
class ParseError : public InputError {
 public:
  enum class Kind { byte_offset, line };

  ParseError(const std::string& what, std::size_t where, Kind kind)
      : InputError(what + (kind == Kind::byte_offset ? " (at byte " : " (at line ") +
                   std::to_string(where) + ")"),
        where_(where),
        kind_(kind) {}

  std::size_t offset() const noexcept { return where_; }
  Kind kind() const noexcept { return kind_; }

 private:
  std::size_t where_;
  Kind kind_;
};

/// An exact oracle was asked to work beyond its configured size cap. Oracles
/// never truncate; callers must switch to a polynomial recognizer or raise
/// the cap.
class OracleScaleError : public std::runtime_error {
 public:
  OracleScaleError(const std::string& what, std::size_t size, std::size_t cap)
      : std::runtime_error(what + ": size " + std::to_string(size) + " exceeds oracle cap " +
                           std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

}  // namespace strongclique
