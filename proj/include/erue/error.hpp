// Copyright 2026 The erue Authors
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

#ifndef ERUE_ERROR_HPP
#define ERUE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace erue {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ill-typed term construction or use.
struct TypeError : Error {
  using Error::Error;
};

// Violated precondition of an inference rule.
struct RuleError : Error {
  using Error::Error;
};

// Surface-syntax or inference failure while reading input files.
struct ParseError : Error {
  ParseError(const std::string& msg, const std::string& source, int line, int col)
      : Error(source.empty() ? std::to_string(line) + ":" + std::to_string(col) + ": " + msg
                             : source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                   ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

}  // namespace erue

#endif  // ERUE_ERROR_HPP
