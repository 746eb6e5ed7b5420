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

#ifndef ERUE_TYPES_HPP
#define ERUE_TYPES_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace erue {

// Simple types over the base types `i` (individuals) and `o` (propositions).
// Values are immutable and share structure; equality is structural.
class Type {
 public:
  static Type i();
  static Type o();
  static Type arrow(Type domain, Type codomain);

  bool is_arrow() const;
  bool is_base() const { return !is_arrow(); }
  bool is_i() const;
  bool is_o() const;

  // Arrow accessors; only valid on arrow types.
  Type domain() const;
  Type codomain() const;

  // Flattened view of t1 > t2 > ... > base.
  std::vector<Type> arguments() const;
  Type result() const;
  std::size_t arity() const { return arguments().size(); }

  bool operator==(const Type& other) const;
  bool operator!=(const Type& other) const { return !(*this == other); }

  // Surface syntax: "i", "o", "i>i", "(i>i)>o".
  std::string show() const;

  struct Node;  // opaque; defined in types.cpp

 private:
  explicit Type(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

}  // namespace erue

#endif  // ERUE_TYPES_HPP
