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

#include "erue/types.hpp"

#include "erue/error.hpp"

namespace erue {

struct Type::Node {
  enum class K { I, O, Arrow } k;
  // Present only for arrows. Stored as Type to reuse value semantics.
  std::shared_ptr<const Node> dom, cod;
};

namespace {

const std::shared_ptr<const Type::Node>& i_node() {
  static const auto n = std::make_shared<const Type::Node>(Type::Node{Type::Node::K::I, {}, {}});
  return n;
}

const std::shared_ptr<const Type::Node>& o_node() {
  static const auto n = std::make_shared<const Type::Node>(Type::Node{Type::Node::K::O, {}, {}});
  return n;
}

bool node_equal(const Type::Node* a, const Type::Node* b) {
  if (a == b) return true;
  if (a->k != b->k) return false;
  if (a->k != Type::Node::K::Arrow) return true;
  return node_equal(a->dom.get(), b->dom.get()) && node_equal(a->cod.get(), b->cod.get());
}

std::string node_show(const Type::Node* n) {
  switch (n->k) {
    case Type::Node::K::I:
      return "i";
    case Type::Node::K::O:
      return "o";
    case Type::Node::K::Arrow: {
      std::string dom = node_show(n->dom.get());
      if (n->dom->k == Type::Node::K::Arrow) dom = "(" + dom + ")";
      return dom + ">" + node_show(n->cod.get());
    }
  }
  return "?";
}

}  // namespace

Type Type::i() { return Type(i_node()); }
Type Type::o() { return Type(o_node()); }

Type Type::arrow(Type domain, Type codomain) {
  return Type(std::make_shared<const Node>(
      Node{Node::K::Arrow, std::move(domain.n_), std::move(codomain.n_)}));
}

bool Type::is_arrow() const { return n_->k == Node::K::Arrow; }
bool Type::is_i() const { return n_->k == Node::K::I; }
bool Type::is_o() const { return n_->k == Node::K::O; }

Type Type::domain() const {
  if (!is_arrow()) throw TypeError("domain() on base type " + show());
  return Type(n_->dom);
}

Type Type::codomain() const {
  if (!is_arrow()) throw TypeError("codomain() on base type " + show());
  return Type(n_->cod);
}

std::vector<Type> Type::arguments() const {
  std::vector<Type> out;
  const Node* cur = n_.get();
  std::shared_ptr<const Node> hold = n_;
  while (cur->k == Node::K::Arrow) {
    out.push_back(Type(cur->dom));
    hold = cur->cod;
    cur = hold.get();
  }
  return out;
}

Type Type::result() const {
  std::shared_ptr<const Node> cur = n_;
  while (cur->k == Node::K::Arrow) cur = cur->cod;
  return Type(cur);
}

bool Type::operator==(const Type& other) const { return node_equal(n_.get(), other.n_.get()); }

std::string Type::show() const { return node_show(n_.get()); }

}  // namespace erue
