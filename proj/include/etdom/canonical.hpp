// Copyright 2026 The etdom Authors
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

#ifndef ETDOM_CANONICAL_HPP
#define ETDOM_CANONICAL_HPP

#include <string>
#include <string_view>

#include "etdom/graph.hpp"

namespace etdom {

/// Isomorphism-invariant code of a free tree: the AHU parenthesis string of
/// the tree hung from its center (the smaller of the two strings for a
/// bicentral tree). Two trees are isomorphic iff their codes are equal.
/// Intended for small and medium trees; the code has length 2n but building
/// it costs O(n * height).
std::string canonical_code(const Tree& t);

/// Rebuilds the tree described by a parenthesis code, numbering vertices in
/// preorder (vertex 0 is the outermost pair).
Tree tree_from_code(std::string_view code);

/// The canonical relabeling of `t`: tree_from_code(canonical_code(t)).
Tree canonical_tree(const Tree& t);

/// graph6 of canonical_tree(t); equal for isomorphic trees.
std::string canonical_graph6(const Tree& t);

}  // namespace etdom

#endif  // ETDOM_CANONICAL_HPP
