// Copyright 2026 The growthlab Authors
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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "growthlab/element.hpp"
#include "growthlab/engine.hpp"

namespace growthlab {

/// Folded, base-pointed labeled graph of a finitely generated subgroup of a
/// free group. Labels are signed 1-based generator indices; an edge
/// u --g--> v is stored as out(u)[g] = v and out(v)[-g] = u.
class StallingsGraph {
 public:
  /// Folds the wedge of petals spelled by `generators` (freely reduced first).
  static StallingsGraph fold(std::span<const std::vector<int>> generators);
  static StallingsGraph fold(std::span<const Element> free_elements);

  /// Traces the reduced word from the base vertex.
  bool contains(std::span<const int> word) const;
  bool contains(const Element& free_element) const;

  std::size_t vertex_count() const { return out_.size(); }
  std::size_t edge_count() const;
  /// |E| - |V| + 1
  std::size_t rank() const { return edge_count() + 1 - vertex_count(); }

  bool is_folded() const;

  /// A free basis read off a breadth-first spanning tree.
  std::vector<std::vector<int>> basis() const;

  /// Relabeling-invariant description; equal iff the graphs are isomorphic
  /// as base-pointed labeled graphs.
  std::string canonical_form() const;

  const std::map<int, int>& out(std::size_t vertex) const { return out_[vertex]; }

 private:
  std::vector<std::map<int, int>> out_;  // vertex 0 is the base
};

/// True iff <u, v> is trivial or infinite cyclic. Families: free (commuting),
/// abelian (integer rank), Klein (index-2 Z^2 / cyclic centralizers),
/// semidirect (shift rule), BS(1,m) only for pairs inside Z[1/m].
/// Throws Error(kUnsupportedFamily) otherwise.
bool is_cyclic_pair(const GroupEngine& engine, const Element& u, const Element& v);

}  // namespace growthlab
