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

#include "growthlab/stallings.hpp"

#include <deque>
#include <numeric>
#include <utility>

namespace growthlab {

namespace {

// Incremental folding with union-find: every edge is stored at both ends,
// so absorbing a vertex rewrites all references to it.
class Folder {
 public:
  Folder() { add_vertex(); }

  std::size_t add_vertex() {
    out_.emplace_back();
    parent_.push_back(parent_.size());
    return out_.size() - 1;
  }

  void add_edge(std::size_t u, int label, std::size_t v) {
    insert(find(u), label, find(v));
    drain();
  }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  // Renumbers live vertices breadth-first from the base.
  std::vector<std::map<int, int>> finish() {
    std::vector<long> index(out_.size(), -1);
    std::vector<std::size_t> order{find(0)};
    index[order[0]] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (const auto& [label, target] : out_[order[i]]) {
        if (index[target] < 0) {
          index[target] = static_cast<long>(order.size());
          order.push_back(target);
        }
      }
    }
    std::vector<std::map<int, int>> result(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (const auto& [label, target] : out_[order[i]]) {
        result[i][label] = static_cast<int>(index[target]);
      }
    }
    return result;
  }

 private:
  void insert(std::size_t u, int label, std::size_t v) {
    auto& from = out_[u];
    if (auto it = from.find(label); it != from.end()) {
      if (static_cast<std::size_t>(it->second) != v) pending_.emplace_back(it->second, v);
      return;
    }
    auto& to = out_[v];
    if (auto it = to.find(-label); it != to.end()) {
      if (static_cast<std::size_t>(it->second) != u) pending_.emplace_back(it->second, u);
      return;
    }
    out_[u][label] = static_cast<int>(v);
    out_[v][-label] = static_cast<int>(u);
  }

  void merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b == find(0)) std::swap(a, b);  // keep the base as a representative
    parent_[b] = a;
    std::map<int, int> moved;
    moved.swap(out_[b]);
    for (const auto& [label, target] : moved) {
      const auto t = static_cast<std::size_t>(target);
      if (t != b) {
        auto& back = out_[t];
        if (auto it = back.find(-label); it != back.end() && static_cast<std::size_t>(it->second) == b) {
          back.erase(it);
        }
      }
    }
    for (const auto& [label, target] : moved) {
      const auto t = static_cast<std::size_t>(target);
      insert(a, label, t == b ? a : t);
    }
  }

  void drain() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.front();
      pending_.pop_front();
      merge(a, b);
    }
  }

  std::vector<std::map<int, int>> out_;
  std::vector<std::size_t> parent_;
  std::deque<std::pair<std::size_t, std::size_t>> pending_;
};

}  // namespace

StallingsGraph StallingsGraph::fold(std::span<const std::vector<int>> generators) {
  Folder folder;
  for (const auto& raw : generators) {
    const auto word = free_words::reduce(raw);
    if (word.empty()) continue;
    std::size_t current = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
      const std::size_t next = (i + 1 == word.size()) ? 0 : folder.add_vertex();
      folder.add_edge(current, word[i], next);
      current = next;
    }
  }
  StallingsGraph graph;
  graph.out_ = folder.finish();
  return graph;
}

StallingsGraph StallingsGraph::fold(std::span<const Element> free_elements) {
  std::vector<std::vector<int>> words;
  for (const auto& e : free_elements) words.push_back(e.as<FreeElement>().letters);
  return fold(words);
}

bool StallingsGraph::contains(std::span<const int> word) const {
  std::size_t v = 0;
  for (int label : word) {
    auto it = out_[v].find(label);
    if (it == out_[v].end()) return false;
    v = static_cast<std::size_t>(it->second);
  }
  return v == 0;
}

bool StallingsGraph::contains(const Element& free_element) const {
  return contains(free_element.as<FreeElement>().letters);
}

std::size_t StallingsGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& m : out_) {
    for (const auto& [label, target] : m) total += label > 0 ? 1 : 0;
  }
  return total;
}

bool StallingsGraph::is_folded() const {
  // Map keys are unique per vertex, so the remaining check is that the two
  // stored halves of every edge agree.
  for (std::size_t u = 0; u < out_.size(); ++u) {
    for (const auto& [label, target] : out_[u]) {
      auto it = out_[static_cast<std::size_t>(target)].find(-label);
      if (it == out_[static_cast<std::size_t>(target)].end() ||
          static_cast<std::size_t>(it->second) != u) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<int>> StallingsGraph::basis() const {
  std::vector<std::vector<int>> path(out_.size());
  std::vector<bool> seen(out_.size(), false);
  std::vector<std::pair<std::size_t, int>> tree_edge(out_.size(), {0, 0});
  std::vector<std::size_t> order{0};
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t u = order[i];
    for (const auto& [label, target] : out_[u]) {
      const auto t = static_cast<std::size_t>(target);
      if (seen[t]) continue;
      seen[t] = true;
      path[t] = path[u];
      path[t].push_back(label);
      tree_edge[t] = {u, label};
      order.push_back(t);
    }
  }
  std::vector<std::vector<int>> result;
  for (std::size_t u = 0; u < out_.size(); ++u) {
    for (const auto& [label, target] : out_[u]) {
      if (label < 0) continue;
      const auto t = static_cast<std::size_t>(target);
      const bool is_tree = (tree_edge[t].first == u && tree_edge[t].second == label && t != 0) ||
                           (tree_edge[u].first == t && tree_edge[u].second == -label && u != 0);
      if (is_tree) continue;
      std::vector<int> g = path[u];
      g.push_back(label);
      auto back = free_words::inverse(path[t]);
      g.insert(g.end(), back.begin(), back.end());
      result.push_back(free_words::reduce(std::move(g)));
    }
  }
  return result;
}

std::string StallingsGraph::canonical_form() const {
  // Vertices are already numbered breadth-first from the base in label order.
  std::string s = std::to_string(out_.size()) + ":";
  for (std::size_t u = 0; u < out_.size(); ++u) {
    for (const auto& [label, target] : out_[u]) {
      if (label > 0) {
        s += std::to_string(u) + "-" + std::to_string(label) + "-" + std::to_string(target) + ";";
      }
    }
  }
  return s;
}

}  // namespace growthlab
