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

#include "growthlab/growth.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "growthlab/errors.hpp"

namespace growthlab {

namespace {

// Visited set sharded by key hash so workers can insert-if-absent concurrently.
class ShardedKeySet {
 public:
  explicit ShardedKeySet(std::size_t shards) : shards_(shards) {}

  bool insert(const std::string& key) {
    auto& shard = shards_[std::hash<std::string>{}(key) % shards_.size()];
    std::lock_guard lock(shard.mutex);
    return shard.keys.insert(key).second;
  }

  bool contains(const std::string& key) {
    auto& shard = shards_[std::hash<std::string>{}(key) % shards_.size()];
    std::lock_guard lock(shard.mutex);
    return shard.keys.count(key) != 0;
  }

 private:
  struct Shard {
    std::mutex mutex;
    std::unordered_set<std::string> keys;
  };
  std::vector<Shard> shards_;
};

struct Keyed {
  std::string key;
  Element element;
};

struct BfsResult {
  std::vector<std::uint64_t> counts;
  bool complete = true;
};

// Breadth-first expansion over canonical keys. Each level is expanded by
// `threads` workers; the next frontier is sorted by key so the traversal
// order never depends on the schedule.
BfsResult breadth_first(const GroupEngine& engine, const std::vector<Element>& steps,
                        std::size_t radius, const GrowthOptions& options,
                        ShardedKeySet& visited) {
  BfsResult result;
  std::vector<Keyed> frontier;
  Element id = engine.identity();
  std::string id_key = engine.canonical_key(id);
  visited.insert(id_key);
  frontier.push_back({std::move(id_key), std::move(id)});
  std::uint64_t total = 1;
  result.counts.push_back(1);

  const unsigned threads = std::max(1u, options.threads);
  for (std::size_t level = 1; level <= radius; ++level) {
    std::vector<std::vector<Keyed>> found(threads);
    std::atomic<std::uint64_t> level_new{0};
    std::atomic<bool> over_budget{false};
    auto work = [&](unsigned worker) {
      for (std::size_t i = worker; i < frontier.size(); i += threads) {
        if (over_budget.load(std::memory_order_relaxed)) return;
        for (const auto& s : steps) {
          Element next = engine.multiply(frontier[i].element, s);
          std::string key = engine.canonical_key(next);
          if (visited.insert(key)) {
            found[worker].push_back({std::move(key), std::move(next)});
            if (total + level_new.fetch_add(1) + 1 > options.budget) {
              over_budget.store(true);
              return;
            }
          }
        }
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    if (over_budget.load()) {
      result.complete = false;
      return result;
    }
    std::vector<Keyed> next;
    for (auto& part : found) {
      std::move(part.begin(), part.end(), std::back_inserter(next));
    }
    std::sort(next.begin(), next.end(),
              [](const Keyed& a, const Keyed& b) { return a.key < b.key; });
    total += next.size();
    result.counts.push_back(total);
    frontier = std::move(next);
  }
  return result;
}

std::vector<Element> symmetrize(const GroupEngine& engine, const std::vector<Element>& gens) {
  std::vector<Element> steps;
  for (const auto& g : gens) {
    steps.push_back(g);
    steps.push_back(engine.invert(g));
  }
  return steps;
}

}  // namespace

GrowthTable ball_sizes(const GroupEngine& engine, const std::vector<Element>& gens,
                       std::size_t radius, const GrowthOptions& options) {
  if (gens.empty()) {
    throw Error(ErrorCode::kPrecondition, "ball_sizes needs at least one generator");
  }
  GrowthTable table;
  table.generators = gens;
  table.radius = radius;
  table.engine_id = engine.id();
  std::unordered_set<std::string> seen;
  for (const auto& g : gens) {
    if (engine.is_identity(g)) ++table.identity_generators;
    if (!seen.insert(engine.canonical_key(g)).second) ++table.duplicate_generators;
  }
  ShardedKeySet visited(std::max(1u, options.threads) * 8);
  BfsResult bfs = breadth_first(engine, symmetrize(engine, gens), radius, options, visited);
  table.counts = std::move(bfs.counts);
  table.complete = bfs.complete;
  return table;
}

std::vector<bool> ball_contains(const GroupEngine& engine, const std::vector<Element>& gens,
                                std::size_t radius, const std::vector<Element>& targets,
                                const GrowthOptions& options) {
  ShardedKeySet visited(std::max(1u, options.threads) * 8);
  BfsResult bfs = breadth_first(engine, symmetrize(engine, gens), radius, options, visited);
  if (!bfs.complete) {
    throw Error(ErrorCode::kBudgetExceeded, "ball enumeration exceeded the visited-state budget");
  }
  std::vector<bool> result;
  for (const auto& t : targets) result.push_back(visited.contains(engine.canonical_key(t)));
  return result;
}

std::vector<double> upper_estimates(const GrowthTable& table) {
  std::vector<double> out;
  for (std::size_t n = 1; n < table.counts.size(); ++n) {
    out.push_back(std::exp(std::log(static_cast<double>(table.counts[n])) / static_cast<double>(n)));
  }
  return out;
}

std::optional<std::string> check_growth_table(const GrowthTable& table) {
  const auto& c = table.counts;
  if (c.empty() || c[0] != 1) return "gamma(0) != 1";
  for (std::size_t n = 1; n < c.size(); ++n) {
    if (c[n] < c[n - 1]) return "gamma decreases at n = " + std::to_string(n);
  }
  for (std::size_t m = 0; m < c.size(); ++m) {
    for (std::size_t n = 0; m + n < c.size(); ++n) {
      // counts stay far below 2^32 at any feasible budget, so the product fits.
      if (c[m + n] > c[m] * c[n]) {
        return "submultiplicativity fails at m = " + std::to_string(m) + ", n = " + std::to_string(n);
      }
    }
  }
  return std::nullopt;
}

double rescale_lower_bound(double omega_y, unsigned max_length) {
  if (max_length == 0) throw Error(ErrorCode::kPrecondition, "length bound must be >= 1");
  return std::pow(omega_y, 1.0 / static_cast<double>(max_length));
}

double finite_index_lower_bound(double omega_h, unsigned index) {
  if (index == 0) throw Error(ErrorCode::kPrecondition, "index must be >= 1");
  return std::pow(omega_h, 1.0 / static_cast<double>(2 * index - 1));
}

}  // namespace growthlab
