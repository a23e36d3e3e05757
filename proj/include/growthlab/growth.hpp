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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "growthlab/element.hpp"
#include "growthlab/engine.hpp"

namespace growthlab {

struct GrowthOptions {
  /// Cap on the number of visited group elements.
  std::uint64_t budget = 50'000'000;
  unsigned threads = 1;
};

/// Cumulative ball sizes gamma(0..radius) for the word metric of
/// gens together with their inverses.
struct GrowthTable {
  std::vector<Element> generators;
  std::size_t radius = 0;
  std::vector<std::uint64_t> counts;
  std::string engine_id;
  /// False when the visited-state budget stopped the enumeration; `counts`
  /// then holds only the completed radii.
  bool complete = true;
  std::size_t identity_generators = 0;
  std::size_t duplicate_generators = 0;
};

GrowthTable ball_sizes(const GroupEngine& engine, const std::vector<Element>& gens,
                       std::size_t radius, const GrowthOptions& options = {});

/// For each target, whether it lies in the ball of the given radius.
std::vector<bool> ball_contains(const GroupEngine& engine, const std::vector<Element>& gens,
                                std::size_t radius, const std::vector<Element>& targets,
                                const GrowthOptions& options = {});

/// gamma(n)^(1/n) for n = 1..radius. By submultiplicativity each term bounds
/// the exponential growth rate of the generating set from above.
std::vector<double> upper_estimates(const GrowthTable& table);

/// Returns a description of the first violated table invariant (gamma(0) = 1,
/// monotone, submultiplicative), or nullopt.
std::optional<std::string> check_growth_table(const GrowthTable& table);

/// omega(G, X) >= omega(G, Y)^(1/L) when every element of Y has X-length <= L.
double rescale_lower_bound(double omega_y, unsigned max_length);

/// A subgroup of index i satisfies omega(H) <= omega(G)^(2i-1), so
/// omega_H^(1/(2i-1)) bounds omega(G) from below.
double finite_index_lower_bound(double omega_h, unsigned index);

}  // namespace growthlab
