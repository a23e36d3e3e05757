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

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "growthlab/engine.hpp"
#include "growthlab/group_spec.hpp"
#include "growthlab/word.hpp"

namespace growthlab::testing {

inline std::uint64_t test_seed() {
  if (const char* s = std::getenv("GROWTHLAB_SEED")) return std::strtoull(s, nullptr, 10);
  return 20261015;
}

inline constexpr const char* kFibSpec =
    R"({"family":"semidirect","base":{"family":"free","rank":2},)"
    R"("automorphism":{"forward":{"x":"y","y":"x y"},"backward":{"x":"y x^-1","y":"x"}}})";

inline constexpr const char* kRotationSpec =
    R"({"family":"semidirect","base":{"family":"abelian","rank":2},)"
    R"("automorphism":{"forward":{"x":"y","y":"x^-1"},"backward":{"x":"y^-1","y":"x"}}})";

inline constexpr const char* kCatMapSpec =
    R"({"family":"semidirect","base":{"family":"abelian","rank":2},)"
    R"("automorphism":{"forward":{"x":"x^2 y","y":"x y"},"backward":{"x":"x y^-1","y":"x^-1 y^2"}}})";

inline EnginePtr engine_from(const std::string& json) { return make_engine(parse_group_spec(json)); }

struct NamedEngine {
  std::string label;
  EnginePtr engine;
  /// Defining relations written out by hand for each family.
  std::vector<std::string> relators;
};

inline std::vector<NamedEngine> all_families() {
  return {
      {"free2", engine_from(R"({"family":"free","rank":2})"), {}},
      {"free4", engine_from(R"({"family":"free","rank":4})"), {}},
      {"abelian3", engine_from(R"({"family":"abelian","rank":3})"),
       {"x y x^-1 y^-1", "x z x^-1 z^-1", "y z y^-1 z^-1"}},
      {"klein", engine_from(R"({"family":"klein"})"), {"t a t^-1 a"}},
      {"bs1_2", engine_from(R"({"family":"bs1","m":2})"), {"t a t^-1 a^-2"}},
      {"bs1_m3", engine_from(R"({"family":"bs1","m":-3})"), {"t a t^-1 a^3"}},
      {"fib", engine_from(kFibSpec), {"t x t^-1 y^-1", "t y t^-1 y^-1 x^-1"}},
      {"catmap", engine_from(kCatMapSpec),
       {"x y x^-1 y^-1", "t x t^-1 y^-1 x^-2", "t y t^-1 y^-1 x^-1"}},
      {"klein_twist",
       engine_from(R"({"family":"semidirect","base":{"family":"klein"},)"
                   R"("automorphism":{"forward":{"a":"a","t":"a t"},"backward":{"a":"a","t":"a^-1 t"}}})"),
       {"t1 a t1^-1 a", "t a t^-1 a^-1", "t t1 t^-1 t1^-1 a^-1"}},
      {"bs1_flip",
       engine_from(R"({"family":"semidirect","base":{"family":"bs1","m":2},)"
                   R"("automorphism":{"forward":{"a":"a^-1","t":"t"},"backward":{"a":"a^-1","t":"t"}}})"),
       {"t1 a t1^-1 a^-2", "t a t^-1 a", "t t1 t^-1 t1^-1"}},
      {"nested",
       engine_from(std::string(R"({"family":"semidirect","base":)") + kFibSpec +
                   R"(,"automorphism":{"forward":{"x":"x","y":"y","t":"t"},"backward":{"x":"x","y":"y","t":"t"}}})"),
       {"t1 x t1^-1 y^-1", "t x t^-1 x^-1", "t t1 t^-1 t1^-1"}},
  };
}

/// Random word of length <= max_length over `names`, each letter with exponent +-1.
inline Word random_word(std::mt19937_64& rng, const std::vector<std::string>& names, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
  std::bernoulli_distribution coin(0.5);
  Word w;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) w.append(names[pick(rng)], coin(rng) ? 1 : -1);
  return w;
}

}  // namespace growthlab::testing
