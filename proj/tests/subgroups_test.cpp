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

#include <gtest/gtest.h>

#include "growthlab/engine.hpp"
#include "growthlab/errors.hpp"
#include "growthlab/stallings.hpp"
#include "support.hpp"

namespace growthlab {
namespace {

using testing::engine_from;
using testing::random_word;

class StallingsTest : public ::testing::Test {
 protected:
  EnginePtr free2 = engine_from(R"({"family":"free","rank":2})");
  EnginePtr free3 = engine_from(R"({"family":"free","rank":3})");

  StallingsGraph fold_words(const EnginePtr& e, std::vector<std::string> words) {
    std::vector<Element> elems;
    for (const auto& w : words) elems.push_back(e->evaluate(parse_word(w)));
    return StallingsGraph::fold(elems);
  }
  bool contains(const StallingsGraph& g, const EnginePtr& e, const std::string& w) {
    return g.contains(e->evaluate(parse_word(w)));
  }
};

TEST_F(StallingsTest, FoldExamples) {
  StallingsGraph powers = fold_words(free2, {"x^2", "x^3"});
  EXPECT_EQ(powers.rank(), 1u);
  EXPECT_EQ(powers.vertex_count(), 1u);
  EXPECT_EQ(fold_words(free2, {"x", "y x y^-1"}).rank(), 2u);
  StallingsGraph empty = fold_words(free2, {});
  EXPECT_EQ(empty.vertex_count(), 1u);
  EXPECT_EQ(empty.rank(), 0u);
  EXPECT_EQ(fold_words(free2, {"x y x^-1", "x y^2 x^-1"}).rank(), 1u);
  EXPECT_EQ(fold_words(free2, {"x y x^-1 y^-1", "y x y^-1 x^-1"}).rank(), 1u);
}

TEST_F(StallingsTest, Membership) {
  StallingsGraph powers = fold_words(free2, {"x^2", "x^3"});
  EXPECT_TRUE(contains(powers, free2, "x"));
  StallingsGraph gx = fold_words(free2, {"x"});
  EXPECT_FALSE(contains(gx, free2, "y"));
  EXPECT_TRUE(contains(gx, free2, ""));
  EXPECT_TRUE(contains(fold_words(free2, {}), free2, ""));
  StallingsGraph h = fold_words(free2, {"x^2", "y^2", "x y"});
  EXPECT_TRUE(contains(h, free2, "y x"));
  EXPECT_FALSE(contains(h, free2, "x"));
}

TEST_F(StallingsTest, FoldedInvariants) {
  std::mt19937_64 rng(testing::test_seed());
  std::uniform_int_distribution<int> count(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Element> gens;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) gens.push_back(free3->evaluate(random_word(rng, {"x", "y", "z"}, 7)));
    StallingsGraph g = StallingsGraph::fold(gens);
    ASSERT_TRUE(g.is_folded());
    EXPECT_LE(g.rank(), gens.size());
    for (const auto& a : gens) EXPECT_TRUE(g.contains(a));
    // Products of generators stay inside.
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (int p = 0; p < 100; ++p) {
      Element prod = free3->identity();
      for (int k = 0; k < 4; ++k) {
        Element factor = gens[pick(rng)];
        if (rng() % 2) factor = free3->invert(factor);
        prod = free3->multiply(prod, factor);
      }
      EXPECT_TRUE(g.contains(prod));
    }
    // Refolding from a basis read off the graph reproduces it.
    std::vector<std::vector<int>> basis = g.basis();
    EXPECT_EQ(basis.size(), g.rank());
    StallingsGraph again = StallingsGraph::fold(basis);
    EXPECT_EQ(again.canonical_form(), g.canonical_form());
  }
}

TEST(CyclicPairTest, Examples) {
  auto free2 = engine_from(R"({"family":"free","rank":2})");
  auto ev = [&](const char* w) { return free2->evaluate(parse_word(w)); };
  EXPECT_TRUE(is_cyclic_pair(*free2, ev("x^2"), ev("x^3")));
  EXPECT_FALSE(is_cyclic_pair(*free2, ev("x"), ev("y")));
  EXPECT_TRUE(is_cyclic_pair(*free2, ev(""), ev("y")));

  auto g = engine_from(testing::kFibSpec);
  EXPECT_TRUE(is_cyclic_pair(*g, g->evaluate(parse_word("t")), g->evaluate(parse_word("t^2"))));
  EXPECT_FALSE(is_cyclic_pair(*g, g->evaluate(parse_word("t")), g->evaluate(parse_word("x"))));

  auto ab = engine_from(R"({"family":"abelian","rank":3})");
  EXPECT_TRUE(is_cyclic_pair(*ab, ab->evaluate(parse_word("x^2 z^-2")), ab->evaluate(parse_word("x^-3 z^3"))));
  EXPECT_FALSE(is_cyclic_pair(*ab, ab->evaluate(parse_word("x")), ab->evaluate(parse_word("y"))));

  auto klein = engine_from(R"({"family":"klein"})");
  EXPECT_TRUE(is_cyclic_pair(*klein, KleinEngine::make(1, 2), KleinEngine::make(2, 4)));
  EXPECT_FALSE(is_cyclic_pair(*klein, KleinEngine::make(1, 0), KleinEngine::make(0, 2)));
  EXPECT_FALSE(is_cyclic_pair(*klein, KleinEngine::make(1, 0), KleinEngine::make(0, 1)));
  EXPECT_TRUE(is_cyclic_pair(*klein, KleinEngine::make(3, 1), KleinEngine::make(0, 2)));

  auto bs = engine_from(R"({"family":"bs1","m":2})");
  EXPECT_TRUE(is_cyclic_pair(*bs, bs->evaluate(parse_word("a")), bs->evaluate(parse_word("t^-1 a t"))));
  EXPECT_THROW(is_cyclic_pair(*bs, bs->evaluate(parse_word("t")), bs->evaluate(parse_word("a"))), Error);
}

TEST(CyclicPairTest, SymmetricAndPowers) {
  std::mt19937_64 rng(testing::test_seed() + 7);
  std::uniform_int_distribution<int> power(-5, 5);
  for (const auto& f : testing::all_families()) {
    const auto& e = *f.engine;
    for (int trial = 0; trial < 100; ++trial) {
      Element u = e.evaluate(random_word(rng, e.generator_names(), 5));
      Element v = e.evaluate(random_word(rng, e.generator_names(), 5));
      bool uv = false;
      try {
        uv = is_cyclic_pair(e, u, v);
      } catch (const Error&) {
        EXPECT_THROW(is_cyclic_pair(e, v, u), Error) << f.label;
        continue;
      }
      EXPECT_EQ(uv, is_cyclic_pair(e, v, u)) << f.label;
      try {
        EXPECT_TRUE(is_cyclic_pair(e, u, e.power(u, power(rng)))) << f.label;
      } catch (const Error& err) {
        EXPECT_EQ(err.code(), ErrorCode::kUnsupportedFamily);
      }
    }
  }
}

}  // namespace
}  // namespace growthlab
