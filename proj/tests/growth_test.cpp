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

#include <cmath>

#include "growthlab/errors.hpp"
#include "growthlab/growth.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace growthlab {
namespace {

using testing::engine_from;

std::vector<Element> eval_all(const GroupEngine& e, const std::vector<std::string>& words) {
  std::vector<Element> out;
  for (const auto& w : words) out.push_back(e.evaluate(parse_word(w)));
  return out;
}

GrowthTable table_for(const EnginePtr& e, const std::vector<std::string>& gens, std::size_t radius,
                      unsigned threads = 1) {
  GrowthOptions options;
  options.threads = threads;
  GrowthTable t = ball_sizes(*e, eval_all(*e, gens), radius, options);
  EXPECT_EQ(check_growth_table(t), std::nullopt);
  return t;
}

TEST(BallSizesTest, FreeGroup) {
  auto free2 = engine_from(R"({"family":"free","rank":2})");
  EXPECT_EQ(table_for(free2, {"x", "y"}, 3).counts, (std::vector<std::uint64_t>{1, 5, 17, 53}));
  std::vector<std::uint64_t> brute = oracles::free_brute_force(2, 6);
  for (std::size_t n = 0; n < brute.size(); ++n) {
    EXPECT_EQ(brute[n], 2 * static_cast<std::uint64_t>(std::pow(3, n)) - 1);
  }
  EXPECT_EQ(table_for(free2, {"x", "y"}, 6).counts, brute);
  auto free3 = engine_from(R"({"family":"free","rank":3})");
  EXPECT_EQ(table_for(free3, {"x", "y", "z"}, 4).counts, oracles::free_brute_force(3, 4));
}

TEST(BallSizesTest, AbelianGroup) {
  auto ab = engine_from(R"({"family":"abelian","rank":2})");
  EXPECT_EQ(table_for(ab, {"e1", "e2"}, 3).counts, (std::vector<std::uint64_t>{1, 5, 13, 25}));
  // Lattice points with |i| + |j| <= n.
  GrowthTable t = table_for(ab, {"x", "y"}, 12);
  for (long n = 0; n <= 12; ++n) {
    std::uint64_t count = 0;
    for (long i = -n; i <= n; ++i) {
      for (long j = -n; j <= n; ++j) count += (std::labs(i) + std::labs(j) <= n);
    }
    EXPECT_EQ(t.counts[n], count);
  }
}

TEST(BallSizesTest, KleinMatchesBruteForce) {
  auto klein = engine_from(R"({"family":"klein"})");
  EXPECT_EQ(table_for(klein, {"a", "t"}, 12).counts, oracles::klein_brute_force(12));
}

TEST(BallSizesTest, TrivialGenerators) {
  for (const auto& f : testing::all_families()) {
    GrowthTable t = ball_sizes(*f.engine, {f.engine->identity()}, 5);
    EXPECT_EQ(t.counts, std::vector<std::uint64_t>(6, 1)) << f.label;
    EXPECT_EQ(t.identity_generators, 1u);
    for (double v : upper_estimates(t)) EXPECT_EQ(v, 1.0);
  }
}

TEST(BallSizesTest, ReportsDuplicatesAndRejectsEmpty) {
  auto free2 = engine_from(R"({"family":"free","rank":2})");
  GrowthTable t = table_for(free2, {"x", "x", "y", ""}, 3);
  EXPECT_EQ(t.counts, (std::vector<std::uint64_t>{1, 5, 17, 53}));
  EXPECT_EQ(t.duplicate_generators, 1u);
  EXPECT_EQ(t.identity_generators, 1u);
  EXPECT_THROW(ball_sizes(*free2, {}, 3), Error);
}

TEST(BallSizesTest, BudgetStopsEarly) {
  auto free2 = engine_from(R"({"family":"free","rank":2})");
  GrowthOptions options;
  options.budget = 100;
  GrowthTable t = ball_sizes(*free2, eval_all(*free2, {"x", "y"}), 6, options);
  EXPECT_FALSE(t.complete);
  EXPECT_EQ(t.counts, (std::vector<std::uint64_t>{1, 5, 17, 53}));
}

TEST(BallSizesTest, DeterministicAcrossThreads) {
  auto g = engine_from(testing::kFibSpec);
  GrowthTable one = table_for(g, {"t", "x"}, 7, 1);
  for (unsigned threads : {2u, 3u, 8u}) EXPECT_EQ(table_for(g, {"t", "x"}, 7, threads).counts, one.counts);
}

TEST(BallSizesTest, Contains) {
  auto g = engine_from(testing::kFibSpec);
  auto in = ball_contains(*g, eval_all(*g, {"t", "x y"}), 3, eval_all(*g, {"x y t^2", "y", "t^4"}));
  EXPECT_EQ(in, (std::vector<bool>{true, true, false}));
}

TEST(EstimatesTest, Values) {
  auto free2 = engine_from(R"({"family":"free","rank":2})");
  std::vector<double> est = upper_estimates(table_for(free2, {"x", "y"}, 10));
  ASSERT_EQ(est.size(), 10u);
  EXPECT_NEAR(est[9], std::pow(2 * std::pow(3.0, 10) - 1, 0.1), 1e-12);
  EXPECT_GE(est[9], 3.0);
  EXPECT_LE(est[9], 3.25);

  auto klein = engine_from(R"({"family":"klein"})");
  std::vector<double> k = upper_estimates(table_for(klein, {"a", "t"}, 20));
  EXPECT_LE(k[19], 1.5);
  for (std::size_t n = 1; n < k.size(); ++n) EXPECT_LT(k[n], k[n - 1]);
}

TEST(EstimatesTest, BoundHelpers) {
  EXPECT_NEAR(rescale_lower_bound(3, 6), std::pow(3.0, 1.0 / 6), 1e-15);
  EXPECT_NEAR(rescale_lower_bound(3, 6), 1.2009, 1e-4);
  EXPECT_NEAR(rescale_lower_bound(2, 4), 1.1892, 1e-4);
  EXPECT_EQ(rescale_lower_bound(1.7, 1), 1.7);
  EXPECT_EQ(finite_index_lower_bound(1.3, 1), 1.3);
  EXPECT_NEAR(finite_index_lower_bound(std::pow(2.0, 0.25), 2), std::pow(2.0, 1.0 / 12), 1e-15);
  EXPECT_NEAR(finite_index_lower_bound(5.0, 3), std::pow(5.0, 0.2), 1e-15);
  EXPECT_THROW(rescale_lower_bound(2, 0), Error);
  EXPECT_THROW(finite_index_lower_bound(2, 0), Error);
}

TEST(GrowthPropertyTest, QuotientNeverExceedsGroup) {
  auto free2 = engine_from(R"({"family":"free","rank":2})");
  auto ab = engine_from(R"({"family":"abelian","rank":2})");
  std::mt19937_64 rng(testing::test_seed());
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::string> gens;
    for (int i = 0; i < 2; ++i) {
      Word w = testing::random_word(rng, {"x", "y"}, 3);
      if (w.empty()) w = Word::letter("x");
      gens.push_back(w.to_string());
    }
    GrowthTable g = table_for(free2, gens, 8);
    GrowthTable q = table_for(ab, gens, 8);
    for (std::size_t n = 0; n <= 8; ++n) EXPECT_LE(q.counts[n], g.counts[n]);
  }
}

TEST(GrowthPropertyTest, SubsetMonotone) {
  for (const auto& f : testing::all_families()) {
    const auto& names = f.engine->generator_names();
    GrowthTable all = table_for(f.engine, names, f.engine->family() == Family::kFree && names.size() > 2 ? 6 : 8);
    std::vector<std::string> subset(names.begin(), names.end() - 1);
    GrowthTable part = table_for(f.engine, subset, all.radius);
    for (std::size_t n = 0; n <= all.radius; ++n) EXPECT_LE(part.counts[n], all.counts[n]) << f.label;
  }
}

TEST(GrowthPropertyTest, InvariantCheckerCatchesViolations) {
  GrowthTable t;
  t.counts = {1, 5, 4};
  EXPECT_TRUE(check_growth_table(t).has_value());
  t.counts = {1, 3, 10};
  EXPECT_TRUE(check_growth_table(t).has_value());
  t.counts = {2, 3};
  EXPECT_TRUE(check_growth_table(t).has_value());
}

}  // namespace
}  // namespace growthlab
