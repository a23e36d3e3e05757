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

#include <algorithm>
#include <cstdlib>

#include "growthlab/errors.hpp"
#include "growthlab/spectra.hpp"
#include "growthlab/witness.hpp"

namespace growthlab {

namespace {

// Letter order x, x^-1, y, y^-1, ...
int letter_rank(int letter) { return 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0); }

bool rank_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](int x, int y) { return letter_rank(x) < letter_rank(y); });
}

// Cyclically reduced words that are the least rotation of their cyclic word.
void cyclic_representatives(std::size_t rank, std::size_t length, std::vector<int>& prefix,
                            std::vector<std::vector<int>>& out) {
  if (prefix.size() == length) {
    if (-prefix.front() == prefix.back()) return;
    for (std::size_t r = 1; r < length; ++r) {
      std::vector<int> rot(prefix.begin() + r, prefix.end());
      rot.insert(rot.end(), prefix.begin(), prefix.begin() + r);
      if (rank_less(rot, prefix)) return;
    }
    out.push_back(prefix);
    return;
  }
  for (std::size_t g = 1; g <= rank; ++g) {
    for (int letter : {static_cast<int>(g), -static_cast<int>(g)}) {
      if (!prefix.empty() && prefix.back() == -letter) continue;
      prefix.push_back(letter);
      cyclic_representatives(rank, length, prefix, out);
      prefix.pop_back();
    }
  }
}

std::optional<PeriodicConjugacyWitness> try_element(const SemidirectEngine& group, const Element& k,
                                                    std::int64_t max_period) {
  const GroupEngine& base = group.base();
  for (std::int64_t n = 1; n <= max_period; ++n) {
    const Element image = group.apply_automorphism_power(k, n);
    if (auto c = base.conjugacy_test(k, image)) {
      PeriodicConjugacyWitness w{k, n, *c};
      if (verify_periodic_conjugacy(group, w)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace

PccResult pcc_scan(const SemidirectEngine& group, std::int64_t max_period, std::size_t max_length) {
  if (max_period < 1 || max_length < 1) {
    throw Error(ErrorCode::kPrecondition, "max period and max length must be >= 1");
  }
  const GroupEngine& base = group.base();
  PccResult result;
  switch (base.family()) {
    case Family::kAbelian: {
      const IntegerMatrix m = *group.abelian_action();
      result.exact = true;
      std::vector<unsigned> orders = cyclotomic_orders(char_poly(m));
      if (orders.empty()) return result;
      const unsigned n = orders.front();
      auto v = fixed_vector_of_power(m, n);
      if (!v) throw Error(ErrorCode::kPrecondition, "cyclotomic factor without a fixed vector");
      PeriodicConjugacyWitness w{static_cast<const AbelianEngine&>(base).from_coords(*v), n, base.identity()};
      if (!verify_periodic_conjugacy(group, w)) {
        throw Error(ErrorCode::kPrecondition, "periodic conjugacy witness failed verification");
      }
      result.witness = w;
      return result;
    }
    case Family::kFree: {
      const std::size_t rank = base.generator_count();
      for (std::size_t len = 1; len <= max_length; ++len) {
        std::vector<std::vector<int>> words;
        std::vector<int> prefix;
        cyclic_representatives(rank, len, prefix, words);
        for (auto& w : words) {
          if (auto found = try_element(group, FreeEngine::from_letters(w), max_period)) {
            result.witness = found;
            return result;
          }
        }
      }
      return result;
    }
    case Family::kKlein: {
      const long bound = static_cast<long>(max_length);
      for (long total = 1; total <= bound; ++total) {
        for (long i = -total; i <= total; ++i) {
          const long rest = total - std::labs(i);
          for (long j : {-rest, rest}) {
            if (auto found = try_element(group, KleinEngine::make(Integer(i), Integer(j)), max_period)) {
              result.witness = found;
              return result;
            }
            if (rest == 0) break;
          }
        }
      }
      return result;
    }
    default:
      throw Error(ErrorCode::kUnsupportedFamily,
                  std::string("periodic conjugacy scan is not available for base ") + base.id());
  }
}

}  // namespace growthlab
