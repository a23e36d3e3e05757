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

#include <numeric>

#include "growthlab/errors.hpp"
#include "growthlab/stallings.hpp"

namespace growthlab {

namespace {

bool rank_at_most_one(const IntegerVector& a, const IntegerVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    for (Eigen::Index j = i + 1; j < a.size(); ++j) {
      if (a(i) * b(j) != a(j) * b(i)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_cyclic_pair(const GroupEngine& engine, const Element& u, const Element& v) {
  switch (engine.family()) {
    case Family::kFree:
      // Commuting elements of a free group share a cyclic root.
      return engine.commute(u, v);
    case Family::kAbelian:
      return rank_at_most_one(u.as<AbelianElement>().coords, v.as<AbelianElement>().coords);
    case Family::kKlein: {
      const auto& a = u.as<KleinElement>();
      const auto& b = v.as<KleinElement>();
      // The centralizer of an element with odd t-exponent is infinite cyclic.
      if (mpz_odd_p(a.t_exp.get_mpz_t()) || mpz_odd_p(b.t_exp.get_mpz_t())) {
        return engine.commute(u, v);
      }
      return a.a_exp * b.t_exp == a.t_exp * b.a_exp;
    }
    case Family::kBS1: {
      // Z[1/m] is locally cyclic.
      if (u.as<BS1Element>().shift == 0 && v.as<BS1Element>().shift == 0) return true;
      throw Error(ErrorCode::kUnsupportedFamily,
                  "cyclicity of BS(1,m) pairs with nonzero t-exponent is not decided");
    }
    case Family::kSemidirect: {
      const auto& sd = static_cast<const SemidirectEngine&>(engine);
      const std::int64_t p = SemidirectEngine::shift(u);
      const std::int64_t q = SemidirectEngine::shift(v);
      if (p == 0 && q == 0) {
        return is_cyclic_pair(sd.base(), SemidirectEngine::base_component(u),
                              SemidirectEngine::base_component(v));
      }
      if (!engine.commute(u, v)) return false;
      // u^(q/g) v^(-p/g) generates the shift-zero part of <u,v>; bases are torsion-free.
      const std::int64_t g = std::gcd(p, q);
      const Element z = engine.multiply(engine.power(u, Integer(static_cast<long>(q / g))),
                                        engine.power(v, Integer(static_cast<long>(-p / g))));
      return engine.is_identity(z);
    }
  }
  return false;
}

}  // namespace growthlab
