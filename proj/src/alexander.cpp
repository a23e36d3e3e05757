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

#include "growthlab/alexander.hpp"

#include <map>

#include "growthlab/errors.hpp"
#include "growthlab/exact_linalg.hpp"

namespace growthlab {

RewrittenRelator rs_rewrite(const Word& relator) {
  RewrittenRelator out;
  std::string other;
  std::int64_t height = 0;
  for (const auto& letter : relator.letters()) {
    if (letter.name == "t") {
      height += letter.exponent;
      continue;
    }
    if (other.empty()) {
      other = letter.name;
    } else if (letter.name != other) {
      throw Error(ErrorCode::kPrecondition,
                  "relator uses more than one generator besides t: '" + relator.to_string() + "'");
    }
    const int unit = letter.exponent > 0 ? 1 : -1;
    for (std::int64_t k = 0; k < (letter.exponent > 0 ? letter.exponent : -letter.exponent); ++k) {
      out.terms.push_back({height, unit});
    }
  }
  if (height != 0) {
    throw Error(ErrorCode::kPrecondition,
                "relator has nonzero t-exponent sum: '" + relator.to_string() + "'");
  }
  return out;
}

LaurentPoly abelianize(const RewrittenRelator& r) {
  std::map<std::int64_t, Integer> m;
  for (const auto& term : r.terms) m[term.subscript] += term.exponent;
  return LaurentPoly(std::move(m));
}

LaurentPoly alexander_polynomial(const std::vector<Word>& relators) {
  std::vector<LaurentPoly> polys;
  for (const auto& r : relators) polys.push_back(abelianize(rs_rewrite(r)));
  return laurent_gcd(polys);
}

bool monic_both_ends(const LaurentPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::kPrecondition, "zero polynomial has no extreme coefficients");
  return abs(p.lowest_coeff()) == 1 && abs(p.highest_coeff()) == 1;
}

const char* kernel_verdict_name(KernelVerdict v) {
  return v == KernelVerdict::kNotFG ? "NotFG" : "PossiblyFG";
}

KernelVerdict fg_kernel_obstruction(const LaurentPoly& p) {
  return monic_both_ends(p) ? KernelVerdict::kPossiblyFG : KernelVerdict::kNotFG;
}

StickingVerdict sticking_contradiction(const Integer& alpha, const Integer& beta,
                                       const LaurentPoly& delta) {
  if (alpha == 0 || beta == 0) {
    throw Error(ErrorCode::kPrecondition, "degenerate sticking relation (alpha or beta is zero)");
  }
  if (gcd(alpha, beta) != 1) {
    throw Error(ErrorCode::kPrecondition, "sticking relation coefficients must be coprime");
  }
  if (abs(beta) == 1) return {false, "beta-unit"};
  LaurentPoly relation = LaurentPoly({{0, alpha}, {1, beta}});
  if (delta.is_zero() || !laurent_divides(delta, relation)) return {true, "delta-does-not-divide"};
  if (!monic_both_ends(delta)) return {true, "delta-not-monic"};
  return {true, "delta-unit"};
}

std::vector<std::int64_t> betti_chain(const std::vector<LaurentPoly>& relations, std::size_t depth) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i <= depth; ++i) {
    std::vector<std::vector<Integer>> rows;
    for (const auto& r : relations) {
      if (r.is_zero()) continue;
      LaurentPoly p = r.shifted(-r.min_exponent());
      for (std::int64_t s = 0; p.max_exponent() + s <= static_cast<std::int64_t>(i); ++s) {
        std::vector<Integer> row(i + 1);
        for (const auto& [e, c] : p.coeffs()) row[e + s] = c;
        rows.push_back(std::move(row));
      }
    }
    IntegerMatrix m(rows.size(), i + 1);
    for (std::size_t a = 0; a < rows.size(); ++a) {
      for (std::size_t b = 0; b <= i; ++b) m(a, b) = rows[a][b];
    }
    out.push_back(static_cast<std::int64_t>(i + 1) - static_cast<std::int64_t>(exact_rank(m)));
  }
  return out;
}

}  // namespace growthlab
