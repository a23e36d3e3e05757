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
#include <string>
#include <vector>

#include "growthlab/laurent.hpp"
#include "growthlab/word.hpp"

namespace growthlab {

/// A word in the kernel generators x_i = t^i x t^-i, one (i, +-1) per unit
/// exponent of x.
struct RewrittenRelator {
  struct Term {
    std::int64_t subscript;
    int exponent;
    friend bool operator==(const Term&, const Term&) = default;
  };
  std::vector<Term> terms;
  friend bool operator==(const RewrittenRelator&, const RewrittenRelator&) = default;
};

/// Reidemeister-Schreier rewrite of a relator over {t, x} with zero t-exponent
/// sum. Any single generator name other than "t" plays the role of x.
RewrittenRelator rs_rewrite(const Word& relator);

/// Sum over i of (exponent sum of x_i) * t^i.
LaurentPoly abelianize(const RewrittenRelator& r);

/// Gcd of the abelianized rewrites of the relators.
LaurentPoly alexander_polynomial(const std::vector<Word>& relators);

/// Both extreme coefficients are +-1. Throws kPrecondition on zero.
bool monic_both_ends(const LaurentPoly& p);

enum class KernelVerdict { kPossiblyFG, kNotFG };
const char* kernel_verdict_name(KernelVerdict v);

/// A non-monic Alexander polynomial rules out a finitely generated kernel.
KernelVerdict fg_kernel_obstruction(const LaurentPoly& p);

struct StickingVerdict {
  bool contradiction = false;
  /// "beta-unit" (no contradiction, the chain stops growing immediately),
  /// otherwise "delta-does-not-divide", "delta-not-monic" or "delta-unit".
  std::string label;
};

/// Resolves a relation beta*x_1 + alpha*x_0 = 0 in the kernel module against
/// the Alexander polynomial delta. Requires gcd(alpha, beta) = 1 and both
/// nonzero.
StickingVerdict sticking_contradiction(const Integer& alpha, const Integer& beta,
                                       const LaurentPoly& delta);

/// Upper bounds b_0..b_depth on the first Betti numbers of the subgroups
/// generated by x_0..x_i, given module relations among the x_i.
std::vector<std::int64_t> betti_chain(const std::vector<LaurentPoly>& relations, std::size_t depth);

}  // namespace growthlab
