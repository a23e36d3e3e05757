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

#include <optional>
#include <vector>

#include "growthlab/integer.hpp"
#include "growthlab/polynomial.hpp"

namespace growthlab {

/// det(tI - m), exact.
IntPoly char_poly(const IntegerMatrix& m);

/// Orders k (ascending, without repetition) such that Phi_k divides p.
std::vector<unsigned> cyclotomic_orders(const IntPoly& p);

/// True iff the monic p is a product of cyclotomic polynomials.
/// Throws kPrecondition for non-monic input.
bool all_roots_of_unity(const IntPoly& p);

struct RadiusBracket {
  double value = 0;
  double lower = 0;
  double upper = 0;
};

/// Largest root modulus of a monic p of degree >= 1. Roots of the
/// squarefree part are located with a companion-matrix eigensolver, polished
/// by Newton's method and enclosed in Newton inclusion disks; the bracket
/// holds the maximal modulus. Throws kNonConvergence (message carries the
/// bracket) when the bracket is wider than 2*tol.
RadiusBracket spectral_radius(const IntPoly& p, double tol = 1e-9);

/// 1 + 1/(30 d^2 ln(6d)), natural logarithm.
double mahler_gap_threshold(unsigned d);

enum class GrowthClass { kVirtuallyNilpotent, kExponential };

struct Classification {
  GrowthClass kind = GrowthClass::kVirtuallyNilpotent;
  IntPoly char_poly;
  RadiusBracket radius;
  double threshold = 0;
  /// Exponential case: the certified lower end of the radius bracket clears
  /// the gap threshold.
  bool gap_verified = false;
  /// VirtuallyNilpotent case: least r with M^r fixing a nonzero vector.
  unsigned periodic_order = 0;
};

/// Growth type of Z^n x|_m Z. Throws kPrecondition unless |det m| = 1.
Classification classify_abelian_by_cyclic(const IntegerMatrix& m);

/// Primitive integer v != 0 with m^r v = v, or nullopt.
std::optional<IntegerVector> fixed_vector_of_power(const IntegerMatrix& m, unsigned r);

}  // namespace growthlab
