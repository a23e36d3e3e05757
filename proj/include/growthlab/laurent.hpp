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
#include <map>
#include <string>
#include <vector>

#include "growthlab/integer.hpp"
#include "growthlab/polynomial.hpp"

namespace growthlab {

/// Element of Z[t, t^-1]; only nonzero coefficients are stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::map<std::int64_t, Integer> coeffs);
  /// t^shift * p
  static LaurentPoly from_poly(const IntPoly& p, std::int64_t shift = 0);
  static LaurentPoly monomial(const Integer& c, std::int64_t exponent);

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<std::int64_t, Integer>& coeffs() const { return coeffs_; }
  Integer coeff(std::int64_t e) const;
  std::int64_t min_exponent() const { return coeffs_.begin()->first; }
  std::int64_t max_exponent() const { return coeffs_.rbegin()->first; }
  /// max exponent - min exponent; the zero polynomial has degree -1.
  std::int64_t degree() const { return is_zero() ? -1 : max_exponent() - min_exponent(); }
  const Integer& lowest_coeff() const { return coeffs_.begin()->second; }
  const Integer& highest_coeff() const { return coeffs_.rbegin()->second; }
  bool is_unit() const;

  LaurentPoly shifted(std::int64_t k) const;
  /// Multiply by the unit +-t^k that makes the minimum exponent 0 and the
  /// top coefficient positive.
  LaurentPoly normalized() const;
  /// Requires min exponent >= 0.
  IntPoly to_poly() const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  std::map<std::int64_t, Integer> coeffs_;
};

/// True when a divides b in Z[t, t^-1].
bool laurent_divides(const LaurentPoly& a, const LaurentPoly& b);

/// Gcd up to units, normalized (minimum exponent 0, positive top coefficient).
/// Throws kPrecondition when every input is zero.
LaurentPoly laurent_gcd(const std::vector<LaurentPoly>& ps);

}  // namespace growthlab
