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

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "growthlab/integer.hpp"

namespace growthlab {

/// Dense polynomial in Z[t], coefficients stored low to high with no
/// trailing zeros. The zero polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t exponent);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const Integer& leading() const { return coeffs_.back(); }
  const Integer& trailing_nonzero() const;
  std::size_t low_order() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;
  friend IntPoly operator*(const Integer& c, const IntPoly& p);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::complex<long double> eval(std::complex<long double> z) const;
  IntPoly derivative() const;
  /// t^k * p
  IntPoly shifted(std::size_t k) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Gcd of the coefficients (nonnegative); zero for the zero polynomial.
Integer content(const IntPoly& p);
/// p / content(p) with positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);
/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
/// Quotient q with a = q*b when it exists in Z[t].
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);
/// Gcd in Z[t], normalized to a positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
/// Product of the distinct irreducible factors of p, up to sign and content.
IntPoly squarefree_part(const IntPoly& p);

/// The k-th cyclotomic polynomial, k >= 1.
IntPoly cyclotomic(unsigned k);
/// Euler's totient.
unsigned long euler_phi(unsigned long k);

/// Parses text such as "t^2 - 3t + 1" or "1 - 3*t + t^2".
IntPoly parse_poly(std::string_view text);

}  // namespace growthlab
