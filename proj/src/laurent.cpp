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

#include "growthlab/laurent.hpp"

#include <sstream>

#include "growthlab/errors.hpp"

namespace growthlab {

LaurentPoly::LaurentPoly(std::map<std::int64_t, Integer> coeffs) : coeffs_(std::move(coeffs)) {
  std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
}

LaurentPoly LaurentPoly::from_poly(const IntPoly& p, std::int64_t shift) {
  std::map<std::int64_t, Integer> m;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i] != 0) m.emplace(static_cast<std::int64_t>(i) + shift, p.coeffs()[i]);
  }
  return LaurentPoly(std::move(m));
}

LaurentPoly LaurentPoly::monomial(const Integer& c, std::int64_t exponent) {
  return LaurentPoly({{exponent, c}});
}

Integer LaurentPoly::coeff(std::int64_t e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

bool LaurentPoly::is_unit() const {
  return coeffs_.size() == 1 && abs(coeffs_.begin()->second) == 1;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  std::map<std::int64_t, Integer> m;
  for (const auto& [e, c] : coeffs_) m.emplace(e + k, c);
  return LaurentPoly(std::move(m));
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return *this;
  LaurentPoly out = shifted(-min_exponent());
  if (out.highest_coeff() < 0) out = -out;
  return out;
}

IntPoly LaurentPoly::to_poly() const {
  if (is_zero()) return {};
  if (min_exponent() < 0) throw Error(ErrorCode::kPrecondition, "negative exponent in polynomial conversion");
  std::vector<Integer> v(max_exponent() + 1);
  for (const auto& [e, c] : coeffs_) v[e] = c;
  return IntPoly(std::move(v));
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<std::int64_t, Integer> m = a.coeffs_;
  for (const auto& [e, c] : b.coeffs_) m[e] += c;
  return LaurentPoly(std::move(m));
}

LaurentPoly LaurentPoly::operator-() const {
  std::map<std::int64_t, Integer> m = coeffs_;
  for (auto& kv : m) kv.second = -kv.second;
  return LaurentPoly(std::move(m));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<std::int64_t, Integer> m;
  for (const auto& [e1, c1] : a.coeffs_) {
    for (const auto& [e2, c2] : b.coeffs_) m[e1 + e2] += c1 * c2;
  }
  return LaurentPoly(std::move(m));
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "t";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

bool laurent_divides(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b.is_zero();
  if (b.is_zero()) return true;
  IntPoly pa = a.shifted(-a.min_exponent()).to_poly();
  IntPoly pb = b.shifted(-b.min_exponent()).to_poly();
  return divide_exact(pb, pa).has_value();
}

LaurentPoly laurent_gcd(const std::vector<LaurentPoly>& ps) {
  IntPoly g;
  bool any = false;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    any = true;
    g = gcd(g, p.shifted(-p.min_exponent()).to_poly());
  }
  if (!any) throw Error(ErrorCode::kPrecondition, "gcd of zero polynomials is undefined");
  LaurentPoly result = LaurentPoly::from_poly(g).normalized();
  for (const auto& p : ps) {
    if (!laurent_divides(result, p)) {
      throw Error(ErrorCode::kPrecondition, "gcd verification failed for " + p.to_string());
    }
  }
  return result;
}

}  // namespace growthlab
