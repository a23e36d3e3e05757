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

#include "growthlab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include "growthlab/errors.hpp"

namespace growthlab {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t exponent) {
  std::vector<Integer> v(exponent + 1);
  v[exponent] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t IntPoly::low_order() const {
  std::size_t i = 0;
  while (i < coeffs_.size() && coeffs_[i] == 0) ++i;
  return i;
}

const Integer& IntPoly::trailing_nonzero() const { return coeffs_[low_order()]; }

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
  std::vector<Integer> v = coeffs_;
  for (auto& c : v) c = -c;
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly operator*(const Integer& c, const IntPoly& p) {
  std::vector<Integer> v = p.coeffs_;
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

std::complex<long double> IntPoly::eval(std::complex<long double> z) const {
  std::complex<long double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + static_cast<long double>(it->get_d());
  }
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Integer> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "t";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) g = gcd(g, c);
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Integer> v = p.coeffs();
  for (auto& c : v) c = c / g;
  return IntPoly(std::move(v));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kPrecondition, "pseudo-remainder by zero polynomial");
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  const Integer lb = b.leading();
  int dr = static_cast<int>(r.size()) - 1;
  int steps = std::max(0, a.degree() - db + 1);
  while (dr >= db && dr >= 0) {
    Integer lr = r[dr];
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) r[dr - db + j] -= lr * b.coeffs()[j];
    --steps;
    while (dr >= 0 && r[dr] == 0) --dr;
    r.resize(dr + 1);
  }
  // Keep the classical normalization lc(b)^(deg a - deg b + 1).
  for (; steps > 0; --steps) {
    for (auto& c : r) c *= lb;
  }
  return IntPoly(std::move(r));
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kPrecondition, "division by zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> r = a.coeffs();
  std::vector<Integer> q(a.degree() - b.degree() + 1);
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    if (!divides(b.leading(), r[i])) return std::nullopt;
    Integer f = r[i] / b.leading();
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  for (const auto& c : r) {
    if (c != 0) return std::nullopt;
  }
  return IntPoly(std::move(q));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return content(b) * primitive_part(b);
  if (b.is_zero()) return content(a) * primitive_part(a);
  Integer g = gcd(content(a), content(b));
  IntPoly u = primitive_part(a);
  IntPoly v = primitive_part(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPoly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = primitive_part(r);
  }
  return g * primitive_part(u);
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 0) return IntPoly::constant(1);
  IntPoly g = gcd(p, p.derivative());
  auto q = divide_exact(primitive_part(p), primitive_part(g));
  if (!q) throw Error(ErrorCode::kPrecondition, "squarefree decomposition failed");
  return primitive_part(*q);
}

unsigned long euler_phi(unsigned long k) {
  unsigned long result = k;
  for (unsigned long p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    while (k % p == 0) k /= p;
    result -= result / p;
  }
  if (k > 1) result -= result / k;
  return result;
}

IntPoly cyclotomic(unsigned k) {
  if (k == 0) throw Error(ErrorCode::kPrecondition, "cyclotomic index must be >= 1");
  static std::mutex mutex;
  static std::map<unsigned, IntPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  // t^k - 1 = prod over d | k of Phi_d.
  IntPoly result = IntPoly::monomial(1, k) - IntPoly::constant(1);
  for (unsigned d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    result = *divide_exact(result, cyclotomic(d));
  }
  std::lock_guard lock(mutex);
  cache.emplace(k, result);
  return result;
}

IntPoly parse_poly(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw Error(ErrorCode::kSyntax, "empty polynomial");
  std::map<std::size_t, Integer> terms;
  std::size_t i = 0;
  auto fail = [&] { throw Error(ErrorCode::kSyntax, "malformed polynomial '" + std::string(text) + "'"); };
  while (i < s.size()) {
    int sgn = 1;
    if (s[i] == '+' || s[i] == '-') {
      sgn = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail();
    }
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
    Integer coeff = digits.empty() ? Integer(1) : Integer(digits);
    std::size_t exponent = 0;
    if (i < s.size() && s[i] == '*') {
      if (digits.empty()) fail();
      ++i;
      if (i >= s.size() || s[i] != 't') fail();
    }
    if (i < s.size() && s[i] == 't') {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string e;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e.push_back(s[i++]);
        if (e.empty() || e.size() > 6) fail();
        exponent = std::stoul(e);
      }
    } else if (digits.empty()) {
      fail();
    }
    terms[exponent] += sgn * coeff;
  }
  std::vector<Integer> v(terms.rbegin()->first + 1);
  for (auto& [e, c] : terms) v[e] = c;
  return IntPoly(std::move(v));
}

}  // namespace growthlab
