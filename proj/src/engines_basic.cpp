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

#include "growthlab/engine.hpp"
#include "growthlab/errors.hpp"

namespace growthlab {

// ---------------------------------------------------------------------------
// Free groups

namespace free_words {

std::vector<int> reduce(std::vector<int> letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int l : letters) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

std::vector<int> inverse(std::span<const int> letters) {
  std::vector<int> out(letters.rbegin(), letters.rend());
  for (int& l : out) l = -l;
  return out;
}

CyclicDecomposition cyclic_decomposition(std::span<const int> reduced) {
  std::size_t lo = 0;
  std::size_t hi = reduced.size();
  CyclicDecomposition d;
  while (hi - lo >= 2 && reduced[lo] == -reduced[hi - 1]) {
    d.prefix.push_back(reduced[lo]);
    ++lo;
    --hi;
  }
  d.core.assign(reduced.begin() + static_cast<std::ptrdiff_t>(lo),
                reduced.begin() + static_cast<std::ptrdiff_t>(hi));
  return d;
}

std::size_t primitive_period(std::span<const int> core) {
  const std::size_t n = core.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = core[i] == core[i - d];
    if (periodic) return d;
  }
  return n;
}

}  // namespace free_words

namespace {

std::vector<int> concat_reduce(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t cancel = 0;
  while (cancel < a.size() && cancel < b.size() && a[a.size() - 1 - cancel] == -b[cancel]) {
    ++cancel;
  }
  std::vector<int> out;
  out.reserve(a.size() + b.size() - 2 * cancel);
  out.insert(out.end(), a.begin(), a.end() - static_cast<std::ptrdiff_t>(cancel));
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(cancel), b.end());
  return out;
}

}  // namespace

FreeEngine::FreeEngine(std::size_t rank) : GroupEngine(default_generator_names(rank)) {}

std::string FreeEngine::id() const { return "free(" + std::to_string(rank()) + ")"; }

Element FreeEngine::from_letters(std::vector<int> letters) {
  return Element{FreeElement{free_words::reduce(std::move(letters))}};
}

Element FreeEngine::identity() const { return Element{FreeElement{}}; }

Element FreeEngine::generator(std::size_t index) const {
  return Element{FreeElement{{static_cast<int>(index) + 1}}};
}

Element FreeEngine::multiply(const Element& a, const Element& b) const {
  return Element{FreeElement{concat_reduce(a.as<FreeElement>().letters, b.as<FreeElement>().letters)}};
}

Element FreeEngine::invert(const Element& a) const {
  return Element{FreeElement{free_words::inverse(a.as<FreeElement>().letters)}};
}

std::string FreeEngine::canonical_key(const Element& a) const {
  std::string key(1, '\x01');
  bool first = true;
  for (const auto& gp : normal_form_word(a)) {
    if (!first) key += ',';
    first = false;
    key += std::to_string(gp.generator + 1);
    key += ':';
    key += gp.exponent.get_str();
  }
  return key;
}

std::string FreeEngine::format(const Element& a) const {
  if (a.as<FreeElement>().letters.empty()) return "e";
  return to_word(a).to_string();
}

NormalFormWord FreeEngine::normal_form_word(const Element& a) const {
  NormalFormWord out;
  for (int l : a.as<FreeElement>().letters) {
    const std::size_t g = static_cast<std::size_t>(std::abs(l)) - 1;
    const long step = l > 0 ? 1 : -1;
    if (!out.empty() && out.back().generator == g) {
      out.back().exponent += step;
    } else {
      out.push_back({g, Integer(step)});
    }
  }
  return out;
}

std::optional<Element> FreeEngine::conjugacy_test(const Element& a, const Element& b) const {
  using free_words::cyclic_decomposition;
  const auto da = cyclic_decomposition(a.as<FreeElement>().letters);
  const auto db = cyclic_decomposition(b.as<FreeElement>().letters);
  if (da.core.size() != db.core.size()) return std::nullopt;
  const std::size_t n = da.core.size();
  for (std::size_t r = 0; r < std::max<std::size_t>(n, 1); ++r) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) match = da.core[(i + r) % n] == db.core[i];
    if (!match) continue;
    // b = q B q^-1 with B = u^-1 A u and u = A[0, r), so c = q u^-1 p^-1.
    std::vector<int> u(da.core.begin(), da.core.begin() + static_cast<std::ptrdiff_t>(r));
    std::vector<int> c = db.prefix;
    auto u_inv = free_words::inverse(u);
    c.insert(c.end(), u_inv.begin(), u_inv.end());
    auto p_inv = free_words::inverse(da.prefix);
    c.insert(c.end(), p_inv.begin(), p_inv.end());
    return from_letters(std::move(c));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Free abelian groups

AbelianEngine::AbelianEngine(std::size_t rank) : GroupEngine(default_generator_names(rank)) {}

std::string AbelianEngine::id() const { return "abelian(" + std::to_string(rank()) + ")"; }

std::optional<std::size_t> AbelianEngine::generator_index(std::string_view name) const {
  if (auto index = GroupEngine::generator_index(name)) return index;
  // e1..er aliases for the standard basis.
  if (name.size() >= 2 && name[0] == 'e') {
    std::size_t k = 0;
    for (char c : name.substr(1)) {
      if (c < '0' || c > '9') return std::nullopt;
      k = k * 10 + static_cast<std::size_t>(c - '0');
    }
    if (k >= 1 && k <= rank()) return k - 1;
  }
  return std::nullopt;
}

Element AbelianEngine::from_coords(IntegerVector coords) const {
  return Element{AbelianElement{std::move(coords)}};
}

Element AbelianEngine::identity() const {
  return from_coords(IntegerVector::Constant(static_cast<Eigen::Index>(rank()), Integer(0)));
}

Element AbelianEngine::generator(std::size_t index) const {
  IntegerVector v = IntegerVector::Constant(static_cast<Eigen::Index>(rank()), Integer(0));
  v(static_cast<Eigen::Index>(index)) = 1;
  return from_coords(std::move(v));
}

Element AbelianEngine::multiply(const Element& a, const Element& b) const {
  return from_coords(a.as<AbelianElement>().coords + b.as<AbelianElement>().coords);
}

Element AbelianEngine::invert(const Element& a) const {
  return from_coords(-a.as<AbelianElement>().coords);
}

Element AbelianEngine::power(const Element& a, const Integer& exponent) const {
  return from_coords(a.as<AbelianElement>().coords * exponent);
}

std::string AbelianEngine::canonical_key(const Element& a) const {
  std::string key(1, '\x02');
  const auto& v = a.as<AbelianElement>().coords;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) key += ',';
    key += v(i).get_str();
  }
  return key;
}

std::string AbelianEngine::format(const Element& a) const {
  return "(" + canonical_key(a).substr(1) + ")";
}

NormalFormWord AbelianEngine::normal_form_word(const Element& a) const {
  NormalFormWord out;
  const auto& v = a.as<AbelianElement>().coords;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (sgn(v(i)) != 0) out.push_back({static_cast<std::size_t>(i), v(i)});
  }
  return out;
}

std::vector<Word> AbelianEngine::relators() const {
  std::vector<Word> out;
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = i + 1; j < rank(); ++j) {
      out.push_back(growthlab::commutator(Word::letter(names_[i]), Word::letter(names_[j])));
    }
  }
  return out;
}

std::optional<Element> AbelianEngine::conjugacy_test(const Element& a, const Element& b) const {
  if (equal(a, b)) return identity();
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Klein bottle group <a, t | t a t^-1 = a^-1>

namespace {

bool is_even(const Integer& n) { return mpz_even_p(n.get_mpz_t()) != 0; }

}  // namespace

KleinEngine::KleinEngine() : GroupEngine({"a", "t"}) {}

Element KleinEngine::make(Integer a_exp, Integer t_exp) {
  return Element{KleinElement{std::move(a_exp), std::move(t_exp)}};
}

Element KleinEngine::identity() const { return make(0, 0); }

Element KleinEngine::generator(std::size_t index) const {
  return index == 0 ? make(1, 0) : make(0, 1);
}

// (i, j)(k, l) = (i + (-1)^j k, j + l)
Element KleinEngine::multiply(const Element& a, const Element& b) const {
  const auto& x = a.as<KleinElement>();
  const auto& y = b.as<KleinElement>();
  Integer i = is_even(x.t_exp) ? Integer(x.a_exp + y.a_exp) : Integer(x.a_exp - y.a_exp);
  return make(std::move(i), x.t_exp + y.t_exp);
}

Element KleinEngine::invert(const Element& a) const {
  const auto& x = a.as<KleinElement>();
  return make(is_even(x.t_exp) ? Integer(-x.a_exp) : x.a_exp, -x.t_exp);
}

Element KleinEngine::power(const Element& a, const Integer& n) const {
  const auto& x = a.as<KleinElement>();
  if (is_even(x.t_exp)) return make(x.a_exp * n, x.t_exp * n);
  // (i, j)^2 = (0, 2j) for odd j.
  return make(is_even(n) ? Integer(0) : x.a_exp, x.t_exp * n);
}

std::string KleinEngine::canonical_key(const Element& a) const {
  const auto& x = a.as<KleinElement>();
  return "\x03" + x.a_exp.get_str() + "," + x.t_exp.get_str();
}

std::string KleinEngine::format(const Element& a) const {
  return "(" + canonical_key(a).substr(1) + ")";
}

NormalFormWord KleinEngine::normal_form_word(const Element& a) const {
  const auto& x = a.as<KleinElement>();
  NormalFormWord out;
  if (sgn(x.a_exp) != 0) out.push_back({0, x.a_exp});
  if (sgn(x.t_exp) != 0) out.push_back({1, x.t_exp});
  return out;
}

std::vector<Word> KleinEngine::relators() const { return {parse_word("t a t^-1 a")}; }

// Conjugating (i, j) by (p, q) gives (p + (-1)^q i - (-1)^j p, j): the t-exponent
// is invariant, even j allows only i -> +-i, odd j shifts i by any even amount.
std::optional<Element> KleinEngine::conjugacy_test(const Element& a, const Element& b) const {
  const auto& x = a.as<KleinElement>();
  const auto& y = b.as<KleinElement>();
  if (x.t_exp != y.t_exp) return std::nullopt;
  if (is_even(x.t_exp)) {
    if (x.a_exp == y.a_exp) return identity();
    if (x.a_exp == -y.a_exp) return make(0, 1);
    return std::nullopt;
  }
  Integer diff = y.a_exp - x.a_exp;
  if (!is_even(diff)) return std::nullopt;
  return make(diff / 2, 0);
}

// ---------------------------------------------------------------------------
// BS(1, m) as Z[1/m] x| Z

BS1Engine::BS1Engine(Integer m) : GroupEngine({"a", "t"}), m_(std::move(m)) {
  if (abs(m_) < 2) {
    throw Error(ErrorCode::kInvalidSpec, "bs1 parameter m must satisfy |m| >= 2");
  }
}

std::string BS1Engine::id() const { return "bs1(" + m_.get_str() + ")"; }

Element BS1Engine::make(Integer num, std::uint64_t e, std::int64_t shift) const {
  if (sgn(num) == 0) {
    e = 0;
  } else {
    while (e > 0 && divides(m_, num)) {
      num /= m_;
      --e;
    }
  }
  return Element{BS1Element{std::move(num), e, shift}};
}

Element BS1Engine::identity() const { return make(0, 0, 0); }

Element BS1Engine::generator(std::size_t index) const {
  return index == 0 ? make(1, 0, 0) : make(0, 0, 1);
}

// (q1, k1)(q2, k2) = (q1 + m^k1 q2, k1 + k2)
Element BS1Engine::multiply(const Element& a, const Element& b) const {
  const auto& x = a.as<BS1Element>();
  const auto& y = b.as<BS1Element>();
  // m^k1 * y.num / m^y.e  ==  num2 / m^e2
  Integer num2 = y.num;
  std::uint64_t e2 = 0;
  const std::int64_t scaled = static_cast<std::int64_t>(y.e) - x.shift;
  if (scaled <= 0) {
    num2 *= ipow(m_, static_cast<unsigned long>(-scaled));
  } else {
    e2 = static_cast<std::uint64_t>(scaled);
  }
  const std::uint64_t e = std::max(x.e, e2);
  Integer num = x.num * ipow(m_, e - x.e) + num2 * ipow(m_, e - e2);
  return make(std::move(num), e, x.shift + y.shift);
}

// (q, k)^-1 = (-q m^-k, -k)
Element BS1Engine::invert(const Element& a) const {
  const auto& x = a.as<BS1Element>();
  const std::int64_t e = static_cast<std::int64_t>(x.e) + x.shift;
  if (e >= 0) return make(-x.num, static_cast<std::uint64_t>(e), -x.shift);
  return make(-x.num * ipow(m_, static_cast<unsigned long>(-e)), 0, -x.shift);
}

std::string BS1Engine::canonical_key(const Element& a) const {
  const auto& x = a.as<BS1Element>();
  return "\x04" + x.num.get_str() + "," + std::to_string(x.e) + "," + std::to_string(x.shift);
}

std::string BS1Engine::format(const Element& a) const {
  const auto& x = a.as<BS1Element>();
  std::string q = x.num.get_str();
  if (x.e > 0) q += "/" + m_.get_str() + "^" + std::to_string(x.e);
  return "(" + q + ", " + std::to_string(x.shift) + ")";
}

// (num / m^e, shift) = t^-e a^num t^(e + shift)
NormalFormWord BS1Engine::normal_form_word(const Element& a) const {
  const auto& x = a.as<BS1Element>();
  NormalFormWord out;
  const long e = static_cast<long>(x.e);
  if (e != 0) out.push_back({1, Integer(-e)});
  if (sgn(x.num) != 0) out.push_back({0, x.num});
  if (e + x.shift != 0) out.push_back({1, Integer(static_cast<long>(e + x.shift))});
  return out;
}

std::vector<Word> BS1Engine::relators() const {
  Word r = parse_word("t a t^-1");
  r.append("a", -m_.get_si());
  return {r};
}

}  // namespace growthlab
