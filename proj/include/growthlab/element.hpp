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
#include <memory>
#include <variant>
#include <vector>

#include "growthlab/integer.hpp"

namespace growthlab {

struct Element;

/// Freely reduced word as signed 1-based generator indices (-i is the inverse).
struct FreeElement {
  std::vector<int> letters;
};

struct AbelianElement {
  IntegerVector coords;
};

/// a^i t^j in the Klein bottle group <a, t | t a t^-1 = a^-1>.
struct KleinElement {
  Integer a_exp;
  Integer t_exp;
};

/// (num / m^e, shift) in Z[1/m] x| Z; e == 0 or m does not divide num.
struct BS1Element {
  Integer num;
  std::uint64_t e = 0;
  std::int64_t shift = 0;
};

/// (k, shift) meaning k t^shift in K x|_alpha Z.
struct SemidirectElement {
  std::shared_ptr<const Element> base;
  std::int64_t shift = 0;
};

struct Element {
  std::variant<FreeElement, AbelianElement, KleinElement, BS1Element, SemidirectElement> value;

  template <typename T>
  const T& as() const {
    return std::get<T>(value);
  }
};

inline Element make_semidirect(Element base, std::int64_t shift) {
  return Element{SemidirectElement{std::make_shared<const Element>(std::move(base)), shift}};
}

}  // namespace growthlab
