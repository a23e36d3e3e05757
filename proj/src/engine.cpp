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

#include "growthlab/engine.hpp"

#include <algorithm>

#include "growthlab/errors.hpp"

namespace growthlab {

const char* family_name(Family family) {
  switch (family) {
    case Family::kFree: return "free";
    case Family::kAbelian: return "abelian";
    case Family::kKlein: return "klein";
    case Family::kBS1: return "bs1";
    case Family::kSemidirect: return "semidirect";
  }
  return "unknown";
}

std::vector<std::string> default_generator_names(std::size_t rank) {
  static const char* kShort[] = {"x", "y", "z"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rank; ++i) {
    names.push_back(rank <= 3 ? std::string(kShort[i]) : "x" + std::to_string(i + 1));
  }
  return names;
}

std::optional<std::size_t> GroupEngine::generator_index(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

Element GroupEngine::power(const Element& a, const Integer& exponent) const {
  Element base = sgn(exponent) < 0 ? invert(a) : a;
  Integer n = abs(exponent);
  Element result = identity();
  while (sgn(n) > 0) {
    if (mpz_odd_p(n.get_mpz_t())) result = multiply(result, base);
    n >>= 1;
    if (sgn(n) > 0) base = multiply(base, base);
  }
  return result;
}

std::optional<Element> GroupEngine::conjugacy_test(const Element&, const Element&) const {
  throw Error(ErrorCode::kUnsupportedFamily,
              std::string("conjugacy test is not available for the ") + family_name(family()) +
                  " family");
}

Element GroupEngine::evaluate(const Word& w) const {
  Element result = identity();
  for (const auto& letter : w.letters()) {
    auto index = generator_index(letter.name);
    if (!index) {
      throw Error(ErrorCode::kUnknownGenerator,
                  "unknown generator '" + letter.name + "' for " + id());
    }
    result = multiply(result, power(generator(*index), Integer(static_cast<long>(letter.exponent))));
  }
  return result;
}

Element GroupEngine::substitute(const NormalFormWord& w, std::span<const Element> images) const {
  Element result = identity();
  for (const auto& gp : w) {
    result = multiply(result, power(images[gp.generator], gp.exponent));
  }
  return result;
}

Word GroupEngine::to_word(const Element& a) const {
  Word w;
  for (const auto& gp : normal_form_word(a)) {
    if (!fits_int64(gp.exponent)) {
      throw Error(ErrorCode::kPrecondition, "exponent too large to print as a word");
    }
    w.append(names_[gp.generator], gp.exponent.get_si());
  }
  return w;
}

EnginePtr make_engine(const GroupSpec& spec) {
  return std::visit(
      [](const auto& family) -> EnginePtr {
        using T = std::decay_t<decltype(family)>;
        if constexpr (std::is_same_v<T, FreeFamily>) {
          return std::make_shared<FreeEngine>(family.rank);
        } else if constexpr (std::is_same_v<T, AbelianFamily>) {
          return std::make_shared<AbelianEngine>(family.rank);
        } else if constexpr (std::is_same_v<T, KleinFamily>) {
          return std::make_shared<KleinEngine>();
        } else if constexpr (std::is_same_v<T, BS1Family>) {
          return std::make_shared<BS1Engine>(family.m);
        } else {
          return std::make_shared<SemidirectEngine>(make_engine(*family.base),
                                                    family.automorphism);
        }
      },
      spec.family);
}

}  // namespace growthlab
