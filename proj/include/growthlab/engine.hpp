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
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "growthlab/element.hpp"
#include "growthlab/group_spec.hpp"
#include "growthlab/integer.hpp"
#include "growthlab/word.hpp"

namespace growthlab {

enum class Family { kFree, kAbelian, kKlein, kBS1, kSemidirect };

const char* family_name(Family family);

struct GeneratorPower {
  std::size_t generator = 0;
  Integer exponent;
};

/// An element written as a product of generator powers, in engine order.
using NormalFormWord = std::vector<GeneratorPower>;

/// Exact normal-form arithmetic for one group. Engines are immutable after
/// construction (the semidirect automorphism-power memo is an internal,
/// thread-safe cache) and every method may be called concurrently.
class GroupEngine {
 public:
  virtual ~GroupEngine() = default;

  virtual Family family() const = 0;
  /// Short description such as "free(2)" or "semidirect(free(2))".
  virtual std::string id() const = 0;

  const std::vector<std::string>& generator_names() const { return names_; }
  std::size_t generator_count() const { return names_.size(); }
  virtual std::optional<std::size_t> generator_index(std::string_view name) const;

  virtual Element identity() const = 0;
  virtual Element generator(std::size_t index) const = 0;
  virtual Element multiply(const Element& a, const Element& b) const = 0;
  virtual Element invert(const Element& a) const = 0;
  virtual Element power(const Element& a, const Integer& exponent) const;

  /// Injective byte serialization: family tag byte followed by an ASCII payload.
  virtual std::string canonical_key(const Element& a) const = 0;
  /// Human-readable normal form.
  virtual std::string format(const Element& a) const = 0;
  virtual NormalFormWord normal_form_word(const Element& a) const = 0;
  /// Defining relators, as words over generator_names().
  virtual std::vector<Word> relators() const = 0;

  /// Returns c with c a c^-1 == b, or nullopt when a and b are not conjugate.
  /// Throws Error(kUnsupportedFamily) where no decision procedure is wired up.
  virtual std::optional<Element> conjugacy_test(const Element& a, const Element& b) const;

  Element evaluate(const Word& w) const;
  /// Substitutes `images[g]` for generator g.
  Element substitute(const NormalFormWord& w, std::span<const Element> images) const;
  Word to_word(const Element& a) const;

  bool equal(const Element& a, const Element& b) const {
    return canonical_key(a) == canonical_key(b);
  }
  bool is_identity(const Element& a) const { return canonical_key(a) == canonical_key(identity()); }
  bool commute(const Element& a, const Element& b) const {
    return equal(multiply(a, b), multiply(b, a));
  }
  Element conjugate(const Element& by, const Element& a) const {
    return multiply(multiply(by, a), invert(by));
  }
  Element commutator(const Element& a, const Element& b) const {
    return multiply(multiply(a, b), multiply(invert(a), invert(b)));
  }

 protected:
  explicit GroupEngine(std::vector<std::string> names) : names_(std::move(names)) {}

  std::vector<std::string> names_;
};

using EnginePtr = std::shared_ptr<const GroupEngine>;

EnginePtr make_engine(const GroupSpec& spec);

/// Generator names used by the free and free abelian families of a given rank:
/// x, y, z up to rank 3 and x1..xN beyond.
std::vector<std::string> default_generator_names(std::size_t rank);

class FreeEngine final : public GroupEngine {
 public:
  explicit FreeEngine(std::size_t rank);

  Family family() const override { return Family::kFree; }
  std::string id() const override;
  std::size_t rank() const { return names_.size(); }

  Element identity() const override;
  Element generator(std::size_t index) const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;
  std::string canonical_key(const Element& a) const override;
  std::string format(const Element& a) const override;
  NormalFormWord normal_form_word(const Element& a) const override;
  std::vector<Word> relators() const override { return {}; }
  std::optional<Element> conjugacy_test(const Element& a, const Element& b) const override;

  static Element from_letters(std::vector<int> letters);
};

/// Reduced-word helpers shared by the free engine and the subgroup graphs.
namespace free_words {

std::vector<int> reduce(std::vector<int> letters);
std::vector<int> inverse(std::span<const int> letters);

struct CyclicDecomposition {
  std::vector<int> prefix;  // w = prefix * core * prefix^-1
  std::vector<int> core;    // cyclically reduced
};
CyclicDecomposition cyclic_decomposition(std::span<const int> reduced);

/// Smallest d with core == (core[0..d))^(n/d).
std::size_t primitive_period(std::span<const int> core);

}  // namespace free_words

class AbelianEngine final : public GroupEngine {
 public:
  explicit AbelianEngine(std::size_t rank);

  Family family() const override { return Family::kAbelian; }
  std::string id() const override;
  std::size_t rank() const { return names_.size(); }
  std::optional<std::size_t> generator_index(std::string_view name) const override;

  Element identity() const override;
  Element generator(std::size_t index) const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;
  Element power(const Element& a, const Integer& exponent) const override;
  std::string canonical_key(const Element& a) const override;
  std::string format(const Element& a) const override;
  NormalFormWord normal_form_word(const Element& a) const override;
  std::vector<Word> relators() const override;
  std::optional<Element> conjugacy_test(const Element& a, const Element& b) const override;

  Element from_coords(IntegerVector coords) const;
};

class KleinEngine final : public GroupEngine {
 public:
  KleinEngine();

  Family family() const override { return Family::kKlein; }
  std::string id() const override { return "klein"; }

  Element identity() const override;
  Element generator(std::size_t index) const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;
  Element power(const Element& a, const Integer& exponent) const override;
  std::string canonical_key(const Element& a) const override;
  std::string format(const Element& a) const override;
  NormalFormWord normal_form_word(const Element& a) const override;
  std::vector<Word> relators() const override;
  std::optional<Element> conjugacy_test(const Element& a, const Element& b) const override;

  static Element make(Integer a_exp, Integer t_exp);
};

class BS1Engine final : public GroupEngine {
 public:
  explicit BS1Engine(Integer m);

  Family family() const override { return Family::kBS1; }
  std::string id() const override;
  const Integer& m() const { return m_; }

  Element identity() const override;
  Element generator(std::size_t index) const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;
  std::string canonical_key(const Element& a) const override;
  std::string format(const Element& a) const override;
  NormalFormWord normal_form_word(const Element& a) const override;
  std::vector<Word> relators() const override;

  /// Builds (num / m^e, shift) and brings it to normal form.
  Element make(Integer num, std::uint64_t e, std::int64_t shift) const;

 private:
  Integer m_;
};

/// K x|_alpha Z with elements (k, n) and (k1, n1)(k2, n2) = (k1 alpha^n1(k2), n1 + n2).
class SemidirectEngine final : public GroupEngine {
 public:
  /// Validates that `automorphism.backward` inverts `automorphism.forward`
  /// on every generator and that both respect the base relators.
  SemidirectEngine(EnginePtr base, AutomorphismSpec automorphism);

  Family family() const override { return Family::kSemidirect; }
  std::string id() const override;

  const GroupEngine& base() const { return *base_; }
  const EnginePtr& base_ptr() const { return base_; }
  const AutomorphismSpec& automorphism() const { return automorphism_; }
  std::size_t stable_letter_index() const { return base_->generator_count(); }

  Element identity() const override;
  Element generator(std::size_t index) const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element invert(const Element& a) const override;
  std::string canonical_key(const Element& a) const override;
  std::string format(const Element& a) const override;
  NormalFormWord normal_form_word(const Element& a) const override;
  std::vector<Word> relators() const override;

  /// alpha^k(a) for an element of the base. Generator images are memoized
  /// for every power up to the largest |k| requested.
  Element apply_automorphism_power(const Element& base_element, std::int64_t k) const;

  static const Element& base_component(const Element& a);
  static std::int64_t shift(const Element& a);
  Element lift(const Element& base_element, std::int64_t shift = 0) const;

  /// Matrix of alpha on Z^r (columns are images of the basis vectors) when the
  /// base is free abelian; nullopt otherwise.
  std::optional<IntegerMatrix> abelian_action() const;

  /// Renames a word over the base alphabet into this engine's alphabet.
  Word lift_word(const Word& base_word) const;

 private:
  using ImageTable = std::vector<Element>;
  std::shared_ptr<const ImageTable> images(std::int64_t k) const;

  EnginePtr base_;
  AutomorphismSpec automorphism_;
  std::map<std::string, std::string> base_to_lifted_;

  mutable std::shared_mutex memo_mutex_;
  mutable std::map<std::int64_t, std::shared_ptr<const ImageTable>> memo_;
};

}  // namespace growthlab
