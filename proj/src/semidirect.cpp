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

#include <cctype>
#include <mutex>

#include "growthlab/engine.hpp"
#include "growthlab/errors.hpp"

namespace growthlab {

namespace {

// "t" -> "t1", "tK" -> "t(K+1)"; everything else is kept.
std::string lift_name(const std::string& name) {
  if (name == "t") return "t1";
  if (name.size() >= 2 && name[0] == 't') {
    std::size_t k = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return name;
      k = k * 10 + static_cast<std::size_t>(name[i] - '0');
    }
    return "t" + std::to_string(k + 1);
  }
  return name;
}

std::vector<std::string> lifted_names(const GroupEngine& base) {
  std::vector<std::string> names;
  for (const auto& n : base.generator_names()) names.push_back(lift_name(n));
  names.push_back("t");
  return names;
}

Element evaluate_under(const GroupEngine& engine, const Word& w, std::span<const Element> images) {
  Element result = engine.identity();
  for (const auto& letter : w.letters()) {
    auto index = engine.generator_index(letter.name);
    if (!index) {
      throw Error(ErrorCode::kUnknownGenerator,
                  "unknown generator '" + letter.name + "' for " + engine.id());
    }
    result = engine.multiply(
        result, engine.power(images[*index], Integer(static_cast<long>(letter.exponent))));
  }
  return result;
}

}  // namespace

SemidirectEngine::SemidirectEngine(EnginePtr base, AutomorphismSpec automorphism)
    : GroupEngine(lifted_names(*base)), base_(std::move(base)), automorphism_(std::move(automorphism)) {
  const auto& base_names = base_->generator_names();
  for (const auto& n : base_names) base_to_lifted_[n] = lift_name(n);

  const auto check_keys = [&](const std::map<std::string, Word>& images, const char* which) {
    for (const auto& n : base_names) {
      if (!images.count(n)) {
        throw Error(ErrorCode::kInvalidSpec,
                    std::string("automorphism ") + which + " map has no image for generator '" + n + "'");
      }
    }
    for (const auto& [n, w] : images) {
      if (std::find(base_names.begin(), base_names.end(), n) == base_names.end()) {
        throw Error(ErrorCode::kInvalidSpec,
                    std::string("automorphism ") + which + " map names unknown generator '" + n + "'");
      }
    }
  };
  check_keys(automorphism_.forward, "forward");
  check_keys(automorphism_.backward, "backward");

  const std::size_t n = base_names.size();
  ImageTable identity_images, forward_images, backward_images;
  for (std::size_t g = 0; g < n; ++g) {
    identity_images.push_back(base_->generator(g));
    forward_images.push_back(base_->evaluate(automorphism_.forward.at(base_names[g])));
    backward_images.push_back(base_->evaluate(automorphism_.backward.at(base_names[g])));
  }

  for (std::size_t g = 0; g < n; ++g) {
    const Element there_and_back =
        base_->substitute(base_->normal_form_word(backward_images[g]), forward_images);
    const Element back_and_there =
        base_->substitute(base_->normal_form_word(forward_images[g]), backward_images);
    if (!base_->equal(there_and_back, identity_images[g]) ||
        !base_->equal(back_and_there, identity_images[g])) {
      throw Error(ErrorCode::kAutomorphismInverse,
                  "declared backward map does not invert the automorphism on generator '" +
                      base_names[g] + "'");
    }
  }
  for (const auto& r : base_->relators()) {
    if (!base_->is_identity(evaluate_under(*base_, r, forward_images)) ||
        !base_->is_identity(evaluate_under(*base_, r, backward_images))) {
      throw Error(ErrorCode::kAutomorphismRelator,
                  "automorphism does not respect base relator '" + r.to_string() + "'");
    }
  }

  memo_[0] = std::make_shared<const ImageTable>(std::move(identity_images));
  memo_[1] = std::make_shared<const ImageTable>(std::move(forward_images));
  memo_[-1] = std::make_shared<const ImageTable>(std::move(backward_images));
}

std::string SemidirectEngine::id() const { return "semidirect(" + base_->id() + ")"; }

std::shared_ptr<const SemidirectEngine::ImageTable> SemidirectEngine::images(std::int64_t k) const {
  {
    std::shared_lock lock(memo_mutex_);
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
  }
  std::unique_lock lock(memo_mutex_);
  const std::int64_t step = k > 0 ? 1 : -1;
  const auto& one = memo_.at(step);
  // alpha^(j+step)(g) = alpha^j(alpha^step(g)); extend from the furthest cached power.
  std::int64_t j = 0;
  while (memo_.count(j + step) && j != k) j += step;
  while (j != k) {
    const auto& previous = *memo_.at(j);
    ImageTable next;
    next.reserve(one->size());
    for (const auto& image : *one) {
      next.push_back(base_->substitute(base_->normal_form_word(image), previous));
    }
    j += step;
    memo_[j] = std::make_shared<const ImageTable>(std::move(next));
  }
  return memo_.at(k);
}

Element SemidirectEngine::apply_automorphism_power(const Element& base_element, std::int64_t k) const {
  if (k == 0) return base_element;
  auto table = images(k);
  return base_->substitute(base_->normal_form_word(base_element), *table);
}

const Element& SemidirectEngine::base_component(const Element& a) {
  return *a.as<SemidirectElement>().base;
}

std::int64_t SemidirectEngine::shift(const Element& a) { return a.as<SemidirectElement>().shift; }

Element SemidirectEngine::lift(const Element& base_element, std::int64_t shift) const {
  return make_semidirect(base_element, shift);
}

Element SemidirectEngine::identity() const { return lift(base_->identity(), 0); }

Element SemidirectEngine::generator(std::size_t index) const {
  if (index == stable_letter_index()) return lift(base_->identity(), 1);
  return lift(base_->generator(index), 0);
}

Element SemidirectEngine::multiply(const Element& a, const Element& b) const {
  const std::int64_t k1 = shift(a);
  return lift(base_->multiply(base_component(a), apply_automorphism_power(base_component(b), k1)),
              k1 + shift(b));
}

// (w, k)^-1 = (alpha^-k(w^-1), -k)
Element SemidirectEngine::invert(const Element& a) const {
  const std::int64_t k = shift(a);
  return lift(apply_automorphism_power(base_->invert(base_component(a)), -k), -k);
}

std::string SemidirectEngine::canonical_key(const Element& a) const {
  return "\x05" + base_->canonical_key(base_component(a)) + "|" + std::to_string(shift(a));
}

std::string SemidirectEngine::format(const Element& a) const {
  return "(" + base_->format(base_component(a)) + ", " + std::to_string(shift(a)) + ")";
}

NormalFormWord SemidirectEngine::normal_form_word(const Element& a) const {
  NormalFormWord out = base_->normal_form_word(base_component(a));
  if (shift(a) != 0) out.push_back({stable_letter_index(), Integer(static_cast<long>(shift(a)))});
  return out;
}

Word SemidirectEngine::lift_word(const Word& base_word) const {
  Word out;
  for (const auto& l : base_word.letters()) {
    auto it = base_to_lifted_.find(l.name);
    out.append(it == base_to_lifted_.end() ? l.name : it->second, l.exponent);
  }
  return out;
}

std::vector<Word> SemidirectEngine::relators() const {
  std::vector<Word> out;
  for (const auto& r : base_->relators()) out.push_back(lift_word(r));
  const Word t = Word::letter("t");
  for (const auto& name : base_->generator_names()) {
    Word g = Word::letter(base_to_lifted_.at(name));
    out.push_back(t * g * t.inverse() * lift_word(automorphism_.forward.at(name)).inverse());
  }
  return out;
}

std::optional<IntegerMatrix> SemidirectEngine::abelian_action() const {
  if (base_->family() != Family::kAbelian) return std::nullopt;
  const auto table = images(1);
  const auto& forward = *table;
  const auto r = static_cast<Eigen::Index>(forward.size());
  IntegerMatrix m(r, r);
  for (Eigen::Index j = 0; j < r; ++j) {
    m.col(j) = forward[static_cast<std::size_t>(j)].as<AbelianElement>().coords;
  }
  return m;
}

}  // namespace growthlab
