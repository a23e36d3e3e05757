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
#include <string>
#include <string_view>
#include <vector>

namespace growthlab {

struct Letter {
  std::string name;
  std::int64_t exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A formal word over named generators, kept run-length normalized: adjacent
/// letters carry distinct names and no exponent is zero. No free reduction
/// across different names is performed (that is the engine's job).
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<Letter>& letters);

  static Word letter(std::string name, std::int64_t exponent = 1);

  /// Appends `name^exponent`, merging with the last run when names agree.
  void append(const std::string& name, std::int64_t exponent);
  void append(const Word& other);

  Word inverse() const;

  /// Sum of absolute exponents.
  std::uint64_t length() const;
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }

  /// Whitespace separated `name` / `name^k` letters; empty word prints as "".
  std::string to_string() const;

  friend Word operator*(Word lhs, const Word& rhs) {
    lhs.append(rhs);
    return lhs;
  }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Parses whitespace-separated letters `name` or `name^k` (k a nonzero
/// decimal integer). Throws Error(kSyntax) on malformed input.
Word parse_word(std::string_view text);

/// Splits `text` on `separator` and parses each piece as a word.
std::vector<Word> parse_word_list(std::string_view text, char separator);

/// [a, b] = a b a^-1 b^-1
Word commutator(const Word& a, const Word& b);

}  // namespace growthlab
