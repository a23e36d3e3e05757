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

#include "growthlab/word.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "growthlab/errors.hpp"

namespace growthlab {

Word::Word(const std::vector<Letter>& letters) {
  for (const auto& l : letters) append(l.name, l.exponent);
}

Word Word::letter(std::string name, std::int64_t exponent) {
  Word w;
  w.append(name, exponent);
  return w;
}

void Word::append(const std::string& name, std::int64_t exponent) {
  if (exponent == 0) return;
  if (!letters_.empty() && letters_.back().name == name) {
    letters_.back().exponent += exponent;
    if (letters_.back().exponent == 0) letters_.pop_back();
    return;
  }
  letters_.push_back({name, exponent});
}

void Word::append(const Word& other) {
  for (const auto& l : other.letters_) append(l.name, l.exponent);
}

Word Word::inverse() const {
  Word result;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    result.append(it->name, -it->exponent);
  }
  return result;
}

std::uint64_t Word::length() const {
  std::uint64_t total = 0;
  for (const auto& l : letters_) {
    total += static_cast<std::uint64_t>(l.exponent < 0 ? -l.exponent : l.exponent);
  }
  return total;
}

std::string Word::to_string() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.name;
    if (l.exponent != 1) out += '^' + std::to_string(l.exponent);
  }
  return out;
}

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

Word parse_word(std::string_view text) {
  Word result;
  std::size_t pos = 0;
  const auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kSyntax,
                "bad word '" + std::string(text) + "': " + what);
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(text[pos]))) {
      fail("generator names must start with a letter");
    }
    std::size_t start = pos;
    while (pos < text.size() && is_name_char(text[pos])) ++pos;
    std::string name(text.substr(start, pos - start));
    std::int64_t exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t num_start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      std::string_view digits = text.substr(num_start, pos - num_start);
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
        fail("malformed exponent");
      }
      if (exponent == 0) fail("zero exponent");
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      fail(std::string("unexpected character '") + text[pos] + "'");
    }
    result.append(name, exponent);
  }
  return result;
}

std::vector<Word> parse_word_list(std::string_view text, char separator) {
  std::vector<Word> words;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(separator, start);
    std::string_view piece = text.substr(start, end == std::string_view::npos ? end : end - start);
    words.push_back(parse_word(piece));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return words;
}

Word commutator(const Word& a, const Word& b) {
  return a * b * a.inverse() * b.inverse();
}

}  // namespace growthlab
