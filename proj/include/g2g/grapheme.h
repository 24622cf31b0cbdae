// grapheme.h
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
//
// Copyright 2026 The g2g Authors.
//
// \file
// Written-form normalization, position-tagged grapheme decomposition and the
// mapping from tagged graphemes to acoustic-model units.
//
// A word "interesting" decomposes to the tagged sequence
//   i_B n t e r e s t i n g_E
// and maps to the unit sequence
//   i_WB n t e r e s t i n g_WB
// Single-character words carry the singleton tag S.

#ifndef G2G_GRAPHEME_H_
#define G2G_GRAPHEME_H_

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace g2g {

// Set of single-byte ASCII graphemes a written form may contain.
class Alphabet {
 public:
  // Letters in both cases, digits, apostrophe and hyphen (64 symbols).
  static Alphabet Default();

  // One symbol per line; blank lines and lines starting with '#' are skipped.
  static Alphabet FromFile(const std::string &path);

  // Every character of `symbols` becomes a member.
  static Alphabet FromSymbols(std::string_view symbols);

  bool Contains(char c) const {
    auto u = static_cast<unsigned char>(c);
    return u < member_.size() && member_[u];
  }

  size_t size() const;

  // Members in byte order.
  std::string Symbols() const;

 private:
  void Add(char c, size_t line);

  std::array<bool, 128> member_{};
};

// Maps non-ASCII Latin code points to ASCII replacements ("é" -> "e",
// "ß" -> "ss").
class Transliterator {
 public:
  // Latin-1 Supplement and Latin Extended-A letters.
  static Transliterator Default();

  // TSV `source<TAB>replacement`; source is a single UTF-8 code point.
  static Transliterator FromFile(const std::string &path);

  // Returns nullptr when the code point has no entry.
  const std::string *Lookup(char32_t code_point) const;

  size_t size() const { return table_.size(); }

  void Add(char32_t code_point, std::string replacement);

 private:
  std::map<char32_t, std::string> table_;
};

// Normalized surface word: non-empty, no whitespace, printable ASCII.
class WrittenForm {
 public:
  // Validates the structural invariants only; alphabet membership and
  // transliteration are the job of NormalizeWritten.
  explicit WrittenForm(std::string text);

  const std::string &str() const { return text_; }
  size_t size() const { return text_.size(); }

  auto operator<=>(const WrittenForm &) const = default;

 private:
  std::string text_;
};

// Trims, transliterates and validates `raw` against the alphabet.
// Throws Error(kEmptyInput) or Error(kUnsupportedCharacter).
WrittenForm NormalizeWritten(std::string_view raw, const Alphabet &alphabet,
                             const Transliterator &translit);
WrittenForm NormalizeWritten(std::string_view raw);

// ASCII lower-casing.
WrittenForm Lowercase(const WrittenForm &w);

enum class PositionTag : uint8_t { kInterior, kBegin, kEnd, kSingleton };

struct TaggedGrapheme {
  char symbol;
  PositionTag tag;

  // "i_B", "n", "g_E", "a_S".
  std::string Render() const;

  auto operator<=>(const TaggedGrapheme &) const = default;
};

using TaggedGraphemeSeq = std::vector<TaggedGrapheme>;

struct AmUnit {
  char symbol;
  bool boundary;

  // "i_WB" or "i".
  std::string Render() const;

  auto operator<=>(const AmUnit &) const = default;
};

using AmUnitSeq = std::vector<AmUnit>;

TaggedGraphemeSeq Decompose(const WrittenForm &w);

AmUnitSeq MapToAmUnits(std::span<const TaggedGrapheme> seq);

// Space-joined renderings.
std::string Render(std::span<const TaggedGrapheme> seq);
std::string Render(std::span<const AmUnit> seq);

// Concatenated symbols; inverse of Decompose.
std::string JoinSymbols(std::span<const TaggedGrapheme> seq);

// The graphemic baseline: the decomposed original, followed by the
// decomposed lower-cased form when it differs.
std::vector<AmUnitSeq> DefaultPronunciations(const WrittenForm &w);

// Decompose followed by MapToAmUnits.
inline AmUnitSeq ToAmUnits(const WrittenForm &w) {
  return MapToAmUnits(Decompose(w));
}

}  // namespace g2g

#endif  // G2G_GRAPHEME_H_
