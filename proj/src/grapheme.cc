// grapheme.cc
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

#include "g2g/grapheme.h"

#include <cctype>
#include <cstdio>
#include <utility>

#include "g2g/error.h"
#include "g2g/text_io.h"

namespace g2g {
namespace {

struct TranslitEntry {
  char32_t code_point;
  const char *replacement;
};

// Latin-1 Supplement and Latin Extended-A letters. data/translit.tsv holds the
// same table in file form.
constexpr TranslitEntry kDefaultTranslit[] = {
    {0x00C0, "A"}, {0x00C1, "A"}, {0x00C2, "A"}, {0x00C3, "A"}, {0x00C4, "A"},
    {0x00C5, "A"}, {0x00C6, "AE"}, {0x00C7, "C"}, {0x00C8, "E"}, {0x00C9, "E"},
    {0x00CA, "E"}, {0x00CB, "E"}, {0x00CC, "I"}, {0x00CD, "I"}, {0x00CE, "I"},
    {0x00CF, "I"}, {0x00D0, "D"}, {0x00D1, "N"}, {0x00D2, "O"}, {0x00D3, "O"},
    {0x00D4, "O"}, {0x00D5, "O"}, {0x00D6, "O"}, {0x00D8, "O"}, {0x00D9, "U"},
    {0x00DA, "U"}, {0x00DB, "U"}, {0x00DC, "U"}, {0x00DD, "Y"}, {0x00DE, "TH"},
    {0x00DF, "ss"}, {0x00E0, "a"}, {0x00E1, "a"}, {0x00E2, "a"}, {0x00E3, "a"},
    {0x00E4, "a"}, {0x00E5, "a"}, {0x00E6, "ae"}, {0x00E7, "c"}, {0x00E8, "e"},
    {0x00E9, "e"}, {0x00EA, "e"}, {0x00EB, "e"}, {0x00EC, "i"}, {0x00ED, "i"},
    {0x00EE, "i"}, {0x00EF, "i"}, {0x00F0, "d"}, {0x00F1, "n"}, {0x00F2, "o"},
    {0x00F3, "o"}, {0x00F4, "o"}, {0x00F5, "o"}, {0x00F6, "o"}, {0x00F8, "o"},
    {0x00F9, "u"}, {0x00FA, "u"}, {0x00FB, "u"}, {0x00FC, "u"}, {0x00FD, "y"},
    {0x00FE, "th"}, {0x00FF, "y"}, {0x0100, "A"}, {0x0101, "a"}, {0x0102, "A"},
    {0x0103, "a"}, {0x0104, "A"}, {0x0105, "a"}, {0x0106, "C"}, {0x0107, "c"},
    {0x0108, "C"}, {0x0109, "c"}, {0x010A, "C"}, {0x010B, "c"}, {0x010C, "C"},
    {0x010D, "c"}, {0x010E, "D"}, {0x010F, "d"}, {0x0110, "D"}, {0x0111, "d"},
    {0x0112, "E"}, {0x0113, "e"}, {0x0114, "E"}, {0x0115, "e"}, {0x0116, "E"},
    {0x0117, "e"}, {0x0118, "E"}, {0x0119, "e"}, {0x011A, "E"}, {0x011B, "e"},
    {0x011C, "G"}, {0x011D, "g"}, {0x011E, "G"}, {0x011F, "g"}, {0x0120, "G"},
    {0x0121, "g"}, {0x0122, "G"}, {0x0123, "g"}, {0x0124, "H"}, {0x0125, "h"},
    {0x0126, "H"}, {0x0127, "h"}, {0x0128, "I"}, {0x0129, "i"}, {0x012A, "I"},
    {0x012B, "i"}, {0x012C, "I"}, {0x012D, "i"}, {0x012E, "I"}, {0x012F, "i"},
    {0x0130, "I"}, {0x0131, "i"}, {0x0132, "IJ"}, {0x0133, "ij"},
    {0x0134, "J"}, {0x0135, "j"}, {0x0136, "K"}, {0x0137, "k"}, {0x0138, "q"},
    {0x0139, "L"}, {0x013A, "l"}, {0x013B, "L"}, {0x013C, "l"}, {0x013D, "L"},
    {0x013E, "l"}, {0x013F, "L"}, {0x0140, "l"}, {0x0141, "L"}, {0x0142, "l"},
    {0x0143, "N"}, {0x0144, "n"}, {0x0145, "N"}, {0x0146, "n"}, {0x0147, "N"},
    {0x0148, "n"}, {0x0149, "'n"}, {0x014A, "NG"}, {0x014B, "ng"},
    {0x014C, "O"}, {0x014D, "o"}, {0x014E, "O"}, {0x014F, "o"}, {0x0150, "O"},
    {0x0151, "o"}, {0x0152, "OE"}, {0x0153, "oe"}, {0x0154, "R"},
    {0x0155, "r"}, {0x0156, "R"}, {0x0157, "r"}, {0x0158, "R"}, {0x0159, "r"},
    {0x015A, "S"}, {0x015B, "s"}, {0x015C, "S"}, {0x015D, "s"}, {0x015E, "S"},
    {0x015F, "s"}, {0x0160, "S"}, {0x0161, "s"}, {0x0162, "T"}, {0x0163, "t"},
    {0x0164, "T"}, {0x0165, "t"}, {0x0166, "T"}, {0x0167, "t"}, {0x0168, "U"},
    {0x0169, "u"}, {0x016A, "U"}, {0x016B, "u"}, {0x016C, "U"}, {0x016D, "u"},
    {0x016E, "U"}, {0x016F, "u"}, {0x0170, "U"}, {0x0171, "u"}, {0x0172, "U"},
    {0x0173, "u"}, {0x0174, "W"}, {0x0175, "w"}, {0x0176, "Y"}, {0x0177, "y"},
    {0x0178, "Y"}, {0x0179, "Z"}, {0x017A, "z"}, {0x017B, "Z"}, {0x017C, "z"},
    {0x017D, "Z"}, {0x017E, "z"}, {0x017F, "s"},
};

// Characters that would make tagged or joint-unit renderings ambiguous.
bool IsReservedSymbol(char c) {
  return c == '_' || c == '|' || std::isspace(static_cast<unsigned char>(c)) ||
         !std::isprint(static_cast<unsigned char>(c));
}

std::string DescribeCodePoint(char32_t cp) {
  if (cp >= 0x20 && cp < 0x7F) return std::string("'") + static_cast<char>(cp) + "'";
  char buf[16];
  std::snprintf(buf, sizeof(buf), "U+%04X", static_cast<unsigned>(cp));
  return buf;
}

}  // namespace

Alphabet Alphabet::Default() {
  Alphabet a;
  for (char c = 'a'; c <= 'z'; ++c) a.Add(c, 0);
  for (char c = 'A'; c <= 'Z'; ++c) a.Add(c, 0);
  for (char c = '0'; c <= '9'; ++c) a.Add(c, 0);
  a.Add('\'', 0);
  a.Add('-', 0);
  return a;
}

Alphabet Alphabet::FromFile(const std::string &path) {
  Alphabet a;
  auto lines = ReadLines(path);
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string_view sym = Trim(lines[i]);
    if (sym.empty() || sym.front() == '#') continue;
    if (sym.size() != 1) {
      throw ParseError(i + 1, "grapheme must be a single ASCII character: '" +
                                  std::string(sym) + "'");
    }
    a.Add(sym.front(), i + 1);
  }
  if (a.size() == 0) throw Error(ErrorKind::kEmptyInput, "empty alphabet file " + path);
  return a;
}

Alphabet Alphabet::FromSymbols(std::string_view symbols) {
  Alphabet a;
  for (char c : symbols) a.Add(c, 0);
  return a;
}

void Alphabet::Add(char c, size_t line) {
  auto u = static_cast<unsigned char>(c);
  if (u >= member_.size() || IsReservedSymbol(c)) {
    throw ParseError(line, "reserved or non-ASCII grapheme " + DescribeCodePoint(u));
  }
  member_[u] = true;
}

size_t Alphabet::size() const {
  size_t n = 0;
  for (bool m : member_) n += m;
  return n;
}

std::string Alphabet::Symbols() const {
  std::string out;
  for (size_t i = 0; i < member_.size(); ++i) {
    if (member_[i]) out.push_back(static_cast<char>(i));
  }
  return out;
}

Transliterator Transliterator::Default() {
  Transliterator t;
  for (const auto &e : kDefaultTranslit) t.Add(e.code_point, e.replacement);
  return t;
}

Transliterator Transliterator::FromFile(const std::string &path) {
  Transliterator t;
  auto lines = ReadLines(path);
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (Trim(line).empty() || line.front() == '#') continue;
    auto fields = SplitTabs(line);
    if (fields.size() != 2) throw ParseError(i + 1, "expected source<TAB>replacement");
    size_t pos = 0;
    char32_t cp = NextCodePoint(fields[0], pos);
    if (pos != fields[0].size() || cp == 0xFFFD) {
      throw ParseError(i + 1, "source must be a single UTF-8 code point");
    }
    for (char c : fields[1]) {
      if (static_cast<unsigned char>(c) >= 0x80) {
        throw ParseError(i + 1, "replacement must be ASCII");
      }
    }
    t.Add(cp, std::string(fields[1]));
  }
  return t;
}

const std::string *Transliterator::Lookup(char32_t code_point) const {
  auto it = table_.find(code_point);
  return it == table_.end() ? nullptr : &it->second;
}

void Transliterator::Add(char32_t code_point, std::string replacement) {
  table_[code_point] = std::move(replacement);
}

WrittenForm::WrittenForm(std::string text) : text_(std::move(text)) {
  if (text_.empty()) throw Error(ErrorKind::kEmptyInput, "empty written form");
  for (size_t i = 0; i < text_.size(); ++i) {
    if (IsReservedSymbol(text_[i]) || static_cast<unsigned char>(text_[i]) >= 0x80) {
      throw Error(ErrorKind::kUnsupportedCharacter,
                  DescribeCodePoint(static_cast<unsigned char>(text_[i])) +
                      " at position " + std::to_string(i) + " in '" + text_ + "'");
    }
  }
}

WrittenForm NormalizeWritten(std::string_view raw, const Alphabet &alphabet,
                             const Transliterator &translit) {
  std::string_view s = Trim(raw);
  if (s.empty()) throw Error(ErrorKind::kEmptyInput, "empty input");
  std::string out;
  out.reserve(s.size());
  size_t pos = 0;
  for (size_t index = 0; pos < s.size(); ++index) {
    char32_t cp = NextCodePoint(s, pos);
    auto unsupported = [&] {
      return Error(ErrorKind::kUnsupportedCharacter,
                   DescribeCodePoint(cp) + " at position " + std::to_string(index) +
                       " in '" + std::string(s) + "'");
    };
    if (cp < 0x80) {
      if (!alphabet.Contains(static_cast<char>(cp))) throw unsupported();
      out.push_back(static_cast<char>(cp));
      continue;
    }
    const std::string *rep = translit.Lookup(cp);
    if (rep == nullptr) throw unsupported();
    for (char c : *rep) {
      if (!alphabet.Contains(c)) throw unsupported();
    }
    out += *rep;
  }
  return WrittenForm(std::move(out));
}

WrittenForm NormalizeWritten(std::string_view raw) {
  static const Alphabet alphabet = Alphabet::Default();
  static const Transliterator translit = Transliterator::Default();
  return NormalizeWritten(raw, alphabet, translit);
}

WrittenForm Lowercase(const WrittenForm &w) {
  std::string s = w.str();
  for (char &c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return WrittenForm(std::move(s));
}

std::string TaggedGrapheme::Render() const {
  std::string s(1, symbol);
  switch (tag) {
    case PositionTag::kInterior: break;
    case PositionTag::kBegin: s += "_B"; break;
    case PositionTag::kEnd: s += "_E"; break;
    case PositionTag::kSingleton: s += "_S"; break;
  }
  return s;
}

std::string AmUnit::Render() const {
  std::string s(1, symbol);
  if (boundary) s += "_WB";
  return s;
}

TaggedGraphemeSeq Decompose(const WrittenForm &w) {
  const std::string &s = w.str();
  TaggedGraphemeSeq seq;
  seq.reserve(s.size());
  if (s.size() == 1) {
    seq.push_back({s[0], PositionTag::kSingleton});
    return seq;
  }
  for (size_t i = 0; i < s.size(); ++i) {
    PositionTag tag = PositionTag::kInterior;
    if (i == 0) tag = PositionTag::kBegin;
    else if (i + 1 == s.size()) tag = PositionTag::kEnd;
    seq.push_back({s[i], tag});
  }
  return seq;
}

AmUnitSeq MapToAmUnits(std::span<const TaggedGrapheme> seq) {
  AmUnitSeq units;
  units.reserve(seq.size());
  for (const auto &g : seq) {
    units.push_back({g.symbol, g.tag != PositionTag::kInterior});
  }
  return units;
}

std::string Render(std::span<const TaggedGrapheme> seq) {
  std::string out;
  for (const auto &g : seq) {
    if (!out.empty()) out.push_back(' ');
    out += g.Render();
  }
  return out;
}

std::string Render(std::span<const AmUnit> seq) {
  std::string out;
  for (const auto &u : seq) {
    if (!out.empty()) out.push_back(' ');
    out += u.Render();
  }
  return out;
}

std::string JoinSymbols(std::span<const TaggedGrapheme> seq) {
  std::string out;
  out.reserve(seq.size());
  for (const auto &g : seq) out.push_back(g.symbol);
  return out;
}

std::vector<AmUnitSeq> DefaultPronunciations(const WrittenForm &w) {
  std::vector<AmUnitSeq> variants;
  variants.push_back(ToAmUnits(w));
  WrittenForm lower = Lowercase(w);
  if (lower != w) variants.push_back(ToAmUnits(lower));
  return variants;
}

}  // namespace g2g
