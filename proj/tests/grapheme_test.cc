// grapheme_test.cc
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

#include <random>
#include <string>

#include "doctest.h"
#include "g2g/error.h"
#include "g2g/grapheme.h"
#include "g2g/text_io.h"
#include "test_util.h"

namespace g2g {
namespace {

std::string AmString(const std::string &word) {
  return Render(ToAmUnits(NormalizeWritten(word)));
}

ErrorKind KindOf(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::kIo;
}

TEST_SUITE("grapheme") {

TEST_CASE("normalize transliterates and preserves case") {
  CHECK(NormalizeWritten("José").str() == "Jose");
  CHECK(NormalizeWritten("Kaity").str() == "Kaity");
  CHECK(NormalizeWritten("Liesl").str() == "Liesl");
  CHECK(NormalizeWritten("  Ærøskøbing\t").str() == "AEroskobing");
  CHECK(NormalizeWritten("Straße").str() == "Strasse");
  CHECK(NormalizeWritten("O'Neil-Smith").str() == "O'Neil-Smith");
}

TEST_CASE("normalize errors") {
  CHECK(KindOf([] { NormalizeWritten(""); }) == ErrorKind::kEmptyInput);
  CHECK(KindOf([] { NormalizeWritten(" \t "); }) == ErrorKind::kEmptyInput);
  CHECK(KindOf([] { NormalizeWritten("Mary Ann"); }) == ErrorKind::kUnsupportedCharacter);
  CHECK(KindOf([] { NormalizeWritten("a_b"); }) == ErrorKind::kUnsupportedCharacter);
  // Non-Latin script is rejected, not dropped.
  CHECK(KindOf([] { NormalizeWritten("Иван"); }) == ErrorKind::kUnsupportedCharacter);
  try {
    NormalizeWritten("ab!c");
  } catch (const Error &e) {
    CHECK(std::string(e.what()).find("position 2") != std::string::npos);
  }
}

TEST_CASE("custom alphabet restricts the input") {
  Alphabet ab = Alphabet::FromSymbols("ab");
  auto tr = Transliterator::Default();
  CHECK(NormalizeWritten("abba", ab, tr).str() == "abba");
  CHECK(KindOf([&] { NormalizeWritten("abc", ab, tr); }) == ErrorKind::kUnsupportedCharacter);
  // á transliterates to a, which is in the alphabet.
  CHECK(NormalizeWritten("bá", ab, tr).str() == "ba");
  CHECK(KindOf([] { Alphabet::FromSymbols("a|"); }) == ErrorKind::kParse);
}

TEST_CASE("default alphabet has 64 symbols") {
  CHECK(Alphabet::Default().size() == 64);
}

TEST_CASE("bundled alphabet and transliteration files match the defaults") {
  Alphabet a = Alphabet::FromFile(std::string(G2G_DATA_DIR) + "/alphabet.txt");
  CHECK(a.Symbols() == Alphabet::Default().Symbols());
  auto file = Transliterator::FromFile(std::string(G2G_DATA_DIR) + "/translit.tsv");
  auto def = Transliterator::Default();
  CHECK(file.size() == def.size());
  for (char32_t cp = 0x80; cp < 0x180; ++cp) {
    const std::string *x = file.Lookup(cp);
    const std::string *y = def.Lookup(cp);
    REQUIRE((x == nullptr) == (y == nullptr));
    if (x != nullptr) CHECK(*x == *y);
  }
}

TEST_CASE("transliteration file errors") {
  test::TempDir dir;
  std::string path = dir.Write("bad.tsv", "é\te\nxy\tz\n");
  try {
    Transliterator::FromFile(path);
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("decompose tags positions") {
  CHECK(Render(Decompose(NormalizeWritten("interesting"))) == "i_B n t e r e s t i n g_E");
  CHECK(Render(Decompose(NormalizeWritten("a"))) == "a_S");
  CHECK(Render(Decompose(NormalizeWritten("blue"))) == "b_B l u e_E");
  CHECK(Render(Decompose(NormalizeWritten("ab"))) == "a_B b_E");
}

TEST_CASE("map to acoustic-model units") {
  CHECK(AmString("interesting") == "i_WB n t e r e s t i n g_WB");
  CHECK(AmString("Katie") == "K_WB a t i e_WB");
  CHECK(AmString("i") == "i_WB");
  TaggedGraphemeSeq interior = {{'i', PositionTag::kInterior}};
  CHECK(Render(MapToAmUnits(interior)) == "i");
  TaggedGraphemeSeq begin = {{'i', PositionTag::kBegin}};
  CHECK(Render(MapToAmUnits(begin)) == "i_WB");
}

TEST_CASE("default pronunciations") {
  auto render_all = [](const std::string &w) {
    std::vector<std::string> out;
    for (const auto &v : DefaultPronunciations(NormalizeWritten(w))) out.push_back(Render(v));
    return out;
  };
  CHECK(render_all("Alex") == std::vector<std::string>{"A_WB l e x_WB", "a_WB l e x_WB"});
  CHECK(render_all("blue") == std::vector<std::string>{"b_WB l u e_WB"});
  CHECK(render_all("Ly") == std::vector<std::string>{"L_WB y_WB", "l_WB y_WB"});
}

TEST_CASE("property: decomposition invariants on random words") {
  std::mt19937 rng(7);
  const std::string alphabet = Alphabet::Default().Symbols();
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<size_t> len(1, 12);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string s;
    for (size_t i = len(rng); i > 0; --i) s.push_back(alphabet[pick(rng)]);
    WrittenForm w = NormalizeWritten(s);
    CHECK(NormalizeWritten(w.str()) == w);

    auto tagged = Decompose(w);
    REQUIRE(tagged.size() == s.size());
    CHECK(JoinSymbols(tagged) == s);
    size_t begins = 0, ends = 0, singles = 0;
    for (const auto &g : tagged) {
      begins += g.tag == PositionTag::kBegin;
      ends += g.tag == PositionTag::kEnd;
      singles += g.tag == PositionTag::kSingleton;
    }
    if (s.size() == 1) {
      CHECK(singles == 1);
      CHECK(begins + ends == 0);
    } else {
      CHECK(singles == 0);
      CHECK(begins == 1);
      CHECK(ends == 1);
    }

    auto units = MapToAmUnits(tagged);
    size_t boundaries = 0;
    for (const auto &u : units) boundaries += u.boundary;
    CHECK(boundaries == (s.size() == 1 ? 1u : 2u));
    CHECK(units.front().boundary);
    CHECK(units.back().boundary);

    auto defaults = DefaultPronunciations(w);
    CHECK(defaults.size() <= 2);
    CHECK(defaults.front() == units);
    if (defaults.size() == 2) CHECK(defaults[0] != defaults[1]);
    if (Lowercase(w) == w) CHECK(defaults.size() == 1);
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace g2g
