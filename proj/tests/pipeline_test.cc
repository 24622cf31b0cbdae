// pipeline_test.cc
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

#include "g2g/pipeline.h"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "g2g/error.h"
#include "test_util.h"

namespace g2g {
namespace {

WrittenForm W(const char *s) { return NormalizeWritten(s); }

LexiconEntry E(const char *w, const std::string &phones) {
  std::vector<std::string> p;
  for (auto t : SplitWhitespace(phones)) p.emplace_back(t);
  return {W(w), p};
}

const G2gModel &PairsModel() {
  static const G2gModel model = [] {
    auto pairs = ReadPairs(std::string(G2G_DATA_DIR) + "/example_pairs.tsv");
    return TrainG2gFromPairs(pairs, G2gConfig{});
  }();
  return model;
}

std::vector<std::string> Rendered(const VariantList &v) {
  std::vector<std::string> out;
  for (const auto &x : v.variants) out.push_back(Render(x.units));
  return out;
}

std::vector<std::string> TopOutputs(const G2gModel &m, const char *input, size_t n) {
  std::vector<std::string> out;
  for (const auto &h : DecodeTopN(m, W(input), {.n = n, .beam = 64})) out.push_back(h.output.str());
  return out;
}

// Random capitalized names over a small alphabet, with the odd grapheme the
// pairs model never saw.
std::vector<WrittenForm> RandomNames(std::mt19937 &rng, int count) {
  const std::string letters = "aeiklorsty";
  std::vector<WrittenForm> names;
  for (int i = 0; i < count; ++i) {
    int len = 1 + static_cast<int>(rng() % 6);
    std::string s;
    for (int j = 0; j < len; ++j) s += letters[rng() % letters.size()];
    if (rng() % 8 == 0) s[rng() % s.size()] = 'z';
    if (rng() % 4 != 0) s[0] = static_cast<char>(std::toupper(s[0]));
    names.push_back(W(s.c_str()));
  }
  return names;
}

TEST_SUITE("pipeline") {

TEST_CASE("homophone training recovers the root") {
  std::vector<LexiconEntry> lex = {E("Michael", "m aI k @ l"), E("Mikall", "m aI k @ l"),
                                   E("Mykol", "m aI k @ l"), E("Anna", "{ n @")};
  auto result = TrainG2gHom(lex, test::EnglishCharLm(), PhoneInventory::Default(), G2gConfig{});
  REQUIRE(result.clusters.size() == 1);
  CHECK(result.pairs.size() == 3);
  auto top = TopOutputs(result.model, "Mykol", 3);
  CHECK(std::find(top.begin(), top.end(), "Michael") != top.end());

  std::vector<LexiconEntry> none = {E("Anna", "{ n @"), E("Bob", "b A b")};
  try {
    TrainG2gHom(none, test::EnglishCharLm(), PhoneInventory::Default(), G2gConfig{});
    FAIL("trained on no clusters");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::kEmptyCorpus);
  }
  CHECK_THROWS_AS(TrainG2gFromPairs(std::vector<WordPair>{}, G2gConfig{}), Error);
}

TEST_CASE("example name pairs decode to their respellings") {
  const auto &m = PairsModel();
  for (auto [in, want] : {std::pair{"Kaity", "Katie"}, {"Sera", "Sarah"}, {"Ly", "Lee"}}) {
    auto hyps = DecodeTopN(m, W(in), {.n = 1, .beam = 64});
    REQUIRE(hyps.size() == 1);
    CHECK(hyps[0].output.str() == want);
  }
  auto lee = DecodeTopN(m, W("Ly"), {.n = 1, .beam = 64});
  CHECK(Render(ToAmUnits(lee[0].output)) == "L_WB e e_WB");
  auto katie = DecodeTopN(m, W("Kaity"), {.n = 1, .beam = 64});
  CHECK(Render(ToAmUnits(katie[0].output)) == "K_WB a t i e_WB");
}

TEST_CASE("single identity pair") {
  std::vector<WordPair> pairs = {{W("abc"), W("abc")}};
  auto m = TrainG2gFromPairs(pairs, G2gConfig{});
  CHECK(TopOutputs(m, "abc", 1) == std::vector<std::string>{"abc"});
}

TEST_CASE("variant lists") {
  const auto &m = PairsModel();
  VariantOptions mixed;

  auto two = GenerateVariants(&m, W("Kaity"), VariantBudget(2), mixed);
  CHECK(Rendered(two) == std::vector<std::string>{"K_WB a i t y_WB", "k_WB a i t y_WB"});
  CHECK_FALSE(two.fallback);

  auto five = GenerateVariants(&m, W("Kaity"), VariantBudget(5), mixed);
  REQUIRE(five.variants.size() >= 3);
  auto r = Rendered(five);
  CHECK(std::vector<std::string>(r.begin(), r.begin() + 3) ==
        std::vector<std::string>{"K_WB a i t y_WB", "k_WB a i t y_WB", "K_WB a t i e_WB"});
  CHECK(five.variants.size() <= 5);
  CHECK_FALSE(five.variants[0].from_g2g);
  CHECK(five.variants[2].from_g2g);

  auto one = GenerateVariants(&m, W("Kaity"), VariantBudget(1), mixed);
  CHECK(Rendered(one) == std::vector<std::string>{"K_WB a i t y_WB"});

  // 'x' is not in the training pairs, in either case.
  auto oov = GenerateVariants(&m, W("Xaver"), VariantBudget(4), mixed);
  CHECK(oov.fallback);
  CHECK(Rendered(oov) == std::vector<std::string>{"X_WB a v e r_WB", "x_WB a v e r_WB"});
  VariantOptions g2g_only{.mode = VariantMode::kG2gOnly};
  auto oov2 = GenerateVariants(&m, W("Xaver"), VariantBudget(4), g2g_only);
  CHECK(oov2.fallback);
  CHECK(Rendered(oov2) == Rendered(oov));

  // Only the capitalized form is unknown: the lowercased retry decodes.
  auto retry = GenerateVariants(&m, W("Phoneme"), VariantBudget(3), g2g_only);
  CHECK_FALSE(retry.fallback);
  CHECK_FALSE(retry.variants.empty());

  CHECK_THROWS_AS(VariantBudget(0), Error);
  CHECK_THROWS_AS(GenerateVariants(nullptr, W("Kaity"), VariantBudget(3), mixed), Error);
  VariantOptions defaults{.mode = VariantMode::kDefaultsOnly};
  CHECK(GenerateVariants(nullptr, W("Kaity"), VariantBudget(3), defaults).variants.size() == 2);
}

TEST_CASE("mode names") {
  for (auto m : {VariantMode::kMixed, VariantMode::kDefaultsOnly, VariantMode::kG2gOnly}) {
    CHECK(ParseMode(ModeName(m)) == m);
  }
  CHECK_THROWS_AS(ParseMode("both"), Error);
}

TEST_CASE("decoding lexicon layout") {
  const auto &m = PairsModel();
  std::vector<WrittenForm> names = {W("Sera"), W("Kaity"), W("Ly"), W("Kaity")};
  auto lex = BuildDecodingLexicon(names, &m, VariantBudget(2), VariantOptions{});
  REQUIRE(lex.entries.size() == 3);
  CHECK(FormatLexicon(lex) ==
        "Kaity\t1\tK_WB a i t y_WB\nKaity\t2\tk_WB a i t y_WB\n"
        "Ly\t1\tL_WB y_WB\nLy\t2\tl_WB y_WB\n"
        "Sera\t1\tS_WB e r a_WB\nSera\t2\ts_WB e r a_WB\n");
  auto s = lex.Summary();
  CHECK(s.names == 3);
  CHECK(s.variants == 6);
  CHECK(s.g2g_variants == 0);

  auto scored = FormatLexicon(BuildDecodingLexicon(names, &m, VariantBudget(3), VariantOptions{}),
                              true);
  CHECK(scored.find("Kaity\t1\tK_WB a i t y_WB\t-\n") != std::string::npos);
  CHECK(scored.find("Kaity\t3\tK_WB a t i e_WB\t-") != std::string::npos);
}

TEST_CASE("name lists") {
  test::TempDir dir;
  auto names = ReadNames(dir.Write("n.txt", "Kaity\n\n  Sera \n"));
  REQUIRE(names.size() == 2);
  CHECK(names[1].str() == "Sera");
  try {
    ParseNames({"Kaity", "K@ity"});
    FAIL("accepted a bad name");
  } catch (const ParseError &e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(ParseNames({"", " "}), Error);
}

TEST_CASE("budget sweep properties") {
  const auto &m = PairsModel();
  std::mt19937 rng(7);
  auto names = RandomNames(rng, 60);
  for (auto mode : {VariantMode::kMixed, VariantMode::kG2gOnly}) {
    VariantOptions opt{.mode = mode};
    std::vector<DecodingLexicon> sweep;
    for (int n = 1; n <= 5; ++n) {
      sweep.push_back(BuildDecodingLexicon(names, &m, VariantBudget(n), opt));
    }
    for (int n = 1; n <= 5; ++n) {
      const auto &lex = sweep[n - 1];
      for (size_t i = 0; i < lex.entries.size(); ++i) {
        const auto &e = lex.entries[i];
        CAPTURE(e.name.str());
        CHECK(!e.variants.empty());
        CHECK(e.variants.size() <= static_cast<size_t>(n));
        auto r = Rendered(e);
        auto sorted = r;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
        if (mode == VariantMode::kMixed) {
          auto defaults = DefaultPronunciations(e.name);
          size_t k = std::min(defaults.size(), static_cast<size_t>(n));
          for (size_t j = 0; j < k; ++j) CHECK(e.variants[j].units == defaults[j]);
        }
        if (n > 1) {
          // A larger budget only appends.
          auto prev = Rendered(sweep[n - 2].entries[i]);
          REQUIRE(prev.size() <= r.size());
          CHECK(std::equal(prev.begin(), prev.end(), r.begin()));
        }
      }
    }
  }
}

TEST_CASE("capitalized names at budget two match defaults only") {
  const auto &m = PairsModel();
  std::mt19937 rng(11);
  std::vector<WrittenForm> names;
  for (const auto &n : RandomNames(rng, 80)) {
    if (n.str().size() > 0 && std::isupper(static_cast<unsigned char>(n.str()[0]))) {
      names.push_back(n);
    }
  }
  auto mixed = BuildDecodingLexicon(names, &m, VariantBudget(2), VariantOptions{});
  auto defaults = BuildDecodingLexicon(names, nullptr, VariantBudget(2),
                                       {.mode = VariantMode::kDefaultsOnly});
  CHECK(FormatLexicon(mixed) == FormatLexicon(defaults));
}

TEST_CASE("lexicon does not depend on worker count or input order") {
  const auto &m = PairsModel();
  std::mt19937 rng(3);
  auto names = RandomNames(rng, 40);
  auto base = FormatLexicon(BuildDecodingLexicon(names, &m, VariantBudget(4), {}, 1), true);
  std::shuffle(names.begin(), names.end(), rng);
  CHECK(FormatLexicon(BuildDecodingLexicon(names, &m, VariantBudget(4), {}, 4), true) == base);
}

}  // TEST_SUITE

}  // namespace
}  // namespace g2g
