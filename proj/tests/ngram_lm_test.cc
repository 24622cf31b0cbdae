// ngram_lm_test.cc
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

#include "g2g/ngram_lm.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "g2g/error.h"
#include "oracles/witten_bell_oracle.h"

namespace g2g {
namespace {

using Corpus = std::vector<std::vector<std::string>>;

Corpus RandomCorpus(std::mt19937 &rng, size_t max_sentences, size_t alphabet_size,
                    size_t max_len) {
  std::uniform_int_distribution<size_t> n_sent(1, max_sentences);
  std::uniform_int_distribution<size_t> len(0, max_len);
  std::uniform_int_distribution<size_t> sym(0, alphabet_size - 1);
  Corpus c(n_sent(rng));
  for (auto &s : c) {
    for (size_t i = len(rng); i > 0; --i) s.push_back(std::string(1, static_cast<char>('a' + sym(rng))));
  }
  return c;
}

std::vector<std::string> Names(const NgramLm &lm, const std::vector<TokenId> &ids) {
  std::vector<std::string> out;
  for (TokenId t : ids) out.push_back(lm.symbols()[t]);
  return out;
}

TEST_SUITE("ngram_lm") {

TEST_CASE("rejects bad input") {
  CHECK_THROWS_AS(NgramLm::Train({}, 3), Error);
  CHECK_THROWS_AS(NgramLm::Train({{"a"}}, 0), Error);
  try {
    NgramLm::Train({{"<s>"}}, 2);
    FAIL("reserved token accepted");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::kInvalidArgument);
  }
}

TEST_CASE("hand-computed bigram estimate") {
  // Corpus ab, ab, ac as tagged tokens. Unigram: N = 9 events, T = 4 types,
  // |V| = 5 (<unk>, </s>, a_B, b_E, c_E), so P(b_E) = (2 + 4/5) / 13 = 14/65.
  // Context a_B: c = 3, T = 2, so P(b_E | a_B) = (2 + 2 * 14/65) / 5 = 158/325.
  Corpus corpus = {{"a_B", "b_E"}, {"a_B", "b_E"}, {"a_B", "c_E"}};
  NgramLm lm = NgramLm::Train(corpus, 2);
  std::vector<TokenId> ctx = {lm.Id("a_B")};
  CHECK(std::pow(10.0, lm.LogProb(lm.Id("b_E"), ctx)) == doctest::Approx(158.0 / 325.0).epsilon(1e-12));
  CHECK(std::pow(10.0, lm.LogProb(lm.Id("b_E"), {})) == doctest::Approx(14.0 / 65.0).epsilon(1e-12));
  // Unseen successor of a_B backs off with weight T / (c + T) = 2/5.
  double unk = (0 + 4.0 / 5.0) / 13.0;
  CHECK(std::pow(10.0, lm.LogProb(NgramLm::kUnk, ctx)) == doctest::Approx(0.4 * unk).epsilon(1e-12));
}

TEST_CASE("oracle equivalence on small corpora") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int order = 1 + static_cast<int>(rng() % 4);
    Corpus corpus = RandomCorpus(rng, 20, 1 + rng() % 4, 5);
    NgramLm lm = NgramLm::Train(corpus, order);
    oracle::WittenBellOracle oracle(corpus, order);

    auto contexts = lm.Contexts();
    // Contexts never seen in training exercise the pure backoff path.
    contexts.push_back({lm.Id("a"), lm.Id("a"), lm.Id("a")});
    contexts.push_back({NgramLm::kBos, NgramLm::kUnk});
    for (const auto &ctx : contexts) {
      for (TokenId w : lm.PredictableTokens()) {
        double got = std::pow(10.0, lm.LogProb(w, ctx));
        double want = oracle.Prob(Names(lm, ctx), lm.symbols()[w]);
        REQUIRE(got == doctest::Approx(want).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("every context normalizes") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Corpus corpus = RandomCorpus(rng, 50, 5, 8);
    NgramLm lm = NgramLm::Train(corpus, 1 + static_cast<int>(rng() % 6));
    for (const auto &ctx : lm.Contexts()) {
      double sum = 0;
      for (TokenId w : lm.PredictableTokens()) {
        double lp = lm.LogProb(w, ctx);
        REQUIRE(std::isfinite(lp));
        REQUIRE(lp <= 0.0);
        sum += std::pow(10.0, lp);
      }
      REQUIRE(sum == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("corpus order does not change the model") {
  std::mt19937 rng(3);
  Corpus corpus = RandomCorpus(rng, 30, 4, 6);
  NgramLm a = NgramLm::Train(corpus, 4);
  std::shuffle(corpus.begin(), corpus.end(), rng);
  NgramLm b = NgramLm::Train(corpus, 4);
  std::string sa, sb;
  a.Write(sa);
  b.Write(sb);
  CHECK(sa == sb);
}

TEST_CASE("write/read round trip is exact") {
  std::mt19937 rng(9);
  Corpus corpus = RandomCorpus(rng, 25, 4, 6);
  NgramLm lm = NgramLm::Train(corpus, 3);
  std::string text;
  lm.Write(text);
  std::vector<std::string> lines;
  size_t start = 0;
  while (start < text.size()) {
    size_t nl = text.find('\n', start);
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  LineReader in(lines);
  NgramLm back = NgramLm::Read(in);
  std::string again;
  back.Write(again);
  CHECK(text == again);
  CHECK(back.NgramCounts() == lm.NgramCounts());
  for (const auto &ctx : lm.Contexts()) {
    for (TokenId w : lm.PredictableTokens()) {
      CHECK(back.LogProb(back.Id(lm.symbols()[w]), ctx) == lm.LogProb(w, ctx));
    }
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace g2g
