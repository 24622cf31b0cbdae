// ngram_lm.h
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
// Backoff n-gram model over opaque string tokens with interpolated
// Witten-Bell estimates. Both the character LM and the graphone LM of the
// joint-sequence model are instances of this class.
//
// For a context h seen c(h) times with T(h) distinct successors,
//
//   P(w | h) = (c(h, w) + T(h) P(w | h')) / (c(h) + T(h))
//
// where h' drops the oldest token of h. At the empty context the lower-order
// distribution is uniform over the predictable vocabulary (every token
// except <s>, including <unk> and </s>). Explicit entries are stored for
// every (h, w) seen in training; unseen w back off with weight
// T(h) / (c(h) + T(h)), so each context's distribution sums to one.
//
// All log-probabilities are base 10, as in ARPA files.

#ifndef G2G_NGRAM_LM_H_
#define G2G_NGRAM_LM_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "g2g/text_io.h"

namespace g2g {

using TokenId = int32_t;

class NgramLm {
 public:
  static constexpr TokenId kUnk = 0;
  static constexpr TokenId kBos = 1;
  static constexpr TokenId kEos = 2;
  static constexpr std::string_view kUnkSymbol = "<unk>";
  static constexpr std::string_view kBosSymbol = "<s>";
  static constexpr std::string_view kEosSymbol = "</s>";

  // Each sentence is a token sequence without begin/end markers; <s> is
  // prepended as context and </s> is predicted after the last token.
  // Throws Error(kEmptyCorpus) or Error(kInvalidOrder).
  static NgramLm Train(const std::vector<std::vector<std::string>> &sentences, int order);

  int order() const { return order_; }

  // Id -> symbol. Ids 0..2 are <unk>, <s>, </s>; the rest are sorted.
  const std::vector<std::string> &symbols() const { return symbols_; }
  size_t vocabulary_size() const { return symbols_.size(); }

  // kUnk for unknown symbols.
  TokenId Id(std::string_view symbol) const;

  // Every id that can be predicted (all but <s>).
  std::vector<TokenId> PredictableTokens() const;

  // log10 P(word | history). `history` is oldest-first and may begin with
  // kBos; only its last order()-1 tokens matter.
  double LogProb(TokenId word, std::span<const TokenId> history) const;

  // log10 of the probability of `tokens` followed by </s>, starting from <s>.
  double SentenceLogProb(std::span<const TokenId> tokens) const;

  // Contexts with explicit estimates, oldest-first; includes the empty one.
  std::vector<std::vector<TokenId>> Contexts() const;

  // Number of explicit (context, word) estimates of each order.
  std::vector<size_t> NgramCounts() const;

  // ARPA-style body: \data\ counts, \k-grams: sections, \end\.
  void Write(std::string &out) const;
  static NgramLm Read(LineReader &in);

 private:
  struct ContextNode {
    TokenId token;    // oldest token of this context
    uint32_t parent;  // context with that token dropped
    int depth;
    double log_bow = 0;
  };

  static uint64_t Key(uint32_t node, TokenId token) {
    return (static_cast<uint64_t>(node) << 32) | static_cast<uint32_t>(token);
  }

  NgramLm() = default;
  void InitSymbols(std::vector<std::string> ordinary);
  uint32_t FindOrAddChild(uint32_t node, TokenId token);
  int64_t FindChild(uint32_t node, TokenId token) const;
  double LogProbAtNode(uint32_t node, TokenId word) const;
  std::vector<TokenId> ContextTokens(uint32_t node) const;

  int order_ = 0;
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, TokenId> ids_;
  // Node 0 is the empty context. Children are keyed by (node, older token).
  std::vector<ContextNode> nodes_;
  std::unordered_map<uint64_t, uint32_t> children_;
  std::unordered_map<uint64_t, double> log_probs_;
};

}  // namespace g2g

#endif  // G2G_NGRAM_LM_H_
