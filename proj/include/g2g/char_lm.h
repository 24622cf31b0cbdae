// char_lm.h
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
// Position-tagged character LM. Each word is modeled as its tagged grapheme
// sequence ("i_B n t e r e s t i n g_E") followed by an end-of-word event.

#ifndef G2G_CHAR_LM_H_
#define G2G_CHAR_LM_H_

#include <span>
#include <string>
#include <vector>

#include "g2g/grapheme.h"
#include "g2g/ngram_lm.h"

namespace g2g {

struct WordScore {
  double total_logprob = 0;  // log10
  size_t token_count = 0;    // graphemes plus the end-of-word event
  double normalized = 0;     // total_logprob / token_count
};

class CharLm {
 public:
  static constexpr int kDefaultOrder = 10;

  // Throws Error(kEmptyCorpus) or Error(kInvalidOrder).
  static CharLm Train(std::span<const WrittenForm> words, int order = kDefaultOrder);

  // The LM token stream of a word, without the end-of-word event.
  static std::vector<std::string> Tokens(const WrittenForm &w);

  // Unknown graphemes are scored as <unk>.
  WordScore Score(const WrittenForm &w) const;

  int order() const { return lm_.order(); }
  const NgramLm &lm() const { return lm_; }

  std::string Serialize() const;
  static CharLm Deserialize(std::vector<std::string> lines);

  // Atomic write. Throws Error(kIo).
  void Save(const std::string &path) const;
  // Throws Error(kIo), Error(kFormatVersionMismatch) or ParseError.
  static CharLm Load(const std::string &path);

 private:
  explicit CharLm(NgramLm lm) : lm_(std::move(lm)) {}

  NgramLm lm_;
};

}  // namespace g2g

#endif  // G2G_CHAR_LM_H_
