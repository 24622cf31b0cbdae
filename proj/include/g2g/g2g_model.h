// g2g_model.h
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
// Joint-sequence transducer: an n-gram model over joint units trained on
// one Viterbi alignment per pair, plus top-N beam decoding.
//
// Model file layout:
//
//   #g2g joint-sequence-model
//   version<TAB>1
//   max_source<TAB>2
//   max_target<TAB>2
//   link_penalty<TAB>0.1
//   lm_order<TAB>6
//   units<TAB>K
//   source|target<TAB>log10 p        (K lines)
//   \data\ ... \end\                 (graphone n-gram, ARPA-style)

#ifndef G2G_G2G_MODEL_H_
#define G2G_G2G_MODEL_H_

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "g2g/alignment.h"
#include "g2g/grapheme.h"
#include "g2g/ngram_lm.h"

namespace g2g {

// Throws Error(kEmptyCorpus) or Error(kInvalidOrder).
NgramLm TrainGraphoneLm(std::span<const JointSeq> aligned, int order);

struct G2gConfig {
  AlignmentConfig alignment;
  int lm_order = 6;
};

struct DecodeHypothesis {
  WrittenForm output;
  double logprob = 0;  // log10 of the best joint path, end of word included
  size_t rank = 0;     // 1-based
  JointSeq units;      // the best path
};

inline constexpr size_t kUnlimitedBeam = std::numeric_limits<size_t>::max();

struct DecodeOptions {
  size_t n = 1;
  size_t beam = kUnlimitedBeam;  // hypotheses kept per search layer
  int max_insertions = 2;        // consecutive units with an empty source
};

class G2gModel {
 public:
  // Sorts the pairs, runs EM alignment, takes one Viterbi alignment per pair
  // and trains the graphone LM on those.
  static G2gModel Train(std::span<const StringPair> pairs, const G2gConfig &config);
  static G2gModel FromParts(AlignmentModel alignment, NgramLm lm);

  const AlignmentModel &alignment() const { return alignment_; }
  const NgramLm &lm() const { return lm_; }
  // Characters that occur on each side of the LM's units, sorted.
  const std::string &source_alphabet() const { return source_alphabet_; }
  const std::string &target_alphabet() const { return target_alphabet_; }
  // Longest source segment among the LM's units.
  int max_source_length() const { return max_source_len_; }

  // Graphone LM tokens whose source segment equals `source`, as
  // (token, target segment) pairs in token order.
  const std::vector<std::pair<TokenId, std::string>> &UnitsWithSource(const std::string &source) const;

  std::string Serialize() const;
  // Throws Error(kFormatVersionMismatch) or ParseError.
  static G2gModel Deserialize(std::vector<std::string> lines);
  void Save(const std::string &path) const;
  static G2gModel Load(const std::string &path);

 private:
  G2gModel(AlignmentModel alignment, NgramLm lm);

  AlignmentModel alignment_;
  NgramLm lm_;
  std::string source_alphabet_;
  std::string target_alphabet_;
  std::unordered_map<std::string, std::vector<std::pair<TokenId, std::string>>> by_source_;
  int max_source_len_ = 0;
};

// Top-n distinct outputs for `input`. Each output is scored by its best
// joint path; results are sorted by score, then output. Throws
// Error(kInvalidArgument) unless 1 <= n <= beam, Error(kOovGrapheme) for
// characters the model never saw on the source side and
// Error(kNoHypothesis) if no path consumes the whole input.
std::vector<DecodeHypothesis> DecodeTopN(const G2gModel &model, const WrittenForm &input,
                                         const DecodeOptions &options);

}  // namespace g2g

#endif  // G2G_G2G_MODEL_H_
