// pipeline.h
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
// End-to-end flows: homophone or external pairs in, G2G model out; names
// in, decoding lexicon of pronunciation variants out.
//
// Lexicon output is TSV `name<TAB>variant-index<TAB>am-units`, with a
// fourth log-probability column when scores are requested ("-" for the
// default variants, which have none).

#ifndef G2G_PIPELINE_H_
#define G2G_PIPELINE_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "g2g/char_lm.h"
#include "g2g/g2g_model.h"
#include "g2g/grapheme.h"
#include "g2g/homophone.h"

namespace g2g {

struct HomTrainingResult {
  std::vector<HomophoneCluster> clusters;
  std::vector<WordPair> pairs;
  G2gModel model;
};

// clusters -> roots -> pairs -> G2G model. Throws Error(kEmptyCorpus) when
// the lexicon holds no homophones.
HomTrainingResult TrainG2gHom(std::span<const LexiconEntry> lexicon, const CharLm &lm,
                              const PhoneInventory &inventory, const G2gConfig &config);

// Throws Error(kEmptyCorpus) for no pairs.
G2gModel TrainG2gFromPairs(std::span<const WordPair> pairs, const G2gConfig &config);

enum class VariantMode { kMixed, kDefaultsOnly, kG2gOnly };

std::string_view ModeName(VariantMode mode);
// "mixed", "defaults-only" or "g2g-only". Throws Error(kInvalidArgument).
VariantMode ParseMode(std::string_view name);

class VariantBudget {
 public:
  // Throws Error(kInvalidArgument) for n_max < 1.
  explicit VariantBudget(int n_max);
  int n_max() const { return n_max_; }

 private:
  int n_max_;
};

struct VariantOptions {
  VariantMode mode = VariantMode::kMixed;
  // Raised to the number of requested hypotheses when smaller. Budgets stay
  // nested (a larger n_max only appends) while n_max + 2 <= beam.
  size_t beam = 64;
  int max_insertions = 2;
};

struct Variant {
  AmUnitSeq units;
  bool from_g2g = false;
  double logprob = 0;  // G2G variants only
};

struct VariantList {
  WrittenForm name;
  std::vector<Variant> variants;
  // The model could not decode the name (unknown grapheme or no complete
  // path, in either casing), so only the defaults are listed.
  bool fallback = false;
};

// Mixed mode lists the default pronunciations first, then fills the budget
// with G2G decodes in score order, skipping duplicates. The model may be
// null only in defaults-only mode.
VariantList GenerateVariants(const G2gModel *model, const WrittenForm &name,
                             const VariantBudget &budget, const VariantOptions &options);

struct LexiconSummary {
  size_t names = 0;
  size_t variants = 0;
  size_t g2g_variants = 0;
  size_t fallbacks = 0;
};

struct DecodingLexicon {
  std::vector<VariantList> entries;  // one per distinct name, sorted by name

  LexiconSummary Summary() const;
};

// One name per line; blank lines skipped. Throws ParseError(line) for names
// that do not normalize and Error(kEmptyInput) if no names remain.
std::vector<WrittenForm> ParseNames(const std::vector<std::string> &lines);
std::vector<WrittenForm> ReadNames(const std::string &path);

DecodingLexicon BuildDecodingLexicon(std::span<const WrittenForm> names, const G2gModel *model,
                                     const VariantBudget &budget, const VariantOptions &options,
                                     int jobs = 1);

std::string FormatLexicon(const DecodingLexicon &lexicon, bool with_scores = false);

}  // namespace g2g

#endif  // G2G_PIPELINE_H_
