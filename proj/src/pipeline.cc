// pipeline.cc
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
#include <optional>

#include "g2g/error.h"
#include "g2g/parallel.h"
#include "g2g/text_io.h"

namespace g2g {
namespace {

std::vector<StringPair> ToStringPairs(std::span<const WordPair> pairs) {
  std::vector<StringPair> out;
  out.reserve(pairs.size());
  for (const auto &p : pairs) out.emplace_back(p.source.str(), p.target.str());
  return out;
}

// Decodes the name as written, then lowercased. nullopt when neither works.
std::optional<std::vector<DecodeHypothesis>> TryDecode(const G2gModel &model,
                                                       const WrittenForm &name,
                                                       const DecodeOptions &options) {
  std::vector<WrittenForm> forms = {name};
  WrittenForm lower = Lowercase(name);
  if (lower != name) forms.push_back(lower);
  for (const auto &f : forms) {
    try {
      return DecodeTopN(model, f, options);
    } catch (const Error &e) {
      if (e.kind() != ErrorKind::kOovGrapheme && e.kind() != ErrorKind::kNoHypothesis) throw;
    }
  }
  return std::nullopt;
}

}  // namespace

HomTrainingResult TrainG2gHom(std::span<const LexiconEntry> lexicon, const CharLm &lm,
                              const PhoneInventory &inventory, const G2gConfig &config) {
  auto clusters = AssignRoots(BuildClusters(lexicon, inventory), lm);
  auto pairs = EmitPairs(clusters);
  if (pairs.empty()) throw Error(ErrorKind::kEmptyCorpus, "the lexicon has no homophone clusters");
  G2gModel model = TrainG2gFromPairs(pairs, config);
  return {std::move(clusters), std::move(pairs), std::move(model)};
}

G2gModel TrainG2gFromPairs(std::span<const WordPair> pairs, const G2gConfig &config) {
  if (pairs.empty()) throw Error(ErrorKind::kEmptyCorpus, "no training pairs");
  return G2gModel::Train(ToStringPairs(pairs), config);
}

std::string_view ModeName(VariantMode mode) {
  switch (mode) {
    case VariantMode::kMixed:
      return "mixed";
    case VariantMode::kDefaultsOnly:
      return "defaults-only";
    case VariantMode::kG2gOnly:
      return "g2g-only";
  }
  return "?";
}

VariantMode ParseMode(std::string_view name) {
  for (auto m : {VariantMode::kMixed, VariantMode::kDefaultsOnly, VariantMode::kG2gOnly}) {
    if (ModeName(m) == name) return m;
  }
  throw Error(ErrorKind::kInvalidArgument,
              "unknown mode '" + std::string(name) + "' (mixed, defaults-only, g2g-only)");
}

VariantBudget::VariantBudget(int n_max) : n_max_(n_max) {
  if (n_max < 1) throw Error(ErrorKind::kInvalidArgument, "variant budget must be >= 1");
}

VariantList GenerateVariants(const G2gModel *model, const WrittenForm &name,
                             const VariantBudget &budget, const VariantOptions &options) {
  const size_t n_max = static_cast<size_t>(budget.n_max());
  VariantList out{name, {}, false};
  auto contains = [&](const AmUnitSeq &units) {
    return std::any_of(out.variants.begin(), out.variants.end(),
                       [&](const Variant &v) { return v.units == units; });
  };
  auto add_defaults = [&] {
    for (auto &units : DefaultPronunciations(name)) {
      if (out.variants.size() < n_max && !contains(units)) out.variants.push_back({std::move(units)});
    }
  };

  if (options.mode != VariantMode::kG2gOnly) add_defaults();
  if (options.mode == VariantMode::kDefaultsOnly || out.variants.size() >= n_max) return out;
  if (model == nullptr) throw Error(ErrorKind::kInvalidArgument, "this mode needs a G2G model");

  // Ask for enough hypotheses that duplicates of the defaults cannot starve
  // the budget.
  DecodeOptions decode;
  decode.n = n_max + 2;
  decode.beam = std::max(options.beam, decode.n);
  decode.max_insertions = options.max_insertions;
  auto hyps = TryDecode(*model, name, decode);
  if (!hyps) {
    out.fallback = true;
    if (options.mode == VariantMode::kG2gOnly) add_defaults();
    return out;
  }
  for (const auto &h : *hyps) {
    if (out.variants.size() >= n_max) break;
    AmUnitSeq units = ToAmUnits(h.output);
    if (!contains(units)) out.variants.push_back({std::move(units), true, h.logprob});
  }
  return out;
}

LexiconSummary DecodingLexicon::Summary() const {
  LexiconSummary s;
  s.names = entries.size();
  for (const auto &e : entries) {
    s.variants += e.variants.size();
    for (const auto &v : e.variants) s.g2g_variants += v.from_g2g;
    s.fallbacks += e.fallback;
  }
  return s;
}

std::vector<WrittenForm> ParseNames(const std::vector<std::string> &lines) {
  std::vector<WrittenForm> names;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (Trim(lines[i]).empty()) continue;
    try {
      names.push_back(NormalizeWritten(lines[i]));
    } catch (const Error &e) {
      throw ParseError(i + 1, e.what());
    }
  }
  if (names.empty()) throw Error(ErrorKind::kEmptyInput, "no names");
  return names;
}

std::vector<WrittenForm> ReadNames(const std::string &path) { return ParseNames(ReadLines(path)); }

DecodingLexicon BuildDecodingLexicon(std::span<const WrittenForm> names, const G2gModel *model,
                                     const VariantBudget &budget, const VariantOptions &options,
                                     int jobs) {
  std::vector<WrittenForm> unique(names.begin(), names.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  std::vector<std::optional<VariantList>> slots(unique.size());
  ParallelFor(unique.size(), jobs, [&](size_t i) {
    slots[i] = GenerateVariants(model, unique[i], budget, options);
  });
  DecodingLexicon lex;
  lex.entries.reserve(slots.size());
  for (auto &s : slots) lex.entries.push_back(std::move(*s));
  return lex;
}

std::string FormatLexicon(const DecodingLexicon &lexicon, bool with_scores) {
  std::string out;
  for (const auto &e : lexicon.entries) {
    for (size_t i = 0; i < e.variants.size(); ++i) {
      const Variant &v = e.variants[i];
      out += e.name.str() + "\t" + std::to_string(i + 1) + "\t" + Render(v.units);
      if (with_scores) out += "\t" + (v.from_g2g ? FormatDouble(v.logprob) : std::string("-"));
      out += '\n';
    }
  }
  return out;
}

}  // namespace g2g
