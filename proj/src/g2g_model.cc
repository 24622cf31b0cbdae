// g2g_model.cc
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

#include "g2g/g2g_model.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "g2g/error.h"
#include "g2g/parallel.h"
#include "g2g/text_io.h"
#include "g2g/version.h"

namespace g2g {
namespace {

// One partial path through the search.
struct Hyp {
  double score;                  // log10
  std::vector<TokenId> history;  // at most order - 1 most recent tokens
  std::string output;
  std::vector<TokenId> path;
};

bool BetterPath(const Hyp &a, const Hyp &b) {
  return a.score > b.score || (a.score == b.score && a.path < b.path);
}

// Merges paths that share history and output (their futures score alike),
// then keeps the `beam` best.
std::vector<Hyp> Settle(std::vector<Hyp> hyps, size_t beam) {
  std::map<std::pair<std::vector<TokenId>, std::string>, Hyp> merged;
  for (auto &h : hyps) {
    auto key = std::make_pair(h.history, h.output);
    auto it = merged.find(key);
    if (it == merged.end()) {
      merged.emplace(std::move(key), std::move(h));
    } else if (BetterPath(h, it->second)) {
      it->second = std::move(h);
    }
  }
  std::vector<Hyp> out;
  out.reserve(merged.size());
  for (auto &[k, h] : merged) out.push_back(std::move(h));
  if (out.size() > beam) {
    std::stable_sort(out.begin(), out.end(), [](const Hyp &a, const Hyp &b) {
      if (a.score != b.score) return a.score > b.score;
      return std::tie(a.output, a.history) < std::tie(b.output, b.history);
    });
    out.resize(beam);
  }
  return out;
}

void CheckSegment(const std::string &seg, size_t line) {
  if (seg.empty()) return;
  try {
    WrittenForm check(seg);
  } catch (const Error &e) {
    throw ParseError(line, std::string("bad unit segment: ") + e.what());
  }
}

std::pair<std::string, std::string> Field(LineReader &in, const std::string &name) {
  auto f = SplitTabs(in.Next());
  if (f.size() != 2 || f[0] != name) throw ParseError(in.line_number(), "expected " + name + "<TAB>value");
  return {std::string(f[0]), std::string(f[1])};
}

}  // namespace

NgramLm TrainGraphoneLm(std::span<const JointSeq> aligned, int order) {
  if (order < 1) throw Error(ErrorKind::kInvalidOrder, "order must be >= 1, got " + std::to_string(order));
  if (aligned.empty()) throw Error(ErrorKind::kEmptyCorpus, "no aligned sequences");
  std::vector<std::vector<std::string>> sentences;
  sentences.reserve(aligned.size());
  for (const auto &seq : aligned) {
    std::vector<std::string> s;
    for (const auto &u : seq) s.push_back(u.Render());
    sentences.push_back(std::move(s));
  }
  return NgramLm::Train(sentences, order);
}

G2gModel::G2gModel(AlignmentModel alignment, NgramLm lm)
    : alignment_(std::move(alignment)), lm_(std::move(lm)) {
  std::set<char> src, tgt;
  const auto &symbols = lm_.symbols();
  for (TokenId t = NgramLm::kEos + 1; t < static_cast<TokenId>(symbols.size()); ++t) {
    JointUnit u = JointUnit::Parse(symbols[t]);
    src.insert(u.source.begin(), u.source.end());
    tgt.insert(u.target.begin(), u.target.end());
    max_source_len_ = std::max(max_source_len_, static_cast<int>(u.source.size()));
    by_source_[u.source].emplace_back(t, u.target);
  }
  source_alphabet_.assign(src.begin(), src.end());
  target_alphabet_.assign(tgt.begin(), tgt.end());
}

G2gModel G2gModel::FromParts(AlignmentModel alignment, NgramLm lm) {
  return G2gModel(std::move(alignment), std::move(lm));
}

G2gModel G2gModel::Train(std::span<const StringPair> pairs, const G2gConfig &config) {
  if (config.lm_order < 1) {
    throw Error(ErrorKind::kInvalidOrder, "order must be >= 1, got " + std::to_string(config.lm_order));
  }
  // Sorting makes the model independent of input order.
  std::vector<StringPair> sorted(pairs.begin(), pairs.end());
  std::sort(sorted.begin(), sorted.end());
  AlignmentModel alignment = AlignEm(sorted, config.alignment);
  std::vector<JointSeq> aligned(sorted.size());
  ParallelFor(sorted.size(), config.alignment.jobs, [&](size_t i) {
    aligned[i] = ViterbiAlign(sorted[i].first, sorted[i].second, alignment);
  });
  NgramLm lm = TrainGraphoneLm(aligned, config.lm_order);
  return G2gModel(std::move(alignment), std::move(lm));
}

const std::vector<std::pair<TokenId, std::string>> &G2gModel::UnitsWithSource(
    const std::string &source) const {
  static const std::vector<std::pair<TokenId, std::string>> kNone;
  auto it = by_source_.find(source);
  return it == by_source_.end() ? kNone : it->second;
}

std::string G2gModel::Serialize() const {
  const AlignmentConfig &c = alignment_.config();
  std::string out;
  out += kG2gModelMagic;
  out += "\nversion\t" + std::to_string(kG2gModelFormatVersion) + "\n";
  out += "max_source\t" + std::to_string(c.max_source) + "\n";
  out += "max_target\t" + std::to_string(c.max_target) + "\n";
  out += "link_penalty\t" + FormatDouble(c.link_penalty) + "\n";
  out += "lm_order\t" + std::to_string(lm_.order()) + "\n";
  out += "units\t" + std::to_string(alignment_.size()) + "\n";
  for (const auto &[u, p] : alignment_.units()) {
    out += u.Render() + "\t" + FormatDouble(std::log10(p)) + "\n";
  }
  lm_.Write(out);
  return out;
}

G2gModel G2gModel::Deserialize(std::vector<std::string> lines) {
  LineReader in(std::move(lines));
  if (in.AtEnd() || in.Next() != kG2gModelMagic) {
    throw Error(ErrorKind::kFormatVersionMismatch, "not a g2g joint-sequence model file");
  }
  std::string_view version = in.Next();
  if (version != "version\t" + std::to_string(kG2gModelFormatVersion)) {
    throw Error(ErrorKind::kFormatVersionMismatch,
                "unsupported model version line '" + std::string(version) + "'");
  }
  AlignmentConfig config;
  config.max_source = static_cast<int>(ParseInt(Field(in, "max_source").second, in.line_number()));
  config.max_target = static_cast<int>(ParseInt(Field(in, "max_target").second, in.line_number()));
  config.link_penalty = ParseDouble(Field(in, "link_penalty").second, in.line_number());
  long order = ParseInt(Field(in, "lm_order").second, in.line_number());
  long count = ParseInt(Field(in, "units").second, in.line_number());
  try {
    Validate(config);
  } catch (const Error &e) {
    throw ParseError(in.line_number(), e.what());
  }
  if (count < 1) throw ParseError(in.line_number(), "model has no units");

  std::map<JointUnit, double> probs;
  for (long i = 0; i < count; ++i) {
    auto f = SplitTabs(in.Next());
    size_t line = in.line_number();
    if (f.size() != 2) throw ParseError(line, "expected source|target<TAB>logprob");
    JointUnit u;
    try {
      u = JointUnit::Parse(f[0]);
    } catch (const Error &e) {
      throw ParseError(line, e.what());
    }
    CheckSegment(u.source, line);
    CheckSegment(u.target, line);
    double lp = ParseDouble(f[1], line);
    if (!std::isfinite(lp) || lp > 0) throw ParseError(line, "unit log-probability must be finite and <= 0");
    if (!probs.emplace(u, std::pow(10.0, lp)).second) throw ParseError(line, "duplicate unit " + u.Render());
  }
  AlignmentModel alignment = [&] {
    try {
      return AlignmentModel::FromProbabilities(std::move(probs), config);
    } catch (const Error &e) {
      throw ParseError(in.line_number(), e.what());
    }
  }();

  NgramLm lm = NgramLm::Read(in);
  if (lm.order() != order) throw ParseError(in.line_number(), "lm_order does not match n-gram sections");
  const auto &symbols = lm.symbols();
  for (TokenId t = NgramLm::kEos + 1; t < static_cast<TokenId>(symbols.size()); ++t) {
    JointUnit u;
    try {
      u = JointUnit::Parse(symbols[t]);
    } catch (const Error &e) {
      throw ParseError(in.line_number(), e.what());
    }
    CheckSegment(u.source, in.line_number());
    CheckSegment(u.target, in.line_number());
    if (u.source.size() > static_cast<size_t>(config.max_source) ||
        u.target.size() > static_cast<size_t>(config.max_target)) {
      throw ParseError(in.line_number(), "graphone " + u.Render() + " exceeds the caps");
    }
  }
  return G2gModel(std::move(alignment), std::move(lm));
}

void G2gModel::Save(const std::string &path) const { AtomicWriteFile(path, Serialize()); }

G2gModel G2gModel::Load(const std::string &path) { return Deserialize(ReadLines(path)); }

std::vector<DecodeHypothesis> DecodeTopN(const G2gModel &model, const WrittenForm &input,
                                         const DecodeOptions &options) {
  if (options.n < 1 || options.beam < options.n) {
    throw Error(ErrorKind::kInvalidArgument, "decoding needs 1 <= n <= beam");
  }
  if (options.max_insertions < 0) throw Error(ErrorKind::kInvalidArgument, "max_insertions must be >= 0");
  const std::string &text = input.str();
  for (char c : text) {
    if (model.source_alphabet().find(c) == std::string::npos) {
      throw Error(ErrorKind::kOovGrapheme,
                  std::string("'") + c + "' in '" + text + "' is not in the model's source alphabet");
    }
  }

  const NgramLm &lm = model.lm();
  const size_t keep = static_cast<size_t>(lm.order() - 1);
  auto extend = [&](const Hyp &h, TokenId token, const std::string &target) {
    Hyp next{h.score + lm.LogProb(token, h.history), h.history, h.output + target, h.path};
    next.history.push_back(token);
    if (next.history.size() > keep) next.history.erase(next.history.begin());
    next.path.push_back(token);
    return next;
  };

  const size_t len = text.size();
  const size_t max_source = static_cast<size_t>(model.max_source_length());
  std::vector<std::vector<Hyp>> arrivals(len + 1);
  Hyp start{0, {}, "", {}};
  if (keep > 0) start.history.push_back(NgramLm::kBos);
  arrivals[0].push_back(std::move(start));
  const auto &insertions = model.UnitsWithSource("");

  std::vector<Hyp> finals;
  for (size_t i = 0; i <= len; ++i) {
    std::vector<Hyp> layer = Settle(std::move(arrivals[i]), options.beam);
    std::vector<Hyp> here = layer;
    for (int e = 0; e < options.max_insertions && !insertions.empty(); ++e) {
      std::vector<Hyp> next;
      for (const Hyp &h : layer) {
        for (const auto &[tok, tgt] : insertions) next.push_back(extend(h, tok, tgt));
      }
      layer = Settle(std::move(next), options.beam);
      here.insert(here.end(), layer.begin(), layer.end());
    }
    if (i == len) {
      finals = std::move(here);
      break;
    }
    for (const Hyp &h : here) {
      for (size_t k = 1; k <= max_source && i + k <= len; ++k) {
        for (const auto &[tok, tgt] : model.UnitsWithSource(text.substr(i, k))) {
          arrivals[i + k].push_back(extend(h, tok, tgt));
        }
      }
    }
  }

  // Best complete path per output string.
  std::map<std::string, Hyp> by_output;
  for (Hyp &h : finals) {
    if (h.output.empty()) continue;
    h.score += lm.LogProb(NgramLm::kEos, h.history);
    auto it = by_output.find(h.output);
    if (it == by_output.end()) {
      by_output.emplace(h.output, std::move(h));
    } else if (BetterPath(h, it->second)) {
      it->second = std::move(h);
    }
  }
  if (by_output.empty()) {
    throw Error(ErrorKind::kNoHypothesis, "no complete path for '" + text + "'");
  }
  std::vector<const Hyp *> ranked;
  for (const auto &[out, h] : by_output) ranked.push_back(&h);
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const Hyp *a, const Hyp *b) { return a->score > b->score; });
  std::vector<DecodeHypothesis> result;
  for (size_t r = 0; r < ranked.size() && r < options.n; ++r) {
    JointSeq units;
    for (TokenId t : ranked[r]->path) units.push_back(JointUnit::Parse(lm.symbols()[t]));
    result.push_back({WrittenForm(ranked[r]->output), ranked[r]->score, r + 1, std::move(units)});
  }
  return result;
}

}  // namespace g2g
