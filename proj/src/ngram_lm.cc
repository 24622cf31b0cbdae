// ngram_lm.cc
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
#include <set>
#include <string>
#include <utility>

#include "g2g/error.h"

namespace g2g {
namespace {

// ARPA convention for the never-predicted <s> unigram.
constexpr double kBosLogProb = -99.0;

bool IsMarker(std::string_view s) {
  return s == NgramLm::kUnkSymbol || s == NgramLm::kBosSymbol || s == NgramLm::kEosSymbol;
}

}  // namespace

void NgramLm::InitSymbols(std::vector<std::string> ordinary) {
  std::sort(ordinary.begin(), ordinary.end());
  ordinary.erase(std::unique(ordinary.begin(), ordinary.end()), ordinary.end());
  symbols_ = {std::string(kUnkSymbol), std::string(kBosSymbol), std::string(kEosSymbol)};
  symbols_.insert(symbols_.end(), ordinary.begin(), ordinary.end());
  ids_.clear();
  for (size_t i = 0; i < symbols_.size(); ++i) {
    ids_.emplace(symbols_[i], static_cast<TokenId>(i));
  }
  nodes_.clear();
  children_.clear();
  log_probs_.clear();
  nodes_.push_back({kUnk, 0, 0, 0.0});
}

TokenId NgramLm::Id(std::string_view symbol) const {
  auto it = ids_.find(std::string(symbol));
  return it == ids_.end() ? kUnk : it->second;
}

std::vector<TokenId> NgramLm::PredictableTokens() const {
  std::vector<TokenId> out;
  out.reserve(symbols_.size() - 1);
  for (TokenId t = 0; t < static_cast<TokenId>(symbols_.size()); ++t) {
    if (t != kBos) out.push_back(t);
  }
  return out;
}

uint32_t NgramLm::FindOrAddChild(uint32_t node, TokenId token) {
  auto [it, inserted] = children_.try_emplace(Key(node, token), 0);
  if (inserted) {
    it->second = static_cast<uint32_t>(nodes_.size());
    nodes_.push_back({token, node, nodes_[node].depth + 1, 0.0});
  }
  return it->second;
}

int64_t NgramLm::FindChild(uint32_t node, TokenId token) const {
  auto it = children_.find(Key(node, token));
  return it == children_.end() ? -1 : static_cast<int64_t>(it->second);
}

std::vector<TokenId> NgramLm::ContextTokens(uint32_t node) const {
  std::vector<TokenId> tokens;
  while (node != 0) {
    tokens.push_back(nodes_[node].token);
    node = nodes_[node].parent;
  }
  // Walking toward the root visits the oldest token first.
  return tokens;
}

NgramLm NgramLm::Train(const std::vector<std::vector<std::string>> &sentences, int order) {
  if (order < 1) {
    throw Error(ErrorKind::kInvalidOrder, "order must be >= 1, got " + std::to_string(order));
  }
  if (sentences.empty()) throw Error(ErrorKind::kEmptyCorpus, "no training sentences");

  NgramLm lm;
  lm.order_ = order;
  {
    std::set<std::string> seen;
    for (const auto &s : sentences) {
      for (const auto &tok : s) {
        if (IsMarker(tok) || tok.empty()) {
          throw Error(ErrorKind::kInvalidArgument, "reserved token '" + tok + "' in corpus");
        }
        seen.insert(tok);
      }
    }
    lm.InitSymbols({seen.begin(), seen.end()});
  }

  std::unordered_map<uint64_t, uint64_t> pair_counts;
  std::vector<uint64_t> context_total(1, 0), context_types(1, 0);
  auto add = [&](uint32_t node, TokenId word) {
    if (node >= context_total.size()) {
      context_total.resize(node + 1, 0);
      context_types.resize(node + 1, 0);
    }
    uint64_t &c = pair_counts[Key(node, word)];
    if (c++ == 0) ++context_types[node];
    ++context_total[node];
  };

  std::vector<TokenId> history;
  for (const auto &s : sentences) {
    history.assign(1, kBos);
    for (size_t i = 0; i <= s.size(); ++i) {
      TokenId word = i < s.size() ? lm.Id(s[i]) : kEos;
      uint32_t node = 0;
      add(node, word);
      for (size_t j = 1; j < static_cast<size_t>(order) && j <= history.size(); ++j) {
        node = lm.FindOrAddChild(node, history[history.size() - j]);
        add(node, word);
      }
      history.push_back(word);
    }
  }

  // Backoff weights depend on counts only, so they can be set up front.
  for (uint32_t n = 1; n < lm.nodes_.size(); ++n) {
    double c = static_cast<double>(context_total[n]);
    double t = static_cast<double>(context_types[n]);
    lm.nodes_[n].log_bow = std::log10(t / (c + t));
  }

  // Empty context: interpolate with the uniform distribution.
  {
    const double n_total = static_cast<double>(context_total[0]);
    const double types = static_cast<double>(context_types[0]);
    const double vocab = static_cast<double>(lm.symbols_.size() - 1);
    for (TokenId w : lm.PredictableTokens()) {
      auto it = pair_counts.find(Key(0, w));
      double c = it == pair_counts.end() ? 0.0 : static_cast<double>(it->second);
      lm.log_probs_[Key(0, w)] = std::log10((c + types / vocab) / (n_total + types));
    }
  }

  struct Entry {
    int depth;
    uint32_t node;
    TokenId word;
    uint64_t count;
  };
  std::vector<Entry> entries;
  entries.reserve(pair_counts.size());
  for (const auto &[key, count] : pair_counts) {
    auto node = static_cast<uint32_t>(key >> 32);
    if (node == 0) continue;
    entries.push_back({lm.nodes_[node].depth, node, static_cast<TokenId>(key & 0xffffffffu),
                       count});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry &a, const Entry &b) {
    if (a.depth != b.depth) return a.depth < b.depth;
    if (a.node != b.node) return a.node < b.node;
    return a.word < b.word;
  });
  for (const auto &e : entries) {
    double c = static_cast<double>(context_total[e.node]);
    double t = static_cast<double>(context_types[e.node]);
    double lower = std::pow(10.0, lm.LogProbAtNode(lm.nodes_[e.node].parent, e.word));
    lm.log_probs_[Key(e.node, e.word)] =
        std::log10((static_cast<double>(e.count) + t * lower) / (c + t));
  }
  return lm;
}

double NgramLm::LogProbAtNode(uint32_t node, TokenId word) const {
  double bow_sum = 0;
  while (true) {
    auto it = log_probs_.find(Key(node, word));
    if (it != log_probs_.end()) return bow_sum + it->second;
    if (node == 0) return bow_sum + log_probs_.at(Key(0, kUnk));
    bow_sum += nodes_[node].log_bow;
    node = nodes_[node].parent;
  }
}

double NgramLm::LogProb(TokenId word, std::span<const TokenId> history) const {
  if (word < 0 || word >= static_cast<TokenId>(symbols_.size()) || word == kBos) word = kUnk;
  auto it = log_probs_.find(Key(0, word));
  double best = it->second;
  double bow_sum = 0;
  uint32_t node = 0;
  size_t depth = std::min(history.size(), static_cast<size_t>(order_ - 1));
  for (size_t j = 1; j <= depth; ++j) {
    int64_t child = FindChild(node, history[history.size() - j]);
    if (child < 0) break;
    node = static_cast<uint32_t>(child);
    bow_sum += nodes_[node].log_bow;
    auto hit = log_probs_.find(Key(node, word));
    if (hit != log_probs_.end()) {
      best = hit->second;
      bow_sum = 0;
    }
  }
  return best + bow_sum;
}

double NgramLm::SentenceLogProb(std::span<const TokenId> tokens) const {
  std::vector<TokenId> history;
  history.reserve(tokens.size() + 1);
  history.push_back(kBos);
  double total = 0;
  for (TokenId t : tokens) {
    total += LogProb(t, history);
    history.push_back(t);
  }
  return total + LogProb(kEos, history);
}

std::vector<std::vector<TokenId>> NgramLm::Contexts() const {
  std::vector<std::vector<TokenId>> out;
  out.reserve(nodes_.size());
  for (uint32_t n = 0; n < nodes_.size(); ++n) out.push_back(ContextTokens(n));
  return out;
}

std::vector<size_t> NgramLm::NgramCounts() const {
  std::vector<size_t> counts(order_, 0);
  for (const auto &[key, lp] : log_probs_) {
    ++counts[nodes_[key >> 32].depth];
  }
  return counts;
}

void NgramLm::Write(std::string &out) const {
  struct Line {
    std::string tokens;
    std::string text;
  };
  std::vector<std::vector<Line>> sections(order_);
  for (const auto &[key, lp] : log_probs_) {
    auto node = static_cast<uint32_t>(key >> 32);
    auto word = static_cast<TokenId>(key & 0xffffffffu);
    std::vector<TokenId> toks = ContextTokens(node);
    toks.push_back(word);
    std::string joined;
    for (TokenId t : toks) {
      if (!joined.empty()) joined.push_back(' ');
      joined += symbols_[t];
    }
    std::string text = FormatDouble(lp) + "\t" + joined;
    // The n-gram is itself a context if the reverse walk finds a node for it.
    int64_t ctx = 0;
    for (auto it = toks.rbegin(); it != toks.rend() && ctx >= 0; ++it) {
      ctx = FindChild(static_cast<uint32_t>(ctx), *it);
    }
    if (ctx > 0) text += "\t" + FormatDouble(nodes_[ctx].log_bow);
    sections[nodes_[node].depth].push_back({std::move(joined), std::move(text)});
  }
  int64_t bos = FindChild(0, kBos);
  if (bos > 0) {
    sections[0].push_back({std::string(kBosSymbol), FormatDouble(kBosLogProb) + "\t" +
                                                        std::string(kBosSymbol) + "\t" +
                                                        FormatDouble(nodes_[bos].log_bow)});
  }

  out += "\\data\\\n";
  for (int k = 0; k < order_; ++k) {
    out += "ngram " + std::to_string(k + 1) + "=" + std::to_string(sections[k].size()) + "\n";
  }
  for (int k = 0; k < order_; ++k) {
    auto &lines = sections[k];
    std::sort(lines.begin(), lines.end(),
              [](const Line &a, const Line &b) { return a.tokens < b.tokens; });
    out += "\n\\" + std::to_string(k + 1) + "-grams:\n";
    for (const auto &l : lines) {
      out += l.text;
      out += '\n';
    }
  }
  out += "\n\\end\\\n";
}

NgramLm NgramLm::Read(LineReader &in) {
  auto next_nonblank = [&in]() {
    std::string_view line;
    do {
      line = in.Next();
    } while (Trim(line).empty());
    return line;
  };

  if (next_nonblank() != "\\data\\") throw ParseError(in.line_number(), "expected \\data\\");
  std::vector<size_t> counts;
  while (true) {
    std::string_view line = in.Next();
    if (Trim(line).empty()) break;
    if (line.substr(0, 6) != "ngram ") throw ParseError(in.line_number(), "expected ngram count");
    size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(in.line_number(), "expected ngram k=N");
    long k = ParseInt(line.substr(6, eq - 6), in.line_number());
    long n = ParseInt(line.substr(eq + 1), in.line_number());
    if (k != static_cast<long>(counts.size()) + 1 || n < 0) {
      throw ParseError(in.line_number(), "ngram counts out of sequence");
    }
    counts.push_back(static_cast<size_t>(n));
  }
  if (counts.empty()) throw ParseError(in.line_number(), "no ngram counts");

  struct Parsed {
    size_t line;
    double log_prob;
    std::vector<std::string_view> tokens;
    bool has_bow;
    double log_bow;
  };
  std::vector<std::vector<Parsed>> sections(counts.size());
  for (size_t k = 0; k < counts.size(); ++k) {
    std::string expect = "\\" + std::to_string(k + 1) + "-grams:";
    if (next_nonblank() != expect) throw ParseError(in.line_number(), "expected " + expect);
    for (size_t i = 0; i < counts[k]; ++i) {
      std::string_view line = in.Next();
      auto fields = SplitTabs(line);
      if (fields.size() != 2 && fields.size() != 3) {
        throw ParseError(in.line_number(), "expected logprob<TAB>tokens[<TAB>backoff]");
      }
      Parsed p{in.line_number(), ParseDouble(fields[0], in.line_number()),
               SplitWhitespace(fields[1]), fields.size() == 3,
               fields.size() == 3 ? ParseDouble(fields[2], in.line_number()) : 0.0};
      if (p.tokens.size() != k + 1) throw ParseError(p.line, "wrong number of tokens");
      if (p.log_prob > 0 || !std::isfinite(p.log_prob)) {
        throw ParseError(p.line, "log-probability must be finite and <= 0");
      }
      sections[k].push_back(std::move(p));
    }
  }
  if (next_nonblank() != "\\end\\") throw ParseError(in.line_number(), "expected \\end\\");

  NgramLm lm;
  lm.order_ = static_cast<int>(counts.size());
  {
    std::vector<std::string> ordinary;
    bool has_unk = false, has_bos = false, has_eos = false;
    for (const auto &p : sections[0]) {
      std::string_view s = p.tokens[0];
      has_unk |= s == kUnkSymbol;
      has_bos |= s == kBosSymbol;
      has_eos |= s == kEosSymbol;
      if (!IsMarker(s)) ordinary.emplace_back(s);
    }
    if (!has_unk || !has_eos) throw ParseError(in.line_number(), "missing <unk> or </s> unigram");
    (void)has_bos;
    lm.InitSymbols(std::move(ordinary));
  }
  auto id_of = [&lm](std::string_view s, size_t line) {
    auto it = lm.ids_.find(std::string(s));
    if (it == lm.ids_.end()) throw ParseError(line, "token not in unigrams: " + std::string(s));
    return it->second;
  };
  for (const auto &section : sections) {
    for (const auto &p : section) {
      std::vector<TokenId> ids;
      ids.reserve(p.tokens.size());
      for (auto t : p.tokens) ids.push_back(id_of(t, p.line));
      bool bos_unigram = ids.size() == 1 && ids[0] == kBos;
      if (!bos_unigram) {
        uint32_t ctx = 0;
        for (size_t j = ids.size() - 1; j-- > 0;) ctx = lm.FindOrAddChild(ctx, ids[j]);
        if (!lm.log_probs_.emplace(Key(ctx, ids.back()), p.log_prob).second) {
          throw ParseError(p.line, "duplicate n-gram");
        }
      }
      if (p.has_bow) {
        uint32_t node = 0;
        for (size_t j = ids.size(); j-- > 0;) node = lm.FindOrAddChild(node, ids[j]);
        lm.nodes_[node].log_bow = p.log_bow;
      }
    }
  }
  for (TokenId w : lm.PredictableTokens()) {
    if (!lm.log_probs_.contains(Key(0, w))) {
      throw ParseError(in.line_number(), "unigram missing for " + lm.symbols_[w]);
    }
  }
  return lm;
}

}  // namespace g2g
