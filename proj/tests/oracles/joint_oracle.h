// joint_oracle.h
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
// Exhaustive enumeration oracles for the joint-sequence code. Nothing here
// shares a lattice, a trellis or a beam with the library; every path is
// listed explicitly and scored from scratch.

#ifndef G2G_TESTS_ORACLES_JOINT_ORACLE_H_
#define G2G_TESTS_ORACLES_JOINT_ORACLE_H_

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "g2g/alignment.h"
#include "g2g/g2g_model.h"

namespace g2g::oracle {

// Every segmentation of (source, target) into units within the caps.
inline std::vector<JointSeq> AllSegmentations(const std::string &source, const std::string &target,
                                              int max_s, int max_t) {
  std::vector<JointSeq> out;
  JointSeq cur;
  std::function<void(size_t, size_t)> rec = [&](size_t i, size_t j) {
    if (i == source.size() && j == target.size()) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= max_s; ++a) {
      for (int b = 0; b <= max_t; ++b) {
        if ((a == 0 && b == 0) || i + a > source.size() || j + b > target.size()) continue;
        cur.push_back({source.substr(i, a), target.substr(j, b)});
        rec(i + a, j + b);
        cur.pop_back();
      }
    }
  };
  rec(0, 0);
  return out;
}

inline double Penalty(const JointUnit &u, double link_penalty) {
  return u.source.size() == 1 && u.target.size() == 1 ? 1.0 : link_penalty;
}

// Plain EM by enumeration, no pruning. Returns the natural-log likelihood
// after each E-step and leaves the final probabilities in `probs`.
inline std::vector<double> BruteForceEm(const std::vector<StringPair> &pairs,
                                        const AlignmentConfig &c, int iterations,
                                        std::map<JointUnit, double> &probs) {
  std::vector<std::vector<JointSeq>> paths;
  probs.clear();
  for (const auto &p : pairs) {
    paths.push_back(AllSegmentations(p.first, p.second, c.max_source, c.max_target));
    for (const auto &seq : paths.back()) {
      for (const auto &u : seq) probs[u] = 0;
    }
  }
  for (auto &[u, p] : probs) p = 1.0 / probs.size();
  std::vector<double> lls;
  for (int it = 0; it < iterations; ++it) {
    std::map<JointUnit, double> counts;
    double ll = 0;
    for (const auto &segs : paths) {
      std::vector<double> w(segs.size(), 1.0);
      double z = 0;
      for (size_t k = 0; k < segs.size(); ++k) {
        for (const auto &u : segs[k]) w[k] *= probs[u] * Penalty(u, c.link_penalty);
        z += w[k];
      }
      ll += std::log(z);
      for (size_t k = 0; k < segs.size(); ++k) {
        for (const auto &u : segs[k]) counts[u] += w[k] / z;
      }
    }
    lls.push_back(ll);
    if (it + 1 == iterations) break;
    double total = 0;
    for (const auto &[u, n] : counts) total += n;
    for (auto &[u, p] : probs) p = counts[u] / total;
  }
  return lls;
}

// Best path by exhaustive scoring with the library's documented tie rule.
inline JointSeq BruteForceViterbi(const std::string &source, const std::string &target,
                                  const AlignmentModel &m) {
  const JointSeq *best = nullptr;
  double best_score = 0;
  auto all = AllSegmentations(source, target, m.config().max_source, m.config().max_target);
  for (const auto &seq : all) {
    double s = 0;
    bool ok = true;
    for (const auto &u : seq) {
      double w = m.Weight(u);
      if (!(w > 0)) ok = false;
      s += ok ? std::log(w) : 0;
    }
    if (!ok) continue;
    bool better = best == nullptr || s > best_score + kTieTolerance;
    if (!better && std::abs(s - best_score) <= kTieTolerance) {
      better = seq.size() < best->size() || (seq.size() == best->size() && seq < *best);
    }
    if (better) {
      best = &seq;
      best_score = s;
    }
  }
  return best == nullptr ? JointSeq{} : *best;
}

struct ScoredOutput {
  std::string output;
  double logprob;
};

// Enumerates every graphone path that consumes `input`, with at most
// `max_insertions` empty-source units in a row, scores each with the LM from
// scratch and keeps the best score per output.
inline std::vector<ScoredOutput> BruteForceDecode(const G2gModel &model, const std::string &input,
                                                  int max_insertions) {
  const NgramLm &lm = model.lm();
  std::vector<JointUnit> units;
  std::vector<TokenId> ids;
  for (TokenId t = NgramLm::kEos + 1; t < static_cast<TokenId>(lm.symbols().size()); ++t) {
    units.push_back(JointUnit::Parse(lm.symbols()[t]));
    ids.push_back(t);
  }
  std::map<std::string, double> best;
  std::vector<TokenId> history = {NgramLm::kBos};
  std::function<void(size_t, int, double, const std::string &)> rec =
      [&](size_t pos, int eps, double score, const std::string &out) {
        if (pos == input.size() && !out.empty()) {
          double total = score + lm.LogProb(NgramLm::kEos, history);
          auto it = best.find(out);
          if (it == best.end() || total > it->second) best[out] = total;
        }
        for (size_t k = 0; k < units.size(); ++k) {
          const JointUnit &u = units[k];
          bool insertion = u.source.empty();
          if (insertion && eps >= max_insertions) continue;
          if (!insertion && input.compare(pos, u.source.size(), u.source) != 0) continue;
          double s = score + lm.LogProb(ids[k], history);
          history.push_back(ids[k]);
          rec(pos + u.source.size(), insertion ? eps + 1 : 0, s, out + u.target);
          history.pop_back();
        }
      };
  rec(0, 0, 0.0, "");
  std::vector<ScoredOutput> out;
  for (const auto &[o, s] : best) out.push_back({o, s});
  std::stable_sort(out.begin(), out.end(),
                   [](const ScoredOutput &a, const ScoredOutput &b) { return a.logprob > b.logprob; });
  return out;
}

}  // namespace g2g::oracle

#endif  // G2G_TESTS_ORACLES_JOINT_ORACLE_H_
