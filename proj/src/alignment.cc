// alignment.cc
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

#include "g2g/alignment.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <unordered_map>

#include "g2g/error.h"
#include "g2g/parallel.h"

namespace g2g {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// The E-step always splits the corpus into this many slices, whatever the
// number of workers, so sums are reduced in the same order every run.
constexpr size_t kNumChunks = 64;

double LogAdd(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

// Visits every lattice edge of (source, target) in order of its start node.
// Nodes are numbered i * (|target| + 1) + j for i source and j target
// characters consumed, so every edge points to a higher number.
template <class Fn>
void ForEachEdge(const std::string &source, const std::string &target,
                 const AlignmentConfig &config, Fn &&fn) {
  const size_t s = source.size(), t = target.size();
  for (size_t i = 0; i <= s; ++i) {
    for (size_t j = 0; j <= t; ++j) {
      for (size_t a = 0; a <= static_cast<size_t>(config.max_source) && i + a <= s; ++a) {
        for (size_t b = 0; b <= static_cast<size_t>(config.max_target) && j + b <= t; ++b) {
          if (a == 0 && b == 0) continue;
          fn(static_cast<uint32_t>(i * (t + 1) + j), static_cast<uint32_t>((i + a) * (t + 1) + j + b),
             JointUnit{source.substr(i, a), target.substr(j, b)});
        }
      }
    }
  }
}

struct Edge {
  uint32_t from;
  uint32_t to;
  int32_t unit;
};

struct Lattice {
  uint32_t num_nodes;
  std::vector<Edge> edges;
};

struct EStepResult {
  double log_likelihood = 0;
  std::vector<double> counts;
  size_t first_failure;  // index of the first unalignable pair, or npos
};

// Forward-backward over every lattice with per-unit log weights; -inf marks
// a removed unit.
EStepResult EStep(const std::vector<Lattice> &lattices, const std::vector<double> &log_w,
                  int jobs) {
  const size_t n = lattices.size();
  const size_t chunks = std::min(n, kNumChunks);
  std::vector<std::vector<double>> chunk_counts(chunks);
  std::vector<double> chunk_ll(chunks, 0);
  std::vector<size_t> chunk_fail(chunks, std::string::npos);
  ParallelFor(chunks, jobs, [&](size_t c) {
    std::vector<double> &counts = chunk_counts[c];
    counts.assign(log_w.size(), 0);
    std::vector<double> alpha, beta;
    for (size_t p = c * n / chunks; p < (c + 1) * n / chunks; ++p) {
      const Lattice &lat = lattices[p];
      alpha.assign(lat.num_nodes, kNegInf);
      beta.assign(lat.num_nodes, kNegInf);
      alpha[0] = 0;
      beta[lat.num_nodes - 1] = 0;
      for (const Edge &e : lat.edges) {
        if (log_w[e.unit] == kNegInf || alpha[e.from] == kNegInf) continue;
        alpha[e.to] = LogAdd(alpha[e.to], alpha[e.from] + log_w[e.unit]);
      }
      double log_z = alpha[lat.num_nodes - 1];
      if (log_z == kNegInf) {
        chunk_fail[c] = p;
        return;
      }
      for (auto it = lat.edges.rbegin(); it != lat.edges.rend(); ++it) {
        if (log_w[it->unit] == kNegInf || beta[it->to] == kNegInf) continue;
        beta[it->from] = LogAdd(beta[it->from], log_w[it->unit] + beta[it->to]);
      }
      for (const Edge &e : lat.edges) {
        if (log_w[e.unit] == kNegInf) continue;
        double lp = alpha[e.from] + log_w[e.unit] + beta[e.to] - log_z;
        if (lp > kNegInf) counts[e.unit] += std::exp(lp);
      }
      chunk_ll[c] += log_z;
    }
  });
  EStepResult r;
  r.first_failure = std::string::npos;
  for (size_t c = 0; c < chunks; ++c) {
    if (chunk_fail[c] != std::string::npos) {
      r.first_failure = chunk_fail[c];
      r.log_likelihood = kNegInf;
      return r;
    }
  }
  r.counts.assign(log_w.size(), 0);
  for (size_t c = 0; c < chunks; ++c) {
    r.log_likelihood += chunk_ll[c];
    for (size_t u = 0; u < log_w.size(); ++u) r.counts[u] += chunk_counts[c][u];
  }
  return r;
}

// Probabilities proportional to `counts`, optionally dropping those under
// `threshold`. Returns false if nothing would survive.
bool Normalize(const std::vector<double> &counts, double threshold, std::vector<double> &probs) {
  double total = 0;
  for (double c : counts) {
    if (c > 0 && c >= threshold) total += c;
  }
  if (total <= 0) return false;
  probs.assign(counts.size(), 0);
  for (size_t u = 0; u < counts.size(); ++u) {
    if (counts[u] > 0 && counts[u] >= threshold) probs[u] = counts[u] / total;
  }
  return true;
}

std::string PairText(const StringPair &p) { return "(" + p.first + ", " + p.second + ")"; }

}  // namespace

JointUnit JointUnit::Parse(std::string_view token) {
  size_t bar = token.find('|');
  if (bar == std::string_view::npos || token.find('|', bar + 1) != std::string_view::npos ||
      token.size() == 1) {
    throw Error(ErrorKind::kInvalidArgument, "not a joint unit: '" + std::string(token) + "'");
  }
  return {std::string(token.substr(0, bar)), std::string(token.substr(bar + 1))};
}

std::string Render(const JointSeq &units) {
  std::string out;
  for (const auto &u : units) {
    if (!out.empty()) out.push_back(' ');
    out += u.Render();
  }
  return out;
}

std::string JoinSources(const JointSeq &units) {
  std::string out;
  for (const auto &u : units) out += u.source;
  return out;
}

std::string JoinTargets(const JointSeq &units) {
  std::string out;
  for (const auto &u : units) out += u.target;
  return out;
}

void Validate(const AlignmentConfig &c) {
  auto bad = [](const std::string &what) { throw Error(ErrorKind::kInvalidArgument, what); };
  if (c.max_source < 1 || c.max_source > 8) bad("max_source must be in [1, 8]");
  if (c.max_target < 1 || c.max_target > 8) bad("max_target must be in [1, 8]");
  if (!(c.link_penalty > 0 && c.link_penalty <= 1)) bad("link_penalty must be in (0, 1]");
  if (c.max_iterations < 1) bad("max_iterations must be >= 1");
  if (std::isnan(c.tolerance)) bad("tolerance must be a number");
  if (!(c.prune_threshold >= 0)) bad("prune_threshold must be >= 0");
  if (c.jobs < 1) bad("jobs must be >= 1");
}

AlignmentModel AlignmentModel::FromProbabilities(std::map<JointUnit, double> probs,
                                                 const AlignmentConfig &config) {
  Validate(config);
  double total = 0;
  for (const auto &[u, p] : probs) {
    if (u.source.empty() && u.target.empty()) {
      throw Error(ErrorKind::kInvalidArgument, "empty joint unit");
    }
    if (u.source.size() > static_cast<size_t>(config.max_source) ||
        u.target.size() > static_cast<size_t>(config.max_target)) {
      throw Error(ErrorKind::kInvalidArgument, "unit " + u.Render() + " exceeds the caps");
    }
    if (!(p > 0) || !std::isfinite(p)) {
      throw Error(ErrorKind::kInvalidArgument, "unit " + u.Render() + " has no positive mass");
    }
    total += p;
  }
  if (probs.empty()) throw Error(ErrorKind::kInvalidArgument, "no units");
  AlignmentModel m;
  m.config_ = config;
  for (auto &[u, p] : probs) p /= total;
  m.probs_ = std::move(probs);
  return m;
}

double AlignmentModel::Prob(const JointUnit &u) const {
  auto it = probs_.find(u);
  return it == probs_.end() ? 0.0 : it->second;
}

double AlignmentModel::Penalty(const JointUnit &u) const {
  return u.source.size() == 1 && u.target.size() == 1 ? 1.0 : config_.link_penalty;
}

double AlignmentModel::Weight(const JointUnit &u) const { return Prob(u) * Penalty(u); }

std::vector<JointUnit> LatticeUnits(const std::string &source, const std::string &target,
                                    const AlignmentConfig &config) {
  std::set<JointUnit> units;
  ForEachEdge(source, target, config, [&](uint32_t, uint32_t, JointUnit u) { units.insert(std::move(u)); });
  return {units.begin(), units.end()};
}

AlignmentModel AlignEm(std::span<const StringPair> pairs, const AlignmentConfig &config) {
  Validate(config);
  if (pairs.empty()) throw Error(ErrorKind::kEmptyCorpus, "no training pairs");
  for (const auto &p : pairs) {
    if (p.first.empty() || p.second.empty()) {
      throw Error(ErrorKind::kNoValidAlignment, "empty string in pair " + PairText(p));
    }
  }

  // Unit inventory: every unit of every lattice, in sorted order.
  std::set<JointUnit> all_units;
  for (const auto &p : pairs) {
    ForEachEdge(p.first, p.second, config,
                [&](uint32_t, uint32_t, JointUnit u) { all_units.insert(std::move(u)); });
  }
  std::vector<JointUnit> units(all_units.begin(), all_units.end());
  std::unordered_map<std::string, int32_t> unit_ids;
  for (size_t i = 0; i < units.size(); ++i) unit_ids.emplace(units[i].Render(), static_cast<int32_t>(i));

  std::vector<Lattice> lattices;
  lattices.reserve(pairs.size());
  for (const auto &p : pairs) {
    Lattice lat;
    lat.num_nodes = static_cast<uint32_t>((p.first.size() + 1) * (p.second.size() + 1));
    ForEachEdge(p.first, p.second, config, [&](uint32_t from, uint32_t to, const JointUnit &u) {
      lat.edges.push_back({from, to, unit_ids.at(u.Render())});
    });
    lattices.push_back(std::move(lat));
  }

  std::vector<double> penalty_log(units.size());
  for (size_t u = 0; u < units.size(); ++u) {
    bool one_to_one = units[u].source.size() == 1 && units[u].target.size() == 1;
    penalty_log[u] = one_to_one ? 0.0 : std::log(config.link_penalty);
  }
  auto log_weights = [&](const std::vector<double> &probs) {
    std::vector<double> lw(units.size(), kNegInf);
    for (size_t u = 0; u < units.size(); ++u) {
      if (probs[u] > 0) lw[u] = std::log(probs[u]) + penalty_log[u];
    }
    return lw;
  };

  AlignmentModel model;
  model.config_ = config;
  std::vector<double> probs(units.size(), 1.0 / static_cast<double>(units.size()));
  // M-step output before pruning, kept so a harmful prune can be undone.
  std::vector<double> unpruned;
  bool pruned = false;
  double previous = kNegInf;
  for (int iter = 0;; ++iter) {
    EStepResult e = EStep(lattices, log_weights(probs), config.jobs);
    if (pruned && e.log_likelihood < previous) {
      // Pruning cost likelihood (or cut a pair off entirely); fall back to
      // the plain M-step, which cannot.
      probs = unpruned;
      e = EStep(lattices, log_weights(probs), config.jobs);
    }
    if (e.first_failure != std::string::npos) {
      throw Error(ErrorKind::kNoValidAlignment,
                  "caps leave no segmentation for pair " + PairText(pairs[e.first_failure]));
    }
    model.log_likelihoods_.push_back(e.log_likelihood);
    if (iter > 0 && e.log_likelihood - previous < config.tolerance) {
      model.converged_ = true;
      break;
    }
    if (iter >= config.max_iterations) break;
    previous = e.log_likelihood;

    Normalize(e.counts, 0.0, unpruned);
    pruned = Normalize(e.counts, config.prune_threshold, probs) && probs != unpruned;
    if (!pruned) probs = unpruned;
  }

  for (size_t u = 0; u < units.size(); ++u) {
    if (probs[u] > 0) model.probs_.emplace(units[u], probs[u]);
  }
  return model;
}

JointSeq ViterbiAlign(const std::string &source, const std::string &target,
                      const AlignmentModel &model) {
  struct Best {
    bool reached = false;
    double score = 0;
    JointSeq path;
  };
  const size_t nodes = (source.size() + 1) * (target.size() + 1);
  std::vector<Best> best(nodes);
  best[0].reached = true;
  // Edges arrive grouped by start node in increasing order, so each start
  // node is final by the time its first edge is seen.
  ForEachEdge(source, target, model.config(), [&](uint32_t from, uint32_t to, const JointUnit &u) {
    if (!best[from].reached) return;
    double w = model.Weight(u);
    if (!(w > 0)) return;
    double score = best[from].score + std::log(w);
    Best &dst = best[to];
    bool better = !dst.reached || score > dst.score + kTieTolerance;
    if (!better && std::abs(score - dst.score) <= kTieTolerance) {
      size_t len = best[from].path.size() + 1;
      if (len != dst.path.size()) {
        better = len < dst.path.size();
      } else {
        JointSeq cand = best[from].path;
        cand.push_back(u);
        better = cand < dst.path;
      }
    }
    if (better) {
      dst.reached = true;
      dst.score = score;
      dst.path = best[from].path;
      dst.path.push_back(u);
    }
  });
  if (source.empty() && target.empty()) {
    throw Error(ErrorKind::kNoValidAlignment, "empty pair");
  }
  if (!best[nodes - 1].reached) {
    throw Error(ErrorKind::kNoValidAlignment,
                "no segmentation of " + PairText({source, target}) + " under the model");
  }
  return best[nodes - 1].path;
}

}  // namespace g2g
