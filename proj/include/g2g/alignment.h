// alignment.h
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
// Many-to-many EM alignment of string pairs into joint units (graphones).
//
// A joint unit pairs a source segment with a target segment, each at most
// max_source / max_target characters long. Either side may be empty but not
// both. The alignment lattice of a pair holds every segmentation of both
// strings into such units.
//
// Path weights are the product over units of p(u) f(u), where f(u) is 1 for
// a 1:1 unit and link_penalty for anything else. The penalty is a fixed
// prior that stops EM from sliding into long units that memorize each pair
// whole. EM then maximizes
//
//   L(p) = sum over pairs of log sum over paths of prod p(u) f(u)
//
// which never decreases across iterations.

#ifndef G2G_ALIGNMENT_H_
#define G2G_ALIGNMENT_H_

#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace g2g {

struct JointUnit {
  std::string source;
  std::string target;

  auto operator<=>(const JointUnit &) const = default;

  // "source|target"; an empty side renders as nothing ("a|", "|e").
  std::string Render() const { return source + "|" + target; }
  // Inverse of Render. Throws Error(kInvalidArgument).
  static JointUnit Parse(std::string_view token);
};

using JointSeq = std::vector<JointUnit>;

std::string Render(const JointSeq &units);  // space separated
std::string JoinSources(const JointSeq &units);
std::string JoinTargets(const JointSeq &units);

using StringPair = std::pair<std::string, std::string>;

struct AlignmentConfig {
  int max_source = 2;
  int max_target = 2;
  double link_penalty = 0.1;  // weight of every unit that is not 1:1
  int max_iterations = 50;       // parameter updates; one more E-step scores the last
  double tolerance = 1e-6;         // stop once the log-likelihood gain is below this;
                                   // negative values never stop early
  double prune_threshold = 1e-4;   // drop units with smaller expected counts
  int jobs = 1;                    // E-step workers; results do not depend on it
};

// Throws Error(kInvalidArgument) on out-of-range settings.
void Validate(const AlignmentConfig &config);

class AlignmentModel {
 public:
  // Unit probabilities must be positive; they are renormalized.
  static AlignmentModel FromProbabilities(std::map<JointUnit, double> probs,
                                          const AlignmentConfig &config);

  const AlignmentConfig &config() const { return config_; }
  const std::map<JointUnit, double> &units() const { return probs_; }
  size_t size() const { return probs_.size(); }

  // 0 for units not in the model.
  double Prob(const JointUnit &u) const;
  // p(u) f(u); the quantity path scores multiply.
  double Weight(const JointUnit &u) const;
  double Penalty(const JointUnit &u) const;

  // Natural-log corpus likelihood after each E-step, starting with the
  // uniform initialization: at most max_iterations + 1 entries. The model's
  // own parameters produced the last one.
  const std::vector<double> &log_likelihoods() const { return log_likelihoods_; }
  bool converged() const { return converged_; }

 private:
  friend AlignmentModel AlignEm(std::span<const StringPair>, const AlignmentConfig &);

  AlignmentConfig config_;
  std::map<JointUnit, double> probs_;
  std::vector<double> log_likelihoods_;
  bool converged_ = false;
};

// Every unit in the alignment lattice of one pair, sorted and distinct.
std::vector<JointUnit> LatticeUnits(const std::string &source, const std::string &target,
                                    const AlignmentConfig &config);

// Throws Error(kEmptyCorpus) for no pairs and Error(kNoValidAlignment) for
// a pair the caps cannot segment (including empty strings).
AlignmentModel AlignEm(std::span<const StringPair> pairs, const AlignmentConfig &config);

// Log path scores closer than this are treated as equal when breaking ties.
inline constexpr double kTieTolerance = 1e-12;

// Best segmentation by the sum of log weights. Ties go to fewer units, then
// to the lexicographically smaller unit sequence. Throws
// Error(kNoValidAlignment).
JointSeq ViterbiAlign(const std::string &source, const std::string &target,
                      const AlignmentModel &model);

}  // namespace g2g

#endif  // G2G_ALIGNMENT_H_
