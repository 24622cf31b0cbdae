// witten_bell_oracle.h
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
// Brute-force interpolated Witten-Bell probabilities computed straight from
// the corpus on every query: no tables, no backoff weights, no tries.

#ifndef G2G_TESTS_ORACLES_WITTEN_BELL_ORACLE_H_
#define G2G_TESTS_ORACLES_WITTEN_BELL_ORACLE_H_

#include <set>
#include <string>
#include <vector>

namespace g2g::oracle {

class WittenBellOracle {
 public:
  WittenBellOracle(std::vector<std::vector<std::string>> corpus, int order)
      : order_(order) {
    std::set<std::string> vocab = {"<unk>", "</s>"};
    for (auto &s : corpus) {
      std::vector<std::string> history = {"<s>"};
      for (size_t i = 0; i <= s.size(); ++i) {
        std::string w = i < s.size() ? s[i] : "</s>";
        vocab.insert(w);
        events_.push_back({history, w});
        history.push_back(w);
      }
    }
    vocab_size_ = vocab.size();
  }

  // P(w | context); context is oldest-first and may start with "<s>".
  double Prob(const std::vector<std::string> &context, const std::string &w) const {
    size_t keep = std::min(context.size(), static_cast<size_t>(order_ - 1));
    std::vector<std::string> h(context.end() - keep, context.end());
    return Recurse(h, w);
  }

 private:
  struct Event {
    std::vector<std::string> history;
    std::string word;
  };

  static bool EndsWith(const std::vector<std::string> &history,
                       const std::vector<std::string> &h) {
    if (h.size() > history.size()) return false;
    return std::equal(h.begin(), h.end(), history.end() - h.size());
  }

  double Recurse(const std::vector<std::string> &h, const std::string &w) const {
    double c_h = 0, c_hw = 0;
    std::set<std::string> types;
    for (const auto &e : events_) {
      if (!EndsWith(e.history, h)) continue;
      c_h += 1;
      types.insert(e.word);
      if (e.word == w) c_hw += 1;
    }
    double lower;
    if (h.empty()) {
      lower = 1.0 / static_cast<double>(vocab_size_);
    } else {
      lower = Recurse(std::vector<std::string>(h.begin() + 1, h.end()), w);
      if (c_h == 0) return lower;
    }
    double t = static_cast<double>(types.size());
    return (c_hw + t * lower) / (c_h + t);
  }

  int order_;
  size_t vocab_size_ = 0;
  std::vector<Event> events_;
};

}  // namespace g2g::oracle

#endif  // G2G_TESTS_ORACLES_WITTEN_BELL_ORACLE_H_
