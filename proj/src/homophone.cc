// homophone.cc
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

#include "g2g/homophone.h"

#include <algorithm>
#include <map>

#include "g2g/error.h"
#include "g2g/text_io.h"

namespace g2g {
namespace {

constexpr const char *kDefaultPhones[] = {
    // consonants
    "p", "b", "t", "d", "k", "g", "f", "v", "T", "D", "s", "z", "S", "Z", "h",
    "tS", "dZ", "m", "n", "N", "l", "r\\", "j", "w", "4", "?", "l=", "n=", "m=",
    // vowels
    "i", "I", "E", "{", "A", "Q", "O", "U", "u", "V", "@", "3`", "@`",
    // diphthongs
    "eI", "aI", "OI", "aU", "oU",
};

std::string JoinPhones(const std::vector<std::string> &phones) {
  std::string out;
  for (const auto &p : phones) {
    if (!out.empty()) out.push_back(' ');
    out += p;
  }
  return out;
}

}  // namespace

PhoneInventory PhoneInventory::Default() {
  PhoneInventory inv;
  for (const char *p : kDefaultPhones) inv.phones_.insert(p);
  return inv;
}

PhoneInventory PhoneInventory::FromFile(const std::string &path) {
  PhoneInventory inv;
  auto lines = ReadLines(path);
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string_view p = Trim(lines[i]);
    if (p.empty() || p.front() == '#') continue;
    if (SplitWhitespace(p).size() != 1) throw ParseError(i + 1, "one phone per line");
    inv.phones_.emplace(p);
  }
  if (inv.phones_.empty()) throw Error(ErrorKind::kEmptyInput, "empty phone inventory " + path);
  return inv;
}

std::vector<LexiconEntry> ParseLexicon(const std::vector<std::string> &lines,
                                       const PhoneInventory &inventory) {
  std::vector<LexiconEntry> entries;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (Trim(lines[i]).empty()) continue;
    auto fields = SplitTabs(lines[i]);
    if (fields.size() != 2) throw ParseError(i + 1, "expected written<TAB>phones");
    std::vector<std::string> phones;
    for (auto p : SplitWhitespace(fields[1])) {
      std::string phone(p);
      if (!inventory.Contains(phone)) {
        throw Error(ErrorKind::kInvalidPhone,
                    "'" + phone + "' on line " + std::to_string(i + 1));
      }
      phones.push_back(std::move(phone));
    }
    if (phones.empty()) throw ParseError(i + 1, "empty pronunciation");
    try {
      entries.push_back({NormalizeWritten(fields[0]), std::move(phones)});
    } catch (const Error &e) {
      if (dynamic_cast<const ParseError *>(&e) != nullptr) throw;
      throw ParseError(i + 1, e.what());
    }
  }
  return entries;
}

std::vector<LexiconEntry> ReadLexicon(const std::string &path, const PhoneInventory &inventory) {
  return ParseLexicon(ReadLines(path), inventory);
}

std::vector<ClusterCandidate> BuildClusters(std::span<const LexiconEntry> lexicon,
                                            const PhoneInventory &inventory) {
  std::map<std::vector<std::string>, std::set<WrittenForm>> by_key;
  for (const auto &e : lexicon) {
    for (const auto &p : e.phones) {
      if (!inventory.Contains(p)) throw Error(ErrorKind::kInvalidPhone, "'" + p + "'");
    }
    by_key[e.phones].insert(e.written);
  }
  std::vector<ClusterCandidate> out;
  for (auto &[key, members] : by_key) {
    if (members.size() < 2) continue;
    out.push_back({key, {members.begin(), members.end()}});
  }
  return out;
}

WrittenForm SelectRoot(std::span<const WrittenForm> members, const CharLm &lm) {
  std::vector<WrittenForm> distinct(members.begin(), members.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < 2) {
    throw Error(ErrorKind::kPrecondition, "a cluster needs at least two distinct members");
  }
  const WrittenForm *best = nullptr;
  WordScore best_score;
  for (const auto &m : distinct) {
    WordScore s = lm.Score(m);
    // `distinct` is sorted, so keeping the first of equal scores picks the
    // smallest spelling.
    if (best == nullptr || s.normalized > best_score.normalized ||
        (s.normalized == best_score.normalized && s.total_logprob > best_score.total_logprob)) {
      best = &m;
      best_score = s;
    }
  }
  return *best;
}

std::vector<HomophoneCluster> AssignRoots(std::span<const ClusterCandidate> candidates,
                                          const CharLm &lm) {
  std::vector<HomophoneCluster> out;
  out.reserve(candidates.size());
  for (const auto &c : candidates) {
    out.push_back({c.key, c.members, SelectRoot(c.members, lm)});
  }
  return out;
}

std::vector<WordPair> EmitPairs(std::span<const HomophoneCluster> clusters) {
  std::vector<WordPair> pairs;
  for (const auto &c : clusters) {
    for (const auto &m : c.members) pairs.push_back({m, c.root});
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

std::string FormatClusters(std::span<const HomophoneCluster> clusters) {
  std::string out;
  for (const auto &c : clusters) {
    out += JoinPhones(c.key);
    out += '\t';
    out += c.root.str();
    out += '\t';
    for (size_t i = 0; i < c.members.size(); ++i) {
      if (i > 0) out.push_back(',');
      out += c.members[i].str();
    }
    out += '\n';
  }
  return out;
}

std::string FormatPairs(std::span<const WordPair> pairs) {
  std::string out;
  for (const auto &p : pairs) out += p.source.str() + "\t" + p.target.str() + "\n";
  return out;
}

std::vector<WordPair> ParsePairs(const std::vector<std::string> &lines) {
  std::vector<WordPair> pairs;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (Trim(lines[i]).empty()) continue;
    auto fields = SplitTabs(lines[i]);
    if (fields.size() != 2) throw ParseError(i + 1, "expected source<TAB>target");
    try {
      pairs.push_back({NormalizeWritten(fields[0]), NormalizeWritten(fields[1])});
    } catch (const Error &e) {
      throw ParseError(i + 1, e.what());
    }
  }
  return pairs;
}

std::vector<WordPair> ReadPairs(const std::string &path) { return ParsePairs(ReadLines(path)); }

}  // namespace g2g
