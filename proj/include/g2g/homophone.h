// homophone.h
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
// Homophone clusters from a phonetic lexicon. Spellings that share an exact
// X-SAMPA phone sequence form a cluster; the member the character LM scores
// highest (per event) becomes the cluster root, and every member is paired
// with its root to give respelling training data.
//
// File formats (all TSV):
//   lexicon   written<TAB>phone phone ...
//   clusters  key-phones<TAB>root<TAB>member1,member2,...
//   pairs     source<TAB>target

#ifndef G2G_HOMOPHONE_H_
#define G2G_HOMOPHONE_H_

#include <set>
#include <span>
#include <string>
#include <vector>

#include "g2g/char_lm.h"
#include "g2g/grapheme.h"

namespace g2g {

class PhoneInventory {
 public:
  // 47 US English X-SAMPA phones.
  static PhoneInventory Default();
  // One symbol per line; '#' comments allowed.
  static PhoneInventory FromFile(const std::string &path);

  bool Contains(const std::string &phone) const { return phones_.contains(phone); }
  size_t size() const { return phones_.size(); }

 private:
  std::set<std::string> phones_;
};

struct LexiconEntry {
  WrittenForm written;
  std::vector<std::string> phones;

  auto operator<=>(const LexiconEntry &) const = default;
};

// Throws ParseError on malformed lines and Error(kInvalidPhone) on phones
// outside the inventory.
std::vector<LexiconEntry> ParseLexicon(const std::vector<std::string> &lines,
                                       const PhoneInventory &inventory);
std::vector<LexiconEntry> ReadLexicon(const std::string &path, const PhoneInventory &inventory);

struct ClusterCandidate {
  std::vector<std::string> key;
  std::vector<WrittenForm> members;  // sorted, distinct, at least two
};

struct HomophoneCluster {
  std::vector<std::string> key;
  std::vector<WrittenForm> members;
  WrittenForm root;
};

// Groups entries by exact phone sequence and keeps groups with two or more
// distinct spellings, sorted by key.
std::vector<ClusterCandidate> BuildClusters(std::span<const LexiconEntry> lexicon,
                                            const PhoneInventory &inventory);

// Member with the highest normalized score; ties go to the higher total
// log-probability, then to the smaller spelling. Throws Error(kPrecondition)
// for fewer than two distinct members.
WrittenForm SelectRoot(std::span<const WrittenForm> members, const CharLm &lm);

std::vector<HomophoneCluster> AssignRoots(std::span<const ClusterCandidate> candidates,
                                          const CharLm &lm);

struct WordPair {
  WrittenForm source;
  WrittenForm target;

  auto operator<=>(const WordPair &) const = default;
};

// One (member, root) pair per member, identity pair included; the combined
// list is sorted and deduplicated.
std::vector<WordPair> EmitPairs(std::span<const HomophoneCluster> clusters);

std::string FormatClusters(std::span<const HomophoneCluster> clusters);
std::string FormatPairs(std::span<const WordPair> pairs);

// Throws ParseError(line) on malformed lines; blank lines are skipped.
std::vector<WordPair> ParsePairs(const std::vector<std::string> &lines);
std::vector<WordPair> ReadPairs(const std::string &path);

}  // namespace g2g

#endif  // G2G_HOMOPHONE_H_
