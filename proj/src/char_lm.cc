// char_lm.cc
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

#include "g2g/char_lm.h"

#include "g2g/error.h"
#include "g2g/text_io.h"
#include "g2g/version.h"

namespace g2g {

CharLm CharLm::Train(std::span<const WrittenForm> words, int order) {
  if (order < 1) {
    throw Error(ErrorKind::kInvalidOrder, "order must be >= 1, got " + std::to_string(order));
  }
  if (words.empty()) throw Error(ErrorKind::kEmptyCorpus, "no training words");
  std::vector<std::vector<std::string>> sentences;
  sentences.reserve(words.size());
  for (const auto &w : words) sentences.push_back(Tokens(w));
  return CharLm(NgramLm::Train(sentences, order));
}

std::vector<std::string> CharLm::Tokens(const WrittenForm &w) {
  std::vector<std::string> tokens;
  for (const auto &g : Decompose(w)) tokens.push_back(g.Render());
  return tokens;
}

WordScore CharLm::Score(const WrittenForm &w) const {
  std::vector<TokenId> ids;
  for (const auto &tok : Tokens(w)) ids.push_back(lm_.Id(tok));
  WordScore s;
  s.total_logprob = lm_.SentenceLogProb(ids);
  s.token_count = ids.size() + 1;
  s.normalized = s.total_logprob / static_cast<double>(s.token_count);
  return s;
}

std::string CharLm::Serialize() const {
  std::string out;
  out += kCharLmMagic;
  out += "\nversion\t" + std::to_string(kCharLmFormatVersion) + "\n";
  out += "order\t" + std::to_string(lm_.order()) + "\n";
  lm_.Write(out);
  return out;
}

CharLm CharLm::Deserialize(std::vector<std::string> lines) {
  LineReader in(std::move(lines));
  if (in.AtEnd() || in.Next() != kCharLmMagic) {
    throw Error(ErrorKind::kFormatVersionMismatch, "not a g2g char-lm file");
  }
  std::string_view version = in.Next();
  if (version != "version\t" + std::to_string(kCharLmFormatVersion)) {
    throw Error(ErrorKind::kFormatVersionMismatch,
                "unsupported char-lm version line '" + std::string(version) + "'");
  }
  auto order_fields = SplitTabs(in.Next());
  if (order_fields.size() != 2 || order_fields[0] != "order") {
    throw ParseError(in.line_number(), "expected order<TAB>k");
  }
  long order = ParseInt(order_fields[1], in.line_number());
  NgramLm lm = NgramLm::Read(in);
  if (lm.order() != order) throw ParseError(in.line_number(), "order does not match n-gram sections");
  return CharLm(std::move(lm));
}

void CharLm::Save(const std::string &path) const { AtomicWriteFile(path, Serialize()); }

CharLm CharLm::Load(const std::string &path) { return Deserialize(ReadLines(path)); }

}  // namespace g2g
