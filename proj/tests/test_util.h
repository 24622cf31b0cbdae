// test_util.h
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

#ifndef G2G_TESTS_TEST_UTIL_H_
#define G2G_TESTS_TEST_UTIL_H_

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "g2g/char_lm.h"
#include "g2g/text_io.h"

namespace g2g::test {

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("g2g_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  std::string Path(const std::string &name) const { return (path_ / name).string(); }

  std::string Write(const std::string &name, const std::string &contents) const {
    std::string p = Path(name);
    std::ofstream(p, std::ios::binary) << contents;
    return p;
  }

  const std::filesystem::path &path() const { return path_; }

 private:
  std::filesystem::path path_;
};

inline std::vector<WrittenForm> ReadWords(const std::string &path) {
  std::vector<WrittenForm> words;
  for (const auto &line : ReadLines(path)) {
    if (!Trim(line).empty()) words.push_back(NormalizeWritten(line));
  }
  return words;
}

// Order-10 model over the bundled English word list, built once.
inline const CharLm &EnglishCharLm() {
  static const CharLm lm =
      CharLm::Train(ReadWords(std::string(G2G_DATA_DIR) + "/english_words.txt"));
  return lm;
}

}  // namespace g2g::test

#endif  // G2G_TESTS_TEST_UTIL_H_
