// text_io.h
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
// Small text and file helpers used by the readers and writers.

#ifndef G2G_TEXT_IO_H_
#define G2G_TEXT_IO_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace g2g {

// Reads every line of a file, stripping the trailing '\n' (and '\r').
// Throws Error(kIo) if the path is empty or cannot be opened.
std::vector<std::string> ReadLines(const std::string &path);

// Reads the whole file as bytes.
std::string ReadFile(const std::string &path);

// Writes `contents` to a temporary sibling file and renames it over `path`,
// so readers never see a partial file.
void AtomicWriteFile(const std::string &path, std::string_view contents);

std::string_view Trim(std::string_view s);

std::vector<std::string_view> SplitTabs(std::string_view line);
std::vector<std::string_view> SplitWhitespace(std::string_view s);

// Decodes one UTF-8 code point starting at `pos` and advances `pos`.
// Returns U+FFFD and advances one byte on malformed input.
char32_t NextCodePoint(std::string_view s, size_t &pos);

// Shortest round-trip decimal form of a double.
std::string FormatDouble(double value);

// Sequential access to the lines of a text file with 1-based line numbers
// for error messages. Running off the end is reported as a truncated file.
class LineReader {
 public:
  explicit LineReader(std::vector<std::string> lines) : lines_(std::move(lines)) {}

  bool AtEnd() const { return next_ >= lines_.size(); }

  // Returns the next line; throws ParseError if the input is exhausted.
  std::string_view Next();

  // Line number of the line most recently returned by Next().
  size_t line_number() const { return next_; }

 private:
  std::vector<std::string> lines_;
  size_t next_ = 0;
};

// Strict parse of a whole field; throws ParseError(line) on failure.
double ParseDouble(std::string_view field, size_t line);
long ParseInt(std::string_view field, size_t line);

}  // namespace g2g

#endif  // G2G_TEXT_IO_H_
