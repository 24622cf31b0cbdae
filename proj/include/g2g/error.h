// error.h
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
// Error type shared by every g2g module.

#ifndef G2G_ERROR_H_
#define G2G_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace g2g {

enum class ErrorKind {
  kEmptyInput,
  kUnsupportedCharacter,
  kEmptyCorpus,
  kInvalidOrder,
  kInvalidArgument,
  kIo,
  kFormatVersionMismatch,
  kParse,
  kInvalidPhone,
  kPrecondition,
  kNoValidAlignment,
  kOovGrapheme,
  kNoHypothesis,
};

std::string_view ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures also remember the 1-based line they happened on.
class ParseError : public Error {
 public:
  ParseError(size_t line, const std::string &message)
      : Error(ErrorKind::kParse, "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  size_t line() const { return line_; }

 private:
  size_t line_;
};

}  // namespace g2g

#endif  // G2G_ERROR_H_
