// error.cc
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

#include "g2g/error.h"

namespace g2g {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmptyInput: return "EmptyInput";
    case ErrorKind::kUnsupportedCharacter: return "UnsupportedCharacter";
    case ErrorKind::kEmptyCorpus: return "EmptyCorpus";
    case ErrorKind::kInvalidOrder: return "InvalidOrder";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kIo: return "IoError";
    case ErrorKind::kFormatVersionMismatch: return "FormatVersionMismatch";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kInvalidPhone: return "InvalidPhone";
    case ErrorKind::kPrecondition: return "PreconditionViolation";
    case ErrorKind::kNoValidAlignment: return "NoValidAlignment";
    case ErrorKind::kOovGrapheme: return "OovGrapheme";
    case ErrorKind::kNoHypothesis: return "NoHypothesis";
  }
  return "Error";
}

}  // namespace g2g
