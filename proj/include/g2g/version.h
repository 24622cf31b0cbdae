// version.h
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

#ifndef G2G_VERSION_H_
#define G2G_VERSION_H_

#include <string_view>

namespace g2g {

inline constexpr std::string_view kToolkitVersion = "1.0.0";

// File magics are the first line of each serialized model.
inline constexpr std::string_view kCharLmMagic = "#g2g char-lm";
inline constexpr int kCharLmFormatVersion = 1;
inline constexpr std::string_view kG2gModelMagic = "#g2g joint-sequence-model";
inline constexpr int kG2gModelFormatVersion = 1;

}  // namespace g2g

#endif  // G2G_VERSION_H_
