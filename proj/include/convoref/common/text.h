// Copyright 2026 The Convoref Authors.
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

#ifndef CONVOREF_COMMON_TEXT_H_
#define CONVOREF_COMMON_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace convoref {

// ASCII case folding; bytes outside ASCII pass through unchanged.
std::string CaseFold(std::string_view text);

// Case-folded, trimmed, with internal whitespace runs collapsed to a single
// space. This is the dedup key for keywords and the cache key for references.
std::string NormalizePhrase(std::string_view text);

// Lowercase ASCII alphanumerics with every other run mapped to '-', trimmed.
// Non-ASCII bytes are kept so that slugs stay distinct for accented names.
std::string Slug(std::string_view phrase);

std::string_view Trim(std::string_view text);

// Whitespace-delimited words.
std::vector<std::string_view> SplitWords(std::string_view text);

inline std::size_t CountWords(std::string_view text) {
  return SplitWords(text).size();
}

}  // namespace convoref

#endif  // CONVOREF_COMMON_TEXT_H_
