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

#ifndef CONVOREF_NLP_TYPES_H_
#define CONVOREF_NLP_TYPES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace convoref::nlp {

// Coarse part-of-speech classes assigned by lexicon lookup.
enum class Tag { kNoun, kPropn, kVerb, kAdj, kNum, kDateWord, kStop, kOther };

std::string_view TagName(Tag tag);

// Half-open byte range [begin, end) into the segment text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const Span &) const = default;
};

struct Token {
  std::string surface;
  Span span;
  std::string lower;
  Tag tag = Tag::kOther;
  // Punctuation tokens are kept so windows and phrase breaks see them.
  bool is_word = true;
  // First and last token of a proper-noun gazetteer match; noun phrases
  // never straddle these edges.
  bool entity_begin = false;
  bool entity_end = false;
};

// Noun phrase over a contiguous token range [first_token, end_token).
struct Phrase {
  std::string text;
  std::size_t first_token = 0;
  std::size_t end_token = 0;
  Span span;

  std::size_t size() const { return end_token - first_token; }
};

enum class EntityCategory {
  kOrganization,
  kLocation,
  kPerson,
  kDate,
  kNumeric,
  kGeneral,
};

inline constexpr EntityCategory kAllCategories[] = {
    EntityCategory::kOrganization, EntityCategory::kLocation,
    EntityCategory::kPerson,       EntityCategory::kDate,
    EntityCategory::kNumeric,      EntityCategory::kGeneral,
};

std::string_view CategoryName(EntityCategory category);
std::optional<EntityCategory> ParseCategory(std::string_view name);

enum class ColorCode { kRed, kBlue, kPurple, kGreen, kNeutral };

// Person red, Location blue, Organization purple, Date green, else neutral.
ColorCode ColorFor(EntityCategory category);
std::string_view ColorName(ColorCode color);

struct Keyword {
  std::string id;
  std::string phrase;
  std::string normalized;
  EntityCategory category = EntityCategory::kGeneral;
  double score = 0.0;
  int64_t source_seq = -1;

  ColorCode color_code() const { return ColorFor(category); }
};

// Tunables for one extraction run. Paths are optional resource overrides.
struct ExtractionParams {
  double damping = 0.85;
  int window = 4;
  double epsilon = 1e-4;
  int max_iter = 50;
  std::string stopword_path;
  std::string gazetteer_path;

  // Throws Error(kConfigInvalid) on out-of-range values.
  void Validate() const;
};

}  // namespace convoref::nlp

#endif  // CONVOREF_NLP_TYPES_H_
