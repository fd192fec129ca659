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

#ifndef CONVOREF_NLP_GAZETTEER_H_
#define CONVOREF_NLP_GAZETTEER_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "convoref/nlp/lexicon.h"
#include "convoref/nlp/types.h"

namespace convoref::nlp {

// Organization, location and person name lists. Entries are stored
// normalized (case-folded, single-spaced).
//
// File format: UTF-8, one entry per line, grouped under `[organization]`,
// `[location]` and `[person]` section headers. Blank lines and lines
// starting with '#' are ignored.
class GazetteerSet {
 public:
  GazetteerSet() = default;

  // Throws Error(kConfigInvalid) on entries outside a section or unknown
  // section names.
  static GazetteerSet Parse(std::string_view text);

  // Throws Error(kIoError) when the file cannot be read.
  static GazetteerSet LoadFile(const std::string &path);

  // Loads once per path and shares the result.
  static std::shared_ptr<const GazetteerSet> Shared(const std::string &path);

  // Only Organization, Location and Person are accepted.
  void Add(EntityCategory category, std::string_view entry);

  bool Contains(EntityCategory category, std::string_view normalized) const;

  // First hit in Organization, Location, Person order.
  std::optional<EntityCategory> Match(std::string_view normalized) const;

  std::size_t size(EntityCategory category) const;
  std::size_t max_entry_tokens() const { return max_entry_tokens_; }

 private:
  const std::unordered_set<std::string> *SetFor(EntityCategory c) const;

  std::unordered_set<std::string> organizations_;
  std::unordered_set<std::string> locations_;
  std::unordered_set<std::string> persons_;
  std::size_t max_entry_tokens_ = 0;
};

// Retags unknown (OTHER) word tokens that fall inside a gazetteer entry as
// PROPN, so lowercase recognizer output such as "san francisco" still forms
// a noun phrase. Longest match wins; spans never cross stopwords. Matches
// containing a proper noun get their edges marked for the chunker.
void MarkGazetteerSpans(std::vector<Token> &tokens,
                        const GazetteerSet &gazetteers);

// Category of a chunked phrase. Date and numeric patterns are tried first,
// then gazetteer lookups, then person titles; General is the fallback.
// Gazetteer lookups only apply to phrases containing a proper noun, trying
// the full phrase, then its proper-noun core, then the head token.
EntityCategory ClassifyEntity(const Phrase &phrase,
                              std::span<const Token> tokens,
                              const GazetteerSet &gazetteers,
                              const Lexicon &lexicon);

}  // namespace convoref::nlp

#endif  // CONVOREF_NLP_GAZETTEER_H_
