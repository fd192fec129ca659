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

#ifndef CONVOREF_NLP_EXTRACTOR_H_
#define CONVOREF_NLP_EXTRACTOR_H_

#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "convoref/nlp/gazetteer.h"
#include "convoref/nlp/lexicon.h"
#include "convoref/nlp/types.h"

namespace convoref::nlp {

// Wall time spent in each pipeline stage, milliseconds.
struct StageTimings {
  double tokenize_ms = 0.0;
  double chunk_ms = 0.0;
  double classify_ms = 0.0;
  double rank_ms = 0.0;

  double total_ms() const {
    return tokenize_ms + chunk_ms + classify_ms + rank_ms;
  }
};

// A chunked phrase with its category and summed member-token TextRank score,
// before filtering.
struct ScoredPhrase {
  Phrase phrase;
  std::string normalized;
  EntityCategory category = EntityCategory::kGeneral;
  double score = 0.0;
};

// tokenize -> gazetteer retag -> chunk -> classify -> TextRank.
//
// Entity phrases (any category but General) are always kept. General
// phrases are kept only when their score is strictly above the mean phrase
// score of the segment. Phrases whose normalized form is already in the
// emitted set, or repeated within the segment, are dropped.
class KeywordExtractor {
 public:
  // Throws Error(kConfigInvalid) if params are out of range.
  KeywordExtractor(std::shared_ptr<const Lexicon> lexicon,
                   std::shared_ptr<const GazetteerSet> gazetteers,
                   ExtractionParams params);

  std::vector<ScoredPhrase> Analyze(std::string_view text,
                                    StageTimings *timings = nullptr) const;

  // Returned keywords have empty id and source_seq -1; callers that own the
  // session assign those.
  std::vector<Keyword> Extract(
      std::string_view text,
      const std::unordered_set<std::string> &emitted,
      StageTimings *timings = nullptr) const;

  const ExtractionParams &params() const { return params_; }
  const Lexicon &lexicon() const { return *lexicon_; }
  const GazetteerSet &gazetteers() const { return *gazetteers_; }

 private:
  std::shared_ptr<const Lexicon> lexicon_;
  std::shared_ptr<const GazetteerSet> gazetteers_;
  ExtractionParams params_;
};

}  // namespace convoref::nlp

#endif  // CONVOREF_NLP_EXTRACTOR_H_
