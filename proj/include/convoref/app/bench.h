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

#ifndef CONVOREF_APP_BENCH_H_
#define CONVOREF_APP_BENCH_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "convoref/hub/latency.h"
#include "convoref/nlp/extractor.h"
#include "convoref/nlp/types.h"
#include "json.hpp"

namespace convoref::app {

// Builds an English extractor for `params`, loading the configured
// stopword and gazetteer files.
nlp::KeywordExtractor MakeExtractor(const nlp::ExtractionParams &params,
                                    const std::string &language = "en");

// Splits a document into utterances: one per non-blank line, '#' comment
// lines skipped.
std::vector<std::string> SplitUtterances(std::string_view text);

// Runs extraction over each utterance in order with one shared dedup set,
// as a session would. Keywords come back in emission order.
std::vector<nlp::Keyword> ExtractDocument(const nlp::KeywordExtractor &extractor,
                                          std::string_view text);

// [{"phrase","category","score","color_code"}, ...] in emission order.
nlohmann::json KeywordsToJson(const std::vector<nlp::Keyword> &keywords);
// One "phrase<TAB>category<TAB>score<TAB>color" line per keyword.
std::string KeywordsToText(const std::vector<nlp::Keyword> &keywords);

struct BenchReport {
  std::size_t utterances = 0;
  std::size_t words = 0;
  double seconds = 0.0;
  double words_per_second = 0.0;
  // Per-utterance stage times: tokenize, chunk, classify, rank, total.
  std::map<std::string, hub::LatencyStats> stages;
  std::size_t keywords = 0;
  // FNV-1a over the emitted keywords; equal across runs on equal input.
  std::string keyword_digest;

  nlohmann::json ToJson() const;  // carries "schema": 1
  std::string ToText() const;
};

// Times single-threaded extraction over the corpus. Throws
// Error(kEmptySegment) when the corpus holds no words.
BenchReport RunBench(const nlp::KeywordExtractor &extractor,
                     std::string_view corpus);

// Whitespace-separated word count.
std::size_t CountWords(std::string_view text);

}  // namespace convoref::app

#endif  // CONVOREF_APP_BENCH_H_
