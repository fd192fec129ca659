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

#include "convoref/nlp/extractor.h"

#include <chrono>
#include <utility>

#include "convoref/common/text.h"
#include "convoref/nlp/chunker.h"
#include "convoref/nlp/textrank.h"
#include "convoref/nlp/tokenizer.h"

namespace convoref::nlp {
namespace {

class StageTimer {
 public:
  explicit StageTimer(StageTimings *timings) : timings_(timings) {
    if (timings_) last_ = std::chrono::steady_clock::now();
  }

  void Lap(double StageTimings::*field) {
    if (!timings_) return;
    auto now = std::chrono::steady_clock::now();
    timings_->*field +=
        std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }

 private:
  StageTimings *timings_;
  std::chrono::steady_clock::time_point last_;
};

}  // namespace

KeywordExtractor::KeywordExtractor(
    std::shared_ptr<const Lexicon> lexicon,
    std::shared_ptr<const GazetteerSet> gazetteers, ExtractionParams params)
    : lexicon_(std::move(lexicon)),
      gazetteers_(std::move(gazetteers)),
      params_(std::move(params)) {
  params_.Validate();
  if (!gazetteers_) gazetteers_ = std::make_shared<const GazetteerSet>();
}

std::vector<ScoredPhrase> KeywordExtractor::Analyze(
    std::string_view text, StageTimings *timings) const {
  StageTimer timer(timings);
  std::vector<Token> tokens = Tokenize(text, *lexicon_);
  MarkGazetteerSpans(tokens, *gazetteers_);
  timer.Lap(&StageTimings::tokenize_ms);

  std::vector<Phrase> phrases = ChunkNounPhrases(tokens);
  timer.Lap(&StageTimings::chunk_ms);

  std::vector<ScoredPhrase> scored;
  scored.reserve(phrases.size());
  for (Phrase &p : phrases) {
    ScoredPhrase sp;
    sp.category = ClassifyEntity(p, tokens, *gazetteers_, *lexicon_);
    sp.normalized = NormalizePhrase(p.text);
    sp.phrase = std::move(p);
    scored.push_back(std::move(sp));
  }
  timer.Lap(&StageTimings::classify_ms);

  if (!scored.empty()) {
    CooccurrenceGraph graph = BuildCooccurrenceGraph(tokens, params_.window);
    TextRankResult ranks = TextRank(
        graph, {params_.damping, params_.epsilon, params_.max_iter});
    for (ScoredPhrase &sp : scored) {
      double sum = 0.0;
      for (std::size_t k = sp.phrase.first_token; k < sp.phrase.end_token;
           ++k) {
        if (!IsGraphCandidate(tokens[k])) continue;
        if (auto node = graph.Find(tokens[k].lower)) sum += ranks.scores[*node];
      }
      sp.score = sum;
    }
  }
  timer.Lap(&StageTimings::rank_ms);
  return scored;
}

std::vector<Keyword> KeywordExtractor::Extract(
    std::string_view text, const std::unordered_set<std::string> &emitted,
    StageTimings *timings) const {
  std::vector<ScoredPhrase> scored = Analyze(text, timings);
  std::vector<Keyword> keywords;
  if (scored.empty()) return keywords;

  double mean = 0.0;
  for (const ScoredPhrase &sp : scored) mean += sp.score;
  mean /= static_cast<double>(scored.size());

  std::unordered_set<std::string> seen;
  for (ScoredPhrase &sp : scored) {
    bool keep = sp.category != EntityCategory::kGeneral || sp.score > mean;
    if (!keep) continue;
    if (emitted.count(sp.normalized) || !seen.insert(sp.normalized).second) {
      continue;
    }
    Keyword kw;
    kw.phrase = std::move(sp.phrase.text);
    kw.normalized = std::move(sp.normalized);
    kw.category = sp.category;
    kw.score = sp.score;
    keywords.push_back(std::move(kw));
  }
  return keywords;
}

}  // namespace convoref::nlp
