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

#include "convoref/app/bench.h"

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <sstream>
#include <unordered_set>

#include "convoref/common/error.h"
#include "convoref/common/text.h"
#include "convoref/nlp/gazetteer.h"
#include "convoref/nlp/lexicon.h"

namespace convoref::app {
namespace {

constexpr const char *kStageNames[] = {"tokenize", "chunk", "classify", "rank",
                                       "total"};

void FnvMix(uint64_t &h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  h ^= 0xff;  // field separator
  h *= 1099511628211ULL;
}

std::string FormatScore(double score) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", score);
  return buf;
}

}  // namespace

nlp::KeywordExtractor MakeExtractor(const nlp::ExtractionParams &params,
                                    const std::string &language) {
  params.Validate();
  auto gazetteers = params.gazetteer_path.empty()
                        ? std::make_shared<const nlp::GazetteerSet>()
                        : nlp::GazetteerSet::Shared(params.gazetteer_path);
  return nlp::KeywordExtractor(
      nlp::Lexicon::ForLanguage(language, params.stopword_path),
      std::move(gazetteers), params);
}

std::vector<std::string> SplitUtterances(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = Trim(text.substr(pos, end - pos));
    if (!line.empty() && line.front() != '#') out.emplace_back(line);
    pos = end + 1;
  }
  return out;
}

std::vector<nlp::Keyword> ExtractDocument(const nlp::KeywordExtractor &extractor,
                                          std::string_view text) {
  std::vector<nlp::Keyword> all;
  std::unordered_set<std::string> emitted;
  for (const std::string &line : SplitUtterances(text)) {
    for (nlp::Keyword &k : extractor.Extract(line, emitted)) {
      emitted.insert(k.normalized);
      all.push_back(std::move(k));
    }
  }
  return all;
}

nlohmann::json KeywordsToJson(const std::vector<nlp::Keyword> &keywords) {
  nlohmann::json out = nlohmann::json::array();
  for (const nlp::Keyword &k : keywords) {
    out.push_back({{"phrase", k.phrase},
                   {"category", nlp::CategoryName(k.category)},
                   {"score", k.score},
                   {"color_code", nlp::ColorName(k.color_code())}});
  }
  return out;
}

std::string KeywordsToText(const std::vector<nlp::Keyword> &keywords) {
  std::string out;
  for (const nlp::Keyword &k : keywords) {
    out += k.phrase;
    out += '\t';
    out += nlp::CategoryName(k.category);
    out += '\t';
    out += FormatScore(k.score);
    out += '\t';
    out += nlp::ColorName(k.color_code());
    out += '\n';
  }
  return out;
}

std::size_t CountWords(std::string_view text) {
  std::size_t n = 0;
  bool in_word = false;
  for (char c : text) {
    bool space = std::isspace(static_cast<unsigned char>(c)) != 0;
    if (!space && !in_word) ++n;
    in_word = !space;
  }
  return n;
}

BenchReport RunBench(const nlp::KeywordExtractor &extractor,
                     std::string_view corpus) {
  BenchReport report;
  std::vector<std::string> utterances = SplitUtterances(corpus);
  for (const std::string &u : utterances) report.words += CountWords(u);
  if (report.words == 0) {
    throw Error(ErrorCode::kEmptySegment, "corpus contains no words");
  }
  report.utterances = utterances.size();

  std::map<std::string, std::vector<double>> samples;
  std::unordered_set<std::string> emitted;
  uint64_t digest = 1469598103934665603ULL;
  const auto start = std::chrono::steady_clock::now();
  for (const std::string &u : utterances) {
    nlp::StageTimings t;
    std::vector<nlp::Keyword> kws = extractor.Extract(u, emitted, &t);
    samples["tokenize"].push_back(t.tokenize_ms);
    samples["chunk"].push_back(t.chunk_ms);
    samples["classify"].push_back(t.classify_ms);
    samples["rank"].push_back(t.rank_ms);
    samples["total"].push_back(t.total_ms());
    for (const nlp::Keyword &k : kws) {
      emitted.insert(k.normalized);
      FnvMix(digest, k.phrase);
      FnvMix(digest, nlp::CategoryName(k.category));
      FnvMix(digest, FormatScore(k.score));
    }
    report.keywords += kws.size();
  }
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  report.words_per_second =
      report.seconds > 0 ? report.words / report.seconds : 0.0;
  for (auto &[name, values] : samples) {
    report.stages[name] = hub::Summarize(values);
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016" PRIx64, digest);
  report.keyword_digest = hex;
  return report;
}

nlohmann::json BenchReport::ToJson() const {
  nlohmann::json stage_json = nlohmann::json::object();
  for (const char *name : kStageNames) {
    auto it = stages.find(name);
    if (it == stages.end()) continue;
    stage_json[name] = {{"p50_ms", it->second.p50},
                        {"p95_ms", it->second.p95},
                        {"max_ms", it->second.max},
                        {"mean_ms", it->second.mean}};
  }
  return {{"schema", 1},
          {"utterances", utterances},
          {"words", words},
          {"seconds", seconds},
          {"words_per_second", words_per_second},
          {"stages", stage_json},
          {"keywords", keywords},
          {"keyword_digest", keyword_digest}};
}

std::string BenchReport::ToText() const {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof(line),
                "words %zu  utterances %zu  seconds %.3f  words/s %.1f\n",
                words, utterances, seconds, words_per_second);
  out << line;
  std::snprintf(line, sizeof(line), "%-10s %10s %10s %10s\n", "stage",
                "p50_ms", "p95_ms", "max_ms");
  out << line;
  for (const char *name : kStageNames) {
    auto it = stages.find(name);
    if (it == stages.end()) continue;
    std::snprintf(line, sizeof(line), "%-10s %10.4f %10.4f %10.4f\n", name,
                  it->second.p50, it->second.p95, it->second.max);
    out << line;
  }
  out << "keywords " << keywords << "  digest " << keyword_digest << "\n";
  return out.str();
}

}  // namespace convoref::app
