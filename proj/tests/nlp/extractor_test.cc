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

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "convoref/common/error.h"
#include "doctest.h"

namespace convoref::nlp {
namespace {

KeywordExtractor MakeExtractor(ExtractionParams params = {}) {
  return KeywordExtractor(
      Lexicon::ForLanguage("en"),
      GazetteerSet::Shared(std::string(CONVOREF_DATA_DIR) + "/gazetteer.txt"),
      params);
}

std::map<std::string, EntityCategory> ByPhrase(
    const std::vector<Keyword> &keywords) {
  std::map<std::string, EntityCategory> out;
  for (const Keyword &k : keywords) out[k.phrase] = k.category;
  return out;
}

TEST_CASE("stopword-only text yields nothing") {
  CHECK(MakeExtractor().Extract("the of and", {}).empty());
  CHECK(MakeExtractor().Extract("", {}).empty());
}

TEST_CASE("entities are kept regardless of rank") {
  auto kws = MakeExtractor().Extract("I flew to New York with Google", {});
  auto by = ByPhrase(kws);
  CHECK(by.at("New York") == EntityCategory::kLocation);
  CHECK(by.at("Google") == EntityCategory::kOrganization);
}

TEST_CASE("date words take part in ranking") {
  auto kws = MakeExtractor().Extract("Maybe we can see a show on Friday", {});
  auto it = std::find_if(kws.begin(), kws.end(),
                         [](const Keyword &k) { return k.phrase == "Friday"; });
  REQUIRE(it != kws.end());
  CHECK(it->category == EntityCategory::kDate);
  CHECK(it->score > 0.0);
}

TEST_CASE("an entity inside a longer noun run is extracted on its own") {
  auto by = ByPhrase(
      MakeExtractor().Extract("The museum has a huge Monet collection", {}));
  CHECK(by.count("Monet") == 1);
  CHECK(by.at("Monet") == EntityCategory::kPerson);
  CHECK(by.count("huge Monet collection") == 0);
}

TEST_CASE("location and date from one sentence") {
  auto by = ByPhrase(MakeExtractor().Extract("I visited New York last May", {}));
  CHECK(by.at("New York") == EntityCategory::kLocation);
  CHECK(by.at("last May") == EntityCategory::kDate);
}

TEST_CASE("emitted phrases are dropped; duplicates within a segment collapse") {
  auto ex = MakeExtractor();
  std::unordered_set<std::string> emitted;
  auto first = ex.Extract("Paris and paris and PARIS", emitted);
  REQUIRE(first.size() == 1);
  CHECK(first[0].normalized == "paris");
  for (const auto &k : first) emitted.insert(k.normalized);
  CHECK(ex.Extract("Paris and paris and PARIS", emitted).empty());
}

TEST_CASE("general phrases survive only above the segment mean") {
  auto ex = MakeExtractor();
  const std::string text =
      "the museum has a big garden and the garden has a museum cafe with "
      "coffee";
  auto scored = ex.Analyze(text);
  REQUIRE(!scored.empty());
  double mean = 0.0;
  for (const auto &s : scored) mean += s.score;
  mean /= scored.size();
  auto kws = ex.Extract(text, {});
  for (const auto &k : kws) {
    if (k.category == EntityCategory::kGeneral) CHECK(k.score > mean);
  }
  for (const auto &s : scored) {
    bool kept = std::any_of(kws.begin(), kws.end(), [&](const Keyword &k) {
      return k.normalized == s.normalized;
    });
    if (s.category == EntityCategory::kGeneral && s.score <= mean) {
      // May still be kept through another occurrence of the same phrase.
      bool other = std::any_of(scored.begin(), scored.end(), [&](auto &o) {
        return o.normalized == s.normalized && o.score > mean;
      });
      if (!other) CHECK_FALSE(kept);
    }
  }
}

TEST_CASE("extraction is deterministic") {
  auto ex = MakeExtractor();
  const std::string text =
      "Yesterday Alice told me that Google opened a new office in Tokyo near "
      "the old river park, and 300 engineers moved there in March.";
  auto a = ex.Extract(text, {});
  for (int run = 0; run < 5; ++run) {
    auto b = MakeExtractor().Extract(text, {});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].phrase == b[i].phrase);
      CHECK(a[i].category == b[i].category);
      CHECK(a[i].score == b[i].score);  // bit-identical
    }
  }
}

TEST_CASE("scores are finite and non-negative") {
  auto kws = MakeExtractor().Extract(
      "Ada Lovelace and Alan Turing shaped computer science in London", {});
  REQUIRE(!kws.empty());
  for (const auto &k : kws) {
    CHECK(std::isfinite(k.score));
    CHECK(k.score >= 0.0);
  }
}

TEST_CASE("damping changes scores but not the entity keyword set") {
  const std::string text = "I flew to New York with Google and met Elon Musk";
  ExtractionParams p;
  p.damping = 0.5;
  auto base = MakeExtractor().Extract(text, {});
  auto alt = MakeExtractor(p).Extract(text, {});
  auto entities = [](const std::vector<Keyword> &ks) {
    std::vector<std::string> out;
    for (const auto &k : ks) {
      if (k.category != EntityCategory::kGeneral) out.push_back(k.phrase);
    }
    return out;
  };
  CHECK(entities(base) == entities(alt));
  bool differs = false;
  for (const auto &b : base) {
    for (const auto &a : alt) {
      if (a.phrase == b.phrase && a.score != b.score) differs = true;
    }
  }
  CHECK(differs);
}

TEST_CASE("invalid params are rejected") {
  ExtractionParams p;
  p.damping = 1.0;
  CHECK_THROWS_AS(MakeExtractor(p), Error);
  p = {};
  p.window = 1;
  CHECK_THROWS_AS(MakeExtractor(p), Error);
  p = {};
  p.epsilon = 0;
  CHECK_THROWS_AS(MakeExtractor(p), Error);
  p = {};
  p.max_iter = 0;
  CHECK_THROWS_AS(MakeExtractor(p), Error);
}

TEST_CASE("color mapping is total and exact") {
  CHECK(ColorFor(EntityCategory::kPerson) == ColorCode::kRed);
  CHECK(ColorFor(EntityCategory::kLocation) == ColorCode::kBlue);
  CHECK(ColorFor(EntityCategory::kOrganization) == ColorCode::kPurple);
  CHECK(ColorFor(EntityCategory::kDate) == ColorCode::kGreen);
  CHECK(ColorFor(EntityCategory::kNumeric) == ColorCode::kNeutral);
  CHECK(ColorFor(EntityCategory::kGeneral) == ColorCode::kNeutral);
  for (EntityCategory c : kAllCategories) {
    CHECK(ParseCategory(CategoryName(c)) == c);
    CHECK(!ColorName(ColorFor(c)).empty());
  }
}

}  // namespace
}  // namespace convoref::nlp
