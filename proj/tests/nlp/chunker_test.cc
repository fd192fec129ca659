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

#include "convoref/nlp/chunker.h"

#include <random>
#include <string>
#include <vector>

#include "convoref/nlp/gazetteer.h"
#include "convoref/nlp/tokenizer.h"
#include "doctest.h"

namespace convoref::nlp {
namespace {

std::vector<std::string> Chunk(const std::string &text) {
  auto tokens = Tokenize(text, *Lexicon::ForLanguage("en"));
  std::vector<std::string> out;
  for (const Phrase &p : ChunkNounPhrases(tokens)) out.push_back(p.text);
  return out;
}

TEST_CASE("multiword names merge into one phrase") {
  CHECK(Chunk("Human Computer Interaction") ==
        std::vector<std::string>{"Human Computer Interaction"});
}

std::vector<std::string> ChunkWithGazetteer(const std::string &text) {
  auto tokens = Tokenize(text, *Lexicon::ForLanguage("en"));
  MarkGazetteerSpans(tokens, GazetteerSet::Parse("[person]\nMonet\nObama\n"
                                                 "[location]\nNew York\n"));
  std::vector<std::string> out;
  for (const Phrase &p : ChunkNounPhrases(tokens)) out.push_back(p.text);
  return out;
}

TEST_CASE("gazetteer entities end mixed runs but not proper-noun runs") {
  CHECK(ChunkWithGazetteer("a huge Monet collection") ==
        std::vector<std::string>{"Monet", "collection"});
  CHECK(ChunkWithGazetteer("the cold New York winter") ==
        std::vector<std::string>{"New York", "winter"});
  CHECK(ChunkWithGazetteer("President Obama spoke") ==
        std::vector<std::string>{"President Obama"});
  // Lowercase recognizer output is treated the same way.
  CHECK(ChunkWithGazetteer("we saw monet paintings") ==
        std::vector<std::string>{"monet", "paintings"});
}

TEST_CASE("stopwords alone produce no phrases") {
  CHECK(Chunk("the of and").empty());
}

TEST_CASE("adjective prefix attaches to the maximal run") {
  CHECK(Chunk("cold New York winter") ==
        std::vector<std::string>{"cold New York winter"});
}

TEST_CASE("adjective after a noun starts a new phrase") {
  CHECK(Chunk("I visited New York last May") ==
        std::vector<std::string>{"New York", "last May"});
}

TEST_CASE("punctuation and verbs break phrases; trailing adjectives drop") {
  CHECK(Chunk("Paris, London and the old museum is big") ==
        std::vector<std::string>{"Paris", "London", "old museum"});
  CHECK(Chunk("it costs 42 dollars") ==
        std::vector<std::string>{"42 dollars"});
}

TEST_CASE("chunk invariants hold over generated sentences") {
  const std::vector<std::string> pool = {
      "the",   "a",      "New",     "York",    "big",    "museum", "visited",
      "and",   "of",     "Google",  "old",     "coffee", "May",    "last",
      "42",    "in",     "Paris",   "is",      "really", ",",      ".",
      "happy", "dollars", "Alice's", "quickly", "river",  "park",   "Tokyo"};
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> len(1, 14);
  const Lexicon &lex = *Lexicon::ForLanguage("en");
  for (int trial = 0; trial < 300; ++trial) {
    std::string text;
    for (int k = len(rng); k > 0; --k) text += pool[pick(rng)] + " ";
    auto tokens = Tokenize(text, lex);
    std::size_t prev_end = 0;
    for (const Phrase &p : ChunkNounPhrases(tokens)) {
      REQUIRE(p.end_token > p.first_token);
      CHECK(p.first_token >= prev_end);
      prev_end = p.end_token;
      CHECK(tokens[p.first_token].tag != Tag::kStop);
      CHECK(tokens[p.end_token - 1].tag != Tag::kStop);
      bool content = false;
      for (std::size_t k = p.first_token; k < p.end_token; ++k) {
        CHECK(tokens[k].is_word);
        content = content || IsContentTag(tokens[k].tag);
      }
      CHECK(content);
      CHECK(IsContentTag(tokens[p.end_token - 1].tag));
    }
  }
}

}  // namespace
}  // namespace convoref::nlp
