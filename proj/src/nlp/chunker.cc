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

namespace convoref::nlp {

bool IsContentTag(Tag tag) {
  return tag == Tag::kNoun || tag == Tag::kPropn || tag == Tag::kNum ||
         tag == Tag::kDateWord;
}

std::vector<Phrase> ChunkNounPhrases(std::span<const Token> tokens) {
  std::vector<Phrase> phrases;

  auto emit = [&](std::size_t first, std::size_t end) {
    Phrase p;
    p.first_token = first;
    p.end_token = end;
    p.span = {tokens[first].span.begin, tokens[end - 1].span.end};
    for (std::size_t k = first; k < end; ++k) {
      if (k > first) p.text.push_back(' ');
      p.text += tokens[k].surface;
    }
    phrases.push_back(std::move(p));
  };

  auto is_propn = [&](std::size_t k) {
    return k < tokens.size() && tokens[k].is_word &&
           tokens[k].tag == Tag::kPropn;
  };

  std::size_t start = 0;
  bool in_run = false;
  bool has_content = false;
  bool all_propn = true;  // every token of the current run is PROPN
  for (std::size_t i = 0; i <= tokens.size(); ++i) {
    Tag tag = i < tokens.size() && tokens[i].is_word ? tokens[i].tag
                                                     : Tag::kOther;
    bool content = IsContentTag(tag);
    bool adj = tag == Tag::kAdj;

    // Proper-noun runs stay whole ("President Obama"); anything else ends
    // where a gazetteer entity begins.
    const bool begins_entity =
        i < tokens.size() && tokens[i].entity_begin && !all_propn;
    if (in_run && ((adj && has_content) || begins_entity)) {
      if (has_content) emit(start, i);
      in_run = false;
    }
    if (content || adj) {
      if (!in_run) {
        start = i;
        in_run = true;
        has_content = false;
        all_propn = true;
      }
      has_content = has_content || content;
      all_propn = all_propn && tag == Tag::kPropn;
      if (tokens[i].entity_end && !is_propn(i + 1)) {
        emit(start, i + 1);
        in_run = false;
      }
      continue;
    }
    if (in_run && has_content) emit(start, i);
    in_run = false;
    has_content = false;
  }
  return phrases;
}

}  // namespace convoref::nlp
