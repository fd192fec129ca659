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

#ifndef CONVOREF_NLP_CHUNKER_H_
#define CONVOREF_NLP_CHUNKER_H_

#include <span>
#include <vector>

#include "convoref/nlp/types.h"

namespace convoref::nlp {

// Groups tokens into noun phrases: maximal runs of ADJ* (NOUN | PROPN | NUM
// | DATEWORD)+. Runs may not straddle stopwords, verbs or punctuation, and an
// adjective after a content word starts a new phrase, so "New York last May"
// yields "New York" and "last May". A gazetteer match also ends a mixed
// run ("huge Monet collection" yields "Monet" and "collection"), while runs
// made only of PROPN tokens stay whole ("President Obama").
std::vector<Phrase> ChunkNounPhrases(std::span<const Token> tokens);

bool IsContentTag(Tag tag);

}  // namespace convoref::nlp

#endif  // CONVOREF_NLP_CHUNKER_H_
