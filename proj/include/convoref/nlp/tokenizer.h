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

#ifndef CONVOREF_NLP_TOKENIZER_H_
#define CONVOREF_NLP_TOKENIZER_H_

#include <string_view>
#include <vector>

#include "convoref/nlp/lexicon.h"
#include "convoref/nlp/types.h"

namespace convoref::nlp {

// Splits UTF-8 text into word and punctuation tokens and assigns a coarse
// tag to each by lexicon lookup. Unknown lowercase words fall back to
// suffix rules and then OTHER; capitalized words that are not at the start
// of a sentence, and sentence-initial capitals missing from the common-word
// lists, are tagged PROPN.
//
// Token spans are ordered, non-overlapping, and index into `text`.
std::vector<Token> Tokenize(std::string_view text, const Lexicon &lexicon);

// True for digit-led tokens such as "42", "3.5", "1,000", "$20", "1990s",
// "3rd" and "42%".
bool IsNumericToken(std::string_view surface);

// Four-digit years in [1000, 2099] and decades like "1990s".
bool IsYearToken(std::string_view surface);

}  // namespace convoref::nlp

#endif  // CONVOREF_NLP_TOKENIZER_H_
