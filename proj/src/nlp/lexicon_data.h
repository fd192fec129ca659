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

#ifndef CONVOREF_NLP_LEXICON_DATA_H_
#define CONVOREF_NLP_LEXICON_DATA_H_

#include <string_view>

// Built-in English word lists, whitespace separated.
namespace convoref::nlp::en {

extern const std::string_view kStopwords;
extern const std::string_view kNumberWords;
extern const std::string_view kDateWords;
extern const std::string_view kAmbiguousMonths;
extern const std::string_view kDateModifiers;
extern const std::string_view kTimeUnits;
extern const std::string_view kVerbs;
extern const std::string_view kAdjectives;
extern const std::string_view kNouns;
extern const std::string_view kOtherWords;
extern const std::string_view kPersonTitles;
extern const std::string_view kAbbreviations;

}  // namespace convoref::nlp::en

#endif  // CONVOREF_NLP_LEXICON_DATA_H_
