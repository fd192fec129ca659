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

#include "convoref/nlp/lexicon.h"

#include <array>
#include <fstream>
#include <map>
#include <mutex>

#include "convoref/common/error.h"
#include "convoref/common/text.h"
#include "lexicon_data.h"

namespace convoref::nlp {
namespace {

constexpr std::array<std::string_view, 12> kMonths = {
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december"};

constexpr std::array<std::string_view, 7> kWeekdays = {
    "sunday",   "monday", "tuesday", "wednesday",
    "thursday", "friday", "saturday"};

}  // namespace

void Lexicon::AddWords(std::string_view words, WordSet &set) {
  for (std::string_view w : SplitWords(words)) set.insert(w);
}

void Lexicon::LoadStopwordFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read stopwords: " + path);
  stopwords_.clear();
  std::string line;
  while (std::getline(in, line)) {
    std::string_view word = Trim(line);
    if (word.empty() || word.front() == '#') continue;
    owned_.push_back(CaseFold(word));
    stopwords_.insert(owned_.back());
  }
}

std::shared_ptr<const Lexicon> Lexicon::ForLanguage(std::string_view language) {
  return ForLanguage(language, std::string());
}

std::shared_ptr<const Lexicon> Lexicon::ForLanguage(
    std::string_view language, const std::string &stopword_path) {
  if (language != "en") {
    throw Error(ErrorCode::kConfigInvalid,
                "unsupported language: " + std::string(language));
  }
  if (stopword_path.empty()) return BuiltinEnglish();

  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const Lexicon>> by_path;
  std::lock_guard<std::mutex> lock(mu);
  auto it = by_path.find(stopword_path);
  if (it != by_path.end()) return it->second;

  auto lex = std::shared_ptr<Lexicon>(new Lexicon(*BuiltinEnglish()));
  lex->LoadStopwordFile(stopword_path);
  by_path.emplace(stopword_path, lex);
  return lex;
}

bool Lexicon::IsStopword(std::string_view w) const {
  return stopwords_.count(w) > 0;
}
bool Lexicon::IsNumberWord(std::string_view w) const {
  return numbers_.count(w) > 0;
}
bool Lexicon::IsDateWord(std::string_view w) const {
  return date_words_.count(w) > 0;
}
bool Lexicon::IsAmbiguousMonth(std::string_view w) const {
  return ambiguous_months_.count(w) > 0;
}
bool Lexicon::IsDateModifier(std::string_view w) const {
  return date_modifiers_.count(w) > 0;
}
bool Lexicon::IsTimeUnit(std::string_view w) const {
  return time_units_.count(w) > 0;
}
bool Lexicon::IsVerb(std::string_view w) const { return verbs_.count(w) > 0; }
bool Lexicon::IsAdjective(std::string_view w) const {
  return adjectives_.count(w) > 0;
}

bool Lexicon::IsNoun(std::string_view w) const {
  if (nouns_.count(w)) return true;
  auto ends = [&](std::string_view s) {
    return w.size() > s.size() + 1 && w.substr(w.size() - s.size()) == s;
  };
  if (ends("ies")) {
    std::string stem(w.substr(0, w.size() - 3));
    stem += 'y';
    if (nouns_.count(stem)) return true;
  }
  if (ends("es") && nouns_.count(w.substr(0, w.size() - 2))) return true;
  if (ends("s") && nouns_.count(w.substr(0, w.size() - 1))) return true;
  return false;
}

bool Lexicon::IsPersonTitle(std::string_view w) const {
  return person_titles_.count(w) > 0;
}
bool Lexicon::IsAbbreviation(std::string_view w) const {
  return abbreviations_.count(w) > 0;
}

bool Lexicon::IsCommonWord(std::string_view w) const {
  return IsStopword(w) || IsNumberWord(w) || IsDateWord(w) ||
         IsAmbiguousMonth(w) || IsVerb(w) || IsAdjective(w) || IsNoun(w) ||
         other_words_.count(w) > 0 || IsTimeUnit(w);
}

int Lexicon::MonthNumber(std::string_view w) const {
  for (std::size_t i = 0; i < kMonths.size(); ++i) {
    if (kMonths[i] == w) return static_cast<int>(i) + 1;
  }
  return 0;
}

int Lexicon::WeekdayNumber(std::string_view w) const {
  for (std::size_t i = 0; i < kWeekdays.size(); ++i) {
    if (kWeekdays[i] == w) return static_cast<int>(i);
  }
  return -1;
}

std::shared_ptr<const Lexicon> Lexicon::BuiltinEnglish() {
  static const std::shared_ptr<const Lexicon> lexicon = [] {
    auto lex = std::shared_ptr<Lexicon>(new Lexicon());
    lex->language_ = "en";
    AddWords(en::kStopwords, lex->stopwords_);
    AddWords(en::kNumberWords, lex->numbers_);
    AddWords(en::kDateWords, lex->date_words_);
    AddWords(en::kAmbiguousMonths, lex->ambiguous_months_);
    AddWords(en::kDateModifiers, lex->date_modifiers_);
    AddWords(en::kTimeUnits, lex->time_units_);
    AddWords(en::kVerbs, lex->verbs_);
    AddWords(en::kAdjectives, lex->adjectives_);
    AddWords(en::kNouns, lex->nouns_);
    AddWords(en::kOtherWords, lex->other_words_);
    AddWords(en::kPersonTitles, lex->person_titles_);
    AddWords(en::kAbbreviations, lex->abbreviations_);
    return std::shared_ptr<const Lexicon>(std::move(lex));
  }();
  return lexicon;
}

}  // namespace convoref::nlp
