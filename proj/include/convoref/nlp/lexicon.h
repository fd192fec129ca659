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

#ifndef CONVOREF_NLP_LEXICON_H_
#define CONVOREF_NLP_LEXICON_H_

#include <deque>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>

namespace convoref::nlp {

// Closed-class and common-word lists for one language. Immutable once built
// and shared between sessions.
class Lexicon {
 public:
  // Built-in lexicon for a language tag. Only "en" ships; other tags throw
  // Error(kConfigInvalid).
  static std::shared_ptr<const Lexicon> ForLanguage(std::string_view language);

  // As above, with the stopword list replaced by the entries of a UTF-8 file
  // (one word per line, '#' comments). Empty path keeps the built-in list.
  static std::shared_ptr<const Lexicon> ForLanguage(
      std::string_view language, const std::string &stopword_path);

  const std::string &language() const { return language_; }

  bool IsStopword(std::string_view lower) const;
  bool IsNumberWord(std::string_view lower) const;
  // Months other than the ambiguous ones, weekdays, today/tomorrow/...
  bool IsDateWord(std::string_view lower) const;
  // "may", "march", "august": dates only when capitalized mid-sentence.
  bool IsAmbiguousMonth(std::string_view lower) const;
  bool IsDateModifier(std::string_view lower) const;
  bool IsTimeUnit(std::string_view lower) const;
  bool IsVerb(std::string_view lower) const;
  bool IsAdjective(std::string_view lower) const;
  // Tries the word as given and with a plural suffix stripped.
  bool IsNoun(std::string_view lower) const;
  bool IsPersonTitle(std::string_view lower) const;
  // Abbreviations that keep their trailing period ("Dr.", "St.").
  bool IsAbbreviation(std::string_view lower) const;
  // Member of any word list; used to decide sentence-initial capitals.
  bool IsCommonWord(std::string_view lower) const;

  // 1-12 for a month name, 0 otherwise.
  int MonthNumber(std::string_view lower) const;
  // 0 (Sunday) .. 6 for a weekday name, -1 otherwise.
  int WeekdayNumber(std::string_view lower) const;

 private:
  using WordSet = std::unordered_set<std::string_view>;

  Lexicon() = default;
  Lexicon(const Lexicon &) = default;
  static std::shared_ptr<const Lexicon> BuiltinEnglish();
  static void AddWords(std::string_view words, WordSet &set);
  void LoadStopwordFile(const std::string &path);

  std::string language_;
  std::deque<std::string> owned_;
  WordSet stopwords_;
  WordSet numbers_;
  WordSet date_words_;
  WordSet ambiguous_months_;
  WordSet date_modifiers_;
  WordSet time_units_;
  WordSet verbs_;
  WordSet adjectives_;
  WordSet nouns_;
  WordSet other_words_;
  WordSet person_titles_;
  WordSet abbreviations_;
};

}  // namespace convoref::nlp

#endif  // CONVOREF_NLP_LEXICON_H_
