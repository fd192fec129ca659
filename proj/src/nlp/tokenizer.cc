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

#include "convoref/nlp/tokenizer.h"

#include <array>
#include <cstdlib>

#include "convoref/common/text.h"

namespace convoref::nlp {
namespace {

constexpr std::array<std::string_view, 19> kDeterminers = {
    "a",    "an",    "the",  "my",    "your", "his",  "her",
    "its",  "our",   "their", "this", "that", "these", "those",
    "some", "every", "each", "no",   "any"};

bool IsAsciiAlnum(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9');
}

bool IsDigit(unsigned char c) { return c >= '0' && c <= '9'; }

// Length of a multi-byte punctuation or space sequence at `i`, or 0.
// Covers no-break space and the General Punctuation block (U+2000-U+206F),
// which includes curly quotes, dashes and the ellipsis.
std::size_t Utf8PunctLength(std::string_view text, std::size_t i) {
  unsigned char c = static_cast<unsigned char>(text[i]);
  if (c == 0xC2 && i + 1 < text.size()) {
    unsigned char d = static_cast<unsigned char>(text[i + 1]);
    if (d == 0xA0 || d == 0xAB || d == 0xBB || d == 0xBF || d == 0xA1) {
      return 2;
    }
  }
  if (c == 0xE2 && i + 2 < text.size() &&
      static_cast<unsigned char>(text[i + 1]) == 0x80) {
    return 3;
  }
  return 0;
}

bool IsRightSingleQuote(std::string_view text, std::size_t i) {
  return i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
         static_cast<unsigned char>(text[i + 1]) == 0x80 &&
         static_cast<unsigned char>(text[i + 2]) == 0x99;
}

std::size_t Utf8CharLength(unsigned char c) {
  if (c < 0x80) return 1;
  if ((c >> 5) == 0x6) return 2;
  if ((c >> 4) == 0xE) return 3;
  if ((c >> 3) == 0x1E) return 4;
  return 1;
}

// Word characters: ASCII alphanumerics and any non-punctuation UTF-8 char.
std::size_t WordCharLength(std::string_view text, std::size_t i) {
  unsigned char c = static_cast<unsigned char>(text[i]);
  if (IsAsciiAlnum(c)) return 1;
  if (c < 0x80) return 0;
  if (Utf8PunctLength(text, i) > 0) return 0;
  return std::min(Utf8CharLength(c), text.size() - i);
}

// Currency sign length at `i` when followed by a digit.
std::size_t CurrencyPrefixLength(std::string_view text, std::size_t i) {
  std::size_t len = 0;
  if (text[i] == '$') {
    len = 1;
  } else if (text.compare(i, 2, "\xC2\xA3") == 0 ||
             text.compare(i, 2, "\xC2\xA5") == 0) {
    len = 2;  // pound, yen
  } else if (text.compare(i, 3, "\xE2\x82\xAC") == 0) {
    len = 3;  // euro
  }
  if (len == 0 || i + len >= text.size()) return 0;
  return IsDigit(static_cast<unsigned char>(text[i + len])) ? len : 0;
}

bool IsSpace(std::string_view text, std::size_t i) {
  char c = text[i];
  if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
      c == '\v') {
    return true;
  }
  return text.compare(i, 2, "\xC2\xA0") == 0;
}

bool IsCapitalized(std::string_view s) {
  if (s.empty()) return false;
  unsigned char c = static_cast<unsigned char>(s[0]);
  if (c >= 'A' && c <= 'Z') return true;
  // Latin-1 supplement capitals U+00C0-U+00DE except U+00D7.
  if (c == 0xC3 && s.size() > 1) {
    unsigned char d = static_cast<unsigned char>(s[1]);
    return d >= 0x80 && d <= 0x9E && d != 0x97;
  }
  return false;
}

bool IsAcronym(std::string_view s) {
  int letters = 0;
  for (char ch : s) {
    if (ch >= 'a' && ch <= 'z') return false;
    if (ch >= 'A' && ch <= 'Z') ++letters;
  }
  return letters >= 2;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() + 2 &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool IsDeterminer(std::string_view lower) {
  for (std::string_view d : kDeterminers) {
    if (d == lower) return true;
  }
  return false;
}

Tag TagBySuffix(std::string_view w) {
  if (EndsWith(w, "ly")) return Tag::kOther;
  for (std::string_view s : {"tion", "sion", "ment", "ness", "ity", "ism",
                             "ship", "ance", "ence", "ogy", "ist", "ics",
                             "tions", "sions", "ments", "ists", "ities"}) {
    if (EndsWith(w, s)) return Tag::kNoun;
  }
  for (std::string_view s : {"ous", "ful", "ive", "able", "ible", "less",
                             "ical", "ish"}) {
    if (EndsWith(w, s)) return Tag::kAdj;
  }
  if (EndsWith(w, "ed") || EndsWith(w, "ing")) return Tag::kVerb;
  return Tag::kOther;
}

Tag TagCommonWord(std::string_view lower, std::string_view prev_lower,
                  Tag prev_tag, const Lexicon &lex) {
  bool noun = lex.IsNoun(lower) || lex.IsTimeUnit(lower);
  bool verb = lex.IsVerb(lower);
  bool adj = lex.IsAdjective(lower);
  bool after_modifier = IsDeterminer(prev_lower) || prev_tag == Tag::kAdj;
  if (noun && (verb || adj)) return after_modifier ? Tag::kNoun
                                    : verb        ? Tag::kVerb
                                                  : Tag::kAdj;
  if (verb) return Tag::kVerb;
  if (adj) return Tag::kAdj;
  if (noun) return Tag::kNoun;
  if (lex.IsCommonWord(lower)) return Tag::kOther;
  return TagBySuffix(lower);
}

Tag TagWord(std::string_view surface, std::string_view lower,
            bool sentence_start, std::string_view prev_lower, Tag prev_tag,
            const Lexicon &lex) {
  if (IsNumericToken(surface) || lex.IsNumberWord(lower)) return Tag::kNum;
  if (lex.IsDateWord(lower)) return Tag::kDateWord;
  bool cap = IsCapitalized(surface);
  if (lex.IsAmbiguousMonth(lower) && cap && !sentence_start) {
    return Tag::kDateWord;
  }
  if (lex.IsStopword(lower)) return Tag::kStop;
  if (IsAcronym(surface)) return Tag::kPropn;
  if (cap && !sentence_start) return Tag::kPropn;
  std::string_view bare = lower;
  if (!bare.empty() && bare.back() == '.') bare.remove_suffix(1);
  if (cap && !lex.IsCommonWord(lower) && !lex.IsPersonTitle(lower) &&
      !lex.IsCommonWord(bare)) {
    return Tag::kPropn;
  }
  if (cap && lex.IsPersonTitle(lower)) return Tag::kPropn;
  return TagCommonWord(lower, prev_lower, prev_tag, lex);
}

}  // namespace

bool IsNumericToken(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && s[0] == '$') i = 1;
  else if (s.size() > 1 && (s.compare(0, 2, "\xC2\xA3") == 0 ||
                            s.compare(0, 2, "\xC2\xA5") == 0)) i = 2;
  else if (s.size() > 2 && s.compare(0, 3, "\xE2\x82\xAC") == 0) i = 3;
  if (i >= s.size() || !IsDigit(static_cast<unsigned char>(s[i]))) {
    return false;
  }
  while (i < s.size() && (IsDigit(static_cast<unsigned char>(s[i])) ||
                          s[i] == '.' || s[i] == ',' || s[i] == ':')) {
    ++i;
  }
  std::string_view suffix = s.substr(i);
  if (suffix.empty() || suffix == "%") return true;
  std::string folded = CaseFold(suffix);
  for (std::string_view ok : {"st", "nd", "rd", "th", "s", "k", "m", "bn",
                              "am", "pm", "km", "kg", "g", "h", "x", "d"}) {
    if (folded == ok) return true;
  }
  return false;
}

bool IsYearToken(std::string_view s) {
  if (s.size() == 5 && s[4] == 's') s.remove_suffix(1);
  if (s.size() != 4) return false;
  for (char c : s) {
    if (!IsDigit(static_cast<unsigned char>(c))) return false;
  }
  int year = std::atoi(std::string(s).c_str());
  return year >= 1000 && year <= 2099;
}

std::vector<Token> Tokenize(std::string_view text, const Lexicon &lexicon) {
  std::vector<Token> tokens;
  bool sentence_start = true;
  std::string_view prev_lower;
  Tag prev_tag = Tag::kOther;

  auto push_punct = [&](std::size_t begin, std::size_t end) {
    Token tok;
    tok.surface = std::string(text.substr(begin, end - begin));
    tok.lower = tok.surface;
    tok.span = {begin, end};
    tok.tag = Tag::kOther;
    tok.is_word = false;
    if (tok.surface == "." || tok.surface == "!" || tok.surface == "?" ||
        tok.surface == "\xE2\x80\xA6") {
      sentence_start = true;
    }
    tokens.push_back(std::move(tok));
  };

  auto push_word = [&](std::size_t begin, std::size_t end, Tag forced,
                       bool force) {
    Token tok;
    tok.surface = std::string(text.substr(begin, end - begin));
    tok.lower = CaseFold(tok.surface);
    tok.span = {begin, end};
    tok.tag = force ? forced
                    : TagWord(tok.surface, tok.lower, sentence_start,
                              prev_lower, prev_tag, lexicon);
    tokens.push_back(std::move(tok));
    prev_lower = tokens.back().lower;
    prev_tag = tokens.back().tag;
    sentence_start = false;
  };

  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (IsSpace(text, i)) {
      i += (text[i] == '\xC2') ? 2 : 1;
      continue;
    }
    std::size_t currency = CurrencyPrefixLength(text, i);
    std::size_t first = currency > 0 ? currency : WordCharLength(text, i);
    if (first == 0) {
      std::size_t len = Utf8PunctLength(text, i);
      if (len == 0) len = std::min(Utf8CharLength(text[i]), n - i);
      push_punct(i, i + len);
      i += len;
      continue;
    }

    std::size_t j = i + first;
    while (j < n) {
      std::size_t len = WordCharLength(text, j);
      if (len > 0) {
        j += len;
        continue;
      }
      char c = text[j];
      std::size_t sep = 0;
      if (c == '\'' || c == '-') sep = 1;
      else if (IsRightSingleQuote(text, j)) sep = 3;
      else if ((c == '.' || c == ',' || c == ':') && j > i &&
               IsDigit(static_cast<unsigned char>(text[j - 1])) &&
               j + 1 < n && IsDigit(static_cast<unsigned char>(text[j + 1]))) {
        sep = 1;
      }
      if (sep == 0 || j + sep >= n || WordCharLength(text, j + sep) == 0) {
        break;
      }
      j += sep;
    }
    if (j < n && text[j] == '%' && IsDigit(static_cast<unsigned char>(text[j - 1]))) {
      ++j;
    }

    std::string lower = CaseFold(text.substr(i, j - i));
    if (j < n && text[j] == '.' && lexicon.IsAbbreviation(lower)) {
      push_word(i, j + 1, Tag::kOther, false);
      i = j + 1;
      continue;
    }

    // Split a possessive "'s" off names that are not contractions.
    std::size_t poss = 0;
    if (lower.size() > 2 && lower.compare(lower.size() - 2, 2, "'s") == 0) {
      poss = 2;
    } else if (lower.size() > 4 &&
               lower.compare(lower.size() - 4, 4, "\xE2\x80\x99s") == 0) {
      poss = 4;
    }
    if (poss > 0 && !lexicon.IsStopword(lower)) {
      push_word(i, j - poss, Tag::kOther, false);
      push_word(j - poss, j, Tag::kStop, true);
    } else {
      push_word(i, j, Tag::kOther, false);
    }
    i = j;
  }
  return tokens;
}

}  // namespace convoref::nlp
