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

#include "convoref/nlp/gazetteer.h"

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "convoref/common/error.h"
#include "convoref/common/text.h"
#include "convoref/nlp/tokenizer.h"

namespace convoref::nlp {

GazetteerSet GazetteerSet::Parse(std::string_view text) {
  GazetteerSet set;
  std::optional<EntityCategory> section;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = Trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      std::string name = CaseFold(Trim(line.substr(1, line.size() - 2)));
      if (name == "organization") section = EntityCategory::kOrganization;
      else if (name == "location") section = EntityCategory::kLocation;
      else if (name == "person") section = EntityCategory::kPerson;
      else {
        throw Error(ErrorCode::kConfigInvalid,
                    "unknown gazetteer section [" + name + "] at line " +
                        std::to_string(line_no));
      }
      continue;
    }
    if (!section) {
      throw Error(ErrorCode::kConfigInvalid,
                  "gazetteer entry outside a section at line " +
                      std::to_string(line_no));
    }
    set.Add(*section, line);
  }
  return set;
}

GazetteerSet GazetteerSet::LoadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read gazetteer: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return Parse(buf.str());
}

std::shared_ptr<const GazetteerSet> GazetteerSet::Shared(
    const std::string &path) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const GazetteerSet>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(path);
  if (it != cache.end()) return it->second;
  auto set = std::make_shared<const GazetteerSet>(LoadFile(path));
  cache.emplace(path, set);
  return set;
}

void GazetteerSet::Add(EntityCategory category, std::string_view entry) {
  std::string key = NormalizePhrase(entry);
  if (key.empty()) return;
  std::size_t tokens = CountWords(key);
  if (tokens > max_entry_tokens_) max_entry_tokens_ = tokens;
  switch (category) {
    case EntityCategory::kOrganization: organizations_.insert(key); break;
    case EntityCategory::kLocation: locations_.insert(key); break;
    case EntityCategory::kPerson: persons_.insert(key); break;
    default:
      throw Error(ErrorCode::kConfigInvalid,
                  "gazetteers hold organization, location and person only");
  }
}

const std::unordered_set<std::string> *GazetteerSet::SetFor(
    EntityCategory c) const {
  switch (c) {
    case EntityCategory::kOrganization: return &organizations_;
    case EntityCategory::kLocation: return &locations_;
    case EntityCategory::kPerson: return &persons_;
    default: return nullptr;
  }
}

bool GazetteerSet::Contains(EntityCategory category,
                            std::string_view normalized) const {
  const auto *set = SetFor(category);
  return set != nullptr && set->count(std::string(normalized)) > 0;
}

std::optional<EntityCategory> GazetteerSet::Match(
    std::string_view normalized) const {
  std::string key(normalized);
  if (organizations_.count(key)) return EntityCategory::kOrganization;
  if (locations_.count(key)) return EntityCategory::kLocation;
  if (persons_.count(key)) return EntityCategory::kPerson;
  return std::nullopt;
}

std::size_t GazetteerSet::size(EntityCategory category) const {
  const auto *set = SetFor(category);
  return set ? set->size() : 0;
}

void MarkGazetteerSpans(std::vector<Token> &tokens,
                        const GazetteerSet &gazetteers) {
  const std::size_t max_len = gazetteers.max_entry_tokens();
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t matched = 0;
    std::string key;
    for (std::size_t len = 1; len <= max_len && i + len <= tokens.size();
         ++len) {
      const Token &t = tokens[i + len - 1];
      if (!t.is_word || t.tag == Tag::kStop || t.tag == Tag::kVerb) break;
      if (len > 1) key.push_back(' ');
      key += t.lower;
      if (gazetteers.Match(key)) matched = len;
    }
    if (matched == 0) {
      ++i;
      continue;
    }
    bool proper = false;
    for (std::size_t k = i; k < i + matched; ++k) {
      if (tokens[k].tag == Tag::kOther) tokens[k].tag = Tag::kPropn;
      proper = proper || tokens[k].tag == Tag::kPropn;
    }
    if (proper) {
      tokens[i].entity_begin = true;
      tokens[i + matched - 1].entity_end = true;
    }
    i += matched;
  }
}

namespace {

std::string JoinLower(std::span<const Token> tokens, std::size_t first,
                      std::size_t end) {
  std::string out;
  for (std::size_t k = first; k < end; ++k) {
    if (k > first) out.push_back(' ');
    out += tokens[k].lower;
  }
  return out;
}

std::string_view StripPeriod(std::string_view s) {
  if (!s.empty() && s.back() == '.') s.remove_suffix(1);
  return s;
}

}  // namespace

EntityCategory ClassifyEntity(const Phrase &phrase,
                              std::span<const Token> tokens,
                              const GazetteerSet &gazetteers,
                              const Lexicon &lexicon) {
  const std::size_t first = phrase.first_token;
  const std::size_t end = phrase.end_token;
  const Token &head = tokens[end - 1];

  bool has_num = false;
  bool has_propn = false;
  for (std::size_t k = first; k < end; ++k) {
    if (tokens[k].tag == Tag::kDateWord) return EntityCategory::kDate;
    has_num = has_num || tokens[k].tag == Tag::kNum;
    has_propn = has_propn || tokens[k].tag == Tag::kPropn;
  }
  if (head.tag == Tag::kNum && IsYearToken(head.surface)) {
    return EntityCategory::kDate;
  }
  if (end - first >= 2 && lexicon.IsDateModifier(tokens[first].lower) &&
      lexicon.IsTimeUnit(head.lower)) {
    return EntityCategory::kDate;
  }
  if (has_num) return EntityCategory::kNumeric;
  if (!has_propn) return EntityCategory::kGeneral;

  // Longest contiguous PROPN run inside the phrase.
  std::size_t core_first = first, core_end = first, run_start = first;
  for (std::size_t k = first; k <= end; ++k) {
    bool propn = k < end && tokens[k].tag == Tag::kPropn;
    if (!propn) {
      if (k - run_start > core_end - core_first) {
        core_first = run_start;
        core_end = k;
      }
      run_start = k + 1;
    }
  }

  const std::string full = JoinLower(tokens, first, end);
  const std::string core = JoinLower(tokens, core_first, core_end);
  for (const std::string &key : {full, core, head.lower}) {
    if (key.empty()) continue;
    if (auto category = gazetteers.Match(key)) return *category;
  }

  if (end - first >= 2 &&
      (lexicon.IsPersonTitle(tokens[first].lower) ||
       lexicon.IsPersonTitle(StripPeriod(tokens[first].lower)))) {
    return EntityCategory::kPerson;
  }
  return EntityCategory::kGeneral;
}

}  // namespace convoref::nlp
