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

#include "convoref/refs/calendar.h"

#include <array>
#include <cstdio>
#include <vector>

#include "convoref/common/text.h"

namespace convoref::refs {

namespace chr = std::chrono;

namespace {

constexpr std::array<std::string_view, 12> kMonths = {
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december"};
constexpr std::array<std::string_view, 12> kMonthLabels = {
    "January", "February", "March",     "April",   "May",      "June",
    "July",    "August",   "September", "October", "November", "December"};
// c_encoding order: Sunday = 0.
constexpr std::array<std::string_view, 7> kWeekdays = {
    "sunday", "monday", "tuesday", "wednesday", "thursday", "friday",
    "saturday"};
constexpr std::array<std::string_view, 7> kWeekdayLabels = {
    "Sunday", "Monday", "Tuesday", "Wednesday", "Thursday", "Friday",
    "Saturday"};

int MonthIndex(std::string_view w) {
  if (w == "sept") w = "sep";
  for (std::size_t i = 0; i < kMonths.size(); ++i) {
    if (w == kMonths[i] || (w.size() == 3 && kMonths[i].substr(0, 3) == w)) {
      return static_cast<int>(i) + 1;
    }
  }
  return 0;
}

int WeekdayIndex(std::string_view w) {
  if (!w.empty() && w.back() == 's') w.remove_suffix(1);  // "fridays"
  for (std::size_t i = 0; i < kWeekdays.size(); ++i) {
    if (w == kWeekdays[i]) return static_cast<int>(i);
  }
  return -1;
}

std::optional<int> ParseInt(std::string_view w) {
  // Accept ordinals: 5th, 1st, 22nd.
  std::size_t n = 0;
  while (n < w.size() && w[n] >= '0' && w[n] <= '9') ++n;
  if (n == 0 || n > 4) return std::nullopt;
  std::string_view rest = w.substr(n);
  if (!rest.empty() && rest != "st" && rest != "nd" && rest != "rd" &&
      rest != "th") {
    return std::nullopt;
  }
  return std::stoi(std::string(w.substr(0, n)));
}

std::string IsoDay(chr::year_month_day d) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(d.year()),
                static_cast<unsigned>(d.month()),
                static_cast<unsigned>(d.day()));
  return buf;
}

chr::year_month_day MonthEnd(chr::year y, chr::month m) {
  return chr::year_month_day{chr::year_month_day_last{y, chr::month_day_last{m}}};
}

DateRange Day(chr::sys_days d, std::string label) {
  chr::year_month_day ymd{d};
  return {ymd, ymd, std::move(label)};
}

std::string DayLabel(chr::sys_days d) {
  chr::year_month_day ymd{d};
  chr::weekday wd{d};
  return std::string(kWeekdayLabels[wd.c_encoding()]) + " " +
         std::to_string(static_cast<unsigned>(ymd.day())) + " " +
         std::string(kMonthLabels[static_cast<unsigned>(ymd.month()) - 1]) +
         " " + std::to_string(static_cast<int>(ymd.year()));
}

DateRange Month(chr::year y, int m) {
  chr::month mm{static_cast<unsigned>(m)};
  return {chr::year_month_day{y, mm, chr::day{1}}, MonthEnd(y, mm),
          std::string(kMonthLabels[m - 1]) + " " +
              std::to_string(static_cast<int>(y))};
}

DateRange Year(int y) {
  chr::year yy{y};
  return {chr::year_month_day{yy, chr::January, chr::day{1}},
          chr::year_month_day{yy, chr::December, chr::day{31}},
          std::to_string(y)};
}

enum class Rel { kNone, kLast, kNext, kThis };

Rel ParseRel(std::string_view w) {
  if (w == "last" || w == "past" || w == "previous") return Rel::kLast;
  if (w == "next" || w == "coming" || w == "upcoming") return Rel::kNext;
  if (w == "this" || w == "current") return Rel::kThis;
  return Rel::kNone;
}

chr::sys_days WeekStart(chr::sys_days d) {  // Monday
  chr::weekday wd{d};
  unsigned since_monday = (wd.c_encoding() + 6) % 7;
  return d - chr::days{since_monday};
}

// Three-month season starting in month `start` of year `year`.
DateRange SeasonInstance(int start, int year, const std::string &name) {
  chr::year_month_day first{chr::year{year},
                            chr::month{static_cast<unsigned>(start)},
                            chr::day{1}};
  chr::year_month ym_last =
      chr::year_month{first.year(), first.month()} + chr::months{2};
  std::string label = name + " " + std::to_string(year);
  if (start == 12) label += "/" + std::to_string(year + 1);
  return {first, MonthEnd(ym_last.year(), ym_last.month()), label};
}

std::optional<DateRange> Season(std::string_view w, Rel rel,
                                chr::year_month_day today) {
  int start;
  std::string name;
  if (w == "spring") {
    start = 3;
    name = "Spring";
  } else if (w == "summer") {
    start = 6;
    name = "Summer";
  } else if (w == "autumn" || w == "fall") {
    start = 9;
    name = "Autumn";
  } else if (w == "winter") {
    start = 12;
    name = "Winter";
  } else {
    return std::nullopt;
  }
  const chr::sys_days now{today};
  // Most recent instance that has started.
  int year = static_cast<int>(today.year());
  if (chr::sys_days{SeasonInstance(start, year, name).first} > now) --year;
  DateRange recent = SeasonInstance(start, year, name);
  bool in_progress = chr::sys_days{recent.last} >= now;
  switch (rel) {
    case Rel::kLast:
      return in_progress ? SeasonInstance(start, year - 1, name) : recent;
    case Rel::kNext:
      return SeasonInstance(start, year + 1, name);
    case Rel::kThis:
    case Rel::kNone:
      return in_progress ? recent : SeasonInstance(start, year + 1, name);
  }
  return std::nullopt;
}

}  // namespace

std::string DateRange::Iso() const {
  if (first == last) return IsoDay(first);
  return IsoDay(first) + "/" + IsoDay(last);
}

std::optional<DateRange> ParseDatePhrase(std::string_view phrase,
                                         chr::year_month_day today) {
  std::vector<std::string> words;
  for (std::string_view w : SplitWords(CaseFold(phrase))) {
    while (!w.empty() && (w.back() == ',' || w.back() == '.')) {
      w.remove_suffix(1);
    }
    if (w == "the" || w == "of" || w == "on" || w == "in") continue;
    if (!w.empty()) words.emplace_back(w);
  }
  if (words.empty()) return std::nullopt;

  const chr::sys_days now{today};
  const int y = static_cast<int>(today.year());
  const int m = static_cast<int>(static_cast<unsigned>(today.month()));

  Rel rel = ParseRel(words.front());
  if (rel != Rel::kNone) words.erase(words.begin());
  if (words.empty()) return std::nullopt;
  if (words.size() == 2 && (words[0] == "early" || words[0] == "late")) {
    words.erase(words.begin());
  }

  // Single-word forms.
  if (words.size() == 1) {
    const std::string &w = words[0];
    if (rel == Rel::kNone) {
      if (w == "today" || w == "tonight") return Day(now, DayLabel(now));
      if (w == "tomorrow") return Day(now + chr::days{1}, DayLabel(now + chr::days{1}));
      if (w == "yesterday") return Day(now - chr::days{1}, DayLabel(now - chr::days{1}));
      // Years and decades.
      if (w.size() == 4) {
        if (auto v = ParseInt(w); v && *v >= 1000 && *v <= 2099) return Year(*v);
      }
      if (w.size() == 5 && w.back() == 's') {
        if (auto v = ParseInt(w.substr(0, 4)); v && *v % 10 == 0 && *v >= 1000) {
          return DateRange{
              chr::year_month_day{chr::year{*v}, chr::January, chr::day{1}},
              chr::year_month_day{chr::year{*v + 9}, chr::December,
                                  chr::day{31}},
              std::to_string(*v) + "s"};
        }
      }
    }
    if (int mi = MonthIndex(w)) {
      int year = y;
      if (rel == Rel::kLast) year = mi < m ? y : y - 1;
      if (rel == Rel::kNext) year = mi > m ? y : y + 1;
      return Month(chr::year{year}, mi);
    }
    if (int wd = WeekdayIndex(w); wd >= 0) {
      int today_wd = static_cast<int>(chr::weekday{now}.c_encoding());
      int ahead = (wd - today_wd + 7) % 7;
      chr::sys_days d;
      if (rel == Rel::kLast) {
        int back = (today_wd - wd + 7) % 7;
        d = now - chr::days{back == 0 ? 7 : back};
      } else if (rel == Rel::kNext) {
        // The named day in the following week.
        d = WeekStart(now) + chr::days{7 + (wd + 6) % 7};
      } else {
        d = now + chr::days{ahead};
      }
      return Day(d, DayLabel(d));
    }
    if (auto s = Season(w, rel, today)) return s;
    if (w == "week" || w == "weekend") {
      int shift = rel == Rel::kLast ? -7 : rel == Rel::kNext ? 7 : 0;
      chr::sys_days start = WeekStart(now) + chr::days{shift};
      if (w == "weekend") {
        chr::sys_days sat = start + chr::days{5};
        return DateRange{chr::year_month_day{sat},
                         chr::year_month_day{sat + chr::days{1}},
                         "Weekend of " + IsoDay(chr::year_month_day{sat})};
      }
      return DateRange{chr::year_month_day{start},
                       chr::year_month_day{start + chr::days{6}},
                       "Week of " + IsoDay(chr::year_month_day{start})};
    }
    if (w == "month") {
      chr::year_month ym{today.year(), today.month()};
      if (rel == Rel::kLast) ym -= chr::months{1};
      if (rel == Rel::kNext) ym += chr::months{1};
      return Month(ym.year(), static_cast<int>(static_cast<unsigned>(ym.month())));
    }
    if (w == "year") {
      return Year(y + (rel == Rel::kLast ? -1 : rel == Rel::kNext ? 1 : 0));
    }
    return std::nullopt;
  }

  // "May 5", "5 May", "May 5 2027", "May 2019".
  if (words.size() <= 3 && rel == Rel::kNone) {
    int mi = 0;
    std::optional<int> day, year;
    for (const std::string &w : words) {
      if (int k = MonthIndex(w); k && !mi) {
        mi = k;
      } else if (auto v = ParseInt(w)) {
        if (*v >= 1 && *v <= 31 && !day && w.size() <= 4 &&
            !(w.size() == 4 && *v >= 1000)) {
          day = *v;
        } else if (*v >= 1000 && *v <= 2099 && !year) {
          year = *v;
        } else {
          return std::nullopt;
        }
      } else {
        return std::nullopt;
      }
    }
    if (!mi) return std::nullopt;
    chr::year yy{year.value_or(y)};
    if (!day) return Month(yy, mi);
    chr::year_month_day d{yy, chr::month{static_cast<unsigned>(mi)},
                          chr::day{static_cast<unsigned>(*day)}};
    if (!d.ok()) return std::nullopt;
    return Day(chr::sys_days{d}, DayLabel(chr::sys_days{d}));
  }
  return std::nullopt;
}

chr::year_month_day UtcToday() {
  return chr::year_month_day{chr::floor<chr::days>(chr::system_clock::now())};
}

CalendarProvider::CalendarProvider(TodayFn today, std::string id)
    : today_(std::move(today)), id_(std::move(id)) {}

nlohmann::json CalendarProvider::Query(const ProviderQuery &query) {
  if (query.kind != ReferenceKind::kCalendar) {
    throw ProviderError("calendar provider only serves calendar");
  }
  auto range = ParseDatePhrase(query.phrase, today_());
  if (!range) throw ProviderError("unrecognized date phrase: " + query.phrase);
  return {{"iso_date_or_range", range->Iso()}, {"label", range->label}};
}

}  // namespace convoref::refs
