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

#ifndef CONVOREF_REFS_CALENDAR_H_
#define CONVOREF_REFS_CALENDAR_H_

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "convoref/refs/providers.h"

namespace convoref::refs {

struct DateRange {
  std::chrono::year_month_day first;
  std::chrono::year_month_day last;  // == first for a single day
  std::string label;

  // "2026-05-01" or "2026-05-01/2026-05-31".
  std::string Iso() const;
};

// Resolves an English date phrase relative to `today`. Understands month
// and weekday names with optional last/next/this/coming/past, day numbers
// ("May 5", "5 May"), today/tomorrow/yesterday/tonight, relative
// week/month/year/weekend, seasons, years ("2019") and decades ("1990s").
// Returns nullopt for anything else.
std::optional<DateRange> ParseDatePhrase(std::string_view phrase,
                                         std::chrono::year_month_day today);

using TodayFn = std::function<std::chrono::year_month_day()>;

// Today in UTC from the system clock.
std::chrono::year_month_day UtcToday();

// Computes calendar bundles locally; no external service is involved.
class CalendarProvider : public ProviderAdapter {
 public:
  explicit CalendarProvider(TodayFn today = UtcToday,
                            std::string id = "calendar");

  const std::string &id() const override { return id_; }
  bool is_local() const override { return true; }
  nlohmann::json Query(const ProviderQuery &query) override;

 private:
  TodayFn today_;
  std::string id_;
};

}  // namespace convoref::refs

#endif  // CONVOREF_REFS_CALENDAR_H_
