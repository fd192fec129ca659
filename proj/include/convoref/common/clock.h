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

#ifndef CONVOREF_COMMON_CLOCK_H_
#define CONVOREF_COMMON_CLOCK_H_

#include <chrono>
#include <cstdint>
#include <functional>

namespace convoref {

using SteadyClock = std::chrono::steady_clock;

// Source of steady time; injectable so caches and pacing can run on a
// simulated clock in tests.
using ClockFn = std::function<SteadyClock::time_point()>;

ClockFn SystemSteadyClock();

// Milliseconds on the process-wide monotonic timeline (fractional).
double MonotonicMs();

// Converts a steady time point to the MonotonicMs() timeline.
double ToMonotonicMs(SteadyClock::time_point t);

// Wall-clock milliseconds since the Unix epoch.
int64_t UnixMs();

}  // namespace convoref

#endif  // CONVOREF_COMMON_CLOCK_H_
