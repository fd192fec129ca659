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

#include "convoref/common/clock.h"

namespace convoref {
namespace {

const SteadyClock::time_point kEpoch = SteadyClock::now();

}  // namespace

ClockFn SystemSteadyClock() {
  return [] { return SteadyClock::now(); };
}

double MonotonicMs() { return ToMonotonicMs(SteadyClock::now()); }

double ToMonotonicMs(SteadyClock::time_point t) {
  return std::chrono::duration<double, std::milli>(t - kEpoch).count();
}

int64_t UnixMs() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

}  // namespace convoref
