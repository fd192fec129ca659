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

#include "convoref/ingest/replay.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "convoref/common/clock.h"
#include "convoref/common/error.h"
#include "convoref/common/text.h"

namespace convoref::ingest {

std::vector<std::string> ParseScript(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = Trim(text.substr(pos, nl - pos));
    if (!line.empty() && line.front() != '#') {
      // Normalize internal whitespace so prefixes join words with one space.
      std::string joined;
      for (std::string_view w : SplitWords(line)) {
        if (!joined.empty()) joined += ' ';
        joined.append(w);
      }
      lines.push_back(std::move(joined));
    }
    pos = nl + 1;
  }
  return lines;
}

std::vector<std::string> ReadScript(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read script: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoError, "read failed: " + path);
  return ParseScript(buf.str());
}

double ReplayPlan::PlannedRatePerMin() const {
  if (segments.size() < 2) return 0.0;
  double span = segments.back().offset_ms - segments.front().offset_ms;
  return span > 0 ? (segments.size() - 1) * 60000.0 / span : 0.0;
}

ReplayPlan PlanReplay(const std::vector<std::string> &utterances,
                      double words_per_min, double updates_per_min) {
  if (!(words_per_min > 0) || !std::isfinite(words_per_min) ||
      !(updates_per_min > 0) || !std::isfinite(updates_per_min)) {
    throw Error(ErrorCode::kConfigInvalid,
                "replay rates must be positive (wpm=" +
                    std::to_string(words_per_min) +
                    ", updates_per_min=" + std::to_string(updates_per_min) +
                    ")");
  }
  ReplayPlan plan;
  plan.word_ms = 60000.0 / words_per_min;
  plan.tick_ms = 60000.0 / updates_per_min;
  plan.continuous = plan.tick_ms < plan.word_ms;

  double cursor = 0.0;  // start of the next utterance
  double last_emit = -plan.tick_ms;
  for (std::size_t u = 0; u < utterances.size(); ++u) {
    std::vector<std::string_view> words = SplitWords(utterances[u]);
    if (words.empty()) continue;
    const std::size_t n = words.size();
    plan.words += n;
    auto prefix = [&](std::size_t k) {
      std::string out;
      for (std::size_t i = 0; i < k; ++i) {
        if (i) out += ' ';
        out.append(words[i]);
      }
      return out;
    };
    if (plan.continuous) {
      const auto m = std::max<std::size_t>(
          1, static_cast<std::size_t>(
                 std::llround(n * plan.word_ms / plan.tick_ms)));
      for (std::size_t j = 0; j < m; ++j) {
        PlannedSegment seg;
        seg.offset_ms = cursor + j * plan.tick_ms;
        seg.utterance = u;
        if (j + 1 == m) {
          seg.text = utterances[u];
          seg.is_final = true;
        } else {
          auto k = static_cast<std::size_t>(
                       std::floor(j * plan.tick_ms / plan.word_ms)) + 1;
          seg.text = prefix(std::min(n, k));
        }
        plan.segments.push_back(std::move(seg));
      }
      cursor += m * plan.tick_ms;
    } else {
      double emit = std::max(cursor + n * plan.word_ms,
                             last_emit + plan.tick_ms);
      PlannedSegment seg;
      seg.offset_ms = emit;
      seg.text = utterances[u];
      seg.is_final = true;
      seg.utterance = u;
      plan.segments.push_back(std::move(seg));
      last_emit = emit;
      cursor = emit;
    }
  }
  return plan;
}

ReplayStats RunReplay(const ReplayPlan &plan, const SegmentSink &sink,
                      const ReplayOptions &options) {
  const double scale = options.time_scale > 0 ? options.time_scale : 1.0;
  ReplayStats stats;
  const auto start = SteadyClock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(SteadyClock::now() -
                                                     start)
        .count();
  };
  for (const PlannedSegment &seg : plan.segments) {
    if (options.cancel && options.cancel->load()) break;
    const double due = seg.offset_ms / scale;
    std::this_thread::sleep_until(
        start + std::chrono::duration_cast<SteadyClock::duration>(
                    std::chrono::duration<double, std::milli>(due)));
    const double now = elapsed_ms();
    stats.max_lag_ms = std::max(stats.max_lag_ms, now - due);
    if (stats.segments == 0) stats.first_emit_ms = now;
    stats.last_emit_ms = now;
    sink(seg);
    ++stats.segments;
    if (seg.is_final) {
      ++stats.finals;
      stats.words += CountWords(seg.text);
    }
  }
  double span = stats.last_emit_ms - stats.first_emit_ms;
  if (stats.segments >= 2 && span > 0) {
    stats.rate_per_min = (stats.segments - 1) * 60000.0 / (span * scale);
  }
  return stats;
}

}  // namespace convoref::ingest
