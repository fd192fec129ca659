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

#ifndef CONVOREF_TESTS_SUPPORT_ORACLES_H_
#define CONVOREF_TESTS_SUPPORT_ORACLES_H_

// Reference implementations used only by tests. They share no code with the
// library: graphs are plain dense matrices and pairs are enumerated directly.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace convoref::testing {

using Matrix = std::vector<std::vector<double>>;

// Dense power iteration of s <- (1-d) + d * M s with M[i][j] = W[j][i] /
// rowsum(W[j]); same start (all ones) and stopping rule (max change below
// epsilon, at most max_iter sweeps) as the production ranker.
inline std::vector<double> DensePowerIteration(const Matrix &weights,
                                               double damping, double epsilon,
                                               int max_iter) {
  const std::size_t n = weights.size();
  Matrix m(n, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    double row = 0.0;
    for (std::size_t k = 0; k < n; ++k) row += weights[j][k];
    if (row == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) m[i][j] = weights[j][i] / row;
  }
  std::vector<double> s(n, 1.0);
  for (int it = 0; it < max_iter; ++it) {
    std::vector<double> next(n, 0.0);
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += m[i][j] * s[j];
      next[i] = (1.0 - damping) + damping * acc;
      delta = std::max(delta, std::fabs(next[i] - s[i]));
    }
    s = next;
    if (delta < epsilon) break;
  }
  return s;
}

// Exact fixed point of the same recurrence: solves (I - d M) s = (1-d) 1 by
// Gaussian elimination with partial pivoting.
inline std::vector<double> SolveFixedPoint(const Matrix &weights,
                                           double damping) {
  const std::size_t n = weights.size();
  Matrix a(n, std::vector<double>(n + 1, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = 1.0;
    a[i][n] = 1.0 - damping;
  }
  for (std::size_t j = 0; j < n; ++j) {
    double row = 0.0;
    for (std::size_t k = 0; k < n; ++k) row += weights[j][k];
    if (row == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      a[i][j] -= damping * weights[j][i] / row;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::fabs(a[r][c]) > std::fabs(a[pivot][c])) pivot = r;
    }
    std::swap(a[c], a[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = a[i][n] / a[i][i];
  return s;
}

// All unordered lemma pairs (u != v) whose positions differ by less than
// `window`, with multiplicity. `lemmas[i]` is empty for non-candidates.
inline std::map<std::pair<std::string, std::string>, int> EnumeratePairs(
    const std::vector<std::string> &lemmas, int window) {
  std::map<std::pair<std::string, std::string>, int> pairs;
  for (std::size_t i = 0; i < lemmas.size(); ++i) {
    for (std::size_t j = 0; j < lemmas.size(); ++j) {
      if (j <= i) continue;
      if (static_cast<int>(j - i) >= window) continue;
      if (lemmas[i].empty() || lemmas[j].empty()) continue;
      if (lemmas[i] == lemmas[j]) continue;
      auto key = std::minmax(lemmas[i], lemmas[j]);
      ++pairs[{key.first, key.second}];
    }
  }
  return pairs;
}

// Nearest-rank percentile of an unsorted list (p in (0, 100]).
inline double NearestRank(std::vector<double> values, double p) {
  std::sort(values.begin(), values.end());
  std::size_t rank =
      static_cast<std::size_t>(std::ceil(p / 100.0 * values.size()));
  if (rank == 0) rank = 1;
  return values[rank - 1];
}

// Gazetteer entries that occur in `text` exactly as written in the
// gazetteer file (same case, whole words), leftmost-longest and
// non-overlapping. A plain string scan, independent of the tokenizer.
inline std::vector<std::string> GazetteerEntitiesIn(
    const std::string &text, const std::string &gazetteer_text) {
  std::vector<std::string> entries;
  std::size_t pos = 0;
  while (pos < gazetteer_text.size()) {
    std::size_t end = gazetteer_text.find('\n', pos);
    if (end == std::string::npos) end = gazetteer_text.size();
    std::string line = gazetteer_text.substr(pos, end - pos);
    pos = end + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#' || line[0] == '[') continue;
    entries.push_back(line);
  }
  auto is_word_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '\'';
  };
  std::vector<std::string> found;
  std::size_t i = 0;
  while (i < text.size()) {
    if (i > 0 && is_word_char(text[i - 1])) {
      ++i;
      continue;
    }
    std::string best;
    for (const std::string &e : entries) {
      if (e.size() <= best.size() || text.compare(i, e.size(), e) != 0) {
        continue;
      }
      std::size_t after = i + e.size();
      if (after < text.size() && is_word_char(text[after])) continue;
      best = e;
    }
    if (best.empty()) {
      ++i;
    } else {
      if (std::find(found.begin(), found.end(), best) == found.end()) {
        found.push_back(best);
      }
      i += best.size();
    }
  }
  return found;
}

}  // namespace convoref::testing

#endif  // CONVOREF_TESTS_SUPPORT_ORACLES_H_
