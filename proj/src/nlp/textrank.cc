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

#include "convoref/nlp/textrank.h"

#include <algorithm>
#include <cmath>

namespace convoref::nlp {

std::size_t CooccurrenceGraph::AddNode(std::string_view lemma) {
  auto it = index_.find(std::string(lemma));
  if (it != index_.end()) return it->second;
  std::size_t id = nodes_.size();
  nodes_.emplace_back(lemma);
  index_.emplace(nodes_.back(), id);
  adjacency_.emplace_back();
  return id;
}

void CooccurrenceGraph::AddDirected(std::size_t from, std::size_t to,
                                    double weight) {
  auto &list = adjacency_[from];
  auto pos = std::lower_bound(
      list.begin(), list.end(), to,
      [](const Neighbor &n, std::size_t node) { return n.node < node; });
  if (pos != list.end() && pos->node == to) {
    pos->weight += weight;
  } else {
    list.insert(pos, Neighbor{to, weight});
  }
}

void CooccurrenceGraph::AddEdge(std::size_t u, std::size_t v, double weight) {
  if (u == v) return;
  AddDirected(u, v, weight);
  AddDirected(v, u, weight);
}

std::optional<std::size_t> CooccurrenceGraph::Find(
    std::string_view lemma) const {
  auto it = index_.find(std::string(lemma));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t CooccurrenceGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto &list : adjacency_) total += list.size();
  return total / 2;
}

double CooccurrenceGraph::Weight(std::size_t u, std::size_t v) const {
  for (const Neighbor &n : adjacency_[u]) {
    if (n.node == v) return n.weight;
  }
  return 0.0;
}

bool IsGraphCandidate(const Token &token) {
  return token.is_word && (token.tag == Tag::kNoun ||
                           token.tag == Tag::kPropn || token.tag == Tag::kAdj ||
                           token.tag == Tag::kDateWord);
}

CooccurrenceGraph BuildCooccurrenceGraph(std::span<const Token> tokens,
                                         int window) {
  CooccurrenceGraph graph;
  std::vector<std::ptrdiff_t> node_of(tokens.size(), -1);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (IsGraphCandidate(tokens[i])) {
      node_of[i] = static_cast<std::ptrdiff_t>(graph.AddNode(tokens[i].lower));
    }
  }
  const std::size_t span = window > 1 ? static_cast<std::size_t>(window) : 1;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (node_of[i] < 0) continue;
    const std::size_t stop = std::min(tokens.size(), i + span);
    for (std::size_t j = i + 1; j < stop; ++j) {
      if (node_of[j] < 0) continue;
      graph.AddEdge(static_cast<std::size_t>(node_of[i]),
                    static_cast<std::size_t>(node_of[j]));
    }
  }
  return graph;
}

TextRankResult TextRank(const CooccurrenceGraph &graph,
                        const TextRankParams &params) {
  TextRankResult result;
  const std::size_t n = graph.node_count();
  if (n == 0) return result;

  std::vector<double> out_weight(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto &nb : graph.neighbors(j)) out_weight[j] += nb.weight;
  }

  const double d = params.damping;
  std::vector<double> score(n, 1.0);
  std::vector<double> next(n, 0.0);
  for (int iter = 0; iter < params.max_iter; ++iter) {
    double max_delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double sum = 0.0;
      for (const auto &nb : graph.neighbors(i)) {
        sum += nb.weight * score[nb.node] / out_weight[nb.node];
      }
      next[i] = (1.0 - d) + d * sum;
      max_delta = std::max(max_delta, std::fabs(next[i] - score[i]));
    }
    score.swap(next);
    result.iterations = iter + 1;
    if (max_delta < params.epsilon) {
      result.converged = true;
      break;
    }
  }
  result.scores = std::move(score);
  return result;
}

std::map<std::string, double> TextRankScores(const CooccurrenceGraph &graph,
                                             const TextRankParams &params) {
  std::map<std::string, double> out;
  TextRankResult r = TextRank(graph, params);
  for (std::size_t i = 0; i < r.scores.size(); ++i) {
    out.emplace(graph.nodes()[i], r.scores[i]);
  }
  return out;
}

}  // namespace convoref::nlp
