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

#ifndef CONVOREF_NLP_TEXTRANK_H_
#define CONVOREF_NLP_TEXTRANK_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "convoref/nlp/types.h"

namespace convoref::nlp {

// Undirected weighted graph over candidate lemmas. Node indices follow first
// insertion; neighbor lists are kept in ascending index order so iteration
// order, and therefore floating-point summation, is deterministic.
class CooccurrenceGraph {
 public:
  struct Neighbor {
    std::size_t node;
    double weight;
  };

  // Returns the index of `lemma`, inserting it if new.
  std::size_t AddNode(std::string_view lemma);

  // Adds `weight` to the symmetric edge u-v. Self-edges are ignored.
  void AddEdge(std::size_t u, std::size_t v, double weight = 1.0);

  std::optional<std::size_t> Find(std::string_view lemma) const;

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const;
  bool empty() const { return nodes_.empty(); }
  const std::vector<std::string> &nodes() const { return nodes_; }
  const std::vector<Neighbor> &neighbors(std::size_t u) const {
    return adjacency_[u];
  }
  // 0 when there is no edge.
  double Weight(std::size_t u, std::size_t v) const;

 private:
  void AddDirected(std::size_t from, std::size_t to, double weight);

  std::vector<std::string> nodes_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

// Candidates are word tokens tagged NOUN, PROPN, ADJ or date word; their
// lemma is the case-folded surface. Two candidates at token positions i < j
// co-occur when j - i < window, and each such pair adds 1 to the edge weight.
CooccurrenceGraph BuildCooccurrenceGraph(std::span<const Token> tokens,
                                         int window);

bool IsGraphCandidate(const Token &token);

struct TextRankParams {
  double damping = 0.85;
  double epsilon = 1e-4;
  int max_iter = 50;
};

struct TextRankResult {
  // Indexed like graph.nodes().
  std::vector<double> scores;
  int iterations = 0;
  bool converged = false;
};

// Weighted TextRank by synchronous iteration of
//   S(i) = (1 - d) + d * sum_{j in adj(i)} w(j,i) * S(j) / sum_k w(j,k)
// from a uniform start of 1.0, stopping once the largest per-node change
// drops below epsilon or after max_iter sweeps. Empty graph, empty result.
TextRankResult TextRank(const CooccurrenceGraph &graph,
                        const TextRankParams &params);

// Convenience view keyed by lemma.
std::map<std::string, double> TextRankScores(const CooccurrenceGraph &graph,
                                             const TextRankParams &params);

}  // namespace convoref::nlp

#endif  // CONVOREF_NLP_TEXTRANK_H_
