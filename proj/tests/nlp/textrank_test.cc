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

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "convoref/nlp/tokenizer.h"
#include "doctest.h"
#include "support/oracles.h"

namespace convoref::nlp {
namespace {

using testing::Matrix;

Matrix ToDense(const CooccurrenceGraph &g) {
  Matrix w(g.node_count(), std::vector<double>(g.node_count(), 0.0));
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    for (std::size_t v = 0; v < g.node_count(); ++v) w[u][v] = g.Weight(u, v);
  }
  return w;
}

CooccurrenceGraph FromEdges(
    std::size_t n, const std::vector<std::tuple<int, int, int>> &edges) {
  CooccurrenceGraph g;
  for (std::size_t i = 0; i < n; ++i) g.AddNode("n" + std::to_string(i));
  for (auto [u, v, w] : edges) g.AddEdge(u, v, w);
  return g;
}

TEST_CASE("isolated node scores 1 - d") {
  CooccurrenceGraph g;
  g.AddNode("solo");
  auto r = TextRank(g, {0.85, 1e-4, 50});
  REQUIRE(r.scores.size() == 1);
  CHECK(r.scores[0] == doctest::Approx(0.15).epsilon(1e-12));
  CHECK(r.converged);
}

TEST_CASE("symmetric pair scores 1.0 each") {
  auto g = FromEdges(2, {{0, 1, 1}});
  auto r = TextRank(g, {0.85, 1e-4, 50});
  CHECK(r.scores[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.scores[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("empty graph gives empty scores") {
  CooccurrenceGraph g;
  CHECK(TextRank(g, {}).scores.empty());
  CHECK(TextRankScores(g, {}).empty());
}

TEST_CASE("self edges are ignored and weights accumulate symmetrically") {
  CooccurrenceGraph g;
  auto a = g.AddNode("a");
  auto b = g.AddNode("b");
  g.AddEdge(a, a);
  g.AddEdge(a, b);
  g.AddEdge(b, a, 2.0);
  CHECK(g.AddNode("a") == a);
  CHECK(g.Weight(a, a) == 0.0);
  CHECK(g.Weight(a, b) == 3.0);
  CHECK(g.Weight(b, a) == 3.0);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("single candidate gives one node and no edges") {
  auto tokens = Tokenize("Google", *Lexicon::ForLanguage("en"));
  auto g = BuildCooccurrenceGraph(tokens, 4);
  CHECK(g.node_count() == 1);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("repeated lemma collapses without a self edge") {
  auto tokens = Tokenize("Paris loves Paris", *Lexicon::ForLanguage("en"));
  auto g = BuildCooccurrenceGraph(tokens, 2);
  REQUIRE(g.node_count() == 1);
  CHECK(g.nodes()[0] == "paris");
  CHECK(g.edge_count() == 0);
}

TEST_CASE("six-candidate fixture matches hand-enumerated pairs") {
  // Positions: alice 0, bob 2, old 5, museum 6, river 9, park 10.
  // With window 4 only gaps of 1..3 connect, giving a simple path.
  auto tokens = Tokenize("Alice and Bob visited the old museum near the river park",
                         *Lexicon::ForLanguage("en"));
  auto g = BuildCooccurrenceGraph(tokens, 4);
  CHECK(g.nodes() == std::vector<std::string>{"alice", "bob", "old", "museum",
                                              "river", "park"});
  CHECK(g.edge_count() == 5);
  auto w = [&](const char *a, const char *b) {
    return g.Weight(*g.Find(a), *g.Find(b));
  };
  CHECK(w("alice", "bob") == 1.0);
  CHECK(w("bob", "old") == 1.0);
  CHECK(w("old", "museum") == 1.0);
  CHECK(w("museum", "river") == 1.0);
  CHECK(w("river", "park") == 1.0);
  CHECK(w("alice", "old") == 0.0);
  CHECK(w("museum", "park") == 0.0);
}

TEST_CASE("graph construction agrees with brute-force pair enumeration") {
  const std::vector<std::string> pool = {
      "Paris", "museum", "old", "and", "the", "visited", "Google", "river",
      "big",   "park",   "coffee", "is", ",", "Tokyo",  "friend", "new"};
  const Lexicon &lex = *Lexicon::ForLanguage("en");
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::string text;
    for (int k = 0; k < 12; ++k) text += pool[pick(rng)] + " ";
    auto tokens = Tokenize(text, lex);
    const int window = 2 + trial % 4;
    std::vector<std::string> lemmas;
    for (const Token &t : tokens) {
      lemmas.push_back(IsGraphCandidate(t) ? t.lower : std::string());
    }
    auto expected = testing::EnumeratePairs(lemmas, window);
    auto g = BuildCooccurrenceGraph(tokens, window);
    std::size_t edges = 0;
    for (std::size_t u = 0; u < g.node_count(); ++u) {
      for (std::size_t v = u + 1; v < g.node_count(); ++v) {
        double got = g.Weight(u, v);
        auto key = std::minmax(g.nodes()[u], g.nodes()[v]);
        auto it = expected.find({key.first, key.second});
        double want = it == expected.end() ? 0.0 : it->second;
        CHECK(got == want);
        if (got > 0) ++edges;
      }
    }
    CHECK(edges == expected.size());
  }
}

TEST_CASE("five-node fixture matches frozen oracle values") {
  auto g = FromEdges(5, {{0, 1, 2}, {0, 2, 1}, {1, 2, 1}, {1, 3, 3},
                         {3, 4, 1}, {2, 4, 2}});
  // Dense power iteration with d=0.85, epsilon=1e-4 (26 sweeps), computed
  // independently and frozen.
  const double expected[] = {0.772438734466373, 1.43116538312184,
                             1.0208248315599189, 0.9828906012386263,
                             0.7926804496132414};
  auto r = TextRank(g, {0.85, 1e-4, 50});
  CHECK(r.iterations == 26);
  for (int i = 0; i < 5; ++i) {
    CHECK(std::fabs(r.scores[i] - expected[i]) < 1e-6);
  }
  auto oracle = testing::DensePowerIteration(ToDense(g), 0.85, 1e-4, 50);
  for (int i = 0; i < 5; ++i) CHECK(std::fabs(r.scores[i] - oracle[i]) < 1e-6);

  // Exact fixed point, frozen, against a tight-tolerance run.
  const double fixed[] = {0.772429166567196, 1.431204537243948,
                          1.0208057145791873, 0.9828603322998059,
                          0.7927002493098634};
  auto tight = TextRank(g, {0.85, 1e-13, 10000});
  for (int i = 0; i < 5; ++i) {
    CHECK(std::fabs(tight.scores[i] - fixed[i]) < 1e-9);
  }
}

TEST_CASE("random graphs agree with dense oracle; scores positive") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 8;
    CooccurrenceGraph g;
    for (std::size_t i = 0; i < n; ++i) g.AddNode("v" + std::to_string(i));
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        int w = static_cast<int>(rng() % 4);  // 0 means no edge
        if (w > 0) g.AddEdge(u, v, w);
      }
    }
    auto dense = ToDense(g);
    auto r = TextRank(g, {0.85, 1e-4, 50});
    auto oracle = testing::DensePowerIteration(dense, 0.85, 1e-4, 50);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::fabs(r.scores[i] - oracle[i]) < 1e-6);
      CHECK(r.scores[i] > 0.0);
      CHECK(std::isfinite(r.scores[i]));
    }
    auto tight = TextRank(g, {0.85, 1e-12, 10000});
    auto exact = testing::SolveFixedPoint(dense, 0.85);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::fabs(tight.scores[i] - exact[i]) < 1e-8);
    }
  }
}

TEST_CASE("vanishing damping drives scores to 1 - d") {
  const double d = 1e-6;
  // Without edges the neighbor sum is empty and the score is exactly 1 - d.
  CooccurrenceGraph isolated;
  for (int i = 0; i < 4; ++i) isolated.AddNode("v" + std::to_string(i));
  for (double s : TextRank(isolated, {d, 1e-12, 1000}).scores) {
    CHECK(std::fabs(s - (1.0 - d)) < 1e-9);
  }
  // With edges the score sits O(d) above 1 - d: s = 1 - d + d * inflow + O(d^2)
  // where inflow = sum_j w(j,i) / out(j).
  auto g = FromEdges(4, {{0, 1, 3}, {1, 2, 1}, {2, 3, 2}, {0, 3, 1}});
  auto r = TextRank(g, {d, 1e-12, 1000});
  std::vector<double> out(4, 0.0);
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t k = 0; k < 4; ++k) out[j] += g.Weight(j, k);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    double inflow = 0.0;
    for (std::size_t j = 0; j < 4; ++j) inflow += g.Weight(j, i) / out[j];
    CHECK(std::fabs(r.scores[i] - (1.0 - d) - d * inflow) < 1e-9);
    CHECK(std::fabs(r.scores[i] - (1.0 - d)) < 4.0 * d);
  }
}

}  // namespace
}  // namespace convoref::nlp
