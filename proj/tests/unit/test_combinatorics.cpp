/*
 *   Copyright 2026 The hsg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <random>
#include <set>

#include "catch_amalgamated.hpp"
#include "helpers.hpp"
#include "hsg/combinatorics.hpp"
#include "hsg/named.hpp"

using namespace hsg;
using hsg::test::S;
using hsg::test::T;

TEST_CASE("transversals", "[combinatorics]") {
  CHECK(is_transversal(S({1, 2}), test::P(2, {{1}, {2}})));
  CHECK(!is_transversal(S({1, 2}), test::P(3, {{1, 2}, {3}})));
  CHECK(is_transversal(S({1, 3}), test::P(3, {{1, 2}, {3}})));
  CHECK(test::P(3, {{3}, {1, 2}}).to_string() == "1,2|3");
}

TEST_CASE("flower on the basic instance", "[combinatorics]") {
  FlowerInstance const inst{6, 2, {S({1, 2})}, {S({3, 4})}};
  auto const           P = flower(inst);
  CHECK(P == test::P(6, {{1, 3, 4, 5, 6}, {2}}));
  CHECK(satisfies_pattern(P, inst));
}

TEST_CASE("flower with an empty head", "[combinatorics]") {
  FlowerInstance const inst{9, 3, {S({1, 2, 3}), S({4, 5, 6})}, {S({7, 8, 9})}};
  CHECK(decompose(inst).head.empty());
  CHECK(satisfies_pattern(flower(inst), inst));
}

TEST_CASE("flower rejects large heads and malformed input", "[combinatorics]") {
  // {1,2}, {1,3}, {2,3}: every point lies in two sets.
  FlowerInstance const big{3, 2, {S({1, 2}), S({1, 3})}, {S({2, 3})}};
  CHECK(decompose(big).head.size() == 3);
  CHECK_THROWS_AS(flower(big), FlowerHypothesisError);
  CHECK_THROWS_AS(flower(FlowerInstance{4, 2, {S({1, 2})}, {S({1, 2})}}), Error);
  CHECK_THROWS_AS(flower(FlowerInstance{4, 2, {S({1, 2, 3})}, {S({1, 4})}}), Error);
  CHECK_THROWS_AS(flower(FlowerInstance{4, 2, {S({1, 2})}, {}}), Error);
  CHECK_THROWS_AS(flower(FlowerInstance{4, 1, {S({1})}, {S({2})}}), Error);
}

TEST_CASE("flower on random instances", "[combinatorics]") {
  std::mt19937_64 rng(2024);
  std::size_t     solved = 0, rejected = 0;
  while (solved < 1000) {
    std::size_t const m = std::uniform_int_distribution<std::size_t>(4, 12)(rng);
    std::size_t const t = std::uniform_int_distribution<std::size_t>(2, m / 2)(rng);
    std::size_t const k = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    std::size_t const l = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    std::set<PointSet> seen;
    FlowerInstance     inst{m, t, {}, {}};
    std::vector<Point> pts(m);
    std::iota(pts.begin(), pts.end(), 0);
    while (seen.size() < k + l) {
      std::shuffle(pts.begin(), pts.end(), rng);
      PointSet s(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(t));
      std::sort(s.begin(), s.end());
      if (seen.insert(s).second) {
        (inst.A.size() < k ? inst.A : inst.B).push_back(s);
      }
    }
    if (decompose(inst).head.size() < t) {
      auto const P = flower(inst);
      CHECK(P.num_blocks() == t);
      CHECK(satisfies_pattern(P, inst));
      ++solved;
    } else {
      CHECK_THROWS_AS(flower(inst), FlowerHypothesisError);
      ++rejected;
    }
  }
  CHECK(rejected > 0);
}

namespace {
  index_type d_class_of_rank(ConcreteGreen<Transformation> const& F, std::size_t r) {
    for (std::size_t x = 0; x < F.elements.size(); ++x) {
      if (F.elements[x].rank() == r) {
        return F.green.d_class[x];
      }
    }
    FAIL("rank not present");
    return 0;
  }
}  // namespace

TEST_CASE("Graham-Houghton graphs of T_3", "[combinatorics]") {
  auto const F  = green_fast_T(3);
  auto const g1 = graham_houghton(F.green, d_class_of_rank(F, 1));
  CHECK(g1.left.size() == 1);
  CHECK(g1.right.size() == 3);
  CHECK(g1.edges.size() == 3);

  auto const g2 = graham_houghton(F.green, d_class_of_rank(F, 2));
  CHECK(g2.left.size() == 3);
  CHECK(g2.right.size() == 3);
  for (std::size_t i = 0; i < g2.left.size(); ++i) {
    for (std::size_t j = 0; j < g2.right.size(); ++j) {
      bool transversal = false;
      for (auto const& f : F.elements) {
        if (f.rank() == 2 && f.kernel().to_string() == g2.left[i] && point_set_string(f.image_set()) == g2.right[j]) {
          transversal = is_transversal(f.image_set(), f.kernel());
        }
      }
      bool const edge = std::find(g2.edges.begin(), g2.edges.end(), std::pair{i, j}) != g2.edges.end();
      CHECK(edge == transversal);
    }
  }
  CHECK(g2.edges.size() == 6);
  auto const dot = g2.to_dot();
  CHECK(dot.find("shape=box") != std::string::npos);
  CHECK(dot.find("shape=ellipse") != std::string::npos);
  CHECK(dot.find("\"1,2|3\"") != std::string::npos);
}

TEST_CASE("Graham-Houghton edges count idempotents", "[combinatorics]") {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto const F = green_fast_T(n);
    for (std::size_t r = 1; r <= n; ++r) {
      std::size_t idem = 0;
      for (auto const& f : F.elements) {
        idem += f.rank() == r && f.is_idempotent() ? 1 : 0;
      }
      CHECK(graham_houghton(F.green, d_class_of_rank(F, r)).edges.size() == idem);
    }
  }
}

TEST_CASE("Graham-Houghton graph of a Rees matrix semigroup", "[combinatorics]") {
  auto const M = named::rees_matrix({{1, 1, 0, 0}, {0, 0, 1, 1}});
  auto const G = green_generic(M);
  auto const d = G.d_class[0];
  auto const g = graham_houghton(G, d);
  CHECK(g.left.size() == 4);
  CHECK(g.right.size() == 2);
  using Shape = std::tuple<std::size_t, std::size_t, std::size_t>;
  CHECK(g.component_shapes() == std::vector<Shape>{{2, 1, 2}, {2, 1, 2}});
}

TEST_CASE("graph isomorphism and part swaps", "[combinatorics]") {
  auto const F = green_fast_T(3);
  auto const g = graham_houghton(F.green, d_class_of_rank(F, 2));
  CHECK(graphs_isomorphic(g, g));
  CHECK(g.swapped().swapped() == g);
  CHECK(graphs_isomorphic(g, g.swapped()));
  auto h = g;
  h.edges.pop_back();
  CHECK(!graphs_isomorphic(g, h));
}

TEST_CASE("diamond witness, direct route", "[combinatorics]") {
  auto const w = diamond_witness(4, 2, {S({1, 2})}, {S({3, 4})});
  CHECK(w.route == "direct");
  CHECK(w.m == 4);
  CHECK(w.checks.all());
  CHECK(w.c.is_idempotent());
}

TEST_CASE("diamond witness, overlapping sets", "[combinatorics]") {
  auto const w = diamond_witness(3, 2, {S({1, 2}), S({1, 3})}, {S({2, 3})});
  CHECK(w.route == "dilation");
  CHECK(w.y == 1u);
  CHECK(w.z_size == 25u);
  CHECK(w.t == 2 + 6 + 1);
  CHECK(w.t > w.head_size);
  CHECK(w.checks.all());
  CHECK(w.checks.psi_report.ok());
  CHECK_THROWS_AS(diamond_witness(3, 2, {S({1, 2}), S({1, 3})}, {S({2, 3})}, WitnessRoute::Direct),
                  FlowerHypothesisError);
  auto const forced = diamond_witness(4, 2, {S({1, 2})}, {S({3, 4})}, WitnessRoute::Dilation);
  CHECK(forced.route == "dilation");
  CHECK(forced.checks.all());
}

TEST_CASE("diamond witness input errors", "[combinatorics]") {
  CHECK_THROWS_AS(diamond_witness(4, 2, {S({1, 2})}, {S({1, 2})}), Error);
  CHECK_THROWS_AS(diamond_witness(4, 4, {S({1, 2, 3, 4})}, {S({1, 2, 3, 4})}), Error);
  CHECK_THROWS_AS(diamond_witness(4, 2, {S({1, 2, 3})}, {S({3, 4})}), Error);
  CHECK_THROWS_AS(diamond_witness_from({T({1, 2, 2, 2})}, {T({2, 1, 1, 1})}), Error);
}

TEST_CASE("dual transversal search", "[combinatorics]") {
  auto const P1 = test::P(4, {{1, 2}, {3, 4}});
  auto const Q1 = test::P(4, {{1, 3}, {2, 4}});
  auto const r  = dual_transversal_search({P1}, {Q1});
  REQUIRE(r.A.has_value());
  CHECK(is_transversal(*r.A, P1));
  CHECK(!is_transversal(*r.A, Q1));
  CHECK(*r.A == S({1, 3}));
  // Every 2-subset hitting both blocks of P1 is also transversal to one of these.
  auto const none = dual_transversal_search({P1}, {Q1, test::P(4, {{1, 4}, {2, 3}})});
  CHECK(!none.A.has_value());
  CHECK(none.examined == 6);
}
