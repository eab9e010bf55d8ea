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
#include "hsg/morphism.hpp"
#include "hsg/named.hpp"
#include "hsg/semigroup.hpp"
#include "hsg/transformation.hpp"

using namespace hsg;
using hsg::test::I;
using hsg::test::T;

TEST_CASE("compose evaluates left to right", "[core]") {
  CHECK(T({2, 1, 3}) * T({2, 1, 3}) == T({1, 2, 3}));
  CHECK(T({1, 1, 2}) * T({2, 2, 3}) == T({2, 2, 2}));
  for (auto const& g : all_transformations(3)) {
    CHECK(T({1, 1, 1}) * g == Transformation::constant(3, g[0]));
  }
  CHECK_THROWS_AS(T({1, 2}) * T({1, 2, 3}), Error);
  CHECK_THROWS_AS(T({1, 4, 2}), Error);
}

TEST_CASE("partial composition", "[core]") {
  auto const id12 = PartialBijection::identity_on(3, test::S({1, 2}));
  auto const id23 = PartialBijection::identity_on(3, test::S({2, 3}));
  CHECK(id12 * id23 == PartialBijection::identity_on(3, test::S({2})));
  CHECK(I({2, 0}) * I({0, 1}) == I({1, 0}));
  for (auto const& f : all_partial_bijections(3)) {
    CHECK(f * f.inverse() == PartialBijection::identity_on(3, f.domain()));
    CHECK(f * f.inverse() * f == f);
    CHECK(f.inverse() * f * f.inverse() == f.inverse());
  }
  CHECK_THROWS_AS(I({1, 2, 2}), Error);
}

TEST_CASE("rank never increases under composition", "[core]") {
  auto const T3 = all_transformations(3);
  for (auto const& f : T3) {
    for (auto const& g : T3) {
      CHECK((f * g).rank() <= std::min(f.rank(), g.rank()));
    }
  }
  std::mt19937_64 rng(7);
  for (std::size_t n : {4, 5}) {
    std::uniform_int_distribution<Point> pt(0, static_cast<Point>(n - 1));
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<Point> a(n), b(n);
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = pt(rng);
        b[i] = pt(rng);
      }
      Transformation f(a), g(b);
      CHECK((f * g).rank() <= std::min(f.rank(), g.rank()));
    }
  }
}

TEST_CASE("inverse of a product in I_n", "[core]") {
  auto const I3 = all_partial_bijections(3);
  CHECK(I3.size() == 34);
  for (auto const& f : I3) {
    for (auto const& g : I3) {
      CHECK((f * g).inverse() == g.inverse() * f.inverse());
    }
  }
}

TEST_CASE("closure", "[core]") {
  auto const c = closure(std::vector{T({1, 1}), T({2, 1})});
  CHECK(c.semigroup.size() == 4);
  std::set<Transformation> got(c.elements.begin(), c.elements.end());
  auto const               all = all_transformations(2);
  CHECK(got == std::set<Transformation>(all.begin(), all.end()));

  CHECK(closure(std::vector{Transformation::identity(4)}).semigroup.size() == 1);

  std::vector<Transformation> idem;
  for (auto const& f : all_transformations(3)) {
    if (f.is_idempotent() && f.rank() <= 2) {
      idem.push_back(f);
    }
  }
  auto const c3 = closure(idem);
  CHECK(c3.semigroup.size() == 21);
  for (auto const& f : c3.elements) {
    CHECK(!f.is_permutation());
  }
  CHECK(c3.semigroup.is_associative());
}

TEST_CASE("closure ignores generator order", "[core]") {
  std::vector<Transformation> gens{T({2, 3, 1, 4}), T({2, 1, 3, 4}), T({1, 1, 3, 4}), T({4, 2, 3, 4})};
  auto const                  base = closure(gens);
  std::mt19937_64             rng(11);
  for (int k = 0; k < 5; ++k) {
    std::shuffle(gens.begin(), gens.end(), rng);
    auto const again = closure(gens);
    CHECK(again.elements == base.elements);
    CHECK(again.semigroup == base.semigroup);
  }
  CHECK(base.semigroup.is_associative());
}

TEST_CASE("closure of partial bijections carries inverses", "[core]") {
  auto const c = closure(std::vector{I({2, 0}), I({1, 2}), I({2, 1})});
  CHECK(c.semigroup.is_inverse());
  CHECK(c.semigroup.is_associative());
  CHECK(c.semigroup.size() == 7);
}

TEST_CASE("opposite", "[core]") {
  auto const L2 = named::left_zero(2);
  auto const R2 = named::right_zero(2);
  CHECK(opposite(L2) == R2);
  CHECK(opposite(opposite(named::full_transformation(2))) == named::full_transformation(2));
  CHECK(opposite(named::cyclic_group(4)) == named::cyclic_group(4));
  auto const I2 = named::symmetric_inverse(2);
  CHECK(opposite(I2).inverse_map() == I2.inverse_map());
}

TEST_CASE("table validation", "[core]") {
  CHECK_THROWS_AS(FiniteSemigroup(2, {0, 1, 1}), Error);
  CHECK_THROWS_AS(FiniteSemigroup(2, {0, 2, 1, 1}), Error);
  // Z_2 with a wrong inverse map.
  CHECK_THROWS_AS(FiniteSemigroup(2, {0, 1, 1, 0}, std::vector<index_type>{1, 0}), Error);
  auto const z2 = named::cyclic_group(2);
  CHECK(z2.is_inverse());
  CHECK(z2.identity() == 0u);
  CHECK(z2.is_group());
  CHECK(!named::full_transformation(2).is_inverse());
  CHECK(named::v3().is_inverse());
}

TEST_CASE("index and period", "[core]") {
  auto const M = named::monogenic(3, 4);
  CHECK(M.size() == 6);
  CHECK(M.is_associative());
  CHECK(index_period(M, 0) == IndexPeriod{3, 4});
  CHECK(index_period(named::cyclic_group(6), 2) == IndexPeriod{1, 3});
}

TEST_CASE("isomorphic", "[core]") {
  auto const S3 = named::symmetric_group(3);
  CHECK(isomorphic(S3, S3).has_value());
  CHECK(!isomorphic(named::left_zero(2), named::right_zero(2)));
  CHECK(!isomorphic(named::cyclic_group(4), named::klein_four()));

  // The H-class of the idempotent [1,2,3,3] in T_4.
  std::vector<Transformation> h;
  for (auto const& f : all_transformations(4)) {
    if (f.rank() == 3 && f.image_set() == test::S({1, 2, 3}) && f.kernel() == test::P(4, {{1}, {2}, {3, 4}})) {
      h.push_back(f);
    }
  }
  REQUIRE(h.size() == 6);
  auto const H   = table_of(h);
  auto const iso = isomorphic(H, S3);
  REQUIRE(iso.has_value());
  CHECK(verify_index_morphism(H, S3, *iso).ok());

  auto const T2 = named::full_transformation(2);
  auto const C  = closure(std::vector{T({1, 1}), T({2, 1})}).semigroup;
  CHECK(isomorphic(T2, C).has_value());
  CHECK_THROWS_AS(isomorphic(named::full_transformation(3), named::full_transformation(3)), CapExceeded);
}

TEST_CASE("representations are checked exhaustively", "[core]") {
  auto const T2 = all_transformations(2);
  auto const S  = table_of(T2);
  CHECK(verify_representation(S, Representation<Transformation>{2, T2}).ok());
  auto bad = T2;
  std::swap(bad[0], bad[1]);
  CHECK(!verify_representation(S, Representation<Transformation>{2, bad}).homomorphism);
}

TEST_CASE("small generating sets generate", "[core]") {
  for (auto const& [name, S] : named::library()) {
    auto const gens = small_generating_set(S);
    CHECK(subsemigroup_of(S, gens).size() == S.size());
  }
}

TEST_CASE("named fixtures are associative", "[core]") {
  for (auto const& [name, S] : named::library()) {
    INFO(name);
    CHECK(S.is_associative());
  }
  CHECK(named::brandt(3).is_inverse());
  CHECK(named::rees_matrix({{1, 1, 0, 0}, {0, 0, 1, 1}}).is_associative());
}
