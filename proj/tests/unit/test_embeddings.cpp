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
#include <set>

#include "catch_amalgamated.hpp"
#include "helpers.hpp"
#include "hsg/embeddings.hpp"
#include "hsg/named.hpp"

using namespace hsg;
using hsg::test::S;
using hsg::test::T;

TEST_CASE("Cayley embedding", "[embeddings]") {
  auto const z2 = cayley_embed(named::cyclic_group(2));
  CHECK(!z2.adjoined_identity);
  CHECK(z2.rep.images == std::vector{T({1, 2}), T({2, 1})});
  CHECK(z2.report.ok());

  auto const t2 = cayley_embed(named::full_transformation(2));
  CHECK(t2.rep.degree == 4);
  CHECK(t2.report.ok());

  auto const l2 = cayley_embed(named::left_zero(2));
  CHECK(l2.adjoined_identity);
  CHECK(l2.rep.degree == 3);
  CHECK(l2.rep.images[0] != l2.rep.images[1]);
  CHECK(l2.report.ok());

  for (auto const& [name, S] : named::library()) {
    INFO(name);
    CHECK(cayley_embed(S).report.ok());
  }
}

TEST_CASE("Vagner-Preston", "[embeddings]") {
  auto const c2 = vagner_preston(named::chain(2));
  CHECK(c2.rep.images[1] == PartialBijection::identity(2));
  CHECK(c2.rep.images[0] == PartialBijection::identity_on(2, {0}));

  auto const I2 = named::symmetric_inverse(2);
  auto const vp = vagner_preston(I2);
  CHECK(vp.rep.degree == 7);
  CHECK(vp.report.pairs_checked == 49);
  CHECK(vp.report.ok());
  for (index_type e : I2.idempotents()) {
    std::vector<Point> se;
    for (index_type s = 0; s < I2.size(); ++s) {
      se.push_back(I2.product(s, e));
    }
    CHECK(vp.rep.images[e] == PartialBijection::identity_on(7, make_point_set(se)));
  }

  auto const g = vagner_preston(named::symmetric_group(3));
  for (auto const& x : g.rep.images) {
    CHECK(x.rank() == 6);
  }
  CHECK_THROWS_AS(vagner_preston(named::full_transformation(2)), Error);
}

TEST_CASE("padding", "[embeddings]") {
  CHECK(pad(Transformation::identity(2), 1) == Transformation::identity(3));
  CHECK(pad(T({1, 1}), 1) == T({1, 1, 3}));
  CHECK(pad(T({1, 1}), 1).rank() == 2);
  for (auto const& a : all_transformations(3)) {
    CHECK(pad(a, 2).rank() == a.rank() + 2);
  }
  auto const m = pad_embed(3, 2);
  CHECK(m.verify(true).ok());
}

TEST_CASE("stabilizing embedding", "[embeddings]") {
  CHECK(stabilize(T({1})) == T({1, 2}));
  CHECK(stabilize(T({1})).is_permutation());
  CHECK(stabilize(T({2, 1})) == T({2, 1, 3}));
  CHECK(stabilize(T({1, 1})) == T({1, 1, 3}));
  CHECK(!stabilize(T({1, 1})).is_permutation());
  for (std::size_t n = 3; n <= 4; ++n) {
    auto const rep = stabilize_check(n);
    CHECK(rep.ok());
    CHECK(rep.permutation_images == (n == 3 ? 2u : 6u));
  }
  CHECK(stabilize_check(3).idempotent_generated == 21);
  CHECK_THROWS_AS(stabilize_embed(1), Error);
}

TEST_CASE("dilation sizes", "[embeddings]") {
  auto const ctx = build_dilation(3, 2);
  CHECK(ctx.y() == 1);
  CHECK(ctx.epsilon().rank() == 3);
  CHECK(ctx.epsilon().is_idempotent());
  CHECK(ctx.z_size() == 25);
  std::size_t count = 0;
  for (auto const& g : all_transformations(4)) {
    count += g.kernel() == ctx.epsilon().kernel() ? 1 : 0;
  }
  CHECK(count == 24);

  CHECK(dilation_padding(5, 2) == 2);
  CHECK(build_dilation(5, 2).z_size() == 841);
  CHECK(build_dilation(5, 3).z_size() == 361);
  CHECK(build_dilation(5, 4).z_size() == 721);
  CHECK_THROWS_AS(build_dilation(3, 1), Error);
  CHECK_THROWS_AS(build_dilation(3, 3), Error);
  CHECK_THROWS_AS(build_dilation(4, 2, T({1, 2, 3, 3})), Error);
  CHECK(build_dilation(4, 2, T({1, 1, 3, 3})).e() == T({1, 1, 3, 3}));
}

TEST_CASE("image of psi on D_r", "[embeddings]") {
  for (std::size_t n = 3; n <= 4; ++n) {
    for (std::size_t r = 2; r < n; ++r) {
      auto const  ctx  = build_dilation(n, r);
      std::size_t fact = 1;
      for (std::size_t i = 2; i <= r + ctx.y(); ++i) {
        fact *= i;
      }
      for (auto const& a : all_transformations(n)) {
        if (a.rank() != r) {
          continue;
        }
        CHECK(ctx.psi(a).image_set() == ctx.predicted_image(a));
        CHECK(h_class_of(ctx.iota(a)).size() == fact);
        CHECK(ctx.row_h_class(a).size() == fact);
        if (a.kernel() == ctx.e().kernel()) {
          // Then R_ε ∩ L_{αι} is the H-class of αι itself.
          PointSet lit;
          for (auto const& h : h_class_of(ctx.iota(a))) {
            lit.push_back(ctx.point_of(h));
          }
          CHECK(make_point_set(lit) == ctx.row_h_class(a));
        }
      }
    }
  }
}

TEST_CASE("the action is a right action", "[embeddings]") {
  auto const ctx = build_dilation(3, 2);
  auto const T3  = all_transformations(3);
  for (auto const& g : ctx.r_epsilon()) {
    for (auto const& a : T3) {
      auto const ga = ctx.act(g, a);
      for (auto const& b : T3) {
        auto const lhs = ctx.act(g, a * b);
        auto const rhs = ga ? ctx.act(*ga, b) : std::nullopt;
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("psi is an injective homomorphism", "[embeddings]") {
  auto const r3 = build_dilation(3, 2).psi_morphism().verify(true);
  CHECK(r3.ok());
  CHECK(r3.pairs_checked == 27 * 27);
  auto const r5 = build_dilation(5, 3).psi_morphism(1, 20).verify(false);
  CHECK(r5.ok());
  CHECK(!r5.exhaustive);
}

TEST_CASE("row H-classes of distinct L-classes are disjoint", "[embeddings]") {
  auto const ctx = build_dilation(3, 2);
  CHECK(disjoint_h_classes_check(ctx, T({1, 2, 2}), T({1, 3, 3})));
  CHECK(!disjoint_h_classes_check(ctx, T({1, 2, 2}), T({2, 1, 1})));
  CHECK(!disjoint_h_classes_check(ctx, T({1, 2, 2}), T({1, 1, 2})));
  std::vector<Transformation> d2;
  for (auto const& a : all_transformations(3)) {
    if (a.rank() == 2) {
      d2.push_back(a);
    }
  }
  for (auto const& a : d2) {
    for (auto const& b : d2) {
      CHECK(disjoint_h_classes_check(ctx, a, b) == (a.image_set() != b.image_set()));
    }
  }
  CHECK_THROWS_AS(disjoint_h_classes_check(ctx, T({1, 2, 3}), T({1, 1, 2})), Error);
}
