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

#include <map>

#include "catch_amalgamated.hpp"
#include "hsg/amalgamation.hpp"
#include "hsg/green.hpp"
#include "hsg/named.hpp"

using namespace hsg;

TEST_CASE("class A decided by J-linearity", "[amalgamation]") {
  CHECK(is_base_inverse(named::symmetric_inverse(2)).status == Membership::Member);
  CHECK(is_base_inverse(named::symmetric_inverse(3)).status == Membership::Member);
  CHECK(is_base_inverse(named::chain(4)).status == Membership::Member);
  CHECK(is_base_inverse(named::brandt(2)).status == Membership::Member);
  CHECK(is_base_inverse(named::v3()).status == Membership::NonMember);
  CHECK_THROWS_AS(is_base_inverse(named::left_zero(2)), Error);
  CHECK_THROWS_AS(is_base_inverse(named::full_transformation(2)), Error);
}

TEST_CASE("class B verdicts on the fixture library", "[amalgamation]") {
  std::map<std::string, std::pair<Membership, std::string>> const expected{
      {"T1", {Membership::Member, "group"}},
      {"T2", {Membership::Member, "full-transformation"}},
      {"T3", {Membership::Member, "full-transformation"}},
      {"T2opp", {Membership::Member, "full-transformation-opp"}},
      {"T3opp", {Membership::Member, "full-transformation-opp"}},
      {"I1", {Membership::Member, "inverse-j-linear"}},
      {"I2", {Membership::Member, "inverse-j-linear"}},
      {"Z2", {Membership::Member, "group"}},
      {"Z3", {Membership::Member, "group"}},
      {"Z4", {Membership::Member, "group"}},
      {"K4", {Membership::Member, "group"}},
      {"S3", {Membership::Member, "group"}},
      {"C2", {Membership::Member, "inverse-j-linear"}},
      {"C3", {Membership::Member, "inverse-j-linear"}},
      {"C4", {Membership::Member, "inverse-j-linear"}},
      {"L2", {Membership::NonMember, "completely-simple-non-group"}},
      {"R2", {Membership::NonMember, "completely-simple-non-group"}},
      {"L3", {Membership::NonMember, "completely-simple-non-group"}},
      {"RB2x2", {Membership::NonMember, "completely-simple-non-group"}},
      {"V3", {Membership::NonMember, "not-j-linear"}},
      {"B2", {Membership::Member, "inverse-j-linear"}},
      {"N2", {Membership::Unknown, "none"}},
      {"N3", {Membership::NonMember, "not-j-linear"}},
      {"M2_1", {Membership::Unknown, "none"}},
  };
  for (auto const& [name, S] : named::library()) {
    INFO(name);
    auto const it = expected.find(name);
    REQUIRE(it != expected.end());
    auto const v = classify_B(S);
    CHECK(v.status == it->second.first);
    CHECK(v.criterion == it->second.second);
    CHECK(!v.reason.empty());
  }
}

TEST_CASE("class B verdict is invariant under the opposite", "[amalgamation]") {
  for (auto const& [name, S] : named::library()) {
    INFO(name);
    CHECK(classify_B(S).status == classify_B(opposite(S)).status);
  }
}

TEST_CASE("class B agrees with class A on inverse members", "[amalgamation]") {
  for (auto const& [name, S] : named::library()) {
    auto const D = detect_inverse(S);
    if (!D.is_inverse()) {
      continue;
    }
    INFO(name);
    auto const a = is_base_inverse(D);
    auto const b = classify_B(D);
    if (a.status == Membership::Member) {
      CHECK(b.status == Membership::Member);
    } else {
      CHECK(b.status == Membership::NonMember);
    }
  }
}

TEST_CASE("amalgam fixtures validate", "[amalgamation]") {
  for (auto const& name : amalgam_fixture_names()) {
    INFO(name);
    auto const am = amalgam_fixture(name);
    CHECK_NOTHROW(validate(am));
  }
  auto const v = amalgam_fixture("v3-inverse");
  CHECK(v.A0.size() == 3);
  CHECK(v.A1.size() == 5);
  CHECK(v.A2.size() == 6);
  CHECK(v.inverse_mode);
  CHECK_THROWS_AS(amalgam_fixture("nope"), Error);

  auto bad = amalgam_fixture("groups");
  bad.f1   = {0, 1};  // 1 in Z_4 has order 4, so this is no homomorphism
  CHECK_THROWS_AS(validate(bad), Error);
}

TEST_CASE("joint embedding of inverse semigroups", "[amalgamation]") {
  auto const r = jep_embed_inverse(named::symmetric_inverse(2), named::brandt(2));
  CHECK(r.degree == 7 + 5);
  CHECK(r.r1.ok());
  CHECK(r.r2.ok());
  CHECK(r.ok());
  CHECK(r.closure_size >= 7 + 5);

  auto const triv = jep_embed_inverse(named::cyclic_group(1), named::cyclic_group(1));
  CHECK(triv.degree == 2);
  CHECK(triv.g1.images.front() == PartialBijection::identity_on(2, {0}));
  CHECK(triv.g2.images.front() == PartialBijection::identity_on(2, {1}));
  CHECK(triv.ok());

  auto const cz = jep_embed_inverse(named::chain(2), named::cyclic_group(2));
  CHECK(cz.degree == 4);
  CHECK(cz.ok());

  auto const v = jep_embed_inverse(named::v3(), named::cyclic_group(3));
  CHECK(v.ok());
  CHECK_THROWS_AS(jep_embed_inverse(named::left_zero(2), named::v3()), Error);
}

TEST_CASE("completion search", "[amalgamation]") {
  SECTION("identity amalgam completes in T_2") {
    auto const r = complete_amalgam(amalgam_fixture("identity-T2"));
    REQUIRE(r.found);
    CHECK(r.degree == 2);
    CHECK(r.commutes);
    CHECK(r.r1.ok());
    CHECK(r.r2.ok());
  }
  SECTION("group amalgam needs degree four") {
    auto const r = complete_amalgam(amalgam_fixture("groups"));
    REQUIRE(r.found);
    CHECK(r.degree == 4);
    CHECK(r.target == "T");
    for (auto const& x : r.g1_T) {
      CHECK(x.is_permutation());
    }
  }
  SECTION("failing V_3 amalgam reports not found") {
    auto const r = complete_amalgam(amalgam_fixture("v3-inverse"), 4);
    CHECK_FALSE(r.found);
    CHECK_FALSE(r.budget_exhausted);
    CHECK(r.verdict.find("not found within cap") != std::string::npos);
    CHECK(r.verdict.find("not a proof") != std::string::npos);
  }
  SECTION("caps") {
    CHECK_THROWS_AS(complete_amalgam(amalgam_fixture("groups"), 6), CapExceeded);
    Amalgam big{named::cyclic_group(1), named::cyclic_group(7), named::cyclic_group(1), {0}, {0}, false};
    CHECK_THROWS_AS(complete_amalgam(big), CapExceeded);
  }
}
