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

#include "hsg/morphism.hpp"

#include <algorithm>
#include <tuple>

#include "hsg/green.hpp"

namespace hsg {

  MorphismReport verify_index_morphism(FiniteSemigroup const&         S,
                                       FiniteSemigroup const&         T,
                                       std::vector<index_type> const& map) {
    detail::require(map.size() == S.size(), "one image per source element required");
    for (auto v : map) {
      detail::require(v < T.size(), "morphism image out of range");
    }
    MorphismReport out;
    out.homomorphism = true;
    for (index_type x = 0; x < S.size() && out.homomorphism; ++x) {
      for (index_type y = 0; y < S.size(); ++y) {
        ++out.pairs_checked;
        if (map[S.product(x, y)] != T.product(map[x], map[y])) {
          out.homomorphism = false;
          break;
        }
      }
    }
    std::vector<index_type> sorted = map;
    std::sort(sorted.begin(), sorted.end());
    out.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (S.is_inverse() && T.is_inverse()) {
      for (index_type x = 0; x < S.size(); ++x) {
        if (map[S.inverse(x)] != T.inverse(map[x])) {
          out.inverse_preserving = false;
        }
      }
    }
    return out;
  }

  namespace {
    struct Profile {
      std::size_t                                                       idempotents = 0;
      std::vector<IndexPeriod>                                          orders;
      std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> green;

      bool operator==(Profile const&) const = default;
    };

    Profile profile_of(FiniteSemigroup const& S) {
      Profile p;
      p.idempotents = S.idempotents().size();
      for (index_type a = 0; a < S.size(); ++a) {
        p.orders.push_back(index_period(S, a));
      }
      std::sort(p.orders.begin(), p.orders.end());
      auto const G = green_generic(S);
      auto const J = G.j_members();
      for (std::size_t j = 0; j < G.num_j; ++j) {
        std::vector<index_type> rs, ls;
        std::size_t             groups = 0;
        for (auto x : J[j]) {
          rs.push_back(G.r_class[x]);
          ls.push_back(G.l_class[x]);
          groups += G.idempotent[x] ? 1 : 0;
        }
        p.green.emplace_back(J[j].size(), make_point_set(rs).size(), make_point_set(ls).size(), groups);
      }
      std::sort(p.green.begin(), p.green.end());
      return p;
    }
  }  // namespace

  std::optional<std::vector<index_type>> isomorphic(FiniteSemigroup const& S,
                                                    FiniteSemigroup const& T,
                                                    std::size_t            cap) {
    detail::require_cap(S.size() <= cap && T.size() <= cap, "isomorphism test over size cap");
    if (S.size() != T.size()) {
      return std::nullopt;
    }
    if (!(profile_of(S) == profile_of(T))) {
      return std::nullopt;
    }
    std::vector<index_type> universe(T.size());
    for (index_type i = 0; i < T.size(); ++i) {
      universe[i] = i;
    }
    auto mul = [&T](index_type a, index_type b) { return T.product(a, b); };
    std::optional<std::vector<index_type>> found;
    search_embeddings<index_type>(S, universe, mul, {}, [&](std::vector<index_type> const& m) {
      found = m;
      return true;
    });
    return found;
  }

}  // namespace hsg
