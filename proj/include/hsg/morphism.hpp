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

#ifndef HSG_MORPHISM_HPP_
#define HSG_MORPHISM_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hsg/semigroup.hpp"

namespace hsg {

  // Outcome of checking a claimed embedding.
  struct MorphismReport {
    bool        homomorphism       = false;
    bool        injective          = false;
    bool        inverse_preserving = true;  // vacuous unless both sides are inverse
    bool        exhaustive         = true;  // false: only a declared test set was checked
    std::size_t pairs_checked      = 0;
    std::string test_set           = "all";

    bool ok() const noexcept {
      return homomorphism && injective && inverse_preserving;
    }
  };

  // A morphism from an enumerable source into T_degree or I_degree, given
  // by the image of each source element.
  template <typename Elem>
  struct Representation {
    std::size_t       degree = 0;
    std::vector<Elem> images;
  };

  namespace detail {
    template <typename Elem>
    bool inverse_matches(Elem const&, Elem const&) {
      return true;
    }
    template <typename Elem>
    requires requires(Elem const& x) { x.inverse(); }
    bool inverse_matches(Elem const& image_of_inverse, Elem const& image) {
      return image_of_inverse == image.inverse();
    }
  }  // namespace detail

  template <typename Elem>
  MorphismReport verify_representation(FiniteSemigroup const& S, Representation<Elem> const& rep) {
    detail::require(rep.images.size() == S.size(), "one image per source element required");
    MorphismReport out;
    out.homomorphism = true;
    for (index_type x = 0; x < S.size() && out.homomorphism; ++x) {
      detail::require(rep.images[x].degree() == rep.degree, "image degree mismatch");
      for (index_type y = 0; y < S.size(); ++y) {
        ++out.pairs_checked;
        if (rep.images[x] * rep.images[y] != rep.images[S.product(x, y)]) {
          out.homomorphism = false;
          break;
        }
      }
    }
    std::unordered_set<Elem> distinct(rep.images.begin(), rep.images.end());
    out.injective = distinct.size() == rep.images.size();
    if (S.is_inverse()) {
      for (index_type x = 0; x < S.size(); ++x) {
        if (!detail::inverse_matches(rep.images[S.inverse(x)], rep.images[x])) {
          out.inverse_preserving = false;
        }
      }
    }
    return out;
  }

  // An explicit map between abstract semigroups.
  MorphismReport verify_index_morphism(FiniteSemigroup const&         S,
                                       FiniteSemigroup const&         T,
                                       std::vector<index_type> const& map);

  // A morphism given by a computable rule, for targets too large to
  // enumerate.  Verification runs over the declared test set only, and the
  // report says so.
  template <typename Src, typename Dst = Src>
  struct RuleMorphism {
    std::function<Dst(Src const&)> rule;
    std::vector<Src>               test_set;
    std::string                    test_set_description = "declared test set";

    Dst operator()(Src const& x) const {
      return rule(x);
    }

    MorphismReport verify(bool test_set_is_whole_source = false) const {
      MorphismReport out;
      out.exhaustive = test_set_is_whole_source;
      out.test_set   = test_set_description;
      std::vector<Dst> images;
      images.reserve(test_set.size());
      for (auto const& x : test_set) {
        images.push_back(rule(x));
      }
      out.homomorphism = true;
      for (std::size_t i = 0; i < test_set.size() && out.homomorphism; ++i) {
        for (std::size_t j = 0; j < test_set.size(); ++j) {
          ++out.pairs_checked;
          if (rule(test_set[i] * test_set[j]) != images[i] * images[j]) {
            out.homomorphism = false;
            break;
          }
        }
      }
      out.injective = true;
      std::unordered_map<Dst, std::size_t> seen;
      for (std::size_t i = 0; i < images.size(); ++i) {
        auto [it, fresh] = seen.emplace(images[i], i);
        if (!fresh && test_set[it->second] != test_set[i]) {
          out.injective = false;
        }
      }
      return out;
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Embedding search
  ////////////////////////////////////////////////////////////////////////

  struct SearchStats {
    std::size_t nodes            = 0;
    bool        budget_exhausted = false;
  };

  // Enumerates injective homomorphisms S -> U where U is given by a finite
  // candidate universe and a multiplication.  Generators of S are assigned
  // images one at a time; after each assignment the map is extended over
  // the generated subsemigroup and rejected on the first clash with the
  // homomorphism or injectivity conditions.  Candidate images must have
  // the same index and period as the generator.  visit() returns true to
  // stop the search.
  template <typename V, typename Mul>
  SearchStats search_embeddings(FiniteSemigroup const&                             S,
                                std::vector<V> const&                              universe,
                                Mul const&                                         mul,
                                std::vector<std::pair<index_type, V>> const&       fixed,
                                std::function<bool(std::vector<V> const&)> const& visit,
                                std::size_t node_budget = 2'000'000) {
    SearchStats stats;

    auto ip_of = [&](V const& v) {
      std::unordered_map<V, std::size_t> first;
      V                                  p = v;
      std::size_t                        k = 1;
      while (true) {
        auto [it, fresh] = first.emplace(p, k);
        if (!fresh) {
          return IndexPeriod{it->second, k - it->second};
        }
        p = mul(p, v);
        ++k;
      }
    };

    std::vector<index_type> prefix;
    for (auto const& [x, v] : fixed) {
      prefix.push_back(x);
    }
    auto const gens = small_generating_set(S, prefix);

    std::vector<std::vector<V>> candidates(gens.size());
    {
      std::vector<IndexPeriod> uip;
      uip.reserve(universe.size());
      for (auto const& u : universe) {
        uip.push_back(ip_of(u));
      }
      for (std::size_t i = 0; i < gens.size(); ++i) {
        IndexPeriod const want = index_period(S, gens[i]);
        if (i < fixed.size()) {
          if (ip_of(fixed[i].second) == want) {
            candidates[i].push_back(fixed[i].second);
          }
          continue;
        }
        for (std::size_t u = 0; u < universe.size(); ++u) {
          if (uip[u] == want) {
            candidates[i].push_back(universe[u]);
          }
        }
      }
    }

    std::vector<std::optional<V>>      image(S.size());
    std::unordered_map<V, index_type>  preimage;
    std::vector<index_type>            trail;
    bool                               stop = false;

    auto assign = [&](index_type x, V const& v) -> bool {
      if (image[x]) {
        return *image[x] == v;
      }
      auto [it, fresh] = preimage.emplace(v, x);
      if (!fresh) {
        return false;
      }
      image[x] = v;
      trail.push_back(x);
      return true;
    };

    auto extend = [&](std::size_t upto) -> bool {
      std::vector<index_type> queue;
      for (index_type x = 0; x < S.size(); ++x) {
        if (image[x]) {
          queue.push_back(x);
        }
      }
      for (std::size_t q = 0; q < queue.size(); ++q) {
        index_type const x = queue[q];
        for (std::size_t k = 0; k <= upto; ++k) {
          index_type const p     = S.product(x, gens[k]);
          bool const       fresh = !image[p];
          if (!assign(p, mul(*image[x], *image[gens[k]]))) {
            return false;
          }
          if (fresh) {
            queue.push_back(p);
          }
        }
      }
      return true;
    };

    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (stop) {
        return;
      }
      if (i == gens.size()) {
        std::vector<V> full;
        full.reserve(S.size());
        for (auto const& v : image) {
          full.push_back(*v);
        }
        stop = visit(full);
        return;
      }
      for (auto const& v : candidates[i]) {
        if (++stats.nodes > node_budget) {
          stats.budget_exhausted = true;
          stop                   = true;
          return;
        }
        std::size_t const mark = trail.size();
        if (assign(gens[i], v) && extend(i)) {
          self(self, i + 1);
        }
        while (trail.size() > mark) {
          preimage.erase(*image[trail.back()]);
          image[trail.back()].reset();
          trail.pop_back();
        }
        if (stop) {
          return;
        }
      }
    };
    rec(rec, 0);
    return stats;
  }

  inline constexpr std::size_t kIsomorphismCap = 24;

  // An isomorphism S -> T as an index map, if one exists.  Invariant
  // prefilters (idempotent count, index/period multiset, Green profile)
  // run before the generator-image backtracking.
  std::optional<std::vector<index_type>> isomorphic(FiniteSemigroup const& S,
                                                    FiniteSemigroup const& T,
                                                    std::size_t            cap = kIsomorphismCap);

}  // namespace hsg

#endif  // HSG_MORPHISM_HPP_
