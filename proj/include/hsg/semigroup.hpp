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

#ifndef HSG_SEMIGROUP_HPP_
#define HSG_SEMIGROUP_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hsg/error.hpp"

namespace hsg {

  using index_type = std::uint32_t;

  // An abstract finite semigroup given by its Cayley table.  Element
  // indices are 0-based; product(a, b) is the element a·b.
  class FiniteSemigroup {
   public:
    FiniteSemigroup() = default;
    // The table is row-major, size * size entries.  When present the
    // inverse map is validated against the inverse semigroup axioms.
    FiniteSemigroup(std::size_t                            size,
                    std::vector<index_type>                table,
                    std::optional<std::vector<index_type>> inverse = std::nullopt);

    static FiniteSemigroup from_rows(std::vector<std::vector<index_type>> const& rows,
                                     std::optional<std::vector<index_type>> inverse = std::nullopt);

    std::size_t size() const noexcept {
      return _size;
    }
    index_type product(index_type a, index_type b) const noexcept {
      return _table[static_cast<std::size_t>(a) * _size + b];
    }
    std::vector<index_type> const& table() const noexcept {
      return _table;
    }
    std::vector<std::vector<index_type>> rows() const;

    bool is_inverse() const noexcept {
      return _inverse.has_value();
    }
    index_type inverse(index_type a) const {
      return _inverse.value()[a];
    }
    std::optional<std::vector<index_type>> const& inverse_map() const noexcept {
      return _inverse;
    }

    std::optional<index_type> identity() const noexcept {
      return _identity;
    }
    bool is_monoid() const noexcept {
      return _identity.has_value();
    }

    bool                    is_associative() const;
    bool                    is_commutative() const;
    bool                    is_idempotent(index_type a) const noexcept {
      return product(a, a) == a;
    }
    std::vector<index_type> idempotents() const;
    bool                    is_group() const;

    bool operator==(FiniteSemigroup const&) const = default;

   private:
    std::size_t                            _size = 0;
    std::vector<index_type>                _table;
    std::optional<std::vector<index_type>> _inverse;
    std::optional<index_type>              _identity;
  };

  // x * y := yx.  The inverse map, if any, is kept.
  FiniteSemigroup opposite(FiniteSemigroup const& S);

  // The unique-inverse map if S is an inverse semigroup, nullopt otherwise.
  std::optional<std::vector<index_type>> find_inverse_map(FiniteSemigroup const& S);

  // S with its inverse map attached when S turns out to be inverse.
  FiniteSemigroup detect_inverse(FiniteSemigroup S);

  // Smallest m >= 1, p >= 1 with a^{m+p} = a^m.
  struct IndexPeriod {
    std::size_t index  = 1;
    std::size_t period = 1;
    auto        operator<=>(IndexPeriod const&) const = default;
  };
  IndexPeriod index_period(FiniteSemigroup const& S, index_type a);

  // Sorted element indices of the subsemigroup generated by gens.
  std::vector<index_type> subsemigroup_of(FiniteSemigroup const& S, std::vector<index_type> const& gens);

  // A generating set built greedily, starting from prefix.  Elements not
  // yet generated are added highest J-class first, ties by index.
  std::vector<index_type> small_generating_set(FiniteSemigroup const&         S,
                                               std::vector<index_type> const& prefix = {});

  // The multiplication table restricted to a subset closed under product.
  FiniteSemigroup restrict_to(FiniteSemigroup const& S, std::vector<index_type> const& subset);

  ////////////////////////////////////////////////////////////////////////
  // Concrete closure
  ////////////////////////////////////////////////////////////////////////

  // The subsemigroup generated by concrete elements.  Element order is
  // breadth-first by word length with a lexicographic tie-break inside each
  // level, so the table is reproducible and independent of the order in
  // which generators are supplied.
  template <typename Elem>
  struct Closure {
    FiniteSemigroup                      semigroup;
    std::vector<Elem>                    elements;
    std::unordered_map<Elem, index_type> lookup;

    index_type index_of(Elem const& x) const {
      auto it = lookup.find(x);
      detail::require(it != lookup.end(), "element not in closure");
      return it->second;
    }
    bool contains(Elem const& x) const {
      return lookup.count(x) != 0;
    }
  };

  namespace detail {
    template <typename Elem>
    std::optional<std::vector<index_type>> inverse_if_closed(std::vector<Elem> const&,
                                                             std::unordered_map<Elem, index_type> const&) {
      return std::nullopt;
    }
    template <typename Elem>
    requires requires(Elem const& x) { x.inverse(); }
    std::optional<std::vector<index_type>> inverse_if_closed(std::vector<Elem> const&                    elts,
                                                             std::unordered_map<Elem, index_type> const& lookup) {
      std::vector<index_type> inv(elts.size());
      for (std::size_t i = 0; i < elts.size(); ++i) {
        auto it = lookup.find(elts[i].inverse());
        if (it == lookup.end()) {
          return std::nullopt;
        }
        inv[i] = it->second;
      }
      return inv;
    }
  }  // namespace detail

  template <typename Elem>
  Closure<Elem> closure(std::vector<Elem> gens) {
    detail::require(!gens.empty(), "closure needs at least one generator");
    for (auto const& g : gens) {
      detail::require(g.degree() == gens.front().degree(), "generators must share a degree");
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    Closure<Elem> out;
    std::size_t const       ngens = gens.size();
    std::vector<index_type> parent, last;  // word structure, kNone for generators
    std::vector<index_type> right;         // right Cayley graph, row-major by generator
    constexpr index_type    kNone = static_cast<index_type>(-1);

    auto add_level = [&](std::vector<std::pair<Elem, std::pair<index_type, index_type>>>& level) {
      std::sort(level.begin(), level.end(), [](auto const& a, auto const& b) { return a.first < b.first; });
      for (auto& [x, pw] : level) {
        out.lookup.emplace(x, static_cast<index_type>(out.elements.size()));
        out.elements.push_back(std::move(x));
        parent.push_back(pw.first);
        last.push_back(pw.second);
      }
    };

    {
      std::vector<std::pair<Elem, std::pair<index_type, index_type>>> level;
      for (std::size_t k = 0; k < ngens; ++k) {
        level.emplace_back(gens[k], std::make_pair(kNone, static_cast<index_type>(k)));
      }
      add_level(level);
    }
    std::size_t level_begin = 0;
    while (level_begin < out.elements.size()) {
      std::size_t const level_end = out.elements.size();
      std::vector<std::pair<Elem, std::pair<index_type, index_type>>> next;
      std::unordered_map<Elem, std::size_t>                           pending;
      // right[x * ngens + k] is filled in a second pass once the level is
      // indexed; remember the products for now.
      std::vector<Elem> products;
      products.reserve((level_end - level_begin) * ngens);
      for (std::size_t x = level_begin; x < level_end; ++x) {
        for (std::size_t k = 0; k < ngens; ++k) {
          Elem p = out.elements[x] * gens[k];
          if (!out.lookup.count(p) && !pending.count(p)) {
            pending.emplace(p, next.size());
            next.emplace_back(p, std::make_pair(static_cast<index_type>(x), static_cast<index_type>(k)));
          }
          products.push_back(std::move(p));
        }
      }
      add_level(next);
      for (auto const& p : products) {
        right.push_back(out.lookup.at(p));
      }
      level_begin = level_end;
    }

    std::size_t const       N = out.elements.size();
    std::vector<index_type> table(N * N);
    for (std::size_t y = 0; y < N; ++y) {
      for (std::size_t x = 0; x < N; ++x) {
        if (parent[y] == kNone) {
          table[x * N + y] = right[x * ngens + last[y]];
        } else {
          table[x * N + y] = right[static_cast<std::size_t>(table[x * N + parent[y]]) * ngens + last[y]];
        }
      }
    }
    out.semigroup = FiniteSemigroup(N, std::move(table), detail::inverse_if_closed(out.elements, out.lookup));
    return out;
  }

  // The table of a finite set of concrete elements closed under product,
  // in the order given.
  template <typename Elem>
  FiniteSemigroup table_of(std::vector<Elem> const& elements) {
    std::unordered_map<Elem, index_type> lookup;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      lookup.emplace(elements[i], static_cast<index_type>(i));
    }
    detail::require(lookup.size() == elements.size(), "repeated element");
    std::size_t const       N = elements.size();
    std::vector<index_type> table(N * N);
    for (std::size_t x = 0; x < N; ++x) {
      for (std::size_t y = 0; y < N; ++y) {
        auto it = lookup.find(elements[x] * elements[y]);
        detail::require(it != lookup.end(), "element set is not closed under product");
        table[x * N + y] = it->second;
      }
    }
    return FiniteSemigroup(N, std::move(table), detail::inverse_if_closed(elements, lookup));
  }

}  // namespace hsg

#endif  // HSG_SEMIGROUP_HPP_
