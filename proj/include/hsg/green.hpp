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

#ifndef HSG_GREEN_HPP_
#define HSG_GREEN_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hsg/semigroup.hpp"
#include "hsg/transformation.hpp"

namespace hsg {

  // Green's relations of a finite semigroup as per-element class ids.
  // Class ids are dense and assigned in order of first occurrence, except
  // that the T_n / I_n fast paths number J-classes by rank.
  struct GreenStructure {
    std::size_t size = 0;

    std::vector<index_type> r_class, l_class, h_class, j_class, d_class;
    std::size_t             num_r = 0, num_l = 0, num_h = 0, num_j = 0, num_d = 0;

    // j_leq[a][b] holds iff J-class a <= J-class b.
    std::vector<std::vector<bool>> j_leq;

    std::vector<bool> idempotent;  // per element
    std::vector<bool> group_h;     // per H-class

    // Display labels per R- and L-class: kernel / domain / image strings on
    // the fast paths, "R3" / "L0" style otherwise.
    std::vector<std::string> r_keys, l_keys;

    bool is_j_linear() const;
    bool operator==(GreenStructure const&) const = default;

    std::vector<std::vector<index_type>> r_members() const;
    std::vector<std::vector<index_type>> l_members() const;
    std::vector<std::vector<index_type>> h_members() const;
    std::vector<std::vector<index_type>> j_members() const;
    std::vector<std::vector<index_type>> d_members() const;

    // R- and L-class ids meeting D-class d, ascending.
    std::vector<index_type> r_classes_in_d(index_type d) const;
    std::vector<index_type> l_classes_in_d(index_type d) const;

    // The H-class R_r ∩ L_l, if nonempty.
    std::optional<index_type> h_at(index_type r, index_type l) const;
  };

  // Classes straight from the ideal definitions: a R b iff aS^1 = bS^1,
  // a L b iff S^1a = S^1b, a J b iff S^1aS^1 = S^1bS^1.  D is computed
  // independently as the join of R and L.
  GreenStructure green_generic(FiniteSemigroup const& S);

  template <typename Elem>
  struct ConcreteGreen {
    std::vector<Elem> elements;
    GreenStructure    green;
  };

  inline constexpr std::size_t kFastPathCap = 5;

  // All of T_n in lexicographic order, classes keyed by kernel, image and
  // rank.  n <= kFastPathCap.
  ConcreteGreen<Transformation> green_fast_T(std::size_t n);
  // All of I_n, keyed by domain, image and rank (0..n).
  ConcreteGreen<PartialBijection> green_fast_I(std::size_t n);

  // Whether two id vectors describe the same equivalence relation.
  bool same_classes(std::vector<index_type> const& a, std::vector<index_type> const& b);

  // The group H-class h as a semigroup in its own right.
  FiniteSemigroup maximal_subgroup(FiniteSemigroup const& S, GreenStructure const& G, index_type h);

  template <typename Elem>
  FiniteSemigroup maximal_subgroup(ConcreteGreen<Elem> const& CG, index_type h) {
    detail::require(h < CG.green.num_h, "H-class id out of range");
    detail::require(CG.green.group_h[h], "H-class is not a group");
    std::vector<Elem> elts;
    for (std::size_t x = 0; x < CG.elements.size(); ++x) {
      if (CG.green.h_class[x] == h) {
        elts.push_back(CG.elements[x]);
      }
    }
    return table_of(elts);
  }

  // J* = J ∪ {0}; the zero is the last element.
  struct PrincipalFactor {
    index_type              j_class = 0;
    std::vector<index_type> elements;  // indices into S, ascending
    FiniteSemigroup         semigroup;
    index_type              zero    = 0;
    bool                    is_null = false;  // J·J ⊆ {0}
  };
  PrincipalFactor principal_factor(FiniteSemigroup const& S, GreenStructure const& G, index_type j);

  bool is_j_linear(FiniteSemigroup const& S);

  struct EggBoxCell {
    index_type  h_class = 0;
    std::size_t size    = 0;
    bool        group   = false;
  };

  // One D-class: rows are R-classes, columns L-classes.
  struct EggBox {
    index_type                           d_class = 0;
    std::vector<index_type>              rows, cols;
    std::vector<std::vector<EggBoxCell>> cells;
    std::size_t                          size() const;
  };

  // D-classes from the bottom of the J-order upwards.
  std::vector<EggBox> eggbox(GreenStructure const& G);
  std::string         render_eggbox(std::vector<EggBox> const& boxes);

}  // namespace hsg

#endif  // HSG_GREEN_HPP_
