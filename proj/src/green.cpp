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

#include "hsg/green.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

namespace hsg {

  namespace {
    using Bits = boost::dynamic_bitset<std::uint64_t>;

    // Dense ids for keys, numbered by first occurrence.
    template <typename Key>
    std::size_t number_by_key(std::vector<Key> const& keys, std::vector<index_type>& ids) {
      std::map<Key, index_type> seen;
      ids.resize(keys.size());
      for (std::size_t i = 0; i < keys.size(); ++i) {
        auto [it, fresh] = seen.emplace(keys[i], static_cast<index_type>(seen.size()));
        ids[i]           = it->second;
      }
      return seen.size();
    }

    struct UnionFind {
      std::vector<std::size_t> parent;
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          x = parent[x] = parent[parent[x]];
        }
        return x;
      }
      void unite(std::size_t a, std::size_t b) {
        parent[find(a)] = find(b);
      }
    };

    void finish(GreenStructure& G) {
      std::vector<std::pair<index_type, index_type>> rl(G.size);
      for (std::size_t x = 0; x < G.size; ++x) {
        rl[x] = {G.r_class[x], G.l_class[x]};
      }
      G.num_h = number_by_key(rl, G.h_class);

      UnionFind uf(G.num_r + G.num_l);
      for (std::size_t x = 0; x < G.size; ++x) {
        uf.unite(G.r_class[x], G.num_r + G.l_class[x]);
      }
      std::vector<std::size_t> droot(G.size);
      for (std::size_t x = 0; x < G.size; ++x) {
        droot[x] = uf.find(G.r_class[x]);
      }
      G.num_d = number_by_key(droot, G.d_class);

      G.group_h.assign(G.num_h, false);
      for (std::size_t x = 0; x < G.size; ++x) {
        if (G.idempotent[x]) {
          G.group_h[G.h_class[x]] = true;
        }
      }
    }

    template <typename Ids>
    std::vector<std::vector<index_type>> members_of(Ids const& ids, std::size_t count) {
      std::vector<std::vector<index_type>> out(count);
      for (std::size_t x = 0; x < ids.size(); ++x) {
        out[ids[x]].push_back(static_cast<index_type>(x));
      }
      return out;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // GreenStructure
  ////////////////////////////////////////////////////////////////////////

  bool GreenStructure::is_j_linear() const {
    for (std::size_t a = 0; a < num_j; ++a) {
      for (std::size_t b = 0; b < num_j; ++b) {
        if (!j_leq[a][b] && !j_leq[b][a]) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::vector<index_type>> GreenStructure::r_members() const {
    return members_of(r_class, num_r);
  }
  std::vector<std::vector<index_type>> GreenStructure::l_members() const {
    return members_of(l_class, num_l);
  }
  std::vector<std::vector<index_type>> GreenStructure::h_members() const {
    return members_of(h_class, num_h);
  }
  std::vector<std::vector<index_type>> GreenStructure::j_members() const {
    return members_of(j_class, num_j);
  }
  std::vector<std::vector<index_type>> GreenStructure::d_members() const {
    return members_of(d_class, num_d);
  }

  std::vector<index_type> GreenStructure::r_classes_in_d(index_type d) const {
    std::vector<index_type> out;
    for (std::size_t x = 0; x < size; ++x) {
      if (d_class[x] == d) {
        out.push_back(r_class[x]);
      }
    }
    return make_point_set(out);
  }

  std::vector<index_type> GreenStructure::l_classes_in_d(index_type d) const {
    std::vector<index_type> out;
    for (std::size_t x = 0; x < size; ++x) {
      if (d_class[x] == d) {
        out.push_back(l_class[x]);
      }
    }
    return make_point_set(out);
  }

  std::optional<index_type> GreenStructure::h_at(index_type r, index_type l) const {
    for (std::size_t x = 0; x < size; ++x) {
      if (r_class[x] == r && l_class[x] == l) {
        return h_class[x];
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Generic route
  ////////////////////////////////////////////////////////////////////////

  GreenStructure green_generic(FiniteSemigroup const& S) {
    std::size_t const N = S.size();
    GreenStructure    G;
    G.size = N;

    std::vector<Bits> right(N, Bits(N)), left(N, Bits(N));
    for (index_type a = 0; a < N; ++a) {
      right[a].set(a);
      left[a].set(a);
      for (index_type s = 0; s < N; ++s) {
        right[a].set(S.product(a, s));
        left[a].set(S.product(s, a));
      }
    }
    // S^1 a S^1 is the union of xS^1 over x in S^1 a.
    std::vector<Bits> two_sided(N, Bits(N));
    for (index_type a = 0; a < N; ++a) {
      for (auto x = left[a].find_first(); x != Bits::npos; x = left[a].find_next(x)) {
        two_sided[a] |= right[x];
      }
    }

    G.num_r = number_by_key(right, G.r_class);
    G.num_l = number_by_key(left, G.l_class);
    G.num_j = number_by_key(two_sided, G.j_class);

    std::vector<index_type> jrep(G.num_j);
    for (index_type a = N; a-- > 0;) {
      jrep[G.j_class[a]] = a;
    }
    G.j_leq.assign(G.num_j, std::vector<bool>(G.num_j, false));
    for (std::size_t i = 0; i < G.num_j; ++i) {
      for (std::size_t k = 0; k < G.num_j; ++k) {
        G.j_leq[i][k] = two_sided[jrep[k]].test(jrep[i]);
      }
    }

    G.idempotent.resize(N);
    for (index_type a = 0; a < N; ++a) {
      G.idempotent[a] = S.is_idempotent(a);
    }
    for (std::size_t r = 0; r < G.num_r; ++r) {
      G.r_keys.push_back("R" + std::to_string(r));
    }
    for (std::size_t l = 0; l < G.num_l; ++l) {
      G.l_keys.push_back("L" + std::to_string(l));
    }
    finish(G);
    return G;
  }

  ////////////////////////////////////////////////////////////////////////
  // Fast paths
  ////////////////////////////////////////////////////////////////////////

  namespace {
    template <typename Elem, typename RKey, typename LKey, typename Rank>
    GreenStructure fast_green(std::vector<Elem> const& elts, RKey rkey, LKey lkey, Rank rank, std::size_t num_ranks) {
      GreenStructure G;
      G.size = elts.size();
      std::vector<std::string> rk, lk;
      G.j_class.resize(G.size);
      G.idempotent.resize(G.size);
      for (std::size_t x = 0; x < G.size; ++x) {
        rk.push_back(rkey(elts[x]));
        lk.push_back(lkey(elts[x]));
        G.j_class[x]    = static_cast<index_type>(rank(elts[x]));
        G.idempotent[x] = elts[x].is_idempotent();
      }
      G.num_r = number_by_key(rk, G.r_class);
      G.num_l = number_by_key(lk, G.l_class);
      G.r_keys.resize(G.num_r);
      G.l_keys.resize(G.num_l);
      for (std::size_t x = 0; x < G.size; ++x) {
        G.r_keys[G.r_class[x]] = rk[x];
        G.l_keys[G.l_class[x]] = lk[x];
      }
      G.num_j = num_ranks;
      G.j_leq.assign(num_ranks, std::vector<bool>(num_ranks, false));
      for (std::size_t i = 0; i < num_ranks; ++i) {
        for (std::size_t k = i; k < num_ranks; ++k) {
          G.j_leq[i][k] = true;
        }
      }
      finish(G);
      return G;
    }
  }  // namespace

  ConcreteGreen<Transformation> green_fast_T(std::size_t n) {
    detail::require(n >= 1, "degree must be positive");
    detail::require_cap(n <= kFastPathCap, "T_n fast path limited to n <= 5");
    ConcreteGreen<Transformation> out;
    out.elements = all_transformations(n);
    out.green    = fast_green(
        out.elements,
        [](Transformation const& f) { return f.kernel().to_string(); },
        [](Transformation const& f) { return point_set_string(f.image_set()); },
        [](Transformation const& f) { return f.rank() - 1; },
        n);
    return out;
  }

  ConcreteGreen<PartialBijection> green_fast_I(std::size_t n) {
    detail::require(n >= 1, "degree must be positive");
    detail::require_cap(n <= kFastPathCap, "I_n fast path limited to n <= 5");
    ConcreteGreen<PartialBijection> out;
    out.elements = all_partial_bijections(n);
    out.green    = fast_green(
        out.elements,
        [](PartialBijection const& f) { return "dom {" + point_set_string(f.domain()) + "}"; },
        [](PartialBijection const& f) { return "im {" + point_set_string(f.image_set()) + "}"; },
        [](PartialBijection const& f) { return f.rank(); },
        n + 1);
    return out;
  }

  bool same_classes(std::vector<index_type> const& a, std::vector<index_type> const& b) {
    if (a.size() != b.size()) {
      return false;
    }
    std::map<index_type, index_type> fwd, bwd;
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto [f, fnew] = fwd.emplace(a[i], b[i]);
      auto [g, gnew] = bwd.emplace(b[i], a[i]);
      if (f->second != b[i] || g->second != a[i]) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroups, principal factors, J-linearity
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup maximal_subgroup(FiniteSemigroup const& S, GreenStructure const& G, index_type h) {
    detail::require(h < G.num_h, "H-class id out of range");
    detail::require(G.group_h[h], "H-class is not a group");
    auto const      members = G.h_members()[h];
    FiniteSemigroup H       = restrict_to(S, members);
    if (!H.is_group()) {
      throw VerificationFailure("group H-class failed the group axioms");
    }
    return H;
  }

  PrincipalFactor principal_factor(FiniteSemigroup const& S, GreenStructure const& G, index_type j) {
    detail::require(j < G.num_j, "J-class id out of range");
    PrincipalFactor out;
    out.j_class  = j;
    out.elements = G.j_members()[j];
    std::size_t const       k = out.elements.size();
    std::vector<index_type> pos(S.size(), static_cast<index_type>(k));
    for (std::size_t i = 0; i < k; ++i) {
      pos[out.elements[i]] = static_cast<index_type>(i);
    }
    out.zero = static_cast<index_type>(k);
    std::vector<index_type> table((k + 1) * (k + 1), out.zero);
    out.is_null = true;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        index_type const p = pos[S.product(out.elements[a], out.elements[b])];
        table[a * (k + 1) + b] = p;
        if (p != out.zero) {
          out.is_null = false;
        }
      }
    }
    out.semigroup = FiniteSemigroup(k + 1, std::move(table));
    return out;
  }

  bool is_j_linear(FiniteSemigroup const& S) {
    return green_generic(S).is_j_linear();
  }

  ////////////////////////////////////////////////////////////////////////
  // Egg-box
  ////////////////////////////////////////////////////////////////////////

  std::size_t EggBox::size() const {
    std::size_t total = 0;
    for (auto const& row : cells) {
      for (auto const& c : row) {
        total += c.size;
      }
    }
    return total;
  }

  std::vector<EggBox> eggbox(GreenStructure const& G) {
    std::vector<index_type> d_to_j(G.num_d);
    for (std::size_t x = 0; x < G.size; ++x) {
      d_to_j[G.d_class[x]] = G.j_class[x];
    }
    std::vector<std::size_t> below(G.num_d, 0);
    for (std::size_t d = 0; d < G.num_d; ++d) {
      for (std::size_t j = 0; j < G.num_j; ++j) {
        below[d] += G.j_leq[j][d_to_j[d]] ? 1 : 0;
      }
    }
    std::vector<index_type> order(G.num_d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](index_type a, index_type b) { return below[a] < below[b]; });

    std::vector<std::size_t> hsize(G.num_h, 0);
    for (std::size_t x = 0; x < G.size; ++x) {
      ++hsize[G.h_class[x]];
    }
    // (r, l) -> h
    std::map<std::pair<index_type, index_type>, index_type> grid;
    for (std::size_t x = 0; x < G.size; ++x) {
      grid.emplace(std::make_pair(G.r_class[x], G.l_class[x]), G.h_class[x]);
    }

    std::vector<EggBox> out;
    for (auto d : order) {
      EggBox box;
      box.d_class = d;
      box.rows    = G.r_classes_in_d(d);
      box.cols    = G.l_classes_in_d(d);
      for (auto r : box.rows) {
        std::vector<EggBoxCell> row;
        for (auto l : box.cols) {
          auto it = grid.find({r, l});
          detail::require(it != grid.end(), "R- and L-class in one D-class must meet");
          row.push_back({it->second, hsize[it->second], static_cast<bool>(G.group_h[it->second])});
        }
        box.cells.push_back(std::move(row));
      }
      out.push_back(std::move(box));
    }
    return out;
  }

  std::string render_eggbox(std::vector<EggBox> const& boxes) {
    std::ostringstream os;
    for (auto const& box : boxes) {
      os << "D-class " << box.d_class << ": " << box.rows.size() << " x " << box.cols.size() << ", " << box.size()
         << " elements\n";
      std::size_t width = 1;
      for (auto const& row : box.cells) {
        for (auto const& c : row) {
          width = std::max(width, std::to_string(c.size).size() + (c.group ? 1 : 0));
        }
      }
      std::string const rule = [&] {
        std::string s = "+";
        for (std::size_t i = 0; i < box.cols.size(); ++i) {
          s += std::string(width + 2, '-') + "+";
        }
        return s;
      }();
      os << rule << '\n';
      for (auto const& row : box.cells) {
        os << '|';
        for (auto const& c : row) {
          std::string cell = (c.group ? "*" : "") + std::to_string(c.size);
          os << ' ' << std::string(width - cell.size(), ' ') << cell << " |";
        }
        os << '\n' << rule << '\n';
      }
    }
    os << "(* marks a group H-class)\n";
    return os.str();
  }

}  // namespace hsg
