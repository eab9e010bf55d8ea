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

#include "hsg/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hsg {

  ////////////////////////////////////////////////////////////////////////
  // Flower Lemma
  ////////////////////////////////////////////////////////////////////////

  void validate(FlowerInstance const& inst) {
    detail::require(inst.t >= 2, "flower instance needs t >= 2");
    detail::require(!inst.A.empty() && !inst.B.empty(), "flower instance needs k, l >= 1");
    std::set<PointSet> seen;
    for (auto const* fam : {&inst.A, &inst.B}) {
      for (auto const& s : *fam) {
        detail::require(s.size() == inst.t, "every flower set must have exactly t elements");
        detail::require(std::is_sorted(s.begin(), s.end())
                            && std::adjacent_find(s.begin(), s.end()) == s.end(),
                        "flower sets must be sorted without repeats");
        detail::require(s.back() < inst.m, "flower set point out of range");
        detail::require(seen.insert(s).second, "flower sets must be distinct");
      }
    }
  }

  FlowerDecomposition decompose(FlowerInstance const& inst) {
    validate(inst);
    std::vector<std::size_t> count(inst.m, 0);
    for (auto const* fam : {&inst.A, &inst.B}) {
      for (auto const& s : *fam) {
        for (Point p : s) {
          ++count[p];
        }
      }
    }
    FlowerDecomposition out;
    for (Point p = 0; p < inst.m; ++p) {
      if (count[p] > 0) {
        out.Y.push_back(p);
      }
      if (count[p] > 1) {
        out.head.push_back(p);
      }
    }
    auto petal = [&](PointSet const& s) {
      PointSet p;
      std::copy_if(s.begin(), s.end(), std::back_inserter(p), [&](Point x) { return count[x] == 1; });
      return p;
    };
    std::transform(inst.A.begin(), inst.A.end(), std::back_inserter(out.A_petals), petal);
    std::transform(inst.B.begin(), inst.B.end(), std::back_inserter(out.B_petals), petal);
    return out;
  }

  Partition flower(FlowerInstance const& inst) {
    auto const dec = decompose(inst);
    if (dec.head.size() >= inst.t) {
      throw FlowerHypothesisError("flower hypothesis violated: head has " + std::to_string(dec.head.size())
                                  + " points but t = " + std::to_string(inst.t));
    }
    constexpr std::size_t    kUnplaced = static_cast<std::size_t>(-1);
    std::vector<std::size_t> part(inst.m, kUnplaced);

    // (i)
    for (std::size_t k = 0; k < dec.head.size(); ++k) {
      part[dec.head[k]] = k;
    }
    // (ii)
    for (std::size_t i = 0; i < inst.A.size(); ++i) {
      std::vector<bool> taken(inst.t, false);
      for (Point p : inst.A[i]) {
        if (part[p] != kUnplaced) {
          taken[part[p]] = true;
        }
      }
      std::size_t next = 0;
      for (Point p : dec.A_petals[i]) {
        while (taken[next]) {
          ++next;
        }
        part[p]     = next;
        taken[next] = true;
      }
    }
    // (iii)
    for (std::size_t j = 0; j < inst.B.size(); ++j) {
      std::size_t target = 0;
      if (dec.B_petals[j].size() != inst.B[j].size()) {
        for (Point p : inst.B[j]) {
          if (!std::binary_search(dec.B_petals[j].begin(), dec.B_petals[j].end(), p)) {
            target = part[p];
            break;
          }
        }
      }
      for (Point p : dec.B_petals[j]) {
        part[p] = target;
      }
    }
    // (iv)
    for (auto& x : part) {
      if (x == kUnplaced) {
        x = 0;
      }
    }
    Partition P(part);
    if (P.num_blocks() != inst.t || !satisfies_pattern(P, inst)) {
      throw VerificationFailure("flower construction failed its own check");
    }
    return P;
  }

  bool satisfies_pattern(Partition const& P, FlowerInstance const& inst) {
    return std::all_of(inst.A.begin(), inst.A.end(), [&](PointSet const& a) { return is_transversal(a, P); })
           && std::none_of(inst.B.begin(), inst.B.end(), [&](PointSet const& b) { return is_transversal(b, P); });
  }

  ////////////////////////////////////////////////////////////////////////
  // Graham-Houghton graphs
  ////////////////////////////////////////////////////////////////////////

  BipartiteGraph BipartiteGraph::swapped() const {
    BipartiteGraph out;
    out.left  = right;
    out.right = left;
    for (auto const& [l, r] : edges) {
      out.edges.emplace_back(r, l);
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
  }

  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> BipartiteGraph::component_shapes() const {
    std::size_t const        L = left.size(), N = left.size() + right.size();
    std::vector<std::size_t> parent(N);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    for (auto const& [l, r] : edges) {
      parent[find(l)] = find(L + r);
    }
    std::map<std::size_t, std::tuple<std::size_t, std::size_t, std::size_t>> comp;
    for (std::size_t v = 0; v < N; ++v) {
      auto& c = comp[find(v)];
      (v < L ? std::get<0>(c) : std::get<1>(c))++;
    }
    for (auto const& [l, r] : edges) {
      std::get<2>(comp[find(l)])++;
    }
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
    for (auto const& [root, c] : comp) {
      out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  namespace {
    std::string dot_escape(std::string const& s) {
      std::string out;
      for (char ch : s) {
        if (ch == '"' || ch == '\\') {
          out.push_back('\\');
        }
        out.push_back(ch);
      }
      return out;
    }
  }  // namespace

  std::string BipartiteGraph::to_dot(std::string const& name) const {
    std::ostringstream os;
    os << "graph \"" << dot_escape(name) << "\" {\n";
    os << "  node [shape=box];\n";
    for (std::size_t i = 0; i < left.size(); ++i) {
      os << "  l" << i << " [label=\"" << dot_escape(left[i]) << "\"];\n";
    }
    os << "  node [shape=ellipse];\n";
    for (std::size_t i = 0; i < right.size(); ++i) {
      os << "  r" << i << " [label=\"" << dot_escape(right[i]) << "\"];\n";
    }
    for (auto const& [l, r] : edges) {
      os << "  l" << l << " -- r" << r << ";\n";
    }
    os << "}\n";
    return os.str();
  }

  BipartiteGraph graham_houghton(GreenStructure const& G, index_type d_class) {
    detail::require(d_class < G.num_d, "D-class id out of range");
    auto const     rows = G.r_classes_in_d(d_class);
    auto const     cols = G.l_classes_in_d(d_class);
    BipartiteGraph out;
    for (auto r : rows) {
      out.left.push_back(G.r_keys[r]);
    }
    for (auto l : cols) {
      out.right.push_back(G.l_keys[l]);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        auto const h = G.h_at(rows[i], cols[j]);
        if (h && G.group_h[*h]) {
          out.edges.emplace_back(i, j);
        }
      }
    }
    return out;
  }

  bool graphs_isomorphic(BipartiteGraph const& a, BipartiteGraph const& b) {
    if (a.left.size() != b.left.size() || a.right.size() != b.right.size() || a.edges.size() != b.edges.size()) {
      return false;
    }
    detail::require_cap(a.left.size() <= 8, "graph isomorphism limited to 8 vertices per side");
    auto neighbourhoods = [](BipartiteGraph const& g, std::vector<std::size_t> const& relabel) {
      std::vector<std::vector<std::size_t>> nb(g.right.size());
      for (auto const& [l, r] : g.edges) {
        nb[r].push_back(relabel[l]);
      }
      for (auto& v : nb) {
        std::sort(v.begin(), v.end());
      }
      std::sort(nb.begin(), nb.end());
      return nb;
    };
    std::vector<std::size_t> id(a.left.size());
    std::iota(id.begin(), id.end(), 0);
    auto const target = neighbourhoods(b, id);
    auto       perm   = id;
    do {
      if (neighbourhoods(a, perm) == target) {
        return true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // Property (◇)
  ////////////////////////////////////////////////////////////////////////

  bool h_class_is_group_by_square(Partition const& P, PointSet const& A) {
    detail::require(A.size() == P.num_blocks(), "image size must equal the number of parts");
    Transformation const h = Transformation::from_kernel(P, A);
    return (h * h).rank() == A.size();
  }

  bool WitnessChecks::all() const {
    return c_D_a1 && c_D_b1 && square_agrees && psi_ok
           && std::all_of(a_groups.begin(), a_groups.end(), [](bool x) { return x; })
           && std::none_of(b_groups.begin(), b_groups.end(), [](bool x) { return x; });
  }

  DilationBundle make_dilation_bundle(std::size_t n, std::size_t r, std::uint64_t seed) {
    DilationBundle b{build_dilation(n, r), {}};
    b.psi_report = b.ctx.psi_morphism(seed).verify(n <= 4);
    return b;
  }

  Transformation canonical_representative(std::size_t n, PointSet const& A) {
    detail::require(!A.empty() && A.size() <= n && A.back() < n, "image set out of range");
    return Transformation::from_kernel(canonical_idempotent(n, A.size()).kernel(), A);
  }

  DiamondWitness diamond_witness(std::size_t                  n,
                                 std::size_t                  r,
                                 std::vector<PointSet> const& omega,
                                 std::vector<PointSet> const& sigma,
                                 WitnessRoute                 route,
                                 std::uint64_t                seed) {
    detail::require(n >= 3 && 1 < r && r < n, "need n >= 3 and 1 < r < n");
    detail::require(!omega.empty() && !sigma.empty(), "Omega and Sigma must be nonempty");
    std::set<PointSet> seen;
    for (auto const* fam : {&omega, &sigma}) {
      for (auto const& s : *fam) {
        detail::require(s.size() == r, "every image set must have r elements");
        detail::require(seen.insert(s).second, "Omega and Sigma must be disjoint families of distinct sets");
      }
    }
    std::vector<Transformation> a, b;
    for (auto const& s : omega) {
      a.push_back(canonical_representative(n, s));
    }
    for (auto const& s : sigma) {
      b.push_back(canonical_representative(n, s));
    }
    return diamond_witness_from(a, b, route, nullptr, seed);
  }

  namespace {
    Transformation witness_map(Partition const& P, PointSet const& target) {
      std::vector<Point> per_block(P.num_blocks());
      for (Point p : target) {
        per_block[P.block_of(p)] = p;
      }
      return Transformation::from_kernel(P, per_block);
    }
  }  // namespace

  DiamondWitness diamond_witness_from(std::vector<Transformation> const& a,
                                      std::vector<Transformation> const& b,
                                      WitnessRoute                       route,
                                      DilationBundle const*              bundle,
                                      std::uint64_t                      seed) {
    detail::require(!a.empty() && !b.empty(), "need k, l >= 1 representatives");
    DiamondWitness w;
    w.n = a.front().degree();
    w.r = a.front().rank();
    w.a = a;
    w.b = b;
    detail::require(w.n >= 3 && 1 < w.r && w.r < w.n, "need n >= 3 and 1 < r < n");
    std::set<PointSet> images;
    for (auto const* fam : {&a, &b}) {
      for (auto const& x : *fam) {
        detail::require(x.degree() == w.n && x.rank() == w.r, "representatives must lie in one D-class");
        detail::require(images.insert(x.image_set()).second, "representatives must lie in distinct L-classes");
      }
    }

    FlowerInstance direct{w.n, w.r, {}, {}};
    for (auto const& x : a) {
      direct.A.push_back(x.image_set());
    }
    for (auto const& x : b) {
      direct.B.push_back(x.image_set());
    }
    std::size_t const direct_head = decompose(direct).head.size();

    FlowerInstance inst;
    bool use_direct = route == WitnessRoute::Direct || (route == WitnessRoute::Auto && direct_head < w.r);
    if (use_direct) {
      w.route = "direct";
      inst    = direct;
    } else {
      w.route = "dilation";
      std::optional<DilationBundle> own;
      if (bundle == nullptr) {
        own.emplace(make_dilation_bundle(w.n, w.r, seed));
        bundle = &*own;
      }
      detail::require(bundle->ctx.n() == w.n && bundle->ctx.r() == w.r, "dilation bundle has the wrong parameters");
      w.y                 = bundle->ctx.y();
      w.z_size            = bundle->ctx.z_size();
      w.checks.psi_report = bundle->psi_report;
      w.checks.psi_ok     = bundle->psi_report.ok();
      inst.m              = bundle->ctx.target_degree();
      for (auto const& x : a) {
        inst.A.push_back(bundle->ctx.psi(x).image_set());
      }
      for (auto const& x : b) {
        inst.B.push_back(bundle->ctx.psi(x).image_set());
      }
      inst.t = inst.A.front().size();
    }
    w.m         = inst.m;
    w.t         = inst.t;
    w.A_sets    = inst.A;
    w.B_sets    = inst.B;
    w.head_size = decompose(inst).head.size();
    w.kernel    = flower(inst);
    w.c         = witness_map(w.kernel, inst.A.front());

    w.checks.c_D_a1        = w.c.rank() == inst.A.front().size();
    w.checks.c_D_b1        = w.c.rank() == inst.B.front().size();
    w.checks.square_agrees = true;
    for (auto const* fam : {&inst.A, &inst.B}) {
      auto& flags = fam == &inst.A ? w.checks.a_groups : w.checks.b_groups;
      for (auto const& s : *fam) {
        bool const g = is_transversal(s, w.kernel);
        flags.push_back(g);
        if (g != h_class_is_group_by_square(w.kernel, s)) {
          w.checks.square_agrees = false;
        }
      }
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // The dual problem
  ////////////////////////////////////////////////////////////////////////

  DualSearchResult dual_transversal_search(std::vector<Partition> const& P,
                                           std::vector<Partition> const& Q,
                                           std::size_t                   max_subsets) {
    detail::require(!P.empty(), "need at least one partition P_i");
    std::size_t const m = P.front().ground_size(), t = P.front().num_blocks();
    std::set<Partition> seen;
    for (auto const* fam : {&P, &Q}) {
      for (auto const& p : *fam) {
        detail::require(p.ground_size() == m && p.num_blocks() == t, "partitions must share m and t");
        detail::require(seen.insert(p).second, "partitions must be distinct");
      }
    }
    // C(m, t) with an early exit past the cap.
    std::size_t total = 1;
    for (std::size_t i = 1; i <= t; ++i) {
      total = total * (m - t + i) / i;
      detail::require_cap(total <= max_subsets, "too many t-subsets for exhaustive search");
    }
    DualSearchResult out;
    std::vector<Point> A(t);
    std::iota(A.begin(), A.end(), 0);
    while (true) {
      ++out.examined;
      bool ok = std::all_of(P.begin(), P.end(), [&](Partition const& p) { return is_transversal(A, p); })
                && std::none_of(Q.begin(), Q.end(), [&](Partition const& q) { return is_transversal(A, q); });
      if (ok) {
        out.A = A;
        return out;
      }
      std::size_t i = t;
      while (i > 0 && A[i - 1] == m - t + i - 1) {
        --i;
      }
      if (i == 0) {
        return out;
      }
      ++A[i - 1];
      for (std::size_t j = i; j < t; ++j) {
        A[j] = A[j - 1] + 1;
      }
    }
  }

}  // namespace hsg
