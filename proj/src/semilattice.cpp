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

#include "hsg/semilattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hsg {

  ////////////////////////////////////////////////////////////////////////
  // Poset
  ////////////////////////////////////////////////////////////////////////

  Poset::Poset(std::vector<std::vector<bool>> leq, std::vector<std::string> labels)
      : _leq(std::move(leq)), _labels(std::move(labels)) {
    std::size_t const n = _leq.size();
    detail::require(_labels.size() == n, "one label per poset element required");
    for (auto const& row : _leq) {
      detail::require(row.size() == n, "order relation must be square");
    }
    for (std::size_t a = 0; a < n; ++a) {
      detail::require(_leq[a][a], "order relation is not reflexive");
      for (std::size_t b = 0; b < n; ++b) {
        detail::require(a == b || !(_leq[a][b] && _leq[b][a]), "order relation is not antisymmetric");
        for (std::size_t c = 0; c < n; ++c) {
          detail::require(!(_leq[a][b] && _leq[b][c]) || _leq[a][c], "order relation is not transitive");
        }
      }
    }
  }

  std::optional<std::size_t> Poset::meet(std::size_t a, std::size_t b) const {
    std::optional<std::size_t> best;
    for (std::size_t c = 0; c < size(); ++c) {
      if (_leq[c][a] && _leq[c][b] && (!best || _leq[*best][c])) {
        best = c;
      }
    }
    if (!best) {
      return std::nullopt;
    }
    for (std::size_t c = 0; c < size(); ++c) {
      if (_leq[c][a] && _leq[c][b] && !_leq[c][*best]) {
        return std::nullopt;
      }
    }
    return best;
  }

  bool Poset::is_meet_semilattice() const {
    for (std::size_t a = 0; a < size(); ++a) {
      for (std::size_t b = a + 1; b < size(); ++b) {
        if (!meet(a, b)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::pair<std::size_t, std::size_t>> Poset::hasse_edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a) {
      for (std::size_t b = 0; b < size(); ++b) {
        if (a == b || !_leq[a][b]) {
          continue;
        }
        bool cover = true;
        for (std::size_t c = 0; c < size() && cover; ++c) {
          cover = c == a || c == b || !(_leq[a][c] && _leq[c][b]);
        }
        if (cover) {
          out.emplace_back(a, b);
        }
      }
    }
    return out;
  }

  std::string Poset::to_dot(std::string const& name) const {
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (std::size_t a = 0; a < size(); ++a) {
      os << "  n" << a << " [label=\"" << _labels[a] << "\"];\n";
    }
    for (auto const& [lo, hi] : hasse_edges()) {
      os << "  n" << lo << " -> n" << hi << " [arrowhead=none];\n";
    }
    os << "}\n";
    return os.str();
  }

  IdempotentSemilattice idempotent_semilattice(FiniteSemigroup const& S) {
    detail::require(S.is_inverse(), "idempotent semilattice needs an inverse semigroup");
    IdempotentSemilattice out;
    out.elements        = S.idempotents();
    std::size_t const k = out.elements.size();
    std::vector<std::vector<bool>> leq(k, std::vector<bool>(k));
    std::vector<std::string>       labels;
    for (std::size_t a = 0; a < k; ++a) {
      labels.push_back(std::to_string(out.elements[a]));
      for (std::size_t b = 0; b < k; ++b) {
        index_type const e = out.elements[a], f = out.elements[b];
        leq[a][b]          = S.product(e, f) == e && S.product(f, e) == e;
      }
    }
    out.poset           = Poset(std::move(leq), std::move(labels));
    out.meet_is_product = true;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        auto const m = out.poset.meet(a, b);
        if (!m || out.elements[*m] != S.product(out.elements[a], out.elements[b])) {
          out.meet_is_product = false;
        }
      }
    }
    return out;
  }

  namespace {
    bool star_lhs(Poset const& P, std::size_t a, std::size_t g, std::size_t d, std::size_t e) {
      if (!(P.leq(d, a) && P.leq(e, a) && !P.leq(g, d) && !P.leq(g, e) && !P.leq(a, g))) {
        return false;
      }
      if (d == e) {
        return true;
      }
      if (!P.incomparable(d, e)) {
        return false;
      }
      auto const ge = P.meet(g, e), gd = P.meet(g, d);
      return ge && gd && P.leq(*ge, *gd);
    }

    bool star_rhs(Poset const& P, std::size_t a, std::size_t g, std::size_t d, std::size_t e, std::size_t b) {
      if (!(P.leq(d, b) && P.leq(e, b) && P.leq(b, a))) {
        return false;
      }
      auto const bg = P.meet(b, g), dg = P.meet(d, g);
      return bg && dg && *bg == *dg;
    }
  }  // namespace

  StarInstanceReport star_instance(Poset const& P,
                                   std::size_t  alpha,
                                   std::size_t  gamma,
                                   std::size_t  delta,
                                   std::size_t  epsilon,
                                   std::size_t  beta) {
    return {star_lhs(P, alpha, gamma, delta, epsilon), star_rhs(P, alpha, gamma, delta, epsilon, beta)};
  }

  OmegaReport omega_axiom_check(Poset const& P, bool finite_stage) {
    std::size_t const n = P.size();
    detail::require_cap(n <= 32, "axiom check limited to 32 elements");
    OmegaReport out;
    if (finite_stage) {
      out.no_max_checked = false;
    } else {
      bool has_extreme = false;
      for (std::size_t a = 0; a < n && !has_extreme; ++a) {
        bool maximal = true, minimal = true;
        for (std::size_t b = 0; b < n; ++b) {
          if (b != a && P.leq(a, b)) {
            maximal = false;
          }
          if (b != a && P.leq(b, a)) {
            minimal = false;
          }
        }
        has_extreme = maximal || minimal;
      }
      out.no_max_or_min = !has_extreme && n > 0;
    }
    out.upper_bounds = true;
    for (std::size_t a = 0; a < n && out.upper_bounds; ++a) {
      for (std::size_t b = 0; b < n && out.upper_bounds; ++b) {
        bool found = false;
        for (std::size_t c = 0; c < n && !found; ++c) {
          found = P.leq(a, c) && P.leq(b, c);
        }
        out.upper_bounds = found;
      }
    }
    out.star = true;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t d = 0; d < n; ++d) {
          for (std::size_t e = 0; e < n; ++e) {
            if (!star_lhs(P, a, g, d, e)) {
              continue;
            }
            ++out.star_instances;
            out.star_vacuous = false;
            bool found       = false;
            for (std::size_t b = 0; b < n && !found; ++b) {
              found = star_rhs(P, a, g, d, e, b);
            }
            if (!found && out.star) {
              out.star                = false;
              out.star_counterexample = std::vector<std::size_t>{a, g, d, e};
            }
          }
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Hat construction
  ////////////////////////////////////////////////////////////////////////

  IdealSet hat(std::size_t n, PointSet const& X) {
    detail::require(std::all_of(X.begin(), X.end(), [n](Point p) { return p < n; }), "X must be a subset of [n]");
    detail::require_cap(n <= 6, "hat limited to n <= 6");
    IdealSet   out{n, make_point_set(X), {}};
    auto const all = all_partial_bijections(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      auto const im = all[i].image_set();
      if (std::includes(out.X.begin(), out.X.end(), im.begin(), im.end())) {
        out.elements.push_back(static_cast<index_type>(i));
      }
    }
    return out;
  }

  std::size_t hat_size_formula(std::size_t n, std::size_t x) {
    std::size_t total = 0;
    for (std::size_t k = 0; k <= x && k <= n; ++k) {
      std::size_t binom = 1, falling = 1;
      for (std::size_t i = 0; i < k; ++i) {
        binom   = binom * (n - i) / (i + 1);
        falling *= x - i;
      }
      total += binom * falling;
    }
    return total;
  }

  namespace {
    bool subset(PointSet const& a, PointSet const& b) {
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }
    PointSet intersect(PointSet const& a, PointSet const& b) {
      PointSet out;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
      return out;
    }
    std::vector<index_type> unite(std::vector<index_type> const& a, std::vector<index_type> const& b) {
      std::vector<index_type> out;
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
      return out;
    }
  }  // namespace

  void check_star_precondition(PointSet const& A, PointSet const& C, PointSet const& D, PointSet const& E) {
    PointSet DE;
    std::set_union(D.begin(), D.end(), E.begin(), E.end(), std::back_inserter(DE));
    if (!subset(DE, A)) {
      throw StarPreconditionError("D ∪ E ⊆ A");
    }
    if (subset(C, D)) {
      throw StarPreconditionError("C ⊄ D");
    }
    if (subset(C, E)) {
      throw StarPreconditionError("C ⊄ E");
    }
    if (subset(A, C)) {
      throw StarPreconditionError("A ⊄ C");
    }
    if (D != E) {
      bool const incomparable = !subset(D, E) && !subset(E, D);
      if (!incomparable || !subset(intersect(C, E), intersect(E, D))) {
        throw StarPreconditionError("D = E, or D ∥ E and C ∩ E ⊆ E ∩ D");
      }
    }
  }

  StarWitness star_witness(std::size_t n, PointSet const& A, PointSet const& C, PointSet const& D, PointSet const& E) {
    auto const a = make_point_set(A), c = make_point_set(C), d = make_point_set(D), e = make_point_set(E);
    check_star_precondition(a, c, d, e);
    StarWitness w{hat(n, a), hat(n, c), hat(n, d), hat(n, e), {}};
    w.B           = unite(w.D_hat.elements, w.E_hat.elements);
    w.D_in_B      = subset(w.D_hat.elements, w.B);
    w.E_in_B      = subset(w.E_hat.elements, w.B);
    w.B_in_A      = subset(w.B, w.A_hat.elements);
    w.meet_with_C = intersect(w.B, w.C_hat.elements) == intersect(w.D_hat.elements, w.C_hat.elements);
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Idempotents below idempotents
  ////////////////////////////////////////////////////////////////////////

  BelowWitness idempotent_below_inverse(FiniteSemigroup const& S,
                                        GreenStructure const&  G,
                                        index_type             f,
                                        index_type             j_class) {
    detail::require(S.is_inverse(), "needs an inverse semigroup");
    detail::require(f < S.size() && S.is_idempotent(f), "f must be an idempotent");
    detail::require(j_class < G.num_j, "J-class id out of range");
    detail::require(G.j_leq[j_class][G.j_class[f]], "J must lie below the J-class of f");

    BelowWitness out;
    bool         have_g = false;
    for (index_type x = 0; x < S.size() && !have_g; ++x) {
      if (G.j_class[x] == j_class && S.is_idempotent(x)) {
        out.g  = x;
        have_g = true;
      }
    }
    detail::require(have_g, "J-class has no idempotent");

    // S^1 in the order: identity, then 0, 1, ...
    std::size_t const N   = S.size();
    auto              mul = [&](std::optional<index_type> x, index_type y) { return x ? S.product(*x, y) : y; };
    auto              rmul = [&](index_type x, std::optional<index_type> y) { return y ? S.product(x, *y) : x; };
    for (std::size_t si = 0; si <= N; ++si) {
      std::optional<index_type> s;
      if (si > 0) {
        s = static_cast<index_type>(si - 1);
      }
      index_type const sf = mul(s, f);
      for (std::size_t ti = 0; ti <= N; ++ti) {
        std::optional<index_type> t;
        if (ti > 0) {
          t = static_cast<index_type>(ti - 1);
        }
        if (rmul(sf, t) != out.g) {
          continue;
        }
        out.s = s;
        out.t = t;
        std::optional<index_type> left, right;
        if (s) {
          left = S.product(S.inverse(*s), *s);
        }
        if (t) {
          right = S.product(*t, S.inverse(*t));
        }
        out.e = rmul(mul(left, f), right);
        if (!(S.is_idempotent(out.e) && G.j_class[out.e] == j_class && S.product(out.e, f) == out.e
              && S.product(f, out.e) == out.e)) {
          throw VerificationFailure("constructed idempotent fails its checks");
        }
        return out;
      }
    }
    throw VerificationFailure("no s, t with s f t = g although J lies below J_f");
  }

  std::vector<index_type> idempotent_chain_inverse(FiniteSemigroup const&         S,
                                                   GreenStructure const&          G,
                                                   std::vector<index_type> const& j_chain) {
    detail::require(!j_chain.empty(), "empty chain");
    for (std::size_t i = 0; i + 1 < j_chain.size(); ++i) {
      detail::require(j_chain[i] != j_chain[i + 1] && G.j_leq[j_chain[i]][j_chain[i + 1]],
                      "J-classes must form a strictly ascending chain");
    }
    std::vector<index_type> out(j_chain.size());
    bool                    found = false;
    for (index_type x = 0; x < S.size() && !found; ++x) {
      if (G.j_class[x] == j_chain.back() && S.is_idempotent(x)) {
        out.back() = x;
        found      = true;
      }
    }
    detail::require(found, "top J-class has no idempotent");
    for (std::size_t i = j_chain.size() - 1; i > 0; --i) {
      out[i - 1] = idempotent_below_inverse(S, G, out[i], j_chain[i - 1]).e;
    }
    return out;
  }

  Transformation idempotent_chain_T(Transformation const& f, std::size_t r) {
    std::vector<std::size_t> order(f.rank());
    std::iota(order.begin(), order.end(), 0);
    return idempotent_chain_T(f, r, order);
  }

  Transformation idempotent_chain_T(Transformation const& f, std::size_t r, std::vector<std::size_t> const& block_order) {
    detail::require(f.is_idempotent(), "f must be idempotent");
    std::size_t const m = f.rank();
    detail::require(1 <= r && r < m, "need 1 <= r < rank f");
    std::vector<std::size_t> check = block_order;
    std::sort(check.begin(), check.end());
    std::vector<std::size_t> id(m);
    std::iota(id.begin(), id.end(), 0);
    detail::require(check == id, "block order must be a permutation of the blocks");

    Partition const K      = f.kernel();
    auto const      blocks = K.blocks();
    // The fixed point of block b is f of any member.
    std::vector<Point> per_block(m);
    for (std::size_t pos = 0; pos < m; ++pos) {
      std::size_t const b = block_order[pos];
      per_block[b]        = pos + 1 < r ? f[blocks[b].front()] : f[blocks[block_order[r - 1]].front()];
    }
    Transformation e = Transformation::from_kernel(K, per_block);
    if (!(e.is_idempotent() && e.rank() == r && e * f == e && f * e == e)) {
      throw VerificationFailure("constructed idempotent fails its checks");
    }
    return e;
  }

  std::vector<Transformation> idempotent_chain_T_sequence(Transformation const&           f,
                                                          std::vector<std::size_t> const& ranks) {
    detail::require(!ranks.empty(), "empty rank sequence");
    detail::require(std::is_sorted(ranks.begin(), ranks.end())
                        && std::adjacent_find(ranks.begin(), ranks.end()) == ranks.end(),
                    "ranks must be strictly ascending");
    std::vector<Transformation> out;
    for (std::size_t r : ranks) {
      out.push_back(r == f.rank() ? f : idempotent_chain_T(f, r));
    }
    return out;
  }

}  // namespace hsg
