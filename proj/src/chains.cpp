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

#include "hsg/chains.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "hsg/morphism.hpp"

namespace hsg {

  std::string to_string(ChainKind k) {
    return k == ChainKind::T ? "T" : "I";
  }

  ChainKind chain_kind_from_string(std::string const& s) {
    if (s == "T") {
      return ChainKind::T;
    }
    if (s == "I") {
      return ChainKind::I;
    }
    throw Error("chain kind must be T or I, got " + s);
  }

  namespace {
    double log2_of(BigInt const& x) {
      if (x <= 1) {
        return 0.0;
      }
      // msb is exact enough for a cap check.
      return static_cast<double>(boost::multiprecision::msb(x)) + 1.0;
    }

    void check_bits(BigInt const& x, std::string const& what) {
      detail::require_cap(x <= 1 || boost::multiprecision::msb(x) < kChainBitCap,
                          what + " exceeds " + std::to_string(kChainBitCap) + " bits");
    }

    // P as a machine integer; callers have already bounded it.
    std::size_t small(BigInt const& x) {
      detail::require_cap(x <= BigInt(std::numeric_limits<std::uint32_t>::max()), "value too large to enumerate");
      return static_cast<std::size_t>(x);
    }

    std::string one_based(std::vector<Point> const& im) {
      std::string out = "[";
      for (std::size_t i = 0; i < im.size(); ++i) {
        out += (i ? "," : "");
        out += im[i] == PartialBijection::kUndefined ? "0" : std::to_string(im[i] + 1);
      }
      return out + "]";
    }

    template <typename Elem>
    std::unordered_map<Elem, index_type> index_map(std::vector<Elem> const& elts) {
      std::unordered_map<Elem, index_type> out;
      out.reserve(elts.size());
      for (std::size_t i = 0; i < elts.size(); ++i) {
        out.emplace(elts[i], static_cast<index_type>(i));
      }
      return out;
    }

    // The image of a under the right regular representation of the full
    // list elts, on the element indices.
    Transformation next_image(std::vector<Transformation> const&                     elts,
                              std::unordered_map<Transformation, index_type> const& idx,
                              Transformation const&                                  a) {
      std::vector<Point> im(elts.size());
      for (std::size_t i = 0; i < elts.size(); ++i) {
        im[i] = idx.at(elts[i] * a);
      }
      return Transformation(std::move(im));
    }

    // x -> xa on {x : x a a^{-1} = x}.
    PartialBijection next_image(std::vector<PartialBijection> const&                     elts,
                                std::unordered_map<PartialBijection, index_type> const& idx,
                                PartialBijection const&                                  a) {
      auto const         aa = a * a.inverse();
      std::vector<Point> im(elts.size(), PartialBijection::kUndefined);
      for (std::size_t i = 0; i < elts.size(); ++i) {
        if (elts[i] * aa == elts[i]) {
          im[i] = idx.at(elts[i] * a);
        }
      }
      return PartialBijection(std::move(im));
    }

    std::vector<Transformation> all_of(std::size_t p, Transformation const*) {
      return all_transformations(p);
    }
    std::vector<PartialBijection> all_of(std::size_t p, PartialBijection const*) {
      return all_partial_bijections(p);
    }

    BigInt stage_count(ChainKind kind, BigInt const& m) {
      return kind == ChainKind::T ? full_transformation_count(m) : partial_injection_count(m);
    }

    template <typename Elem>
    IndexPeriod order_of(Elem const& a) {
      std::unordered_map<Elem, std::size_t> seen;
      Elem                                  x = a;
      for (std::size_t k = 1;; ++k) {
        auto [it, fresh] = seen.emplace(x, k);
        if (!fresh) {
          return IndexPeriod{it->second, k - it->second};
        }
        x = x * a;
      }
    }
  }  // namespace

  BigInt full_transformation_count(BigInt const& m) {
    if (m <= 1) {
      return 1;
    }
    detail::require_cap(log2_of(m) * static_cast<double>(m <= BigInt(kChainBitCap) ? static_cast<std::size_t>(m) : kChainBitCap)
                            <= static_cast<double>(kChainBitCap) + 64,
                        "stage size exceeds " + std::to_string(kChainBitCap) + " bits");
    auto const e = static_cast<unsigned>(m);
    BigInt     r = boost::multiprecision::pow(m, e);
    check_bits(r, "stage size");
    return r;
  }

  BigInt partial_injection_count(BigInt const& m) {
    // log2(m!) is a lower bound for the bit length.
    detail::require_cap(m <= BigInt(kChainBitCap), "stage size exceeds " + std::to_string(kChainBitCap) + " bits");
    auto const mm = static_cast<std::size_t>(m);
    detail::require_cap(std::lgamma(static_cast<double>(mm) + 1.0) / std::log(2.0) <= static_cast<double>(kChainBitCap),
                        "stage size exceeds " + std::to_string(kChainBitCap) + " bits");
    BigInt term = 1, sum = 1;
    for (std::size_t k = 0; k < mm; ++k) {
      term = term * (mm - k) * (mm - k) / (k + 1);
      sum += term;
    }
    check_bits(sum, "stage size");
    return sum;
  }

  CayleyChainStage build_chain(ChainKind kind, std::size_t n, std::size_t depth, bool materialize) {
    detail::require(n >= 1, "towers start from a positive degree");
    CayleyChainStage st;
    st.kind  = kind;
    st.n     = n;
    st.depth = depth;
    st.points.push_back(n);
    st.sizes.push_back(stage_count(kind, n));
    for (std::size_t d = 0; d < depth; ++d) {
      st.points.push_back(st.sizes.back());
      st.sizes.push_back(stage_count(kind, st.points.back()));
    }
    if (!materialize) {
      return st;
    }
    detail::require_cap(st.size() <= kMaterializeCap,
                        "materialization limited to " + std::to_string(kMaterializeCap) + " elements");
    auto const p = small(st.points.back());
    if (kind == ChainKind::T) {
      st.t_elements = all_transformations(p);
      st.table      = table_of(st.t_elements);
    } else {
      st.i_elements = all_partial_bijections(p);
      st.table      = table_of(st.i_elements);
    }
    if (depth >= 1) {
      auto const q = small(st.points[depth - 1]);
      if (kind == ChainKind::T) {
        auto const prev = all_transformations(q);
        auto const imgs = cayley_images_T(q);
        auto const idx  = index_map(st.t_elements);
        std::vector<index_type> map;
        for (auto const& x : imgs) {
          map.push_back(idx.at(x));
        }
        st.embedding_agrees = verify_index_morphism(table_of(prev), *st.table, map).ok();
      } else {
        auto const prev = all_partial_bijections(q);
        auto const imgs = cayley_images_I(q);
        auto const idx  = index_map(st.i_elements);
        std::vector<index_type> map;
        for (auto const& x : imgs) {
          map.push_back(idx.at(x));
        }
        st.embedding_agrees = verify_index_morphism(table_of(prev), *st.table, map).ok();
      }
    }
    return st;
  }

  std::vector<Transformation> cayley_images_T(std::size_t points) {
    detail::require_cap(full_transformation_count(points) <= kMaterializeCap, "stage too large to enumerate");
    auto const elts = all_transformations(points);
    auto const idx  = index_map(elts);
    std::vector<Transformation> out;
    for (auto const& a : elts) {
      out.push_back(next_image(elts, idx, a));
    }
    return out;
  }

  std::vector<PartialBijection> cayley_images_I(std::size_t points) {
    detail::require_cap(partial_injection_count(points) <= kMaterializeCap, "stage too large to enumerate");
    auto const elts = all_partial_bijections(points);
    auto const idx  = index_map(elts);
    std::vector<PartialBijection> out;
    for (auto const& a : elts) {
      out.push_back(next_image(elts, idx, a));
    }
    return out;
  }

  BigInt fix_step(ChainKind kind, BigInt const& F, BigInt const& P) {
    if (kind == ChainKind::T) {
      if (P == 0) {
        return 1;
      }
      if (F <= 1) {
        return F;
      }
      detail::require_cap(P <= BigInt(kChainBitCap) && log2_of(F) * static_cast<double>(P) <= kChainBitCap + 64.0,
                          "fixed-point count exceeds " + std::to_string(kChainBitCap) + " bits");
      BigInt r = boost::multiprecision::pow(F, static_cast<unsigned>(P));
      check_bits(r, "fixed-point count");
      return r;
    }
    // Σ_{k <= min(P, F)} C(P, k) F (F-1) ... (F-k+1)
    BigInt const kmax = std::min(P, F);
    if (kmax == 0) {
      return 1;
    }
    if (kmax == 1) {
      return 1 + P * F;
    }
    detail::require_cap(kmax <= BigInt(kChainBitCap), "fixed-point count exceeds " + std::to_string(kChainBitCap) + " bits");
    auto const k_end = static_cast<std::size_t>(kmax);
    BigInt     term = 1, sum = 1;
    for (std::size_t k = 0; k < k_end; ++k) {
      term = term * (P - k) * (F - k) / (k + 1);
      sum += term;
      check_bits(sum, "fixed-point count");
    }
    return sum;
  }

  std::size_t fix_count(Transformation const& a) {
    return a.fixed_points().size();
  }
  std::size_t fix_count(PartialBijection const& a) {
    return a.fixed_points().size();
  }
  IndexPeriod element_order(Transformation const& a) {
    return order_of(a);
  }
  IndexPeriod element_order(PartialBijection const& a) {
    return order_of(a);
  }

  namespace {
    template <typename Elem>
    TrackedElement track(ChainKind kind, std::size_t depth, Elem const& origin) {
      TrackedElement out;
      out.kind   = kind;
      out.n      = origin.degree();
      out.depth  = depth;
      out.origin = one_based(origin.images());
      detail::require(out.n >= 1, "origin must have positive degree");

      // points[d] for d = 0..depth-1
      std::vector<BigInt> points{BigInt(out.n)};
      for (std::size_t d = 0; d + 1 < depth; ++d) {
        points.push_back(stage_count(kind, points.back()));
      }
      out.fix_counts.push_back(fix_count(origin));
      for (std::size_t d = 0; d < depth; ++d) {
        out.fix_counts.push_back(fix_step(kind, out.fix_counts.back(), points[d]));
      }

      // Follow the element itself while the stage it lives in can be listed.
      out.direct_counts.assign(depth + 1, std::nullopt);
      Elem cur               = origin;
      out.direct_counts[0]   = BigInt(fix_count(cur));
      out.orders.push_back(element_order(cur));
      for (std::size_t d = 0; d < depth; ++d) {
        if (points[d] > BigInt(16) || stage_count(kind, points[d]) > kEnumerateCap) {
          break;
        }
        auto const elts = all_of(small(points[d]), static_cast<Elem const*>(nullptr));
        auto const idx  = index_map(elts);
        cur             = next_image(elts, idx, cur);
        out.direct_counts[d + 1] = BigInt(fix_count(cur));
        if (elts.size() <= kMaterializeCap) {
          out.orders.push_back(element_order(cur));
        }
      }
      for (std::size_t d = 0; d <= depth; ++d) {
        if (out.direct_counts[d] && *out.direct_counts[d] != out.fix_counts[d]) {
          out.formula_matches_direct = false;
        }
      }
      out.order_preserved = std::all_of(out.orders.begin(), out.orders.end(),
                                        [&](IndexPeriod const& x) { return x == out.orders.front(); });
      return out;
    }
  }  // namespace

  TrackedElement track_fix(std::size_t depth, Transformation const& origin) {
    return track(ChainKind::T, depth, origin);
  }

  TrackedElement track_fix(std::size_t depth, PartialBijection const& origin) {
    return track(ChainKind::I, depth, origin);
  }

  ////////////////////////////////////////////////////////////////////////
  // Non-conjugate involutions
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // g^{-1} inside H_e: undo g on im e, after applying e.
    Transformation group_inverse(Transformation const& e, Transformation const& g) {
      std::vector<Point> back(e.degree(), 0);
      for (Point a : e.image_set()) {
        back[g[a]] = a;
      }
      std::vector<Point> im(e.degree());
      for (std::size_t i = 0; i < e.degree(); ++i) {
        im[i] = back[e[i]];
      }
      return Transformation(std::move(im));
    }

    bool same_h(Transformation const& a, Transformation const& b) {
      return a.kernel() == b.kernel() && a.image_set() == b.image_set();
    }
  }  // namespace

  std::vector<Transformation> group_h_class(Transformation const& e) {
    detail::require(e.is_idempotent(), "group H-class needs an idempotent");
    auto const A = e.image_set();
    detail::require(A.size() <= 8, "group H-class limited to rank 8");
    std::vector<Point>          perm(A.begin(), A.end());
    std::vector<Transformation> out;
    do {
      std::vector<Point> to(e.degree(), 0);
      for (std::size_t i = 0; i < A.size(); ++i) {
        to[A[i]] = perm[i];
      }
      std::vector<Point> im(e.degree());
      for (std::size_t i = 0; i < e.degree(); ++i) {
        im[i] = to[e[i]];
      }
      out.emplace_back(std::move(im));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::optional<Transformation> find_conjugator(std::vector<Transformation> const& H,
                                                Transformation const&              e,
                                                Transformation const&              a,
                                                Transformation const&              b) {
    for (auto const& g : H) {
      if (group_inverse(e, g) * a * g == b) {
        return g;
      }
    }
    return std::nullopt;
  }

  StageConjugacyReport stage_one_conjugacy() {
    StageConjugacyReport out;
    auto const           base = all_transformations(2);
    auto const           imgs = cayley_images_T(2);
    auto const           e    = imgs[std::find(base.begin(), base.end(), Transformation::identity(2)) - base.begin()];
    auto const           H    = group_h_class(e);
    out.group_order           = H.size();

    std::vector<bool> done(H.size(), false);
    out.fix_is_class_invariant = true;
    for (std::size_t i = 0; i < H.size(); ++i) {
      if (done[i]) {
        continue;
      }
      std::size_t size = 0;
      for (auto const& g : H) {
        auto const c = group_inverse(e, g) * H[i] * g;
        auto const j = static_cast<std::size_t>(std::lower_bound(H.begin(), H.end(), c) - H.begin());
        if (!done[j]) {
          done[j] = true;
          ++size;
          out.fix_is_class_invariant = out.fix_is_class_invariant && fix_count(c) == fix_count(H[i]);
        }
      }
      out.class_sizes_and_fix.emplace_back(size, fix_count(H[i]));
    }

    out.a = imgs[std::find(base.begin(), base.end(), Transformation({1, 0})) - base.begin()];
    for (auto const& x : H) {
      if (x != e && x * x == e && fix_count(x) != fix_count(out.a)) {
        out.b = x;
        break;
      }
    }
    out.fix_a            = fix_count(out.a);
    out.fix_b            = fix_count(out.b);
    out.both_involutions = out.a != e && out.a * out.a == e && out.b.degree() == e.degree() && out.b != e
                           && out.b * out.b == e;
    out.conjugate = find_conjugator(H, e, out.a, out.b).has_value();
    return out;
  }

  NonconjugacyCertificate nonconjugacy_certificate(Transformation const& e,
                                                   Transformation const& alpha,
                                                   Transformation const& beta,
                                                   std::size_t           max_depth) {
    detail::require(e.degree() == alpha.degree() && e.degree() == beta.degree(), "degrees differ");
    detail::require(e.is_idempotent(), "e must be idempotent");
    NonconjugacyCertificate c;
    c.n           = e.degree();
    c.r           = e.rank();
    c.e           = e;
    c.alpha       = alpha;
    c.beta        = beta;
    c.in_h_e      = same_h(e, alpha) && same_h(e, beta);
    c.involutions = alpha != e && beta != e && alpha * alpha == e && beta * beta == e;
    detail::require(c.in_h_e, "alpha and beta must lie in the H-class of e");
    detail::require(c.involutions, "alpha and beta must have order two");
    c.fix_alpha = fix_count(alpha);
    c.fix_beta  = fix_count(beta);
    detail::require(c.fix_alpha != c.fix_beta, "alpha and beta must have different fixed-point counts");

    c.fix_alpha_seq.push_back(c.fix_alpha);
    c.fix_beta_seq.push_back(c.fix_beta);
    BigInt P = c.n;
    for (std::size_t d = 0; d < max_depth; ++d) {
      try {
        auto const fa = fix_step(ChainKind::T, c.fix_alpha_seq.back(), P);
        auto const fb = fix_step(ChainKind::T, c.fix_beta_seq.back(), P);
        c.fix_alpha_seq.push_back(fa);
        c.fix_beta_seq.push_back(fb);
        P = full_transformation_count(P);
      } catch (CapExceeded const&) {
        break;
      }
    }
    c.sequences_separate = true;
    for (std::size_t d = 0; d < c.fix_alpha_seq.size(); ++d) {
      c.sequences_separate = c.sequences_separate && c.fix_alpha_seq[d] != c.fix_beta_seq[d];
    }

    c.h_order = 1;
    for (std::size_t k = 2; k <= c.r; ++k) {
      c.h_order *= k;
    }
    if (c.h_order <= kEnumerateCap / 4) {
      auto const H = group_h_class(e);
      bool       invariant = true;
      for (auto const& g : H) {
        invariant = invariant && fix_count(group_inverse(e, g) * alpha * g) == c.fix_alpha;
      }
      c.fix_invariant_checked = invariant;
      c.brute_force_conjugate = find_conjugator(H, e, alpha, beta).has_value();
    }
    c.justification =
        "Both elements lie in the group H-class of e and fix only points of im e. Conjugation by g in H_e "
        "restricts to conjugation in the symmetric group on im e, which preserves the number of fixed points, "
        "so elements with different fixed-point counts are not conjugate. The right regular representation "
        "sends a to a map whose fixed points are the maps with image inside fix a, a number strictly "
        "increasing in |fix a|, so the images stay non-conjugate at every stage.";
    return c;
  }

  NonconjugacyCertificate nonconjugacy_certificate(std::size_t n, std::size_t r, std::size_t max_depth) {
    detail::require(r >= 4 && r <= n, "the canonical pair needs 4 <= r <= n");
    std::vector<Point> e(n), a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = static_cast<Point>(std::min(i, r - 1));
    }
    a = e;
    std::swap(a[0], a[1]);
    b = a;
    std::swap(b[2], b[3]);
    return nonconjugacy_certificate(Transformation(e), Transformation(a), Transformation(b), max_depth);
  }

  ////////////////////////////////////////////////////////////////////////
  // Duality
  ////////////////////////////////////////////////////////////////////////

  GreenStructure duality_transform(GreenStructure const& G) {
    GreenStructure out = G;
    std::swap(out.r_class, out.l_class);
    std::swap(out.num_r, out.num_l);
    std::swap(out.r_keys, out.l_keys);
    return out;
  }

  GreenStructure duality_transform(FiniteSemigroup const& S, GreenStructure const& G) {
    detail::require(S.size() == G.size, "structure does not match the semigroup");
    return duality_transform(G);
  }

  bool DualityReport::ok() const noexcept {
    return involution && matches_recomputation
           && std::all_of(gh_part_swap.begin(), gh_part_swap.end(), [](bool b) { return b; });
  }

  DualityReport duality_check(FiniteSemigroup const& S) {
    DualityReport out;
    auto const    G    = green_generic(S);
    auto const    dual = duality_transform(S, G);
    auto const    opp  = green_generic(opposite(S));
    out.involution     = duality_transform(dual) == G;
    out.matches_recomputation =
        same_classes(dual.r_class, opp.r_class) && same_classes(dual.l_class, opp.l_class)
        && same_classes(dual.h_class, opp.h_class) && same_classes(dual.j_class, opp.j_class)
        && same_classes(dual.d_class, opp.d_class) && dual.idempotent == opp.idempotent;
    if (out.matches_recomputation) {
      // J-order and group flags, compared through representatives.
      for (std::size_t x = 0; x < S.size(); ++x) {
        for (std::size_t y = 0; y < S.size(); ++y) {
          out.matches_recomputation = out.matches_recomputation
                                      && dual.j_leq[dual.j_class[x]][dual.j_class[y]]
                                             == opp.j_leq[opp.j_class[x]][opp.j_class[y]];
        }
        out.matches_recomputation
            = out.matches_recomputation && dual.group_h[dual.h_class[x]] == opp.group_h[opp.h_class[x]];
      }
    }
    for (index_type d = 0; d < G.num_d; ++d) {
      auto const mine = graham_houghton(G, d).swapped();
      // The same D-class in the recomputed structure of S^opp.
      index_type x = 0;
      while (G.d_class[x] != d) {
        ++x;
      }
      auto const theirs = graham_houghton(opp, opp.d_class[x]);
      bool       iso    = false;
      if (mine.left.size() <= 8 && mine.right.size() <= 8 && theirs.left.size() <= 8 && theirs.right.size() <= 8) {
        iso = graphs_isomorphic(mine, theirs);
      } else {
        iso = graham_houghton(dual, d).edges == mine.edges;
      }
      out.gh_part_swap.push_back(iso);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // J-order along the tower
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::size_t kGreenEnumerateCap = 1024;

    template <typename Elem>
    JOrderEmbedding rank_embedding(std::size_t from_depth, std::size_t points) {
      JOrderEmbedding emb;
      emb.from_depth = from_depth;
      auto const elts = all_of(points, static_cast<Elem const*>(nullptr));
      auto const idx  = index_map(elts);
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (auto const& a : elts) {
        pairs.emplace_back(a.rank(), next_image(elts, idx, a).rank());
      }
      std::sort(pairs.begin(), pairs.end());
      pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
      emb.rank_map = pairs;
      std::vector<std::size_t> targets;
      for (auto const& p : pairs) {
        targets.push_back(p.second);
      }
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      std::size_t const lo = std::is_same_v<Elem, Transformation> ? 1 : 0;
      std::size_t const hi = elts.size();
      emb.gaps.push_back(targets.front() - lo);
      for (std::size_t i = 1; i < targets.size(); ++i) {
        emb.gaps.push_back(targets[i] - targets[i - 1] - 1);
      }
      emb.gaps.push_back(hi - targets.back());
      return emb;
    }
  }  // namespace

  JOrderReport chain_j_order_report(ChainKind kind, std::size_t n, std::size_t depth_cap) {
    JOrderReport out;
    out.kind = kind;
    out.n    = n;
    out.caveat =
        "Finite-stage evidence only: chain lengths and where each stage's J-classes land in the next. "
        "Nothing here decides the order type of the limit.";
    auto const st = build_chain(kind, n, depth_cap == 0 ? 0 : depth_cap - 1);
    for (std::size_t d = 0; d <= depth_cap; ++d) {
      JOrderStage s;
      s.depth          = d;
      s.points         = d == 0 ? BigInt(n) : st.sizes[d - 1];
      s.j_chain_length = kind == ChainKind::T ? s.points : s.points + 1;
      if (s.points <= BigInt(16)) {
        auto const sz = stage_count(kind, s.points);
        if (sz <= kGreenEnumerateCap) {
          auto const p = small(s.points);
          auto const G = kind == ChainKind::T ? green_generic(table_of(all_transformations(p)))
                                              : green_generic(table_of(all_partial_bijections(p)));
          s.j_chain_length = G.num_j;
          s.j_linear       = G.is_j_linear();
          s.enumerated     = true;
        }
        if (d < depth_cap && sz <= kMaterializeCap) {
          auto const p = small(s.points);
          out.embeddings.push_back(kind == ChainKind::T ? rank_embedding<Transformation>(d, p)
                                                        : rank_embedding<PartialBijection>(d, p));
        }
      }
      out.stages.push_back(std::move(s));
    }
    return out;
  }

}  // namespace hsg
