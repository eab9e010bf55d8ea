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

#include "hsg/embeddings.hpp"

#include <algorithm>
#include <random>

#include "hsg/error.hpp"

namespace hsg {

  CayleyEmbedding cayley_embed(FiniteSemigroup const& S) {
    CayleyEmbedding out;
    std::size_t const N   = S.size();
    out.adjoined_identity = !S.is_monoid();
    out.rep.degree        = out.adjoined_identity ? N + 1 : N;
    for (index_type g = 0; g < N; ++g) {
      std::vector<Point> im(out.rep.degree);
      for (index_type x = 0; x < N; ++x) {
        im[x] = S.product(x, g);
      }
      if (out.adjoined_identity) {
        im[N] = g;
      }
      out.rep.images.emplace_back(std::move(im));
    }
    out.report = verify_representation(S, out.rep);
    return out;
  }

  VagnerPrestonEmbedding vagner_preston(FiniteSemigroup const& S) {
    detail::require(S.is_inverse(), "Vagner-Preston needs an inverse semigroup");
    VagnerPrestonEmbedding out;
    std::size_t const      N = S.size();
    out.rep.degree           = N;
    for (index_type x = 0; x < N; ++x) {
      std::vector<Point> im(N, PartialBijection::kUndefined);
      for (index_type s = 0; s < N; ++s) {
        index_type const t = S.product(s, S.inverse(x));
        im[t]              = S.product(t, x);
      }
      out.rep.images.emplace_back(std::move(im));
    }
    out.report = verify_representation(S, out.rep);
    return out;
  }

  Transformation pad(Transformation const& alpha, std::size_t y) {
    std::vector<Point> im = alpha.images();
    for (std::size_t i = 0; i < y; ++i) {
      im.push_back(static_cast<Point>(alpha.degree() + i));
    }
    return Transformation(std::move(im));
  }

  namespace {
    constexpr std::size_t kEnumerableDegree = 4;

    std::vector<Transformation> generators_of_T(std::size_t n) {
      std::vector<Transformation> gens;
      std::vector<Point>          id(n);
      for (std::size_t i = 0; i < n; ++i) {
        id[i] = static_cast<Point>(i);
      }
      gens.emplace_back(id);
      if (n >= 2) {
        auto cyc = id;
        std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
        gens.emplace_back(cyc);
        auto sw = id;
        std::swap(sw[0], sw[1]);
        gens.emplace_back(sw);
        auto col = id;
        col[1]   = 0;
        gens.emplace_back(col);
      }
      return gens;
    }
  }  // namespace

  RuleMorphism<Transformation> pad_embed(std::size_t n, std::size_t y) {
    detail::require(n >= 1, "degree must be positive");
    RuleMorphism<Transformation> out;
    out.rule = [y](Transformation const& a) { return pad(a, y); };
    if (n <= kEnumerableDegree) {
      out.test_set             = all_transformations(n);
      out.test_set_description = "all of T_" + std::to_string(n);
    } else {
      out.test_set             = generators_of_T(n);
      out.test_set_description = "generators of T_" + std::to_string(n);
    }
    return out;
  }

  Transformation stabilize(Transformation const& alpha) {
    return pad(alpha, 1);
  }

  RuleMorphism<Transformation> stabilize_embed(std::size_t n) {
    detail::require(n >= 2, "stabilizing embedding needs n >= 2");
    auto out = pad_embed(n - 1, 1);
    out.rule = [](Transformation const& a) { return stabilize(a); };
    return out;
  }

  StabilizeReport stabilize_check(std::size_t n) {
    detail::require(n >= 2, "stabilizing embedding needs n >= 2");
    detail::require_cap(n <= 5, "stabilize_check limited to n <= 5");
    StabilizeReport out;
    auto const      f        = stabilize_embed(n);
    out.morphism             = f.verify(n - 1 <= kEnumerableDegree);
    out.non_invertible_contained = true;
    for (auto const& a : all_transformations(n - 1)) {
      bool const perm = stabilize(a).is_permutation();
      if (a.is_permutation()) {
        out.permutation_images += perm ? 1 : 0;
      } else if (perm) {
        out.non_invertible_contained = false;
      }
    }
    std::vector<Transformation> idem;
    for (auto const& a : all_transformations(n)) {
      if (a.is_idempotent() && a.rank() < n) {
        idem.push_back(a);
      }
    }
    out.idempotent_generated = closure(idem).elements.size();
    std::size_t nn = 1, fact = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      nn *= n;
      fact *= i;
    }
    out.expected_generated = nn - fact;
    return out;
  }

  std::vector<Transformation> r_class_of(Transformation const& f) {
    Partition const   K = f.kernel();
    std::size_t const t = K.num_blocks(), N = f.degree();
    std::vector<Transformation> out;
    std::vector<Point>          assign;
    std::vector<bool>           used(N, false);
    auto rec = [&](auto&& self) -> void {
      if (assign.size() == t) {
        out.push_back(Transformation::from_kernel(K, assign));
        return;
      }
      for (Point p = 0; p < N; ++p) {
        if (!used[p]) {
          used[p] = true;
          assign.push_back(p);
          self(self);
          assign.pop_back();
          used[p] = false;
        }
      }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Transformation> h_class_at(Transformation const& row, Transformation const& col) {
    detail::require(row.degree() == col.degree(), "degree mismatch");
    detail::require(row.rank() == col.rank(), "row and column lie in different D-classes");
    Partition const K   = row.kernel();
    PointSet        img = col.image_set();
    std::vector<Transformation> out;
    do {
      out.push_back(Transformation::from_kernel(K, img));
    } while (std::next_permutation(img.begin(), img.end()));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t dilation_padding(std::size_t n, std::size_t r) {
    std::size_t y = 1;
    while (true) {
      std::size_t fact = 1;
      for (std::size_t i = 2; i <= r + y; ++i) {
        fact *= i;
        if (fact > n + 1) {
          break;
        }
      }
      if (fact > n + 1) {
        return y;
      }
      ++y;
    }
  }

  Transformation canonical_idempotent(std::size_t n, std::size_t r) {
    detail::require(1 <= r && r <= n, "rank out of range");
    std::vector<Point> im(n);
    for (std::size_t i = 0; i < n; ++i) {
      im[i] = static_cast<Point>(std::min(i, r - 1));
    }
    return Transformation(std::move(im));
  }

  DilationContext build_dilation(std::size_t n, std::size_t r, std::optional<Transformation> e) {
    detail::require(n >= 3, "dilation needs n >= 3");
    detail::require(1 < r && r < n, "dilation needs 1 < r < n");
    DilationContext ctx;
    ctx._n = n;
    ctx._r = r;
    ctx._y = dilation_padding(n, r);
    std::size_t rsize = 1;
    for (std::size_t i = 0; i < r + ctx._y; ++i) {
      rsize *= n + ctx._y - i;
    }
    detail::require_cap(rsize <= 100'000, "R-class of epsilon too large to enumerate");
    if (e) {
      detail::require(e->degree() == n && e->is_idempotent() && e->rank() == r, "e must be a rank r idempotent of T_n");
      ctx._e = *e;
    } else {
      ctx._e = canonical_idempotent(n, r);
    }
    ctx._epsilon = pad(ctx._e, ctx._y);
    ctx._r_eps   = r_class_of(ctx._epsilon);
    for (std::size_t k = 0; k < ctx._r_eps.size(); ++k) {
      ctx._lookup.emplace(ctx._r_eps[k], static_cast<Point>(n + 1 + k));
    }
    return ctx;
  }

  Point DilationContext::point_of(Transformation const& gamma) const {
    auto it = _lookup.find(gamma);
    detail::require(it != _lookup.end(), "element not in R_epsilon");
    return it->second;
  }

  std::optional<Transformation> DilationContext::act(Transformation const& gamma, Transformation const& alpha) const {
    Transformation p = gamma * iota(alpha);
    if (p.rank() == _r + _y) {
      return p;
    }
    return std::nullopt;
  }

  Transformation DilationContext::psi(Transformation const& alpha) const {
    detail::require(alpha.degree() == _n, "psi is defined on T_n");
    std::vector<Point> im(target_degree());
    for (std::size_t i = 0; i < _n; ++i) {
      im[i] = alpha[i];
    }
    im[_n]               = zero_point();
    Transformation const ai = iota(alpha);
    for (std::size_t k = 0; k < _r_eps.size(); ++k) {
      Transformation p = _r_eps[k] * ai;
      im[_n + 1 + k]   = p.rank() == _r + _y ? point_of(p) : zero_point();
    }
    return Transformation(std::move(im));
  }

  PointSet DilationContext::row_h_class(Transformation const& alpha) const {
    detail::require(alpha.degree() == _n && alpha.rank() == _r, "alpha must have rank r");
    PointSet out;
    for (auto const& h : h_class_at(_epsilon, iota(alpha))) {
      out.push_back(point_of(h));
    }
    return make_point_set(std::move(out));
  }

  PointSet DilationContext::predicted_image(Transformation const& alpha) const {
    PointSet out = alpha.image_set();
    auto     h   = row_h_class(alpha);
    out.insert(out.end(), h.begin(), h.end());
    out.push_back(zero_point());
    return make_point_set(std::move(out));
  }

  RuleMorphism<Transformation> DilationContext::psi_morphism(std::uint64_t seed, std::size_t sample) const {
    RuleMorphism<Transformation> out;
    out.rule = [self = *this](Transformation const& a) { return self.psi(a); };
    if (_n <= kEnumerableDegree) {
      out.test_set             = all_transformations(_n);
      out.test_set_description = "all of T_" + std::to_string(_n);
    } else {
      out.test_set = generators_of_T(_n);
      std::mt19937_64                      rng(seed);
      std::uniform_int_distribution<Point> pt(0, static_cast<Point>(_n - 1));
      for (std::size_t s = 0; s < sample; ++s) {
        std::vector<Point> im(_n);
        for (auto& x : im) {
          x = pt(rng);
        }
        out.test_set.emplace_back(std::move(im));
      }
      out.test_set_description = "generators of T_" + std::to_string(_n) + " plus " + std::to_string(sample)
                                 + " random elements (seed " + std::to_string(seed) + ")";
    }
    return out;
  }

  bool disjoint_h_classes_check(DilationContext const& ctx, Transformation const& alpha, Transformation const& beta) {
    detail::require(alpha.rank() == ctx.r() && beta.rank() == ctx.r(), "alpha and beta must have rank r");
    auto const a = ctx.row_h_class(alpha);
    auto const b = ctx.row_h_class(beta);
    std::vector<Point> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    return both.empty();
  }

}  // namespace hsg
