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

#ifndef HSG_EMBEDDINGS_HPP_
#define HSG_EMBEDDINGS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hsg/morphism.hpp"
#include "hsg/semigroup.hpp"
#include "hsg/transformation.hpp"

namespace hsg {

  // Right regular representation g -> (x -> xg).  Without an identity the
  // target acts on S^1; the adjoined identity is the last point.
  struct CayleyEmbedding {
    bool                           adjoined_identity = false;
    Representation<Transformation> rep;
    MorphismReport                 report;
  };
  CayleyEmbedding cayley_embed(FiniteSemigroup const& S);

  // x -> ρ_x : S x^{-1} -> S x, t -> tx.
  struct VagnerPrestonEmbedding {
    Representation<PartialBijection> rep;
    MorphismReport                   report;
  };
  VagnerPrestonEmbedding vagner_preston(FiniteSemigroup const& S);

  // α -> αι: fixes the y fresh points n, ..., n + y - 1.
  Transformation               pad(Transformation const& alpha, std::size_t y);
  RuleMorphism<Transformation> pad_embed(std::size_t n, std::size_t y);

  // T_{n-1} -> T_n, fixing the new point.
  Transformation               stabilize(Transformation const& alpha);
  RuleMorphism<Transformation> stabilize_embed(std::size_t n);

  struct StabilizeReport {
    MorphismReport morphism;
    // Every non-invertible α lands outside the symmetric group.
    bool non_invertible_contained = false;
    // Images of permutations of T_{n-1} that are permutations of [n].
    std::size_t permutation_images = 0;
    // |<idempotents of rank <= n-1>| and n^n - n!.
    std::size_t idempotent_generated = 0;
    std::size_t expected_generated   = 0;
    bool        ok() const noexcept {
      return morphism.ok() && non_invertible_contained && idempotent_generated == expected_generated;
    }
  };
  StabilizeReport stabilize_check(std::size_t n);

  // All maps with the given kernel, lexicographically ordered.
  std::vector<Transformation> r_class_of(Transformation const& f);
  // All maps with the kernel of row and the image of col.
  std::vector<Transformation> h_class_at(Transformation const& row, Transformation const& col);
  inline std::vector<Transformation> h_class_of(Transformation const& f) {
    return h_class_at(f, f);
  }

  // The dilation T_n -> T_{X ∪ Z}.  Points of X ∪ Z are numbered
  // 0, ..., n - 1 for X, then n for the zero of Z, then n + 1 + k for the
  // k-th element of R_ε in lexicographic order.
  class DilationContext {
   public:
    std::size_t n() const noexcept {
      return _n;
    }
    std::size_t r() const noexcept {
      return _r;
    }
    std::size_t y() const noexcept {
      return _y;
    }
    Transformation const& e() const noexcept {
      return _e;
    }
    Transformation const& epsilon() const noexcept {
      return _epsilon;
    }
    std::vector<Transformation> const& r_epsilon() const noexcept {
      return _r_eps;
    }
    std::size_t z_size() const noexcept {
      return _r_eps.size() + 1;
    }
    std::size_t target_degree() const noexcept {
      return _n + z_size();
    }
    Point zero_point() const noexcept {
      return static_cast<Point>(_n);
    }
    Point point_of(Transformation const& gamma) const;

    Transformation iota(Transformation const& alpha) const {
      return pad(alpha, _y);
    }
    // γ·α, or nullopt for the zero.
    std::optional<Transformation> act(Transformation const& gamma, Transformation const& alpha) const;
    Transformation                psi(Transformation const& alpha) const;

    // R_ε ∩ L_{αι} as points of Z.  This is the H-class of T_{X∪Y} that
    // Z(αψ) \ {0} fills; it has (r + |Y|)! elements.
    PointSet row_h_class(Transformation const& alpha) const;
    // im α ∪ (R_ε ∩ L_{αι}) ∪ {0}.
    PointSet predicted_image(Transformation const& alpha) const;

    // The test set used to certify ψ: all of T_n for n <= 4, otherwise
    // generators of T_n plus a seeded random sample.
    RuleMorphism<Transformation> psi_morphism(std::uint64_t seed = 0, std::size_t sample = 60) const;

    friend DilationContext build_dilation(std::size_t, std::size_t, std::optional<Transformation>);

   private:
    std::size_t                                 _n = 0, _r = 0, _y = 0;
    Transformation                              _e, _epsilon;
    std::vector<Transformation>                 _r_eps;
    std::unordered_map<Transformation, Point>   _lookup;
  };

  // Smallest y >= 1 with (r + y)! > n + 1.
  std::size_t dilation_padding(std::size_t n, std::size_t r);

  // The canonical rank r idempotent: 1..r fixed, r+1..n -> r.
  Transformation canonical_idempotent(std::size_t n, std::size_t r);

  DilationContext build_dilation(std::size_t n, std::size_t r, std::optional<Transformation> e = std::nullopt);

  // Whether the row H-classes of αι and βι are disjoint.
  bool disjoint_h_classes_check(DilationContext const& ctx, Transformation const& alpha, Transformation const& beta);

}  // namespace hsg

#endif  // HSG_EMBEDDINGS_HPP_
