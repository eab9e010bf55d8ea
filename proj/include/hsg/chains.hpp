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

#ifndef HSG_CHAINS_HPP_
#define HSG_CHAINS_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsg/combinatorics.hpp"
#include "hsg/green.hpp"
#include "hsg/semigroup.hpp"
#include "hsg/transformation.hpp"

namespace hsg {

  using BigInt = boost::multiprecision::cpp_int;

  // Towers S_0 -> S_1 -> ... with S_0 = T_n (kind T) or I_n (kind I) and
  // S_{d+1} = T_{S_d} resp. I_{S_d}, embedded by the right regular
  // (resp. Vagner-Preston) representation.  Elements of a materialized
  // stage are listed lexicographically, and the points of S_{d+1} are the
  // element indices of S_d.
  enum class ChainKind { T, I };
  std::string to_string(ChainKind k);
  ChainKind   chain_kind_from_string(std::string const& s);

  // Exact sizes are refused beyond this many bits.
  inline constexpr std::size_t kChainBitCap = 65536;
  // Full multiplication tables only up to this many elements.
  inline constexpr std::size_t kMaterializeCap = 4096;
  // Element-by-element counting only up to this many elements.
  inline constexpr std::size_t kEnumerateCap = 200000;

  // |T_m| = m^m and |I_m| = Σ_k C(m,k)^2 k!.
  BigInt full_transformation_count(BigInt const& m);
  BigInt partial_injection_count(BigInt const& m);

  struct CayleyChainStage {
    ChainKind   kind  = ChainKind::T;
    std::size_t n     = 0;
    std::size_t depth = 0;
    // sizes[d] = |S_d| and points[d] = degree of S_d, for d = 0..depth.
    std::vector<BigInt> sizes, points;

    // S_depth in full, when requested and within kMaterializeCap.
    std::optional<FiniteSemigroup> table;
    std::vector<Transformation>    t_elements;
    std::vector<PartialBijection>  i_elements;
    // The previous stage's images lie in this one and form a homomorphic
    // copy (checked only when depth >= 1 and the stage is materialized).
    std::optional<bool> embedding_agrees;

    BigInt const& size() const {
      return sizes.back();
    }
  };

  // Throws CapExceeded when an exact size passes kChainBitCap or when
  // materialization is requested beyond kMaterializeCap.
  CayleyChainStage build_chain(ChainKind kind, std::size_t n, std::size_t depth, bool materialize = false);

  // The image of every element of S_d in S_{d+1} as a map on the element
  // indices of S_d.  S_d must be enumerable (at most kMaterializeCap).
  std::vector<Transformation>   cayley_images_T(std::size_t points);
  std::vector<PartialBijection> cayley_images_I(std::size_t points);

  // The recurrence step for the number of fixed points.  T: F^P; I: the
  // number of partial injections of a P-set with image inside an F-set,
  // Σ_k C(P,k) F!/(F-k)!.
  BigInt fix_step(ChainKind kind, BigInt const& F, BigInt const& P);

  struct TrackedElement {
    ChainKind   kind  = ChainKind::T;
    std::size_t n     = 0;
    std::size_t depth = 0;
    std::string origin;  // 1-based image list, 0 for undefined

    // fix_counts[d] = |fix| of the image of origin in S_d.
    std::vector<BigInt> fix_counts;
    // Counted element by element where the stage below is enumerable.
    std::vector<std::optional<BigInt>> direct_counts;
    bool                               formula_matches_direct = true;

    // Index and period of the image at each depth where it is computable.
    std::vector<IndexPeriod> orders;
    bool                     order_preserved = true;
  };
  TrackedElement track_fix(std::size_t depth, Transformation const& origin);
  TrackedElement track_fix(std::size_t depth, PartialBijection const& origin);

  std::size_t fix_count(Transformation const& a);
  std::size_t fix_count(PartialBijection const& a);
  IndexPeriod element_order(Transformation const& a);
  IndexPeriod element_order(PartialBijection const& a);

  ////////////////////////////////////////////////////////////////////////
  // Non-conjugate involutions
  ////////////////////////////////////////////////////////////////////////

  // g in H with g^{-1} a g = b, inverses taken inside the group H with
  // identity e.
  std::optional<Transformation> find_conjugator(std::vector<Transformation> const& H,
                                                Transformation const&              e,
                                                Transformation const&              a,
                                                Transformation const&              b);

  // The group H-class of an idempotent of T_n, listed lexicographically.
  std::vector<Transformation> group_h_class(Transformation const& e);

  // Exhaustive conjugacy classes of the group H-class of the identity in
  // the first stage over T_2, and a pair of involutions there separated by
  // their fixed-point counts.
  struct StageConjugacyReport {
    std::size_t                               group_order = 0;
    std::vector<std::pair<std::size_t, std::size_t>> class_sizes_and_fix;  // (size, |fix|)
    bool                                      fix_is_class_invariant = false;
    Transformation                            a, b;
    std::size_t                               fix_a = 0, fix_b = 0;
    bool                                      both_involutions = false;
    bool                                      conjugate        = true;
    bool                                      ok() const noexcept {
      return fix_is_class_invariant && both_involutions && !conjugate && fix_a != fix_b;
    }
  };
  StageConjugacyReport stage_one_conjugacy();

  struct NonconjugacyCertificate {
    std::size_t    n = 0, r = 0;
    Transformation e, alpha, beta;
    std::size_t    fix_alpha = 0, fix_beta = 0;
    bool           in_h_e = false, involutions = false;
    // F_0, F_1, ... for alpha and beta along the T-tower.
    std::vector<BigInt> fix_alpha_seq, fix_beta_seq;
    bool                sequences_separate = false;
    // Exhaustive search over H_e, when |H_e| <= kEnumerateCap.
    std::size_t         h_order = 0;
    std::optional<bool> brute_force_conjugate;
    // Every conjugate of alpha in H_e has |fix alpha| fixed points.
    std::optional<bool> fix_invariant_checked;
    std::string         justification;
    bool                ok() const noexcept {
      return in_h_e && involutions && fix_alpha != fix_beta && sequences_separate
             && brute_force_conjugate.value_or(false) == false && fix_invariant_checked.value_or(true);
    }
  };
  // e = [1, ..., r, r, ..., r], alpha = (12), beta = (12)(34) in H_e.
  // Requires 4 <= r <= n.  Sequences run to the deepest depth within
  // kChainBitCap, at most max_depth.
  NonconjugacyCertificate nonconjugacy_certificate(std::size_t n, std::size_t r, std::size_t max_depth = 2);
  // A general pair of order-2 elements of H_e with distinct fixed counts.
  NonconjugacyCertificate nonconjugacy_certificate(Transformation const& e,
                                                   Transformation const& alpha,
                                                   Transformation const& beta,
                                                   std::size_t           max_depth = 2);

  ////////////////////////////////////////////////////////////////////////
  // Duality
  ////////////////////////////////////////////////////////////////////////

  // The Green structure of S^opp read off from that of S: R and L swap,
  // everything else is unchanged.
  GreenStructure duality_transform(GreenStructure const& G);
  GreenStructure duality_transform(FiniteSemigroup const& S, GreenStructure const& G);

  struct DualityReport {
    bool involution            = false;  // transform twice = original
    bool matches_recomputation = false;  // agrees with green_generic(S^opp)
    // Per D-class: GH(S^opp) is isomorphic to GH(S) with the parts swapped.
    std::vector<bool> gh_part_swap;
    bool              ok() const noexcept;
  };
  DualityReport duality_check(FiniteSemigroup const& S);

  ////////////////////////////////////////////////////////////////////////
  // J-order along the tower (finite evidence only)
  ////////////////////////////////////////////////////////////////////////

  struct JOrderStage {
    std::size_t depth = 0;
    BigInt      points;
    // J-chain length: from enumeration when the stage is materialized,
    // otherwise from the rank count of T_P or I_P.
    BigInt      j_chain_length;
    bool                enumerated = false;
    std::optional<bool> j_linear;  // enumerated stages only
  };
  struct JOrderEmbedding {
    std::size_t from_depth = 0;
    // For each J-class (rank) at from_depth, the rank of its image.
    std::vector<std::pair<std::size_t, std::size_t>> rank_map;
    // Ranks of the next stage strictly between consecutive image ranks.
    std::vector<std::size_t> gaps;
  };
  struct JOrderReport {
    ChainKind                    kind = ChainKind::T;
    std::size_t                  n    = 0;
    std::vector<JOrderStage>     stages;
    std::vector<JOrderEmbedding> embeddings;
    std::string                  caveat;
  };
  JOrderReport chain_j_order_report(ChainKind kind, std::size_t n, std::size_t depth_cap);

}  // namespace hsg

#endif  // HSG_CHAINS_HPP_
