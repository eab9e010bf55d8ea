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

#ifndef HSG_COMBINATORICS_HPP_
#define HSG_COMBINATORICS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hsg/embeddings.hpp"
#include "hsg/green.hpp"
#include "hsg/partition.hpp"
#include "hsg/transformation.hpp"

namespace hsg {

  ////////////////////////////////////////////////////////////////////////
  // Flower Lemma
  ////////////////////////////////////////////////////////////////////////

  // Sets A_1..A_k and B_1..B_l of size t inside {0, ..., m - 1}.  A
  // partition into t parts is sought with every A_i a transversal and no
  // B_j a transversal.
  struct FlowerInstance {
    std::size_t           m = 0, t = 0;
    std::vector<PointSet> A, B;
  };

  // Y = union of all sets; the petals A'_i, B'_j are the points lying in
  // exactly one set and the head M holds the points lying in two or more.
  struct FlowerDecomposition {
    PointSet              Y, head;
    std::vector<PointSet> A_petals, B_petals;
  };

  // Throws Error on malformed instances: wrong sizes, repeated sets,
  // k or l zero, t < 2, points out of range.
  void                validate(FlowerInstance const& inst);
  FlowerDecomposition decompose(FlowerInstance const& inst);

  // Thrown when the head is too large, |M| >= t.
  class FlowerHypothesisError : public Error {
   public:
    using Error::Error;
  };

  // Head points go to parts 0, 1, ... in increasing order.  Petal points
  // of A_i fill the lowest-indexed parts not yet meeting A_i.  B'_j goes
  // into the part of min(B_j \ B'_j), or into part 0 when B'_j = B_j.
  // Everything else goes into part 0.
  Partition flower(FlowerInstance const& inst);

  // A_i ⊥ P for all i and B_j not ⊥ P for all j.
  bool satisfies_pattern(Partition const& P, FlowerInstance const& inst);

  ////////////////////////////////////////////////////////////////////////
  // Graham-Houghton graphs
  ////////////////////////////////////////////////////////////////////////

  struct BipartiteGraph {
    std::vector<std::string>                         left, right;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // sorted (left, right)

    BipartiteGraph swapped() const;
    // Components as (left count, right count, edge count), sorted.
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> component_shapes() const;
    std::string to_dot(std::string const& name = "GH") const;

    bool operator==(BipartiteGraph const&) const = default;
  };

  // R-classes of the D-class on the left, L-classes on the right, an edge
  // where the H-class is a group.
  BipartiteGraph graham_houghton(GreenStructure const& G, index_type d_class);

  // Graph iso check by brute force over left and right permutations, for
  // graphs with at most 8 vertices per side.  Labels are ignored.
  bool graphs_isomorphic(BipartiteGraph const& a, BipartiteGraph const& b);

  ////////////////////////////////////////////////////////////////////////
  // Property (◇), part (b)
  ////////////////////////////////////////////////////////////////////////

  enum class WitnessRoute { Auto, Direct, Dilation };

  // The H-class with kernel P and image A is a group, decided by squaring
  // a member rather than by the transversal test.
  bool h_class_is_group_by_square(Partition const& P, PointSet const& A);

  struct WitnessChecks {
    bool              c_D_a1 = false, c_D_b1 = false;
    std::vector<bool> a_groups, b_groups;
    bool              square_agrees = false;  // the squaring test gives the same flags
    bool              psi_ok        = true;   // vacuous on the direct route
    MorphismReport    psi_report;
    bool all() const;
  };

  struct DiamondWitness {
    std::string                 route;  // "direct" or "dilation"
    std::size_t                 n = 0, r = 0, m = 0, t = 0;
    std::vector<Transformation> a, b;               // representatives in T_n
    std::vector<PointSet>       A_sets, B_sets;     // images inside T_m
    std::size_t                 head_size = 0;
    std::optional<std::size_t>  y, z_size;          // dilation route only
    Partition                   kernel;
    Transformation              c;
    WitnessChecks               checks;
  };

  // A dilation together with its certified ψ, reusable across witnesses.
  struct DilationBundle {
    DilationContext ctx;
    MorphismReport  psi_report;
  };
  DilationBundle make_dilation_bundle(std::size_t n, std::size_t r, std::uint64_t seed = 0);

  // The canonical rank r map with image A: 1..r-1 to the r-1 smallest
  // points of A, the rest to max A.
  Transformation canonical_representative(std::size_t n, PointSet const& A);

  // Ω and Σ are disjoint families of r-subsets of [n] (L-class keys).
  DiamondWitness diamond_witness(std::size_t                  n,
                                 std::size_t                  r,
                                 std::vector<PointSet> const& omega,
                                 std::vector<PointSet> const& sigma,
                                 WitnessRoute                 route = WitnessRoute::Auto,
                                 std::uint64_t                seed  = 0);

  // Explicit representatives from distinct L-classes of D_r.
  DiamondWitness diamond_witness_from(std::vector<Transformation> const& a,
                                      std::vector<Transformation> const& b,
                                      WitnessRoute                       route  = WitnessRoute::Auto,
                                      DilationBundle const*              bundle = nullptr,
                                      std::uint64_t                      seed   = 0);

  ////////////////////////////////////////////////////////////////////////
  // The dual problem
  ////////////////////////////////////////////////////////////////////////

  // Given partitions P_i, Q_j of [m] with t parts each, a t-subset A with
  // A ⊥ P_i for all i and A not ⊥ Q_j for all j.  Exhaustive over
  // t-subsets in lexicographic order; no structural insight is used.
  struct DualSearchResult {
    std::optional<PointSet> A;
    std::size_t             examined = 0;
  };
  DualSearchResult dual_transversal_search(std::vector<Partition> const& P,
                                           std::vector<Partition> const& Q,
                                           std::size_t                   max_subsets = 5'000'000);

}  // namespace hsg

#endif  // HSG_COMBINATORICS_HPP_
