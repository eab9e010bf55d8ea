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

#ifndef HSG_SEMILATTICE_HPP_
#define HSG_SEMILATTICE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsg/green.hpp"
#include "hsg/partition.hpp"
#include "hsg/semigroup.hpp"
#include "hsg/transformation.hpp"

namespace hsg {

  // A finite poset on 0, ..., n - 1.  The constructor validates the
  // partial order axioms.
  class Poset {
   public:
    Poset() = default;
    Poset(std::vector<std::vector<bool>> leq, std::vector<std::string> labels);

    std::size_t size() const noexcept {
      return _leq.size();
    }
    bool leq(std::size_t a, std::size_t b) const {
      return _leq[a][b];
    }
    bool incomparable(std::size_t a, std::size_t b) const {
      return !_leq[a][b] && !_leq[b][a];
    }
    std::string const& label(std::size_t a) const {
      return _labels[a];
    }
    // Greatest lower bound, if it exists.
    std::optional<std::size_t>                     meet(std::size_t a, std::size_t b) const;
    bool                                           is_meet_semilattice() const;
    std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;  // (lower, upper)
    std::string                                    to_dot(std::string const& name = "poset") const;

   private:
    std::vector<std::vector<bool>> _leq;
    std::vector<std::string>       _labels;
  };

  // E(S) under e <= f iff ef = fe = e.
  struct IdempotentSemilattice {
    std::vector<index_type> elements;  // idempotents of S, ascending
    Poset                   poset;
    bool                    meet_is_product = false;
  };
  IdempotentSemilattice idempotent_semilattice(FiniteSemigroup const& S);

  struct OmegaReport {
    bool no_max_or_min  = false;
    bool upper_bounds   = false;
    bool star           = false;
    bool star_vacuous   = true;   // no tuple met the left-hand side
    bool no_max_checked = true;   // false when the finite-stage mode skips condition (i)
    std::size_t star_instances = 0;
    // A left-hand side tuple (α, γ, δ, ε) with no β, if any.
    std::optional<std::vector<std::size_t>> star_counterexample;
  };
  // With finite_stage set, condition (i) is not evaluated: it can never
  // hold in a finite poset, so only (ii) and (iii) carry information.
  OmegaReport omega_axiom_check(Poset const& P, bool finite_stage = false);

  // For a single tuple: whether (α, γ, δ, ε) meets the left-hand side and
  // whether β meets the right-hand side.
  struct StarInstanceReport {
    bool lhs = false;
    bool rhs = false;
  };
  StarInstanceReport star_instance(Poset const& P,
                                   std::size_t  alpha,
                                   std::size_t  gamma,
                                   std::size_t  delta,
                                   std::size_t  epsilon,
                                   std::size_t  beta);

  ////////////////////////////////////////////////////////////////////////
  // The hat construction in I_n
  ////////////////////////////////////////////////////////////////////////

  // X^ = {γ in I_n : im γ ⊆ X}, as ascending indices into
  // all_partial_bijections(n).
  struct IdealSet {
    std::size_t             n = 0;
    PointSet                X;
    std::vector<index_type> elements;
  };
  IdealSet    hat(std::size_t n, PointSet const& X);
  std::size_t hat_size_formula(std::size_t n, std::size_t x);

  class StarPreconditionError : public Error {
   public:
    StarPreconditionError(std::string clause)
        : Error("star witness precondition violated: " + clause), _clause(std::move(clause)) {}
    std::string const& clause() const noexcept {
      return _clause;
    }

   private:
    std::string _clause;
  };

  struct StarWitness {
    IdealSet                A_hat, C_hat, D_hat, E_hat;
    std::vector<index_type> B;  // D^ ∪ E^
    bool                    D_in_B = false, B_in_A = false, E_in_B = false, meet_with_C = false;
    bool                    all() const noexcept {
      return D_in_B && B_in_A && E_in_B && meet_with_C;
    }
  };
  // Checks D ∪ E ⊆ A, C ⊄ D, C ⊄ E, A ⊄ C, and (D = E or D ∥ E with
  // C ∩ E ⊆ E ∩ D), naming the first failing clause.
  void        check_star_precondition(PointSet const& A, PointSet const& C, PointSet const& D, PointSet const& E);
  StarWitness star_witness(std::size_t n, PointSet const& A, PointSet const& C, PointSet const& D, PointSet const& E);

  ////////////////////////////////////////////////////////////////////////
  // Idempotents below idempotents
  ////////////////////////////////////////////////////////////////////////

  // e = s^{-1} g t^{-1} = (s^{-1} s) f (t t^{-1}) for the first s, t in S^1
  // with s f t = g,
  // where g is the least idempotent of J.  nullopt in s or t stands for
  // the adjoined identity.
  struct BelowWitness {
    index_type                e = 0, g = 0;
    std::optional<index_type> s, t;
  };
  BelowWitness idempotent_below_inverse(FiniteSemigroup const& S,
                                        GreenStructure const&  G,
                                        index_type             f,
                                        index_type             j_class);

  // Idempotents e_0 < ... < e_k, one in each J-class of an ascending
  // chain, built from the top down.
  std::vector<index_type> idempotent_chain_inverse(FiniteSemigroup const&         S,
                                                   GreenStructure const&          G,
                                                   std::vector<index_type> const& j_chain);

  // f idempotent of rank m, 1 <= r < m.  Blocks A_1, ..., A_m of f are
  // taken in the given order (default: by minimum element); the result
  // keeps A_1..A_{r-1} and sends A_r ∪ ... ∪ A_m to the fixed point of A_r.
  Transformation idempotent_chain_T(Transformation const& f, std::size_t r);
  Transformation idempotent_chain_T(Transformation const& f, std::size_t r, std::vector<std::size_t> const& block_order);

  // e_{i_1} < ... < e_{i_k} below f, for ascending ranks; the last rank
  // may equal rank f, in which case f itself is used.
  std::vector<Transformation> idempotent_chain_T_sequence(Transformation const&           f,
                                                          std::vector<std::size_t> const& ranks);

}  // namespace hsg

#endif  // HSG_SEMILATTICE_HPP_
