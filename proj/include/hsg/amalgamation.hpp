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

#ifndef HSG_AMALGAMATION_HPP_
#define HSG_AMALGAMATION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hsg/morphism.hpp"
#include "hsg/semigroup.hpp"
#include "hsg/transformation.hpp"

namespace hsg {

  enum class Membership { Member, NonMember, Unknown };
  std::string to_string(Membership m);

  struct ClassVerdict {
    Membership  status = Membership::Unknown;
    std::string criterion;  // short machine tag, e.g. "not-j-linear"
    std::string reason;     // human-readable justification
  };

  // Class A: finite inverse semigroups that are amalgamation bases, which
  // are exactly the J-linear ones.  Throws unless S is inverse.
  ClassVerdict is_base_inverse(FiniteSemigroup const& S);

  // Class B: amalgamation bases for finite semigroups.  Criteria are tried
  // in a fixed order and the first that applies decides; Unknown means
  // none applied.
  ClassVerdict classify_B(FiniteSemigroup const& S);

  // A1 <- A0 -> A2 with f1, f2 as index maps.
  struct Amalgam {
    FiniteSemigroup         A0, A1, A2;
    std::vector<index_type> f1, f2;
    bool                    inverse_mode = false;
  };
  // Throws Error unless f1, f2 are injective homomorphisms, inverse
  // preserving in inverse mode.
  void validate(Amalgam const& am);

  // Named amalgams: "identity-T2", "groups" (Z_4 <- Z_2 -> Z_2 x Z_2),
  // "v3-inverse" (a V_3 amalgam with no finite completion).
  Amalgam              amalgam_fixture(std::string const& name);
  std::vector<std::string> amalgam_fixture_names();

  // Both arms into partial bijections of A1 ⊔ A2 (Vagner-Preston on each
  // arm, then the inclusion).  A1 uses points 0..|A1|-1.
  struct JepResult {
    std::size_t                      degree = 0;
    Representation<PartialBijection> g1, g2;
    MorphismReport                   r1, r2;
    std::size_t                      closure_size    = 0;
    bool                             closure_inverse = false;
    bool                             closure_contains_both = false;
    bool                             ok() const noexcept {
      return r1.ok() && r2.ok() && closure_inverse && closure_contains_both;
    }
  };
  JepResult jep_embed_inverse(FiniteSemigroup const& A1, FiniteSemigroup const& A2);

  inline constexpr std::size_t kAmalgamArmCap    = 6;
  inline constexpr std::size_t kAmalgamDegreeCap = 5;

  struct CompletionResult {
    bool                          found = false;
    std::size_t                   degree = 0;  // m when found
    std::string                   target;      // "T" or "I"
    std::vector<Transformation>   g1_T, g2_T;
    std::vector<PartialBijection> g1_I, g2_I;
    MorphismReport                r1, r2;
    bool                          commutes = false;
    std::size_t                   nodes    = 0;
    bool                          budget_exhausted = false;
    std::size_t                   max_degree       = 0;
    std::string                   verdict;
  };
  // Searches T_m (or I_m in inverse mode) for m = 1, ..., max_degree.
  // Not finding a completion is not a proof that none exists.
  CompletionResult complete_amalgam(Amalgam const& am,
                                    std::size_t    max_degree  = 4,
                                    std::size_t    node_budget = 2'000'000);

}  // namespace hsg

#endif  // HSG_AMALGAMATION_HPP_
