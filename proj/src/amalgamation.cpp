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

#include "hsg/amalgamation.hpp"

#include <algorithm>

#include "hsg/embeddings.hpp"
#include "hsg/green.hpp"
#include "hsg/named.hpp"

namespace hsg {

  std::string to_string(Membership m) {
    switch (m) {
      case Membership::Member: return "Member";
      case Membership::NonMember: return "NonMember";
      case Membership::Unknown: return "Unknown";
    }
    return "Unknown";
  }

  ClassVerdict is_base_inverse(FiniteSemigroup const& S) {
    auto const T = S.is_inverse() ? S : detect_inverse(S);
    detail::require(T.is_inverse(), "class A is defined for inverse semigroups only");
    if (is_j_linear(T)) {
      return {Membership::Member, "j-linear", "a finite inverse semigroup is an amalgamation base iff it is J-linear"};
    }
    return {Membership::NonMember, "not-j-linear", "a finite inverse semigroup is an amalgamation base iff it is J-linear"};
  }

  namespace {
    // The decisive criteria without the opposite-semigroup step.
    std::optional<ClassVerdict> classify_direct(FiniteSemigroup const& S, GreenStructure const& G) {
      if (!G.is_j_linear()) {
        return ClassVerdict{Membership::NonMember, "not-j-linear", "members of B are J-linear"};
      }
      bool const group = S.is_group();
      if (G.num_j == 1 && !group) {
        return ClassVerdict{Membership::NonMember,
                            "completely-simple-non-group",
                            "a finite completely simple semigroup is in B iff it is a group"};
      }
      if (group) {
        return ClassVerdict{Membership::Member, "group", "finite groups are amalgamation bases for finite semigroups"};
      }
      if (S.is_inverse() || detect_inverse(S).is_inverse()) {
        return ClassVerdict{Membership::Member,
                            "inverse-j-linear",
                            "semigroup reducts of J-linear finite inverse semigroups lie in B"};
      }
      for (std::size_t k = 1; k <= 3; ++k) {
        std::size_t kk = 1;
        for (std::size_t i = 0; i < k; ++i) {
          kk *= k;
        }
        if (S.size() != kk) {
          continue;
        }
        if (isomorphic(S, named::full_transformation(k), 27)) {
          return ClassVerdict{Membership::Member, "full-transformation", "isomorphic to T_" + std::to_string(k)};
        }
        if (isomorphic(S, named::full_transformation_opp(k), 27)) {
          return ClassVerdict{Membership::Member, "full-transformation-opp",
                              "isomorphic to the opposite of T_" + std::to_string(k)};
        }
      }
      return std::nullopt;
    }
  }  // namespace

  ClassVerdict classify_B(FiniteSemigroup const& S) {
    auto const G = green_generic(S);
    if (auto v = classify_direct(S, G)) {
      return *v;
    }
    auto const opp = opposite(S);
    if (auto v = classify_direct(opp, green_generic(opp)); v && v->status == Membership::Member) {
      return ClassVerdict{Membership::Member, "opposite", "the opposite semigroup is a member (" + v->reason + ")"};
    }
    return ClassVerdict{Membership::Unknown, "none", "no implemented criterion applies"};
  }

  void validate(Amalgam const& am) {
    if (am.inverse_mode) {
      for (auto const* S : {&am.A0, &am.A1, &am.A2}) {
        detail::require(S->is_inverse(), "inverse mode needs inverse semigroups with inverse maps");
      }
    }
    auto const r1 = verify_index_morphism(am.A0, am.A1, am.f1);
    auto const r2 = verify_index_morphism(am.A0, am.A2, am.f2);
    detail::require(r1.homomorphism && r1.injective, "f1 is not an embedding");
    detail::require(r2.homomorphism && r2.injective, "f2 is not an embedding");
    if (am.inverse_mode) {
      detail::require(r1.inverse_preserving && r2.inverse_preserving, "arms must preserve inverses");
    }
  }

  namespace {
    // An index map A -> B between closures that share element values.
    template <typename Elem>
    std::vector<index_type> map_by_value(Closure<Elem> const& from, Closure<Elem> const& to) {
      std::vector<index_type> out;
      for (auto const& x : from.elements) {
        out.push_back(to.index_of(x));
      }
      return out;
    }

    PartialBijection pb(std::size_t n, std::vector<std::pair<Point, Point>> const& pairs) {
      std::vector<std::optional<Point>> im(n);
      for (auto const& [a, b] : pairs) {
        im[a] = b;
      }
      return PartialBijection(n, im);
    }
  }  // namespace

  std::vector<std::string> amalgam_fixture_names() {
    return {"identity-T2", "groups", "v3-inverse"};
  }

  Amalgam amalgam_fixture(std::string const& name) {
    if (name == "identity-T2") {
      auto const T2 = named::full_transformation(2);
      std::vector<index_type> id(T2.size());
      for (index_type i = 0; i < T2.size(); ++i) {
        id[i] = i;
      }
      return Amalgam{T2, T2, T2, id, id, false};
    }
    if (name == "groups") {
      // Z_2 inside Z_4 as {0, 2} and inside Z_2 x Z_2 as {0, 1}.
      return Amalgam{named::cyclic_group(2), named::cyclic_group(4), named::klein_four(), {0, 2}, {0, 1}, false};
    }
    if (name == "v3-inverse") {
      // Points 0, 1, 2.  V_3 = {e, f, 0}: e = id{0}, f = id{1} in the
      // Brandt arm, where e and f are D-related; in the other arm
      // f = id{1,2} sits above g = id{1}, which is D-related to e.  A
      // completion would make f D-related to an idempotent strictly below
      // it, which cannot happen in a finite semigroup.
      std::size_t const n    = 3;
      auto const        e    = pb(n, {{0, 0}});
      auto const        base = closure(std::vector{e, pb(n, {{1, 1}})});
      auto const        arm1 = closure(std::vector{pb(n, {{0, 1}}), pb(n, {{1, 0}})});
      auto const        arm2 = closure(std::vector{e, pb(n, {{1, 1}, {2, 2}}), pb(n, {{0, 1}}), pb(n, {{1, 0}})});
      std::vector<index_type> f1 = map_by_value(base, arm1), f2;
      for (auto const& x : base.elements) {
        // Send id{1} to id{1,2}, keep e and the empty map.
        PartialBijection const y = x == pb(n, {{1, 1}}) ? pb(n, {{1, 1}, {2, 2}}) : x;
        f2.push_back(arm2.index_of(y));
      }
      return Amalgam{base.semigroup, arm1.semigroup, arm2.semigroup, f1, f2, true};
    }
    throw Error("unknown amalgam fixture: " + name);
  }

  JepResult jep_embed_inverse(FiniteSemigroup const& A1, FiniteSemigroup const& A2) {
    auto const S1 = A1.is_inverse() ? A1 : detect_inverse(A1);
    auto const S2 = A2.is_inverse() ? A2 : detect_inverse(A2);
    detail::require(S1.is_inverse() && S2.is_inverse(), "joint embedding needs inverse semigroups");
    JepResult out;
    out.degree    = S1.size() + S2.size();
    auto shift_in = [&](FiniteSemigroup const& S, std::size_t offset) {
      Representation<PartialBijection> rep{out.degree, {}};
      for (auto const& rho : vagner_preston(S).rep.images) {
        std::vector<std::optional<Point>> im(out.degree);
        for (std::size_t i = 0; i < rho.degree(); ++i) {
          if (rho.defined_at(i)) {
            im[offset + i] = static_cast<Point>(offset + rho[i]);
          }
        }
        rep.images.emplace_back(out.degree, im);
      }
      return rep;
    };
    out.g1 = shift_in(S1, 0);
    out.g2 = shift_in(S2, S1.size());
    out.r1 = verify_representation(S1, out.g1);
    out.r2 = verify_representation(S2, out.g2);
    std::vector<PartialBijection> gens = out.g1.images;
    gens.insert(gens.end(), out.g2.images.begin(), out.g2.images.end());
    auto const c              = closure(gens);
    out.closure_size          = c.elements.size();
    out.closure_inverse       = c.semigroup.is_inverse();
    out.closure_contains_both = std::all_of(gens.begin(), gens.end(), [&](auto const& x) { return c.contains(x); });
    return out;
  }

  namespace {
    template <typename Elem>
    void search_degree(Amalgam const&               am,
                       std::vector<Elem> const&     universe,
                       std::size_t                  budget,
                       CompletionResult&            out,
                       std::vector<Elem>&           g1,
                       std::vector<Elem>&           g2) {
      auto mul = [](Elem const& a, Elem const& b) { return a * b; };
      std::size_t const remaining = budget > out.nodes ? budget - out.nodes : 0;
      std::size_t       inner     = 0;
      auto const stats = search_embeddings<Elem>(
          am.A1, universe, mul, {},
          [&](std::vector<Elem> const& h1) {
            std::vector<std::pair<index_type, Elem>> fixed;
            for (index_type a = 0; a < am.A0.size(); ++a) {
              fixed.emplace_back(am.f2[a], h1[am.f1[a]]);
            }
            std::sort(fixed.begin(), fixed.end());
            fixed.erase(std::unique(fixed.begin(), fixed.end(),
                                    [](auto const& x, auto const& y) { return x.first == y.first; }),
                        fixed.end());
            bool found = false;
            auto const s2 = search_embeddings<Elem>(
                am.A2, universe, mul, fixed,
                [&](std::vector<Elem> const& h2) {
                  g1    = h1;
                  g2    = h2;
                  found = true;
                  return true;
                },
                remaining > inner ? remaining - inner : 0);
            inner += s2.nodes;
            if (s2.budget_exhausted || inner >= remaining) {
              out.budget_exhausted = true;
              return true;
            }
            return found;
          },
          remaining);
      out.nodes += stats.nodes + inner;
      if (stats.budget_exhausted) {
        out.budget_exhausted = true;
      }
    }
  }  // namespace

  CompletionResult complete_amalgam(Amalgam const& am, std::size_t max_degree, std::size_t node_budget) {
    validate(am);
    detail::require_cap(am.A1.size() <= kAmalgamArmCap && am.A2.size() <= kAmalgamArmCap,
                        "amalgam arms limited to 6 elements");
    detail::require_cap(max_degree <= kAmalgamDegreeCap, "completion search limited to degree 5");
    CompletionResult out;
    out.max_degree = max_degree;
    out.target     = am.inverse_mode ? "I" : "T";
    for (std::size_t m = 1; m <= max_degree && !out.found && !out.budget_exhausted; ++m) {
      if (am.inverse_mode) {
        search_degree(am, all_partial_bijections(m), node_budget, out, out.g1_I, out.g2_I);
        out.found = !out.g1_I.empty();
      } else {
        search_degree(am, all_transformations(m), node_budget, out, out.g1_T, out.g2_T);
        out.found = !out.g1_T.empty();
      }
      if (out.found) {
        out.degree = m;
      }
    }
    if (out.found) {
      if (am.inverse_mode) {
        out.r1 = verify_representation(am.A1, Representation<PartialBijection>{out.degree, out.g1_I});
        out.r2 = verify_representation(am.A2, Representation<PartialBijection>{out.degree, out.g2_I});
      } else {
        out.r1 = verify_representation(am.A1, Representation<Transformation>{out.degree, out.g1_T});
        out.r2 = verify_representation(am.A2, Representation<Transformation>{out.degree, out.g2_T});
      }
      out.commutes = true;
      for (index_type a = 0; a < am.A0.size(); ++a) {
        bool const same = am.inverse_mode ? out.g1_I[am.f1[a]] == out.g2_I[am.f2[a]]
                                          : out.g1_T[am.f1[a]] == out.g2_T[am.f2[a]];
        out.commutes = out.commutes && same;
      }
      if (!(out.r1.ok() && out.r2.ok() && out.commutes)) {
        throw VerificationFailure("completion failed independent verification");
      }
      out.verdict = "completed in " + out.target + "_" + std::to_string(out.degree);
    } else if (out.budget_exhausted) {
      out.verdict = "search budget exhausted; no completion found (not a proof of non-embeddability)";
    } else {
      out.verdict = "not found within cap: no completion in " + out.target + "_m for m <= " + std::to_string(max_degree)
                    + " (not a proof of non-embeddability)";
    }
    return out;
  }

}  // namespace hsg
