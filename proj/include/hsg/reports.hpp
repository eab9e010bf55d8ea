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

#ifndef HSG_REPORTS_HPP_
#define HSG_REPORTS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hsg/amalgamation.hpp"
#include "hsg/chains.hpp"
#include "hsg/combinatorics.hpp"
#include "hsg/json_io.hpp"

// Machine-readable reports shared by the command-line tool and the Python
// module.  Every report carries "version" and "command" fields and a
// top-level "verified" flag that is false exactly when a self-check of
// the report failed.  Output is a pure function of the arguments.
namespace hsg::reports {

  using io::Json;

  std::string version();

  // A semigroup chosen by family: "T" or "I" with degree n, or a named
  // library semigroup, or a custom table.
  struct SemigroupSource {
    std::string                    family;  // "T", "I", "named", "custom"
    std::size_t                    n = 0;
    std::string                    name;
    std::optional<FiniteSemigroup> table;
  };
  FiniteSemigroup resolve(SemigroupSource const& src);
  std::string     describe(SemigroupSource const& src);

  Json        eggbox(SemigroupSource const& src);
  std::string eggbox_ascii(SemigroupSource const& src);

  Json flower(FlowerInstance const& inst);

  Json witness(std::size_t                  n,
               std::size_t                  r,
               std::vector<PointSet> const& omega,
               std::vector<PointSet> const& sigma,
               WitnessRoute                 route,
               std::uint64_t                seed);

  Json dilation(std::size_t n, std::size_t r, std::uint64_t seed, std::size_t samples);

  // mode 'A' or 'B'.
  Json classify(SemigroupSource const& src, char mode);

  Json chain(ChainKind kind, std::size_t n, std::size_t depth, std::optional<std::string> const& track);

  Json nonconjugacy(std::size_t n, std::size_t r);

  Json duality(SemigroupSource const& src);

  Json j_order(ChainKind kind, std::size_t n, std::size_t depth);

  // The Graham-Houghton graph of the D-class of T_n or I_n of the given
  // rank, or of D-class d of a custom semigroup.
  std::string gh_dot(SemigroupSource const& src, std::size_t rank_or_d);
  Json        gh(SemigroupSource const& src, std::size_t rank_or_d);

  // The semilattice of idempotents of an inverse semigroup as a Hasse
  // diagram.
  std::string poset_dot(SemigroupSource const& src);

  Json dual_search(std::vector<Partition> const& P, std::vector<Partition> const& Q);

  Json amalgam(Amalgam const& am, std::string const& label, std::size_t max_degree, std::size_t budget);

}  // namespace hsg::reports

#endif  // HSG_REPORTS_HPP_
