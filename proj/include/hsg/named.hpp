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

#ifndef HSG_NAMED_HPP_
#define HSG_NAMED_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hsg/semigroup.hpp"

// Small named semigroups used throughout the tests and by the CLI.
namespace hsg::named {

  FiniteSemigroup left_zero(std::size_t k);   // xy = x
  FiniteSemigroup right_zero(std::size_t k);  // xy = y
  FiniteSemigroup chain(std::size_t k);       // {0 < 1 < ... < k-1}, xy = min
  // e = 0, f = 1, ef = fe = 0-element 2.
  FiniteSemigroup v3();
  FiniteSemigroup cyclic_group(std::size_t k);
  FiniteSemigroup klein_four();
  FiniteSemigroup symmetric_group(std::size_t k);
  FiniteSemigroup full_transformation(std::size_t k);  // lexicographic element order
  FiniteSemigroup full_transformation_opp(std::size_t k);
  FiniteSemigroup symmetric_inverse(std::size_t k);  // with inverse map
  // Brandt semigroup B({1..n}, trivial group): (i, j) for 0 <= i, j < n in
  // row-major order, then the zero.
  FiniteSemigroup brandt(std::size_t n);
  FiniteSemigroup null_semigroup(std::size_t k);  // every product is element 0
  FiniteSemigroup rectangular_band(std::size_t rows, std::size_t cols);
  // M^0[1; I, Λ; P] with a 0/1 matrix P indexed Λ x I.  Elements (i, λ) in
  // row-major order over I x Λ, then the zero.
  FiniteSemigroup rees_matrix(std::vector<std::vector<int>> const& P);
  // <a | a^{index + period} = a^index>
  FiniteSemigroup monogenic(std::size_t index, std::size_t period);

  // The fixture library as (name, semigroup) pairs.
  std::vector<std::pair<std::string, FiniteSemigroup>> library();

  // Lookup by name as used on the command line: "L2", "T3", "I2", "Z4",
  // "C3" (chain), "V3", "B2" (Brandt), "N2" (null), "RB2x2", "T2opp", ...
  FiniteSemigroup by_name(std::string const& name);

}  // namespace hsg::named

#endif  // HSG_NAMED_HPP_
