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

// Shared helpers for the unit tests: 1-based literals for elements.

#ifndef HSG_TESTS_HELPERS_HPP_
#define HSG_TESTS_HELPERS_HPP_

#include <initializer_list>
#include <optional>
#include <vector>

#include "hsg/partition.hpp"
#include "hsg/transformation.hpp"

namespace hsg::test {

  inline Transformation T(std::initializer_list<Point> one_based) {
    std::vector<Point> v;
    for (Point x : one_based) {
      v.push_back(x - 1);
    }
    return Transformation(v);
  }

  // 0 marks an undefined point.
  inline PartialBijection I(std::initializer_list<Point> one_based) {
    std::vector<std::optional<Point>> v;
    for (Point x : one_based) {
      v.push_back(x == 0 ? std::nullopt : std::optional<Point>(x - 1));
    }
    return PartialBijection(v.size(), v);
  }

  inline PointSet S(std::initializer_list<Point> one_based) {
    std::vector<Point> v;
    for (Point x : one_based) {
      v.push_back(x - 1);
    }
    return make_point_set(v);
  }

  inline Partition P(std::size_t m, std::initializer_list<std::initializer_list<Point>> blocks) {
    std::vector<PointSet> bs;
    for (auto const& b : blocks) {
      bs.push_back(S(b));
    }
    return Partition::from_blocks(m, bs);
  }

}  // namespace hsg::test

#endif  // HSG_TESTS_HELPERS_HPP_
