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

#ifndef HSG_TRANSFORMATION_HPP_
#define HSG_TRANSFORMATION_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "hsg/partition.hpp"

namespace hsg {

  // A full transformation of {0, ..., n - 1}.  Maps compose left to right:
  // i(fg) = (if)g, so (f * g)[i] == g[f[i]].
  class Transformation {
   public:
    Transformation() = default;
    explicit Transformation(std::vector<Point> images);

    static Transformation identity(std::size_t n);
    static Transformation constant(std::size_t n, Point value);
    // The map sending every point of block i of P to images[i].
    static Transformation from_kernel(Partition const& P, std::vector<Point> const& images);

    std::size_t degree() const noexcept {
      return _images.size();
    }
    Point operator[](std::size_t i) const {
      return _images[i];
    }
    std::vector<Point> const& images() const noexcept {
      return _images;
    }

    std::size_t rank() const;
    PointSet    image_set() const;
    Partition   kernel() const;
    PointSet    fixed_points() const;
    bool        is_idempotent() const;
    bool        is_permutation() const;

    auto operator<=>(Transformation const&) const = default;

   private:
    std::vector<Point> _images;
  };

  Transformation operator*(Transformation const& f, Transformation const& g);
  Transformation compose(Transformation const& f, Transformation const& g);

  // All n^n transformations in lexicographic order of image arrays.
  std::vector<Transformation> all_transformations(std::size_t n);

  // A partial injection of {0, ..., n - 1}; undefined points map to kUndefined.
  class PartialBijection {
   public:
    static constexpr Point kUndefined = std::numeric_limits<Point>::max();

    PartialBijection() = default;
    explicit PartialBijection(std::vector<Point> images);
    PartialBijection(std::size_t n, std::vector<std::optional<Point>> const& images);

    static PartialBijection identity(std::size_t n);
    static PartialBijection empty(std::size_t n);
    static PartialBijection identity_on(std::size_t n, PointSet const& dom);

    std::size_t degree() const noexcept {
      return _images.size();
    }
    Point operator[](std::size_t i) const {
      return _images[i];
    }
    bool defined_at(std::size_t i) const {
      return _images[i] != kUndefined;
    }
    std::vector<Point> const& images() const noexcept {
      return _images;
    }

    std::size_t      rank() const;
    PointSet         domain() const;
    PointSet         image_set() const;
    PointSet         fixed_points() const;
    bool             is_idempotent() const;
    PartialBijection inverse() const;

    auto operator<=>(PartialBijection const&) const = default;

   private:
    std::vector<Point> _images;
  };

  PartialBijection operator*(PartialBijection const& f, PartialBijection const& g);
  PartialBijection compose_partial(PartialBijection const& f, PartialBijection const& g);

  // All partial injections of degree n, lexicographic on image arrays.
  std::vector<PartialBijection> all_partial_bijections(std::size_t n);

  // The number of partial injections of an a-set into a b-set.
  std::size_t partial_injection_count(std::size_t a, std::size_t b);

  namespace detail {
    inline std::size_t hash_points(std::vector<Point> const& v) noexcept {
      std::size_t h = v.size();
      for (Point x : v) {
        h ^= std::hash<Point>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }
  }  // namespace detail

}  // namespace hsg

template <>
struct std::hash<hsg::Transformation> {
  std::size_t operator()(hsg::Transformation const& f) const noexcept {
    return hsg::detail::hash_points(f.images());
  }
};

template <>
struct std::hash<hsg::PartialBijection> {
  std::size_t operator()(hsg::PartialBijection const& f) const noexcept {
    return hsg::detail::hash_points(f.images());
  }
};

#endif  // HSG_TRANSFORMATION_HPP_
