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

#include "hsg/transformation.hpp"

#include <algorithm>

#include "hsg/error.hpp"

namespace hsg {

  ////////////////////////////////////////////////////////////////////////
  // Transformation
  ////////////////////////////////////////////////////////////////////////

  Transformation::Transformation(std::vector<Point> images) : _images(std::move(images)) {
    detail::require(!_images.empty(), "transformation degree must be positive");
    for (Point x : _images) {
      detail::require(x < _images.size(), "transformation image out of range");
    }
  }

  Transformation Transformation::identity(std::size_t n) {
    std::vector<Point> im(n);
    for (std::size_t i = 0; i < n; ++i) {
      im[i] = static_cast<Point>(i);
    }
    return Transformation(std::move(im));
  }

  Transformation Transformation::constant(std::size_t n, Point value) {
    return Transformation(std::vector<Point>(n, value));
  }

  Transformation Transformation::from_kernel(Partition const& P, std::vector<Point> const& images) {
    detail::require(images.size() == P.num_blocks(), "one image per block required");
    std::vector<Point> im(P.ground_size());
    for (std::size_t i = 0; i < im.size(); ++i) {
      im[i] = images[P.block_of(static_cast<Point>(i))];
    }
    return Transformation(std::move(im));
  }

  std::size_t Transformation::rank() const {
    return image_set().size();
  }

  PointSet Transformation::image_set() const {
    return make_point_set(_images);
  }

  Partition Transformation::kernel() const {
    return Partition(std::vector<std::size_t>(_images.begin(), _images.end()));
  }

  PointSet Transformation::fixed_points() const {
    PointSet out;
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] == i) {
        out.push_back(static_cast<Point>(i));
      }
    }
    return out;
  }

  bool Transformation::is_idempotent() const {
    return std::all_of(_images.begin(), _images.end(), [this](Point x) { return _images[x] == x; });
  }

  bool Transformation::is_permutation() const {
    return rank() == degree();
  }

  Transformation operator*(Transformation const& f, Transformation const& g) {
    detail::require(f.degree() == g.degree(), "degree mismatch in composition");
    std::vector<Point> im(f.degree());
    for (std::size_t i = 0; i < im.size(); ++i) {
      im[i] = g[f[i]];
    }
    return Transformation(std::move(im));
  }

  Transformation compose(Transformation const& f, Transformation const& g) {
    return f * g;
  }

  std::vector<Transformation> all_transformations(std::size_t n) {
    detail::require(n >= 1, "degree must be positive");
    std::vector<Transformation> out;
    std::vector<Point>          im(n, 0);
    while (true) {
      out.emplace_back(im);
      std::size_t i = n;
      while (i > 0 && im[i - 1] == n - 1) {
        im[--i] = 0;
      }
      if (i == 0) {
        break;
      }
      ++im[i - 1];
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // PartialBijection
  ////////////////////////////////////////////////////////////////////////

  PartialBijection::PartialBijection(std::vector<Point> images) : _images(std::move(images)) {
    std::vector<bool> seen(_images.size(), false);
    for (Point x : _images) {
      if (x == kUndefined) {
        continue;
      }
      detail::require(x < _images.size(), "partial bijection image out of range");
      detail::require(!seen[x], "partial bijection is not injective");
      seen[x] = true;
    }
  }

  PartialBijection::PartialBijection(std::size_t n, std::vector<std::optional<Point>> const& images)
      : PartialBijection([&] {
          detail::require(images.size() == n, "partial bijection length mismatch");
          std::vector<Point> im(n);
          for (std::size_t i = 0; i < n; ++i) {
            im[i] = images[i].value_or(kUndefined);
          }
          return im;
        }()) {}

  PartialBijection PartialBijection::identity(std::size_t n) {
    std::vector<Point> im(n);
    for (std::size_t i = 0; i < n; ++i) {
      im[i] = static_cast<Point>(i);
    }
    return PartialBijection(std::move(im));
  }

  PartialBijection PartialBijection::empty(std::size_t n) {
    return PartialBijection(std::vector<Point>(n, kUndefined));
  }

  PartialBijection PartialBijection::identity_on(std::size_t n, PointSet const& dom) {
    std::vector<Point> im(n, kUndefined);
    for (Point x : dom) {
      detail::require(x < n, "point out of range");
      im[x] = x;
    }
    return PartialBijection(std::move(im));
  }

  std::size_t PartialBijection::rank() const {
    return static_cast<std::size_t>(
        std::count_if(_images.begin(), _images.end(), [](Point x) { return x != kUndefined; }));
  }

  PointSet PartialBijection::domain() const {
    PointSet out;
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != kUndefined) {
        out.push_back(static_cast<Point>(i));
      }
    }
    return out;
  }

  PointSet PartialBijection::image_set() const {
    PointSet out;
    for (Point x : _images) {
      if (x != kUndefined) {
        out.push_back(x);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  PointSet PartialBijection::fixed_points() const {
    PointSet out;
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] == i) {
        out.push_back(static_cast<Point>(i));
      }
    }
    return out;
  }

  bool PartialBijection::is_idempotent() const {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != kUndefined && _images[i] != i) {
        return false;
      }
    }
    return true;
  }

  PartialBijection PartialBijection::inverse() const {
    std::vector<Point> im(_images.size(), kUndefined);
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != kUndefined) {
        im[_images[i]] = static_cast<Point>(i);
      }
    }
    return PartialBijection(std::move(im));
  }

  PartialBijection operator*(PartialBijection const& f, PartialBijection const& g) {
    detail::require(f.degree() == g.degree(), "degree mismatch in composition");
    std::vector<Point> im(f.degree(), PartialBijection::kUndefined);
    for (std::size_t i = 0; i < im.size(); ++i) {
      if (f.defined_at(i)) {
        im[i] = g[f[i]];
      }
    }
    return PartialBijection(std::move(im));
  }

  PartialBijection compose_partial(PartialBijection const& f, PartialBijection const& g) {
    return f * g;
  }

  std::vector<PartialBijection> all_partial_bijections(std::size_t n) {
    // Depth-first over positions; undefined sorts last because kUndefined
    // is the largest Point value.
    std::vector<PartialBijection> out;
    std::vector<Point>            im(n, PartialBijection::kUndefined);
    std::vector<bool>             used(n, false);
    auto                          rec = [&](auto&& self, std::size_t pos) -> void {
      if (pos == n) {
        out.emplace_back(im);
        return;
      }
      for (Point v = 0; v < n; ++v) {
        if (!used[v]) {
          used[v] = true;
          im[pos] = v;
          self(self, pos + 1);
          used[v] = false;
        }
      }
      im[pos] = PartialBijection::kUndefined;
      self(self, pos + 1);
    };
    rec(rec, 0);
    return out;
  }

  std::size_t partial_injection_count(std::size_t a, std::size_t b) {
    // sum_k C(a, k) * b! / (b - k)!
    std::size_t total = 0;
    for (std::size_t k = 0; k <= std::min(a, b); ++k) {
      std::size_t c = 1;
      for (std::size_t i = 0; i < k; ++i) {
        c = c * (a - i) / (i + 1);
      }
      std::size_t p = 1;
      for (std::size_t i = 0; i < k; ++i) {
        p *= (b - i);
      }
      total += c * p;
    }
    return total;
  }

}  // namespace hsg
