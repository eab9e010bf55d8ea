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

#ifndef HSG_PARTITION_HPP_
#define HSG_PARTITION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hsg {

  // Points are 0-based internally.  Every I/O layer shifts to 1-based.
  using Point    = std::uint32_t;
  using PointSet = std::vector<Point>;  // sorted, no repeats

  PointSet    make_point_set(std::vector<Point> pts);
  std::string point_set_string(PointSet const& s);  // "1,3" (1-based)

  // A set partition of {0, ..., m - 1}.  Block labels are normalised to
  // 0, ..., t - 1 in order of first occurrence, so block i is the block
  // whose minimum element is the i-th smallest block minimum.
  class Partition {
   public:
    Partition() = default;
    explicit Partition(std::vector<std::size_t> const& labels);

    static Partition from_blocks(std::size_t m, std::vector<PointSet> const& blocks);

    std::size_t ground_size() const noexcept {
      return _labels.size();
    }
    std::size_t num_blocks() const noexcept {
      return _num_blocks;
    }
    std::size_t block_of(Point x) const {
      return _labels.at(x);
    }
    std::vector<std::size_t> const& labels() const noexcept {
      return _labels;
    }
    std::vector<PointSet> blocks() const;

    // Canonical 1-based form, e.g. "1,2|3".
    std::string to_string() const;

    auto operator<=>(Partition const&) const = default;

   private:
    std::vector<std::size_t> _labels;
    std::size_t              _num_blocks = 0;
  };

  // A is a transversal of P: |A ∩ block| = 1 for every block.
  bool is_transversal(PointSet const& A, Partition const& P);

}  // namespace hsg

#endif  // HSG_PARTITION_HPP_
