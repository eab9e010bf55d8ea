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

#include "hsg/partition.hpp"

#include <algorithm>
#include <sstream>

#include "hsg/error.hpp"

namespace hsg {

  PointSet make_point_set(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
  }

  std::string point_set_string(PointSet const& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i) {
      os << (i == 0 ? "" : ",") << s[i] + 1;
    }
    return os.str();
  }

  Partition::Partition(std::vector<std::size_t> const& labels)
      : _labels(labels.size()) {
    std::vector<std::size_t> relabel;
    constexpr auto           unset = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] >= relabel.size()) {
        relabel.resize(labels[i] + 1, unset);
      }
      if (relabel[labels[i]] == unset) {
        relabel[labels[i]] = _num_blocks++;
      }
      _labels[i] = relabel[labels[i]];
    }
  }

  Partition Partition::from_blocks(std::size_t m, std::vector<PointSet> const& blocks) {
    constexpr auto           unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> labels(m, unset);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      detail::require(!blocks[b].empty(), "partition block is empty");
      for (Point x : blocks[b]) {
        detail::require(x < m, "partition point out of range");
        detail::require(labels[x] == unset, "partition blocks overlap");
        labels[x] = b;
      }
    }
    for (auto l : labels) {
      detail::require(l != unset, "partition blocks do not cover the ground set");
    }
    return Partition(labels);
  }

  std::vector<PointSet> Partition::blocks() const {
    std::vector<PointSet> out(_num_blocks);
    for (std::size_t i = 0; i < _labels.size(); ++i) {
      out[_labels[i]].push_back(static_cast<Point>(i));
    }
    return out;
  }

  std::string Partition::to_string() const {
    std::ostringstream os;
    auto const         bs = blocks();
    for (std::size_t b = 0; b < bs.size(); ++b) {
      os << (b == 0 ? "" : "|") << point_set_string(bs[b]);
    }
    return os.str();
  }

  bool is_transversal(PointSet const& A, Partition const& P) {
    std::vector<std::size_t> hits(P.num_blocks(), 0);
    for (Point a : A) {
      if (a >= P.ground_size()) {
        return false;
      }
      ++hits[P.block_of(a)];
    }
    return std::all_of(hits.begin(), hits.end(), [](std::size_t h) { return h == 1; });
  }

}  // namespace hsg
