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

#ifndef HSG_JSON_IO_HPP_
#define HSG_JSON_IO_HPP_

#include <string>
#include <vector>

#include "hsg/amalgamation.hpp"
#include "hsg/combinatorics.hpp"
#include "hsg/partition.hpp"
#include "hsg/semigroup.hpp"
#include "hsg/transformation.hpp"
#include "json.hpp"

// JSON conversions.  Points are 1-based in every file format and report;
// element indices of a multiplication table are 0-based.  Malformed input
// raises hsg::Error.
namespace hsg::io {

  using Json = nlohmann::ordered_json;

  Json to_json(Transformation const& a);    // {"degree": n, "images": [..]}
  Json to_json(PartialBijection const& a);  // undefined points are null
  Json to_json(FiniteSemigroup const& S);   // {"size", "table", "inverse"?}
  Json to_json(PointSet const& A);
  Json to_json(Partition const& P);         // list of blocks

  Transformation   transformation_from_json(Json const& j);
  PartialBijection partial_bijection_from_json(Json const& j);
  FiniteSemigroup  semigroup_from_json(Json const& j);
  PointSet         point_set_from_json(Json const& j, std::size_t m);
  Partition        partition_from_json(Json const& j, std::size_t m);
  // {"m", "t", "A": [[..]], "B": [[..]]}
  FlowerInstance flower_from_json(Json const& j);
  // {"A0", "A1", "A2": semigroups, "f1", "f2": index maps, "inverse_mode"?}
  Amalgam amalgam_from_json(Json const& j);

  Json read_json_file(std::string const& path);

  // "1,2,3" or "[1,2,3]"; 0 stands for undefined where allowed.
  std::vector<long long> parse_int_list(std::string const& text);
  // "1,2;1,3" -> {{0,1},{0,2}}
  std::vector<PointSet> parse_set_family(std::string const& text, std::size_t m);

}  // namespace hsg::io

#endif  // HSG_JSON_IO_HPP_
