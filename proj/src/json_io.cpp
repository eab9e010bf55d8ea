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

#include "hsg/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hsg::io {

  namespace {
    std::size_t to_index(Json const& v, std::size_t bound, char const* what) {
      detail::require(v.is_number_integer(), std::string(what) + " must be an integer");
      auto const x = v.get<long long>();
      detail::require(x >= 0 && static_cast<std::size_t>(x) < bound, std::string(what) + " out of range");
      return static_cast<std::size_t>(x);
    }

    Point to_point(Json const& v, std::size_t n) {
      detail::require(v.is_number_integer(), "points must be integers");
      auto const x = v.get<long long>();
      detail::require(x >= 1 && static_cast<std::size_t>(x) <= n, "point out of range 1.." + std::to_string(n));
      return static_cast<Point>(x - 1);
    }

    Json const& field(Json const& j, char const* key) {
      detail::require(j.is_object() && j.contains(key), std::string("missing field \"") + key + "\"");
      return j.at(key);
    }
  }  // namespace

  Json to_json(Transformation const& a) {
    Json im = Json::array();
    for (Point x : a.images()) {
      im.push_back(x + 1);
    }
    return Json{{"degree", a.degree()}, {"images", im}};
  }

  Json to_json(PartialBijection const& a) {
    Json im = Json::array();
    for (std::size_t i = 0; i < a.degree(); ++i) {
      if (a.defined_at(i)) {
        im.push_back(a[i] + 1);
      } else {
        im.push_back(nullptr);
      }
    }
    return Json{{"degree", a.degree()}, {"images", im}};
  }

  Json to_json(FiniteSemigroup const& S) {
    Json table = Json::array();
    for (index_type a = 0; a < S.size(); ++a) {
      Json row = Json::array();
      for (index_type b = 0; b < S.size(); ++b) {
        row.push_back(S.product(a, b));
      }
      table.push_back(row);
    }
    Json out{{"size", S.size()}, {"table", table}};
    if (S.is_inverse()) {
      Json inv = Json::array();
      for (index_type a = 0; a < S.size(); ++a) {
        inv.push_back(S.inverse(a));
      }
      out["inverse"] = inv;
    }
    return out;
  }

  Json to_json(PointSet const& A) {
    Json out = Json::array();
    for (Point x : A) {
      out.push_back(x + 1);
    }
    return out;
  }

  Json to_json(Partition const& P) {
    Json out = Json::array();
    for (auto const& b : P.blocks()) {
      out.push_back(to_json(b));
    }
    return out;
  }

  Transformation transformation_from_json(Json const& j) {
    auto const& im = j.is_array() ? j : field(j, "images");
    detail::require(im.is_array() && !im.empty(), "images must be a nonempty array");
    std::size_t const n = im.size();
    if (j.is_object() && j.contains("degree")) {
      detail::require(j.at("degree") == n, "degree does not match the image list");
    }
    std::vector<Point> out;
    for (auto const& v : im) {
      out.push_back(to_point(v, n));
    }
    return Transformation(std::move(out));
  }

  PartialBijection partial_bijection_from_json(Json const& j) {
    auto const& im = j.is_array() ? j : field(j, "images");
    detail::require(im.is_array(), "images must be an array");
    std::size_t const                 n = im.size();
    std::vector<std::optional<Point>> out;
    for (auto const& v : im) {
      if (v.is_null() || (v.is_number_integer() && v.get<long long>() == 0)) {
        out.emplace_back(std::nullopt);
      } else {
        out.emplace_back(to_point(v, n));
      }
    }
    return PartialBijection(n, out);
  }

  FiniteSemigroup semigroup_from_json(Json const& j) {
    auto const& table = field(j, "table");
    detail::require(table.is_array() && !table.empty(), "table must be a nonempty array");
    std::size_t const N = table.size();
    if (j.contains("size")) {
      detail::require(j.at("size") == N, "size does not match the table");
    }
    std::vector<std::vector<index_type>> rows;
    for (auto const& row : table) {
      detail::require(row.is_array() && row.size() == N, "table must be square");
      std::vector<index_type> r;
      for (auto const& v : row) {
        r.push_back(static_cast<index_type>(to_index(v, N, "table entry")));
      }
      rows.push_back(std::move(r));
    }
    std::optional<std::vector<index_type>> inverse;
    if (j.contains("inverse")) {
      std::vector<index_type> inv;
      for (auto const& v : j.at("inverse")) {
        inv.push_back(static_cast<index_type>(to_index(v, N, "inverse entry")));
      }
      detail::require(inv.size() == N, "inverse must list every element");
      inverse = std::move(inv);
    }
    return FiniteSemigroup::from_rows(rows, inverse);
  }

  PointSet point_set_from_json(Json const& j, std::size_t m) {
    detail::require(j.is_array(), "a set must be an array of points");
    PointSet out;
    for (auto const& v : j) {
      out.push_back(to_point(v, m));
    }
    std::sort(out.begin(), out.end());
    detail::require(std::adjacent_find(out.begin(), out.end()) == out.end(), "repeated point in a set");
    return out;
  }

  Partition partition_from_json(Json const& j, std::size_t m) {
    detail::require(j.is_array(), "a partition must be an array of blocks");
    std::vector<PointSet> blocks;
    for (auto const& b : j) {
      blocks.push_back(point_set_from_json(b, m));
    }
    return Partition::from_blocks(m, blocks);
  }

  FlowerInstance flower_from_json(Json const& j) {
    FlowerInstance inst;
    auto const&    m = field(j, "m");
    auto const&    t = field(j, "t");
    detail::require(m.is_number_unsigned() && t.is_number_unsigned(), "m and t must be positive integers");
    inst.m = m.get<std::size_t>();
    inst.t = t.get<std::size_t>();
    for (auto const& a : field(j, "A")) {
      inst.A.push_back(point_set_from_json(a, inst.m));
    }
    for (auto const& b : field(j, "B")) {
      inst.B.push_back(point_set_from_json(b, inst.m));
    }
    return inst;
  }

  Amalgam amalgam_from_json(Json const& j) {
    Amalgam am;
    am.A0 = semigroup_from_json(field(j, "A0"));
    am.A1 = semigroup_from_json(field(j, "A1"));
    am.A2 = semigroup_from_json(field(j, "A2"));
    auto map_of = [&](char const* key, std::size_t bound) {
      auto const& arr = field(j, key);
      detail::require(arr.is_array() && arr.size() == am.A0.size(), std::string(key) + " must map every base element");
      std::vector<index_type> out;
      for (auto const& v : arr) {
        out.push_back(static_cast<index_type>(to_index(v, bound, key)));
      }
      return out;
    };
    am.f1           = map_of("f1", am.A1.size());
    am.f2           = map_of("f2", am.A2.size());
    am.inverse_mode = j.value("inverse_mode", false);
    if (am.inverse_mode) {
      for (auto* S : {&am.A0, &am.A1, &am.A2}) {
        if (!S->is_inverse()) {
          *S = detect_inverse(*S);
        }
      }
    }
    validate(am);
    return am;
  }

  Json read_json_file(std::string const& path) {
    std::ifstream in(path);
    detail::require(in.good(), "cannot open " + path);
    try {
      return Json::parse(in);
    } catch (nlohmann::json::exception const& e) {
      throw Error("invalid JSON in " + path + ": " + e.what());
    }
  }

  std::vector<long long> parse_int_list(std::string const& text) {
    std::string s;
    for (char c : text) {
      if (c != '[' && c != ']' && c != ' ') {
        s += c;
      }
    }
    std::vector<long long> out;
    std::stringstream      ss(s);
    std::string            item;
    while (std::getline(ss, item, ',')) {
      detail::require(!item.empty(), "empty entry in list \"" + text + "\"");
      std::size_t pos = 0;
      long long   v   = 0;
      try {
        v = std::stoll(item, &pos);
      } catch (std::exception const&) {
        throw Error("not an integer: \"" + item + "\"");
      }
      detail::require(pos == item.size(), "not an integer: \"" + item + "\"");
      out.push_back(v);
    }
    detail::require(!out.empty(), "empty list");
    return out;
  }

  std::vector<PointSet> parse_set_family(std::string const& text, std::size_t m) {
    std::vector<PointSet> out;
    std::stringstream     ss(text);
    std::string           part;
    while (std::getline(ss, part, ';')) {
      Json arr = Json::array();
      for (long long v : parse_int_list(part)) {
        arr.push_back(v);
      }
      out.push_back(point_set_from_json(arr, m));
    }
    return out;
  }

}  // namespace hsg::io
