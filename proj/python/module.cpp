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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "hsg/amalgamation.hpp"
#include "hsg/error.hpp"
#include "hsg/reports.hpp"
#include "hsg/transformation.hpp"

namespace py = pybind11;

namespace {

  using hsg::reports::Json;
  using hsg::reports::SemigroupSource;

  SemigroupSource source(std::string const& family, std::size_t n, std::string const& name, std::string const& table) {
    SemigroupSource src;
    src.family = family;
    src.n      = n;
    if (!name.empty()) {
      src.family = "named";
      src.name   = name;
    }
    if (!table.empty()) {
      src.family = "custom";
      src.table  = hsg::io::semigroup_from_json(Json::parse(table));
    }
    return src;
  }

  std::vector<hsg::PointSet> sets(std::vector<std::vector<long long>> const& family, std::size_t m) {
    std::vector<hsg::PointSet> out;
    for (auto const& s : family) {
      out.push_back(hsg::io::point_set_from_json(Json(s), m));
    }
    return out;
  }

  hsg::WitnessRoute route_of(std::string const& s) {
    if (s == "direct") {
      return hsg::WitnessRoute::Direct;
    }
    if (s == "dilation") {
      return hsg::WitnessRoute::Dilation;
    }
    hsg::detail::require(s == "auto", "route must be auto, direct or dilation");
    return hsg::WitnessRoute::Auto;
  }

}  // namespace

PYBIND11_MODULE(_hsg, m) {
  m.doc() = "Finite-scale semigroup constructions; reports are JSON strings.";

  // Errors map onto Python exceptions; CapExceeded and VerificationFailure
  // are subclasses of HsgError.
  static py::exception<hsg::Error> error(m, "HsgError", PyExc_ValueError);
  static py::exception<hsg::CapExceeded> cap(m, "CapExceeded", error.ptr());
  static py::exception<hsg::VerificationFailure> verification(m, "VerificationFailure", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (hsg::CapExceeded const& e) {
      py::set_error(cap, e.what());
    } catch (hsg::VerificationFailure const& e) {
      py::set_error(verification, e.what());
    } catch (hsg::Error const& e) {
      py::set_error(error, e.what());
    } catch (nlohmann::json::exception const& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("version", &hsg::reports::version);

  m.def(
      "compose",
      [](std::vector<long long> const& a, std::vector<long long> const& b) {
        auto const x = hsg::io::transformation_from_json(Json(a));
        auto const y = hsg::io::transformation_from_json(Json(b));
        return hsg::io::to_json(x * y)["images"].get<std::vector<long long>>();
      },
      "Left-to-right product of two transformations given as 1-based image lists.");

  m.def(
      "eggbox",
      [](std::string const& family, std::size_t n, std::string const& name, std::string const& table) {
        return hsg::reports::eggbox(source(family, n, name, table)).dump();
      },
      py::arg("family") = "T", py::arg("n") = 3, py::arg("name") = "", py::arg("table") = "");

  m.def(
      "eggbox_ascii",
      [](std::string const& family, std::size_t n, std::string const& name, std::string const& table) {
        return hsg::reports::eggbox_ascii(source(family, n, name, table));
      },
      py::arg("family") = "T", py::arg("n") = 3, py::arg("name") = "", py::arg("table") = "");

  m.def(
      "classify",
      [](std::string const& family, std::size_t n, std::string const& name, std::string const& table,
         std::string const& mode) {
        hsg::detail::require(mode == "A" || mode == "B", "mode must be A or B");
        return hsg::reports::classify(source(family, n, name, table), mode[0]).dump();
      },
      py::arg("family") = "T", py::arg("n") = 3, py::arg("name") = "", py::arg("table") = "",
      py::arg("mode") = "B");

  m.def(
      "duality",
      [](std::string const& family, std::size_t n, std::string const& name, std::string const& table) {
        return hsg::reports::duality(source(family, n, name, table)).dump();
      },
      py::arg("family") = "T", py::arg("n") = 3, py::arg("name") = "", py::arg("table") = "");

  m.def(
      "graph",
      [](std::string const& family, std::size_t n, std::size_t rank, std::string const& name,
         std::string const& table) { return hsg::reports::gh(source(family, n, name, table), rank).dump(); },
      py::arg("family") = "T", py::arg("n") = 3, py::arg("rank") = 1, py::arg("name") = "", py::arg("table") = "");

  m.def(
      "poset_dot",
      [](std::string const& family, std::size_t n, std::string const& name, std::string const& table) {
        return hsg::reports::poset_dot(source(family, n, name, table));
      },
      py::arg("family") = "I", py::arg("n") = 2, py::arg("name") = "", py::arg("table") = "");

  m.def(
      "flower", [](std::string const& instance) {
        return hsg::reports::flower(hsg::io::flower_from_json(Json::parse(instance))).dump();
      },
      py::arg("instance"));

  m.def(
      "witness",
      [](std::size_t n, std::size_t r, std::vector<std::vector<long long>> const& omega,
         std::vector<std::vector<long long>> const& sigma, std::string const& route, std::uint64_t seed) {
        return hsg::reports::witness(n, r, sets(omega, n), sets(sigma, n), route_of(route), seed).dump();
      },
      py::arg("n"), py::arg("r"), py::arg("omega"), py::arg("sigma"), py::arg("route") = "auto",
      py::arg("seed") = 0);

  m.def(
      "dilation",
      [](std::size_t n, std::size_t r, std::uint64_t seed, std::size_t samples) {
        return hsg::reports::dilation(n, r, seed, samples).dump();
      },
      py::arg("n"), py::arg("r"), py::arg("seed") = 0, py::arg("samples") = 5);

  m.def(
      "chain",
      [](std::string const& kind, std::size_t n, std::size_t depth, std::optional<std::string> const& track) {
        return hsg::reports::chain(hsg::chain_kind_from_string(kind), n, depth, track).dump();
      },
      py::arg("kind") = "T", py::arg("n") = 2, py::arg("depth") = 1, py::arg("track") = py::none());

  m.def(
      "j_order",
      [](std::string const& kind, std::size_t n, std::size_t depth) {
        return hsg::reports::j_order(hsg::chain_kind_from_string(kind), n, depth).dump();
      },
      py::arg("kind") = "T", py::arg("n") = 2, py::arg("depth") = 1);

  m.def(
      "nonconjugacy", [](std::size_t n, std::size_t r) { return hsg::reports::nonconjugacy(n, r).dump(); },
      py::arg("n") = 5, py::arg("r") = 5);

  m.def(
      "dual_search",
      [](std::string const& instance) {
        auto const                  j = Json::parse(instance);
        std::size_t const           mm = j.at("m").get<std::size_t>();
        std::vector<hsg::Partition> P, Q;
        for (auto const& p : j.at("P")) {
          P.push_back(hsg::io::partition_from_json(p, mm));
        }
        for (auto const& q : j.at("Q")) {
          Q.push_back(hsg::io::partition_from_json(q, mm));
        }
        return hsg::reports::dual_search(P, Q).dump();
      },
      py::arg("instance"));

  m.def(
      "amalgam",
      [](std::string const& fixture, std::size_t max_degree, std::size_t budget) {
        return hsg::reports::amalgam(hsg::amalgam_fixture(fixture), fixture, max_degree, budget).dump();
      },
      py::arg("fixture"), py::arg("max_degree") = 4, py::arg("budget") = 2'000'000);
}
