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

// hsg: command-line front end.  Every subcommand writes one report
// (JSON unless stated otherwise) to stdout or --output.
//
// Exit codes: 0 success, 1 a self-verification failed, 2 bad input,
// 3 a size cap was hit.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hsg/error.hpp"
#include "hsg/reports.hpp"

namespace {

  using hsg::reports::Json;
  using hsg::reports::SemigroupSource;

  constexpr int kExitOk           = 0;
  constexpr int kExitVerification = 1;
  constexpr int kExitInput        = 2;
  constexpr int kExitCap          = 3;

  struct SourceArgs {
    std::string family = "T";
    std::size_t n      = 3;
    std::string name;
    std::string table;

    void attach(CLI::App* app) {
      app->add_option("--family", family, "T, I, named or custom")
          ->check(CLI::IsMember({"T", "I", "named", "custom"}))
          ->capture_default_str();
      app->add_option("--n", n, "degree for the T and I families")->capture_default_str();
      app->add_option("--name", name, "library name such as L2, V3, B2, T3opp (implies --family named)");
      app->add_option("--table", table, "JSON file {size, table, inverse?} (implies --family custom)");
    }

    SemigroupSource resolve() const {
      SemigroupSource src;
      src.family = family;
      src.n      = n;
      if (!name.empty()) {
        src.family = "named";
        src.name   = name;
      }
      if (!table.empty()) {
        src.family = "custom";
        src.table  = hsg::io::semigroup_from_json(hsg::io::read_json_file(table));
      }
      return src;
    }
  };

  struct Output {
    std::string path;
    void        attach(CLI::App* app) {
      app->add_option("-o,--output", path, "write the report here instead of stdout");
    }
    void write(std::string const& text) const {
      if (path.empty()) {
        std::cout << text;
        return;
      }
      std::ofstream out(path);
      hsg::detail::require(out.good(), "cannot write " + path);
      out << text;
    }
  };

  hsg::WitnessRoute route_of(std::string const& s) {
    if (s == "direct") {
      return hsg::WitnessRoute::Direct;
    }
    if (s == "dilation") {
      return hsg::WitnessRoute::Dilation;
    }
    return hsg::WitnessRoute::Auto;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hsg: finite-scale experiments on homogeneous semigroups"};
  app.set_version_flag("--version", std::string(HSG_VERSION));
  app.require_subcommand(1);

  // The action selected on the command line; returns the report.
  std::function<Json()>        json_action;
  std::function<std::string()> text_action;
  Output                       output;

  // eggbox
  SourceArgs egg_src;
  std::string egg_format = "json";
  auto* egg = app.add_subcommand("eggbox", "egg-box diagrams of every D-class");
  egg_src.attach(egg);
  egg->add_option("--format", egg_format, "json or ascii")->check(CLI::IsMember({"json", "ascii"}));
  output.attach(egg);
  egg->callback([&] {
    if (egg_format == "ascii") {
      text_action = [&] { return hsg::reports::eggbox_ascii(egg_src.resolve()); };
    } else {
      json_action = [&] { return hsg::reports::eggbox(egg_src.resolve()); };
    }
  });

  // flower
  std::string flower_file;
  auto* flw = app.add_subcommand("flower", "partition with prescribed transversals");
  flw->add_option("instance", flower_file, "JSON file {m, t, A, B} with 1-based points")->required();
  output.attach(flw);
  flw->callback([&] {
    json_action = [&] { return hsg::reports::flower(hsg::io::flower_from_json(hsg::io::read_json_file(flower_file))); };
  });

  // witness
  std::size_t   w_n = 4, w_r = 2;
  std::string   w_omega, w_sigma, w_route = "auto";
  std::uint64_t w_seed = 0;
  auto* wit = app.add_subcommand("witness", "an element D-related to given ones with prescribed group H-classes");
  wit->add_option("--n", w_n)->required();
  wit->add_option("--r", w_r)->required();
  wit->add_option("--omega", w_omega, "r-subsets giving group H-classes, e.g. \"1,2;1,3\"")->required();
  wit->add_option("--sigma", w_sigma, "r-subsets giving non-group H-classes")->required();
  wit->add_option("--route", w_route)->check(CLI::IsMember({"auto", "direct", "dilation"}))->capture_default_str();
  wit->add_option("--seed", w_seed)->capture_default_str();
  output.attach(wit);
  wit->callback([&] {
    json_action = [&] {
      return hsg::reports::witness(w_n, w_r, hsg::io::parse_set_family(w_omega, w_n),
                                   hsg::io::parse_set_family(w_sigma, w_n), route_of(w_route), w_seed);
    };
  });

  // dilation
  std::size_t   dl_n = 3, dl_r = 2, dl_samples = 5;
  std::uint64_t dl_seed = 0;
  auto* dil = app.add_subcommand("dilation", "the dilation embedding with sampled images");
  dil->add_option("--n", dl_n)->required();
  dil->add_option("--r", dl_r)->required();
  dil->add_option("--samples", dl_samples)->capture_default_str();
  dil->add_option("--seed", dl_seed)->capture_default_str();
  output.attach(dil);
  dil->callback([&] { json_action = [&] { return hsg::reports::dilation(dl_n, dl_r, dl_seed, dl_samples); }; });

  // classify
  SourceArgs  cl_src;
  std::string cl_mode = "B";
  auto* cls = app.add_subcommand("classify", "amalgamation-base verdict");
  cl_src.attach(cls);
  cls->add_option("--mode", cl_mode, "A (inverse) or B")->check(CLI::IsMember({"A", "B"}))->capture_default_str();
  output.attach(cls);
  cls->callback([&] { json_action = [&] { return hsg::reports::classify(cl_src.resolve(), cl_mode[0]); }; });

  // chain
  std::string                ch_kind = "T";
  std::size_t                ch_n = 2, ch_depth = 1;
  std::optional<std::string> ch_track;
  auto* chn = app.add_subcommand("chain", "iterated regular-representation towers");
  chn->add_option("--kind", ch_kind)->check(CLI::IsMember({"T", "I"}))->capture_default_str();
  chn->add_option("--n", ch_n)->capture_default_str();
  chn->add_option("--depth", ch_depth)->capture_default_str();
  chn->add_option("--track", ch_track, "element of S_0 as 1-based images, 0 for undefined");
  output.attach(chn);
  chn->callback([&] {
    json_action = [&] {
      return hsg::reports::chain(hsg::chain_kind_from_string(ch_kind), ch_n, ch_depth, ch_track);
    };
  });

  // j-order
  std::string jo_kind = "T";
  std::size_t jo_n = 2, jo_depth = 1;
  auto* jor = app.add_subcommand("j-order", "J-chains along a tower (finite evidence)");
  jor->add_option("--kind", jo_kind)->check(CLI::IsMember({"T", "I"}))->capture_default_str();
  jor->add_option("--n", jo_n)->capture_default_str();
  jor->add_option("--depth", jo_depth)->capture_default_str();
  output.attach(jor);
  jor->callback([&] {
    json_action = [&] { return hsg::reports::j_order(hsg::chain_kind_from_string(jo_kind), jo_n, jo_depth); };
  });

  // nonconjugacy
  std::size_t nc_n = 5, nc_r = 5;
  auto* ncj = app.add_subcommand("nonconjugacy", "certificate for the involutions (12) and (12)(34)");
  ncj->add_option("--n", nc_n)->capture_default_str();
  ncj->add_option("--r", nc_r)->capture_default_str();
  output.attach(ncj);
  ncj->callback([&] { json_action = [&] { return hsg::reports::nonconjugacy(nc_n, nc_r); }; });

  // duality
  SourceArgs du_src;
  auto* dua = app.add_subcommand("duality", "Green structure of the opposite semigroup");
  du_src.attach(dua);
  output.attach(dua);
  dua->callback([&] { json_action = [&] { return hsg::reports::duality(du_src.resolve()); }; });

  // graph
  SourceArgs  gr_src;
  std::size_t gr_rank = 1;
  std::string gr_format = "dot";
  auto* grh = app.add_subcommand("graph", "Graham-Houghton graph of a D-class");
  gr_src.attach(grh);
  grh->add_option("--rank", gr_rank, "rank for T and I, D-class index otherwise")->capture_default_str();
  grh->add_option("--format", gr_format)->check(CLI::IsMember({"dot", "json"}))->capture_default_str();
  output.attach(grh);
  grh->callback([&] {
    if (gr_format == "dot") {
      text_action = [&] { return hsg::reports::gh_dot(gr_src.resolve(), gr_rank); };
    } else {
      json_action = [&] { return hsg::reports::gh(gr_src.resolve(), gr_rank); };
    }
  });

  // poset
  SourceArgs po_src;
  auto* pos = app.add_subcommand("poset", "Hasse diagram (DOT) of the idempotents of an inverse semigroup");
  po_src.attach(pos);
  output.attach(pos);
  pos->callback([&] { text_action = [&] { return hsg::reports::poset_dot(po_src.resolve()); }; });

  // dual-search
  std::string ds_file;
  auto* dsr = app.add_subcommand("dual-search", "a common transversal of P avoiding every Q");
  dsr->add_option("instance", ds_file, "JSON file {m, P: [partitions], Q: [partitions]}")->required();
  output.attach(dsr);
  dsr->callback([&] {
    json_action = [&] {
      auto const                  j = hsg::io::read_json_file(ds_file);
      std::size_t const           m = j.at("m").get<std::size_t>();
      std::vector<hsg::Partition> P, Q;
      for (auto const& p : j.at("P")) {
        P.push_back(hsg::io::partition_from_json(p, m));
      }
      for (auto const& q : j.at("Q")) {
        Q.push_back(hsg::io::partition_from_json(q, m));
      }
      return hsg::reports::dual_search(P, Q);
    };
  });

  // amalgam
  std::string am_fixture, am_file;
  std::size_t am_degree = 4, am_budget = 2'000'000;
  auto* amg = app.add_subcommand("amalgam", "search for a completion of a small amalgam");
  amg->add_option("--fixture", am_fixture, "identity-T2, groups or v3-inverse");
  amg->add_option("--file", am_file, "JSON file {A0, A1, A2, f1, f2, inverse_mode}");
  amg->add_option("--max-degree", am_degree)->capture_default_str();
  amg->add_option("--budget", am_budget, "search node budget")->capture_default_str();
  output.attach(amg);
  amg->callback([&] {
    json_action = [&] {
      hsg::detail::require(am_fixture.empty() != am_file.empty(), "give exactly one of --fixture and --file");
      auto const am = am_fixture.empty() ? hsg::io::amalgam_from_json(hsg::io::read_json_file(am_file))
                                         : hsg::amalgam_fixture(am_fixture);
      return hsg::reports::amalgam(am, am_fixture.empty() ? am_file : am_fixture, am_degree, am_budget);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (text_action) {
      output.write(text_action());
      return kExitOk;
    }
    Json const report = json_action();
    output.write(report.dump(2) + "\n");
    return report.value("verified", true) ? kExitOk : kExitVerification;
  } catch (hsg::VerificationFailure const& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (hsg::CapExceeded const& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (hsg::Error const& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (nlohmann::json::exception const& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  }
}
