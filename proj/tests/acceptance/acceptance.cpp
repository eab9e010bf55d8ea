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

// Acceptance run: one PASS or FAIL line per criterion, exit status 1 if
// any criterion fails.  The optional first argument is the path of the
// hsg command-line tool, used by the determinism criterion.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "hsg/amalgamation.hpp"
#include "hsg/chains.hpp"
#include "hsg/combinatorics.hpp"
#include "hsg/embeddings.hpp"
#include "hsg/green.hpp"
#include "hsg/named.hpp"
#include "hsg/semilattice.hpp"

using namespace hsg;

namespace {

  // Wall-clock limits, in seconds.
  constexpr double kGreenLimitSeconds    = 10.0;
  constexpr double kPipelineLimitSeconds = 120.0;

  constexpr std::uint64_t kFlowerSeed   = 20240601;
  constexpr std::size_t   kFlowerCount  = 1000;
  constexpr std::uint64_t kPipelineSeed = 7301;
  constexpr std::size_t   kPipelineN5   = 200;

  struct Outcome {
    bool        pass = true;
    std::string detail;
  };

  class Timer {
   public:
    double seconds() const {
      return std::chrono::duration<double>(std::chrono::steady_clock::now() - _start).count();
    }

   private:
    std::chrono::steady_clock::time_point _start = std::chrono::steady_clock::now();
  };

  std::size_t factorial(std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 2; i <= k; ++i) {
      r *= i;
    }
    return r;
  }

  std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }

  std::vector<PointSet> subsets_of_size(std::size_t n, std::size_t r) {
    std::vector<PointSet> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != r) {
        continue;
      }
      PointSet s;
      for (Point i = 0; i < n; ++i) {
        if (mask >> i & 1u) {
          s.push_back(i);
        }
      }
      out.push_back(s);
    }
    return out;
  }

  std::vector<PointSet> all_subsets(std::size_t n) {
    std::vector<PointSet> out;
    for (std::size_t r = 0; r <= n; ++r) {
      auto const s = subsets_of_size(n, r);
      out.insert(out.end(), s.begin(), s.end());
    }
    return out;
  }

  bool subset(PointSet const& a, PointSet const& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  }

  //////////////////////////////////////////////////////////////////////
  // 1
  //////////////////////////////////////////////////////////////////////

  Outcome green_oracle() {
    Timer       clock;
    Outcome     out;
    std::size_t elements = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      auto const fast = green_fast_T(n);
      auto const gen  = green_generic(table_of(fast.elements));
      auto const& F   = fast.green;
      bool ok = same_classes(F.r_class, gen.r_class) && same_classes(F.l_class, gen.l_class)
                && same_classes(F.h_class, gen.h_class) && same_classes(F.j_class, gen.j_class)
                && same_classes(F.d_class, gen.d_class) && F.idempotent == gen.idempotent;
      for (std::size_t x = 0; ok && x < F.size; ++x) {
        ok = F.group_h[F.h_class[x]] == gen.group_h[gen.h_class[x]];
        for (std::size_t y = 0; ok && y < F.size; ++y) {
          ok = F.j_leq[F.j_class[x]][F.j_class[y]] == gen.j_leq[gen.j_class[x]][gen.j_class[y]];
        }
      }
      if (!ok) {
        out.pass = false;
        out.detail += "mismatch at n=" + std::to_string(n) + "; ";
      }
      elements += F.size;
    }
    double const t = clock.seconds();
    out.pass       = out.pass && t < kGreenLimitSeconds;
    std::ostringstream os;
    os << out.detail << "T_1..T_4 (" << elements << " elements) class-for-class, " << t << " s (limit "
       << kGreenLimitSeconds << " s)";
    out.detail = os.str();
    return out;
  }

  //////////////////////////////////////////////////////////////////////
  // 2
  //////////////////////////////////////////////////////////////////////

  Outcome counting() {
    Outcome     out;
    std::size_t groups = 0, isos = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
      std::size_t nn = 1, in = 0;
      for (std::size_t i = 0; i < n; ++i) {
        nn *= n;
      }
      for (std::size_t k = 0; k <= n; ++k) {
        in += binomial(n, k) * binomial(n, k) * factorial(k);
      }
      if (all_transformations(n).size() != nn || all_partial_bijections(n).size() != in) {
        out.pass = false;
        out.detail += "count mismatch at n=" + std::to_string(n) + "; ";
      }
      auto const CG = green_fast_T(n);
      auto const& G = CG.green;
      std::vector<bool> spot(n + 1, false);
      for (index_type h = 0; h < G.num_h; ++h) {
        if (!G.group_h[h]) {
          continue;
        }
        auto const        members = G.h_members()[h];
        std::size_t const r       = CG.elements[members.front()].rank();
        ++groups;
        if (members.size() != factorial(r)) {
          out.pass = false;
          out.detail += "group order at n=" + std::to_string(n) + "; ";
        }
        if (r <= 4 && !spot[r]) {
          spot[r] = true;
          ++isos;
          if (!isomorphic(maximal_subgroup(CG, h), named::symmetric_group(r), 24)) {
            out.pass = false;
            out.detail += "no isomorphism to S_" + std::to_string(r) + "; ";
          }
        }
      }
    }
    out.detail += "|T_n|, |I_n| for n<=5; " + std::to_string(groups) + " group H-classes of order r!; "
                  + std::to_string(isos) + " isomorphisms to S_r found";
    return out;
  }

  //////////////////////////////////////////////////////////////////////
  // 3
  //////////////////////////////////////////////////////////////////////

  Outcome flower_lemma() {
    Outcome         out;
    std::mt19937_64 rng(kFlowerSeed);
    std::size_t     solved = 0, rejected = 0, failures = 0, misrejected = 0;
    while (solved < kFlowerCount) {
      std::size_t const m = std::uniform_int_distribution<std::size_t>(4, 12)(rng);
      std::size_t const t = std::uniform_int_distribution<std::size_t>(2, m / 2)(rng);
      std::size_t const k = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
      std::size_t const l = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
      std::set<PointSet> seen;
      FlowerInstance     inst{m, t, {}, {}};
      std::vector<Point> pts(m);
      std::iota(pts.begin(), pts.end(), 0);
      while (seen.size() < k + l) {
        std::shuffle(pts.begin(), pts.end(), rng);
        PointSet s(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(t));
        std::sort(s.begin(), s.end());
        if (seen.insert(s).second) {
          (inst.A.size() < k ? inst.A : inst.B).push_back(s);
        }
      }
      bool const within = decompose(inst).head.size() < t;
      try {
        auto const P = flower(inst);
        if (!within) {
          ++failures;  // solved although the hypothesis fails
        } else if (P.num_blocks() != t || !satisfies_pattern(P, inst)) {
          ++failures;
        }
        solved += within;
      } catch (FlowerHypothesisError const&) {
        if (within) {
          ++misrejected;
        } else {
          ++rejected;
        }
        solved += within;
      }
    }
    out.pass   = failures == 0 && misrejected == 0 && rejected > 0;
    out.detail = std::to_string(solved) + " seeded instances solved and verified, " + std::to_string(rejected)
                 + " hypothesis violations rejected, " + std::to_string(failures + misrejected) + " failures";
    return out;
  }

  //////////////////////////////////////////////////////////////////////
  // 4
  //////////////////////////////////////////////////////////////////////

  // A rank r map with image A and a random kernel.
  Transformation random_representative(std::size_t n, PointSet const& A, std::mt19937_64& rng) {
    std::size_t const        r = A.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::size_t> label(n);
    for (std::size_t i = 0; i < n; ++i) {
      label[order[i]] = i < r ? i : std::uniform_int_distribution<std::size_t>(0, r - 1)(rng);
    }
    Partition const    P(label);
    std::vector<Point> images(A.begin(), A.end());
    std::shuffle(images.begin(), images.end(), rng);
    return Transformation::from_kernel(P, images);
  }

  bool witness_ok(DiamondWitness const& w) {
    bool const groups = std::all_of(w.checks.a_groups.begin(), w.checks.a_groups.end(), [](bool b) { return b; })
                        && std::none_of(w.checks.b_groups.begin(), w.checks.b_groups.end(), [](bool b) { return b; });
    return w.checks.all() && groups && w.checks.c_D_a1;
  }

  Outcome pipeline() {
    Timer       clock;
    Outcome     out;
    std::size_t runs = 0, bad = 0, h_checked = 0, h_bad = 0;
    std::mt19937_64 rng(kPipelineSeed);

    for (std::size_t n = 3; n <= 5; ++n) {
      for (std::size_t r = 2; r < n; ++r) {
        auto const bundle = make_dilation_bundle(n, r, kPipelineSeed);
        if (!bundle.psi_report.ok()) {
          ++bad;
        }
        auto const sets = subsets_of_size(n, r);
        auto       run  = [&](std::vector<Transformation> const& a, std::vector<Transformation> const& b) {
          ++runs;
          if (!witness_ok(diamond_witness_from(a, b, WitnessRoute::Dilation, &bundle))) {
            ++bad;
          }
        };
        if (n <= 4) {
          // Every choice of k, l in {1, 2} distinct image sets, with the
          // canonical representative and with a random-kernel one.
          std::size_t const s = sets.size();
          for (std::size_t mask = 1; mask < (1u << s); ++mask) {
            std::vector<std::size_t> chosen;
            for (std::size_t i = 0; i < s; ++i) {
              if (mask >> i & 1u) {
                chosen.push_back(i);
              }
            }
            if (chosen.size() < 2 || chosen.size() > 4) {
              continue;
            }
            // Split the chosen sets into Omega (first k) and Sigma in every way.
            std::vector<std::size_t> perm = chosen;
            std::sort(perm.begin(), perm.end());
            do {
              for (std::size_t k = 1; k <= 2; ++k) {
                std::size_t const l = perm.size() - k;
                if (l < 1 || l > 2 || !std::is_sorted(perm.begin(), perm.begin() + k)
                    || !std::is_sorted(perm.begin() + k, perm.end())) {
                  continue;
                }
                std::vector<Transformation> a, b, ra, rb;
                for (std::size_t i = 0; i < perm.size(); ++i) {
                  auto const& A = sets[perm[i]];
                  (i < k ? a : b).push_back(canonical_representative(n, A));
                  (i < k ? ra : rb).push_back(random_representative(n, A, rng));
                }
                run(a, b);
                run(ra, rb);
              }
            } while (std::next_permutation(perm.begin(), perm.end()));
          }
          // |H_{αι}| = (r + |Y|)! over all of D_r.
          auto const& ctx = bundle.ctx;
          for (auto const& alpha : all_transformations(n)) {
            if (alpha.rank() != r) {
              continue;
            }
            ++h_checked;
            if (ctx.row_h_class(alpha).size() != factorial(r + ctx.y())) {
              ++h_bad;
            }
          }
        } else {
          std::size_t const per_r = kPipelineN5 / (n - 2);
          for (std::size_t i = 0; i < per_r + (r == 2 ? kPipelineN5 % (n - 2) : 0); ++i) {
            std::size_t const k = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
            std::size_t const l = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
            auto              pool = sets;
            std::shuffle(pool.begin(), pool.end(), rng);
            std::vector<Transformation> a, b;
            for (std::size_t j = 0; j < k + l; ++j) {
              (j < k ? a : b).push_back(random_representative(n, pool[j], rng));
            }
            run(a, b);
          }
        }
      }
    }
    double const t = clock.seconds();
    out.pass       = bad == 0 && h_bad == 0 && t < kPipelineLimitSeconds;
    std::ostringstream os;
    os << runs << " witnesses via dilation, " << bad << " failed; " << h_checked << " H-class sizes checked, "
       << h_bad << " wrong; " << t << " s (limit " << kPipelineLimitSeconds << " s)";
    out.detail = os.str();
    return out;
  }

  //////////////////////////////////////////////////////////////////////
  // 5
  //////////////////////////////////////////////////////////////////////

  Outcome lemma_image() {
    Outcome     out;
    std::size_t checked = 0, bad = 0;
    for (std::size_t n = 3; n <= 4; ++n) {
      for (std::size_t r = 2; r < n; ++r) {
        auto const ctx = build_dilation(n, r);
        for (auto const& alpha : all_transformations(n)) {
          if (alpha.rank() != r) {
            continue;
          }
          ++checked;
          // im α ∪ (R_ε ∩ L_{αι}) ∪ {0}, assembled here from scratch.
          PointSet expect = alpha.image_set();
          auto const ai   = ctx.iota(alpha);
          for (auto const& g : ctx.r_epsilon()) {
            if (g.image_set() == ai.image_set()) {
              expect.push_back(ctx.point_of(g));
            }
          }
          expect.push_back(ctx.zero_point());
          std::sort(expect.begin(), expect.end());
          if (ctx.psi(alpha).image_set() != expect) {
            ++bad;
          }
        }
      }
    }
    out.pass   = bad == 0 && checked > 0;
    out.detail = std::to_string(checked) + " elements of D_r for 3 <= n <= 4, " + std::to_string(bad) + " mismatches";
    return out;
  }

  //////////////////////////////////////////////////////////////////////
  // 6
  //////////////////////////////////////////////////////////////////////

  Outcome chains_below() {
    Outcome     out;
    std::size_t pairs = 0, bad = 0, sequences = 0;
    for (auto const& f : all_transformations(4)) {
      if (!f.is_idempotent()) {
        continue;
      }
      std::vector<std::size_t> ranks;
      for (std::size_t r = 1; r < f.rank(); ++r) {
        ++pairs;
        auto const e = idempotent_chain_T(f, r);
        if (!(e.is_idempotent() && e.rank() == r && e * f == e && f * e == e)) {
          ++bad;
        }
        ranks.push_back(r);
      }
      if (ranks.empty()) {
        continue;
      }
      ++sequences;
      auto const seq = idempotent_chain_T_sequence(f, ranks);
      for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = 0; j < seq.size(); ++j) {
          if (seq[i] * seq[j] != seq[std::min(i, j)]) {
            ++bad;
          }
        }
        if (seq[i].rank() != ranks[i] || seq[i] * f != seq[i] || f * seq[i] != seq[i]) {
          ++bad;
        }
      }
    }
    out.pass   = bad == 0 && pairs > 0;
    out.detail = std::to_string(pairs) + " (f, r) pairs in T_4 and " + std::to_string(sequences)
                 + " chains, " + std::to_string(bad) + " failures";
    return out;
  }

  //////////////////////////////////////////////////////////////////////
  // 7
  //////////////////////////////////////////////////////////////////////

  Outcome hat_and_star() {
    Outcome     out;
    std::size_t hats = 0, hat_bad = 0;
    auto const  s3 = all_subsets(3);
    for (auto const& X : s3) {
      for (auto const& Y : s3) {
        PointSet XY;
        std::set_intersection(X.begin(), X.end(), Y.begin(), Y.end(), std::back_inserter(XY));
        auto const            hx = hat(3, X).elements, hy = hat(3, Y).elements;
        std::vector<index_type> meet;
        std::set_intersection(hx.begin(), hx.end(), hy.begin(), hy.end(), std::back_inserter(meet));
        ++hats;
        hat_bad += hat(3, XY).elements != meet;
      }
    }
    std::size_t valid = 0, star_bad = 0;
    auto const  s4 = all_subsets(4);
    for (auto const& A : s4) {
      for (auto const& C : s4) {
        for (auto const& D : s4) {
          if (!subset(D, A)) {
            continue;
          }
          for (auto const& E : s4) {
            if (!subset(E, A)) {
              continue;
            }
            try {
              check_star_precondition(A, C, D, E);
            } catch (StarPreconditionError const&) {
              continue;
            }
            ++valid;
            star_bad += !star_witness(4, A, C, D, E).all();
          }
        }
      }
    }
    out.pass   = hat_bad == 0 && star_bad == 0 && valid > 0;
    out.detail = std::to_string(hats) + " hat intersections on [3], " + std::to_string(valid)
                 + " valid (A,C,D,E) on [4], " + std::to_string(hat_bad + star_bad) + " failures";
    return out;
  }

  //////////////////////////////////////////////////////////////////////
  // 8
  //////////////////////////////////////////////////////////////////////

  Outcome below_inverse() {
    Outcome     out;
    std::size_t pairs = 0, bad = 0;
    for (std::size_t n = 3; n <= 4; ++n) {
      auto const S = detect_inverse(table_of(all_partial_bijections(n)));
      auto const G = green_generic(S);
      for (index_type f : S.idempotents()) {
        for (index_type j = 0; j < G.num_j; ++j) {
          if (!G.j_leq[j][G.j_class[f]]) {
            continue;
          }
          ++pairs;
          try {
            auto const w = idempotent_below_inverse(S, G, f, j);
            bool const ok = G.idempotent[w.e] && S.product(w.e, f) == w.e && S.product(f, w.e) == w.e
                            && G.j_class[w.e] == j;
            bad += !ok;
          } catch (Error const&) {
            ++bad;
          }
        }
      }
    }
    out.pass   = bad == 0 && pairs > 0;
    out.detail = std::to_string(pairs) + " (f, J) pairs in I_3 and I_4, " + std::to_string(bad) + " failures";
    return out;
  }

  //////////////////////////////////////////////////////////////////////
  // 9
  //////////////////////////////////////////////////////////////////////

  Outcome fixed_points() {
    Outcome    out;
    auto const stage = build_chain(ChainKind::T, 2, 1, true);
    auto const base  = all_transformations(2);
    auto const imgs  = cayley_images_T(2);
    bool       ok    = stage.table && stage.table->size() == 256 && stage.embedding_agrees.value_or(false);
    std::string counts;
    for (std::size_t i = 0; i < base.size(); ++i) {
      // The image as an element of the materialized stage, and its fixed
      // points counted there.
      auto const it = std::find(stage.t_elements.begin(), stage.t_elements.end(), imgs[i]);
      ok            = ok && it != stage.t_elements.end();
      std::size_t direct = 0;
      for (std::size_t p = 0; p < it->degree(); ++p) {
        direct += (*it)[p] == p;
      }
      std::size_t const f = base[i].fixed_points().size();
      ok                  = ok && direct == f * f && track_fix(1, base[i]).fix_counts[1] == direct;
      counts += (counts.empty() ? "" : ",") + std::to_string(direct);
    }
    auto const cert = nonconjugacy_certificate(5, 5);
    ok = ok && cert.ok() && cert.h_order == 120 && cert.brute_force_conjugate == false && cert.fix_alpha == 3
         && cert.fix_beta == 1;
    out.pass   = ok;
    out.detail = "F_1 over T_2 = {" + counts + "}; (12), (12)(34) in a 120-element H-class: conjugate="
                 + (cert.brute_force_conjugate.value_or(true) ? "yes" : "no");
    return out;
  }

  //////////////////////////////////////////////////////////////////////
  // 10
  //////////////////////////////////////////////////////////////////////

  Outcome duality() {
    Outcome    out;
    auto const T3  = named::full_transformation(3);
    auto const rep = duality_check(T3);
    auto const G   = green_generic(T3);
    bool       ok  = rep.ok() && rep.gh_part_swap.size() == G.num_d;
    std::size_t lib = 0;
    for (auto const& [name, S] : named::library()) {
      auto const g = green_generic(S);
      ok           = ok && duality_transform(duality_transform(S, g)) == g;
      ++lib;
    }
    out.pass   = ok;
    out.detail = "T_3: " + std::to_string(rep.gh_part_swap.size())
                 + " D-classes part-swap; involution on " + std::to_string(lib) + " library semigroups";
    return out;
  }

  //////////////////////////////////////////////////////////////////////
  // 11
  //////////////////////////////////////////////////////////////////////

  Outcome classification() {
    Outcome     out;
    std::size_t unknown = 0, checked = 0;
    auto        expect  = [&](std::string const& name, Membership m) {
      ++checked;
      auto const v = classify_B(named::by_name(name));
      if (v.status != m) {
        out.pass = false;
        out.detail += name + " gave " + to_string(v.status) + "; ";
      }
    };
    for (auto const* name : {"T1", "T2", "T3", "T2opp", "T3opp", "I1", "I2", "I3", "Z2", "Z3", "Z4", "K4", "S3",
                             "C2", "C3", "C4", "B2"}) {
      expect(name, Membership::Member);
    }
    for (auto const* name : {"L2", "R2", "L3", "RB2x2", "V3"}) {
      expect(name, Membership::NonMember);
    }
    for (auto const& [name, S] : named::library()) {
      unknown += classify_B(S).status == Membership::Unknown;
    }
    out.pass = out.pass && unknown >= 1;
    out.detail += std::to_string(checked) + " expected verdicts matched, " + std::to_string(unknown)
                  + " honest Unknown in the library";
    return out;
  }

  //////////////////////////////////////////////////////////////////////
  // 12
  //////////////////////////////////////////////////////////////////////

  struct Run {
    int         status = -1;
    std::string out;
  };

  Run run(std::string const& cmd) {
    Run         r;
    std::FILE*  pipe = ::popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) {
      return r;
    }
    std::array<char, 4096> buf{};
    std::size_t            got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
      r.out.append(buf.data(), got);
    }
    int const raw = ::pclose(pipe);
    r.status      = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
  }

  Outcome determinism(std::string const& cli) {
    Outcome out;
    if (cli.empty()) {
      out.pass   = false;
      out.detail = "no CLI path given";
      return out;
    }
    auto const dir = std::filesystem::temp_directory_path() / ("hsg_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    auto const flower_file = (dir / "flower.json").string();
    auto const dual_file   = (dir / "dual.json").string();
    std::ofstream(flower_file) << R"({"m": 6, "t": 2, "A": [[1, 2], [1, 3]], "B": [[1, 4]]})";
    std::ofstream(dual_file) << R"({"m": 4, "P": [[[1, 2], [3, 4]], [[1, 3], [2, 4]]], "Q": [[[1, 4], [2, 3]]]})";

    std::vector<std::pair<std::string, bool>> const commands{
        {"eggbox --family T --n 3", true},
        {"eggbox --family I --n 2 --format ascii", false},
        {"eggbox --name V3", true},
        {"flower " + flower_file, true},
        {"witness --n 4 --r 2 --omega 1,2;1,3 --sigma 3,4 --seed 5", true},
        {"witness --n 3 --r 2 --omega 1,2 --sigma 1,3 --route dilation --seed 9", true},
        {"dilation --n 3 --r 2 --samples 4 --seed 11", true},
        {"classify --name L2", true},
        {"classify --family I --n 2 --mode A", true},
        {"chain --kind T --n 2 --depth 2 --track 1,2", true},
        {"chain --kind I --n 2 --depth 1 --track 1,0", true},
        {"j-order --kind T --n 2 --depth 2", true},
        {"nonconjugacy --n 5 --r 5", true},
        {"duality --family T --n 3", true},
        {"graph --family T --n 3 --rank 2", false},
        {"graph --family I --n 3 --rank 1 --format json", true},
        {"poset --family I --n 3", false},
        {"dual-search " + dual_file, true},
        {"amalgam --fixture groups", true},
    };
    std::size_t same = 0;
    for (auto const& [args, is_json] : commands) {
      std::string const cmd = "'" + cli + "' " + [&] {
        // Quote arguments containing ';'.
        std::string q, word;
        std::istringstream is(args);
        while (is >> word) {
          q += (q.empty() ? "" : " ") + (word.find(';') != std::string::npos ? "'" + word + "'" : word);
        }
        return q;
      }();
      auto const a = run(cmd), b = run(cmd);
      bool const ok = a.status == 0 && b.status == 0 && !a.out.empty() && a.out == b.out
                      && (!is_json || a.out.find("\"version\"") != std::string::npos);
      if (ok) {
        ++same;
      } else {
        out.pass = false;
        out.detail += "[" + args + "] differs or failed; ";
      }
    }
    std::filesystem::remove_all(dir);
    out.detail += std::to_string(same) + "/" + std::to_string(commands.size())
                  + " commands byte-identical across two runs with version stamps";
    return out;
  }

}  // namespace

int main(int argc, char** argv) {
  std::string const cli = argc > 1 ? argv[1] : "";

  std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria{
      {"Green's oracle equivalence", green_oracle},
      {"counting identities", counting},
      {"Flower Lemma on seeded instances", flower_lemma},
      {"witness pipeline", pipeline},
      {"image of the dilation", lemma_image},
      {"idempotent chains in T_4", chains_below},
      {"hat embedding and star witness", hat_and_star},
      {"idempotents below in I_3, I_4", below_inverse},
      {"fixed points and non-conjugacy", fixed_points},
      {"duality", duality},
      {"classification", classification},
      {"CLI determinism", [&] { return determinism(cli); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o.pass   = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << (i + 1) << " " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
