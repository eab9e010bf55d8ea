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

#include "hsg/named.hpp"

#include <regex>

#include "hsg/transformation.hpp"

namespace hsg::named {

  namespace {
    template <typename F>
    FiniteSemigroup from_rule(std::size_t n, F f) {
      std::vector<index_type> table(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          table[a * n + b] = static_cast<index_type>(f(a, b));
        }
      }
      return detect_inverse(FiniteSemigroup(n, std::move(table)));
    }
  }  // namespace

  FiniteSemigroup left_zero(std::size_t k) {
    return from_rule(k, [](std::size_t a, std::size_t) { return a; });
  }

  FiniteSemigroup right_zero(std::size_t k) {
    return from_rule(k, [](std::size_t, std::size_t b) { return b; });
  }

  FiniteSemigroup chain(std::size_t k) {
    return from_rule(k, [](std::size_t a, std::size_t b) { return std::min(a, b); });
  }

  FiniteSemigroup v3() {
    return from_rule(3, [](std::size_t a, std::size_t b) { return a == b ? a : 2; });
  }

  FiniteSemigroup cyclic_group(std::size_t k) {
    return from_rule(k, [k](std::size_t a, std::size_t b) { return (a + b) % k; });
  }

  FiniteSemigroup klein_four() {
    return from_rule(4, [](std::size_t a, std::size_t b) { return a ^ b; });
  }

  FiniteSemigroup symmetric_group(std::size_t k) {
    std::vector<Transformation> perms;
    std::vector<Point>          im(k);
    for (std::size_t i = 0; i < k; ++i) {
      im[i] = static_cast<Point>(i);
    }
    do {
      perms.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return detect_inverse(table_of(perms));
  }

  FiniteSemigroup full_transformation(std::size_t k) {
    return table_of(all_transformations(k));
  }

  FiniteSemigroup full_transformation_opp(std::size_t k) {
    return opposite(full_transformation(k));
  }

  FiniteSemigroup symmetric_inverse(std::size_t k) {
    return table_of(all_partial_bijections(k));
  }

  FiniteSemigroup brandt(std::size_t n) {
    std::size_t const zero = n * n;
    return from_rule(zero + 1, [n, zero](std::size_t a, std::size_t b) -> std::size_t {
      if (a == zero || b == zero) {
        return zero;
      }
      std::size_t const i = a / n, j = a % n, k = b / n, l = b % n;
      return j == k ? i * n + l : zero;
    });
  }

  FiniteSemigroup null_semigroup(std::size_t k) {
    return from_rule(k, [](std::size_t, std::size_t) { return 0; });
  }

  FiniteSemigroup rectangular_band(std::size_t rows, std::size_t cols) {
    return from_rule(rows * cols, [cols](std::size_t a, std::size_t b) { return (a / cols) * cols + (b % cols); });
  }

  FiniteSemigroup rees_matrix(std::vector<std::vector<int>> const& P) {
    detail::require(!P.empty() && !P.front().empty(), "structure matrix must be nonempty");
    std::size_t const lambda = P.size(), I = P.front().size();
    std::size_t const zero   = I * lambda;
    return from_rule(zero + 1, [&](std::size_t a, std::size_t b) -> std::size_t {
      if (a == zero || b == zero) {
        return zero;
      }
      std::size_t const i = a / lambda, l = a % lambda, j = b / lambda, m = b % lambda;
      return P[l][j] != 0 ? i * lambda + m : zero;
    });
  }

  FiniteSemigroup monogenic(std::size_t index, std::size_t period) {
    detail::require(index >= 1 && period >= 1, "index and period must be positive");
    std::size_t const n = index + period - 1;  // a^1 .. a^n
    auto reduce         = [index, period](std::size_t e) {  // exponent >= 1
      return e < index + period ? e : index + (e - index) % period;
    };
    return from_rule(n, [&](std::size_t a, std::size_t b) { return reduce(a + 1 + b + 1) - 1; });
  }

  std::vector<std::pair<std::string, FiniteSemigroup>> library() {
    return {
        {"T1", full_transformation(1)},
        {"T2", full_transformation(2)},
        {"T3", full_transformation(3)},
        {"T2opp", full_transformation_opp(2)},
        {"T3opp", full_transformation_opp(3)},
        {"I1", symmetric_inverse(1)},
        {"I2", symmetric_inverse(2)},
        {"Z2", cyclic_group(2)},
        {"Z3", cyclic_group(3)},
        {"Z4", cyclic_group(4)},
        {"K4", klein_four()},
        {"S3", symmetric_group(3)},
        {"C2", chain(2)},
        {"C3", chain(3)},
        {"C4", chain(4)},
        {"L2", left_zero(2)},
        {"R2", right_zero(2)},
        {"L3", left_zero(3)},
        {"RB2x2", rectangular_band(2, 2)},
        {"V3", v3()},
        {"B2", brandt(2)},
        {"N2", null_semigroup(2)},
        {"N3", null_semigroup(3)},
        {"M2_1", monogenic(2, 1)},
    };
  }

  FiniteSemigroup by_name(std::string const& name) {
    std::smatch m;
    auto        num = [&](int i) { return static_cast<std::size_t>(std::stoul(m[i].str())); };
    if (std::regex_match(name, m, std::regex(R"(T(\d)opp)"))) {
      return full_transformation_opp(num(1));
    }
    if (std::regex_match(name, m, std::regex(R"(RB(\d+)x(\d+))"))) {
      return rectangular_band(num(1), num(2));
    }
    if (std::regex_match(name, m, std::regex(R"(M(\d+)_(\d+))"))) {
      return monogenic(num(1), num(2));
    }
    if (name == "V3") {
      return v3();
    }
    if (name == "K4") {
      return klein_four();
    }
    if (std::regex_match(name, m, std::regex(R"(([A-Z])(\d+))"))) {
      std::size_t const k = num(2);
      detail::require(k >= 1, "size parameter must be positive");
      switch (m[1].str()[0]) {
        case 'T':
          detail::require_cap(k <= 4, "named T_k limited to k <= 4");
          return full_transformation(k);
        case 'I':
          detail::require_cap(k <= 4, "named I_k limited to k <= 4");
          return symmetric_inverse(k);
        case 'S':
          detail::require_cap(k <= 5, "named S_k limited to k <= 5");
          return symmetric_group(k);
        case 'Z': return cyclic_group(k);
        case 'C': return chain(k);
        case 'L': return left_zero(k);
        case 'R': return right_zero(k);
        case 'B': return brandt(k);
        case 'N': return null_semigroup(k);
        default: break;
      }
    }
    throw Error("unknown semigroup name: " + name);
  }

}  // namespace hsg::named
