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

#include "hsg/semigroup.hpp"

#include <numeric>

namespace hsg {

  FiniteSemigroup::FiniteSemigroup(std::size_t                            size,
                                   std::vector<index_type>                table,
                                   std::optional<std::vector<index_type>> inverse)
      : _size(size), _table(std::move(table)), _inverse(std::move(inverse)) {
    detail::require(size >= 1, "semigroup must be nonempty");
    detail::require(_table.size() == size * size, "table must be size x size");
    for (auto x : _table) {
      detail::require(x < size, "table entry out of range");
    }
    for (index_type e = 0; e < size; ++e) {
      bool ok = true;
      for (index_type x = 0; x < size && ok; ++x) {
        ok = product(e, x) == x && product(x, e) == x;
      }
      if (ok) {
        _identity = e;
        break;
      }
    }
    if (_inverse) {
      auto const& inv = *_inverse;
      detail::require(inv.size() == size, "inverse map must have one entry per element");
      for (index_type x = 0; x < size; ++x) {
        detail::require(inv[x] < size, "inverse entry out of range");
        detail::require(product(product(x, inv[x]), x) == x, "inverse axiom x x^-1 x = x fails");
        detail::require(product(product(inv[x], x), inv[x]) == inv[x], "inverse axiom x^-1 x x^-1 = x^-1 fails");
      }
      auto const E = idempotents();
      for (auto e : E) {
        for (auto f : E) {
          detail::require(product(e, f) == product(f, e), "idempotents of an inverse semigroup must commute");
        }
      }
    }
  }

  FiniteSemigroup FiniteSemigroup::from_rows(std::vector<std::vector<index_type>> const& rows,
                                             std::optional<std::vector<index_type>>      inverse) {
    std::vector<index_type> table;
    for (auto const& r : rows) {
      detail::require(r.size() == rows.size(), "table must be square");
      table.insert(table.end(), r.begin(), r.end());
    }
    return FiniteSemigroup(rows.size(), std::move(table), std::move(inverse));
  }

  std::vector<std::vector<index_type>> FiniteSemigroup::rows() const {
    std::vector<std::vector<index_type>> out(_size);
    for (std::size_t a = 0; a < _size; ++a) {
      out[a].assign(_table.begin() + a * _size, _table.begin() + (a + 1) * _size);
    }
    return out;
  }

  bool FiniteSemigroup::is_associative() const {
    for (index_type a = 0; a < _size; ++a) {
      for (index_type b = 0; b < _size; ++b) {
        index_type const ab = product(a, b);
        for (index_type c = 0; c < _size; ++c) {
          if (product(ab, c) != product(a, product(b, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool FiniteSemigroup::is_commutative() const {
    for (index_type a = 0; a < _size; ++a) {
      for (index_type b = a + 1; b < _size; ++b) {
        if (product(a, b) != product(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<index_type> FiniteSemigroup::idempotents() const {
    std::vector<index_type> out;
    for (index_type a = 0; a < _size; ++a) {
      if (is_idempotent(a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  bool FiniteSemigroup::is_group() const {
    if (!_identity) {
      return false;
    }
    for (index_type a = 0; a < _size; ++a) {
      bool found = false;
      for (index_type b = 0; b < _size && !found; ++b) {
        found = product(a, b) == *_identity && product(b, a) == *_identity;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  FiniteSemigroup opposite(FiniteSemigroup const& S) {
    std::size_t const       N = S.size();
    std::vector<index_type> table(N * N);
    for (index_type a = 0; a < N; ++a) {
      for (index_type b = 0; b < N; ++b) {
        table[a * N + b] = S.product(b, a);
      }
    }
    return FiniteSemigroup(N, std::move(table), S.inverse_map());
  }

  std::optional<std::vector<index_type>> find_inverse_map(FiniteSemigroup const& S) {
    std::size_t const       N = S.size();
    std::vector<index_type> inv(N);
    for (index_type x = 0; x < N; ++x) {
      std::size_t count = 0;
      for (index_type y = 0; y < N; ++y) {
        if (S.product(S.product(x, y), x) == x && S.product(S.product(y, x), y) == y) {
          inv[x] = y;
          ++count;
        }
      }
      if (count != 1) {
        return std::nullopt;
      }
    }
    return inv;
  }

  FiniteSemigroup detect_inverse(FiniteSemigroup S) {
    if (S.is_inverse()) {
      return S;
    }
    auto inv = find_inverse_map(S);
    if (!inv) {
      return S;
    }
    return FiniteSemigroup(S.size(), S.table(), std::move(inv));
  }

  IndexPeriod index_period(FiniteSemigroup const& S, index_type a) {
    // powers[k] = a^{k+1}
    std::vector<index_type>  powers{a};
    std::vector<std::size_t> first_seen(S.size(), 0);
    first_seen[a] = 1;
    while (true) {
      index_type const next = S.product(powers.back(), a);
      std::size_t const k    = powers.size() + 1;  // next == a^k
      if (first_seen[next] != 0) {
        return {first_seen[next], k - first_seen[next]};
      }
      first_seen[next] = k;
      powers.push_back(next);
    }
  }

  std::vector<index_type> subsemigroup_of(FiniteSemigroup const& S, std::vector<index_type> const& gens) {
    std::vector<bool>       in(S.size(), false);
    std::vector<index_type> queue;
    for (auto g : gens) {
      detail::require(g < S.size(), "generator out of range");
      if (!in[g]) {
        in[g] = true;
        queue.push_back(g);
      }
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto g : gens) {
        index_type const p = S.product(queue[i], g);
        if (!in[p]) {
          in[p] = true;
          queue.push_back(p);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
  }

  namespace {
    std::size_t two_sided_ideal_size(FiniteSemigroup const& S, index_type a) {
      std::vector<bool> in(S.size(), false);
      in[a]          = true;
      std::size_t cnt = 1;
      std::vector<index_type> queue{a};
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (index_type s = 0; s < S.size(); ++s) {
          for (index_type p : {S.product(queue[i], s), S.product(s, queue[i])}) {
            if (!in[p]) {
              in[p] = true;
              ++cnt;
              queue.push_back(p);
            }
          }
        }
      }
      return cnt;
    }
  }  // namespace

  std::vector<index_type> small_generating_set(FiniteSemigroup const& S, std::vector<index_type> const& prefix) {
    std::vector<index_type> order(S.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> ideal(S.size());
    for (index_type a = 0; a < S.size(); ++a) {
      ideal[a] = two_sided_ideal_size(S, a);
    }
    std::stable_sort(order.begin(), order.end(), [&](index_type a, index_type b) { return ideal[a] > ideal[b]; });

    std::vector<index_type> gens = prefix;
    std::vector<bool>       covered(S.size(), false);
    if (!gens.empty()) {
      for (auto x : subsemigroup_of(S, gens)) {
        covered[x] = true;
      }
    }
    for (auto a : order) {
      if (covered[a]) {
        continue;
      }
      gens.push_back(a);
      for (auto x : subsemigroup_of(S, gens)) {
        covered[x] = true;
      }
    }
    return gens;
  }

  FiniteSemigroup restrict_to(FiniteSemigroup const& S, std::vector<index_type> const& subset) {
    std::vector<index_type> pos(S.size(), static_cast<index_type>(-1));
    for (std::size_t i = 0; i < subset.size(); ++i) {
      pos[subset[i]] = static_cast<index_type>(i);
    }
    std::size_t const       N = subset.size();
    std::vector<index_type> table(N * N);
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        index_type const p = pos[S.product(subset[i], subset[j])];
        detail::require(p != static_cast<index_type>(-1), "subset is not closed under product");
        table[i * N + j] = p;
      }
    }
    std::optional<std::vector<index_type>> inv;
    if (S.is_inverse()) {
      std::vector<index_type> v(N);
      bool                    closed = true;
      for (std::size_t i = 0; i < N && closed; ++i) {
        index_type const p = pos[S.inverse(subset[i])];
        closed             = p != static_cast<index_type>(-1);
        v[i]               = p;
      }
      if (closed) {
        inv = std::move(v);
      }
    }
    return FiniteSemigroup(N, std::move(table), std::move(inv));
  }

}  // namespace hsg
