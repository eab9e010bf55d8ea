# Copyright 2026 The hsg Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python access to the hsg library.

Reports come back as dictionaries with the same layout as the JSON written
by the ``hsg`` command-line tool.  Points are 1-based throughout.
"""

import json as _json

from . import _hsg
from ._hsg import CapExceeded, HsgError, VerificationFailure, compose

__all__ = [
    "CapExceeded",
    "HsgError",
    "VerificationFailure",
    "amalgam",
    "chain",
    "classify",
    "compose",
    "dilation",
    "dual_search",
    "duality",
    "eggbox",
    "eggbox_ascii",
    "flower",
    "graph",
    "j_order",
    "nonconjugacy",
    "poset_dot",
    "version",
    "witness",
]

__version__ = _hsg.version()


def version():
    return _hsg.version()


def _table_arg(table):
    if table is None:
        return ""
    return table if isinstance(table, str) else _json.dumps(table)


def eggbox(family="T", n=3, name="", table=None):
    return _json.loads(_hsg.eggbox(family, n, name, _table_arg(table)))


def eggbox_ascii(family="T", n=3, name="", table=None):
    return _hsg.eggbox_ascii(family, n, name, _table_arg(table))


def classify(family="T", n=3, name="", table=None, mode="B"):
    """Amalgamation-base verdict: Member, NonMember or Unknown."""
    return _json.loads(_hsg.classify(family, n, name, _table_arg(table), mode))


def duality(family="T", n=3, name="", table=None):
    return _json.loads(_hsg.duality(family, n, name, _table_arg(table)))


def graph(family="T", n=3, rank=1, name="", table=None):
    return _json.loads(_hsg.graph(family, n, rank, name, _table_arg(table)))


def poset_dot(family="I", n=2, name="", table=None):
    return _hsg.poset_dot(family, n, name, _table_arg(table))


def flower(m, t, A, B):
    """Partition of [m] into t parts with every A_i a transversal and no B_j one."""
    return _json.loads(_hsg.flower(_json.dumps({"m": m, "t": t, "A": A, "B": B})))


def witness(n, r, omega, sigma, route="auto", seed=0):
    return _json.loads(_hsg.witness(n, r, omega, sigma, route, seed))


def dilation(n, r, seed=0, samples=5):
    return _json.loads(_hsg.dilation(n, r, seed, samples))


def chain(kind="T", n=2, depth=1, track=None):
    if track is not None and not isinstance(track, str):
        track = ",".join(str(x) for x in track)
    return _json.loads(_hsg.chain(kind, n, depth, track))


def j_order(kind="T", n=2, depth=1):
    return _json.loads(_hsg.j_order(kind, n, depth))


def nonconjugacy(n=5, r=5):
    return _json.loads(_hsg.nonconjugacy(n, r))


def dual_search(m, P, Q):
    return _json.loads(_hsg.dual_search(_json.dumps({"m": m, "P": P, "Q": Q})))


def amalgam(fixture, max_degree=4, budget=2_000_000):
    return _json.loads(_hsg.amalgam(fixture, max_degree, budget))
