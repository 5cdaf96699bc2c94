# Copyright 2026 The linperm authors
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

"""Python wrapper around the _linperm extension module.

Structured values cross the C++ boundary as JSON strings with the same
schemas the command line tool uses; this wrapper converts them to and from
python objects.
"""

import json

import _linperm
from _linperm import LinpermDomainError, LinpermParseError

__all__ = [
    "Tower",
    "golden",
    "LinpermDomainError",
    "LinpermParseError",
]


class Tower:
    """The field tower F_p < F_q < F_{q^m} < F_{q^ms} with a fixed dual pair
    of normal bases of F_{q^m}/F_q, derived deterministically from the seed."""

    def __init__(self, p, e, m, s, seed=0, _raw=None):
        self._t = _raw if _raw is not None else _linperm.Tower(p, e, m, s, seed)

    @classmethod
    def from_context(cls, ctx):
        return cls(0, 0, 0, 0, _raw=_linperm.Tower(json.dumps(ctx)))

    def context(self):
        return json.loads(self._t.to_json())

    def basis_pair(self):
        return json.loads(self._t.pair_json())

    def sizes(self):
        return {k: int(v) for k, v in json.loads(self._t.sizes()).items()}

    def factor(self):
        return json.loads(self._t.factor())

    def psi(self, matrix):
        return json.loads(self._t.psi_json(json.dumps(matrix)))

    def phi(self, poly):
        return json.loads(self._t.phi_json(json.dumps(poly)))

    def gen(self, family, seed=0):
        return json.loads(self._t.gen(family, seed))

    def verify(self, poly, method="kernel"):
        return self._t.verify(json.dumps(poly), method)

    def decompose(self, matrix):
        return json.loads(self._t.decompose(json.dumps(matrix)))


def golden(name):
    """Rebuild a published worked example; returns its check report."""
    return json.loads(_linperm.golden_json(name))
