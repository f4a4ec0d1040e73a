# Copyright 2026 The invsp Authors
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

"""Special invariant polynomials: construction, tensor steps, term-count gaps.

Polynomials, families and reports are plain dicts in the same JSON shape the
command-line tool prints.
"""

import json

from . import _invsp
from ._invsp import Error, ParseError

DEFAULT_BUDGET = _invsp.DEFAULT_BUDGET

__all__ = [
    "DEFAULT_BUDGET",
    "Error",
    "ParseError",
    "achievable_set",
    "basic_poly",
    "closure_values",
    "family",
    "instantiate",
    "is_prime",
    "l0_range",
    "mod_reduction_check",
    "run_cli",
    "search_targets",
    "tensor",
    "validate",
]


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def basic_poly(group, method="closed"):
    return json.loads(_invsp.basic_poly(group, method))


def tensor(group, h, f=None):
    return json.loads(_invsp.tensor(group, _dump(h), None if f is None else _dump(f)))


def validate(group, poly):
    return json.loads(_invsp.validate(group, _dump(poly)))


def family(group, h_degree, signed_h=False):
    return json.loads(_invsp.family(group, h_degree, signed_h))


def instantiate(fam, point):
    return json.loads(_invsp.instantiate(_dump(fam), _dump(point)))


def l0_range(fam, cap=-1, budget=DEFAULT_BUDGET, jobs=1):
    return json.loads(_invsp.l0_range(_dump(fam), cap, budget, jobs))


def achievable_set(group, max_degree, signed_h=False, cap=-1, budget=DEFAULT_BUDGET, jobs=1):
    return json.loads(_invsp.achievable_set(group, max_degree, signed_h, cap, budget, jobs))


def search_targets(group, targets, max_degree, signed_h=False, budget=DEFAULT_BUDGET, jobs=1):
    return json.loads(_invsp.search_targets(group, set(targets), max_degree, signed_h, budget, jobs))


def closure_values(base, bound):
    return sorted(_invsp.closure_values(set(base), bound))


is_prime = _invsp.is_prime
mod_reduction_check = _invsp.mod_reduction_check


def run_cli(args, stdin=""):
    """Runs the command-line tool in-process; returns (exit_code, stdout, stderr)."""
    return _invsp.run_cli(list(args), stdin)
