"""Exact Rees-algebra calculus and constructive resolution.

Thin convenience layer over the compiled module: problems are text (see the
problem-file grammar in the README), traces come back as JSON strings.
"""

import json

from _reesolve import (  # noqa: F401
    MarkedObject,
    Problem,
    ReesAlgebra,
    contains_point,
    diff_closure,
    diff_closure_gens,
    natural_closure,
    odot,
    ord_at,
    parse_poly_str,
    resolve,
    sing_gens,
    twist,
    veronese,
    word_at,
)


def resolve_text(problem_text: str, max_steps: int = 200) -> dict:
    """Parse a problem file and run the resolution driver."""
    marked = Problem.parse(problem_text).marked()
    return json.loads(resolve(marked, max_steps))


def traces_equal(trace_a: dict, trace_b: dict) -> bool:
    """Step-by-step equality of two resolution traces."""
    return trace_a == trace_b
