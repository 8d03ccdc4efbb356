"""Exact colour-process computations and samplers.

Rationals are strings such as "3/8". Measures are dicts in the same document
format the gdclab command-line tool reads and writes.
"""

import json

from . import _core
from ._core import (
    DomainError,
    Error,
    NotColorProcessError,
    SizeLimitError,
    bounded_cluster_bound,
    d_markov,
    d_paintbox,
    dominates as _dominates,
    field_shift_check,
    markov_to_color,
    split_identity_check,
    suite_names,
)

__all__ = [
    "DomainError", "Error", "NotColorProcessError", "SizeLimitError",
    "apply_phi", "bounded_cluster_bound", "color_to_markov", "couple_check",
    "cp_membership", "d_markov", "d_paintbox", "dominates", "field_shift_check",
    "fk_exact", "is_unique", "kernel", "marginal", "markov_to_color",
    "product_measure", "represent_n3_half", "run_conditional", "sample_rwrs",
    "sample_voter", "split_identity_check", "suite_names", "uniqueness_audit",
    "verify", "witnesses", "xi_distribution",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def kernel(n, p, space="general"):
    return json.loads(_core.kernel(n, str(p), space))


def apply_phi(rer, p):
    return json.loads(_core.apply_phi(_text(rer), str(p)))


def is_unique(measure, p, space="general"):
    return json.loads(_core.is_unique(_text(measure), str(p), space))


def cp_membership(color, p):
    out = _core.cp_membership(_text(color), str(p))
    return None if out is None else json.loads(out)


def represent_n3_half(color):
    return json.loads(_core.represent_n3_half(_text(color)))


def dominates(lower, upper):
    return _dominates(_text(lower), _text(upper))


def product_measure(n, p):
    return json.loads(_core.product_measure(n, str(p)))


def witnesses(p="1/2"):
    return json.loads(_core.witnesses(str(p)))


def xi_distribution(boxes, p):
    return json.loads(_core.xi_distribution([str(b) for b in boxes], str(p)))


def marginal(boxes, p, n):
    return json.loads(_core.marginal([str(b) for b in boxes], str(p), n))


def uniqueness_audit(boxes, p):
    return json.loads(_core.uniqueness_audit([str(b) for b in boxes], str(p)))


def color_to_markov(s, p):
    return json.loads(_core.color_to_markov(str(s), str(p)))


def run_conditional(J, h=0.0, p=0.5, kmax=6, N=12):
    return json.loads(_core.run_conditional(J, h, p, kmax, N))


def fk_exact(vertices, edges, alpha, q="1"):
    return json.loads(_core.fk_exact(vertices, list(edges), str(alpha), str(q)))


def couple_check(vertices, edges, model="ising", J=0.5, q=3, ell=1):
    return json.loads(_core.couple_check(vertices, list(edges), model, J, q, ell))


def sample_rwrs(n, seed, steps="1:0.5;-1:0.5"):
    return json.loads(_core.sample_rwrs(steps, n, seed))


def sample_voter(d, side, horizon, seed):
    return json.loads(_core.sample_voter(d, side, horizon, seed))


def verify(name, seed=None):
    if seed is None:
        return json.loads(_core.verify(name))
    return json.loads(_core.verify(name, seed))
