"""Secant loci of rational normal scrolls over finite fields."""

import json

from ._core import (
    ScrollSpec,
    ScrollsecError,
    SecantSignature,
    StratumLabel,
    classify_signature,
    run,
)

__all__ = [
    "ScrollSpec",
    "ScrollsecError",
    "SecantSignature",
    "StratumLabel",
    "atlas",
    "classify",
    "classify_signature",
    "oracle_check",
    "run",
    "sample",
]


def _call(command, **options):
    text, code = run(command, options)
    report = json.loads(text)
    report["exit_code"] = code
    return report


def classify(scroll, point, q=10007, dmax=2):
    """Classifies an external point; point is a sequence of integers."""
    return _call("classify", scroll=scroll, point=",".join(str(int(x)) for x in point), q=q, dmax=dmax)


def sample(scroll, n=200, q=10007, seed=0, sampler="mixture"):
    return _call("sample", scroll=scroll, n=n, q=q, seed=seed, sampler=sampler)


def atlas(max_deg=6, max_n=4, max_h=1, n=50, q=10007, seed=0):
    return _call("atlas", max_deg=max_deg, max_n=max_n, max_h=max_h, n=n, q=q, seed=seed)


def oracle_check(scroll, q=5, n=25, seed=0, dmax=2):
    return _call("oracle-check", scroll=scroll, q=q, n=n, seed=seed, dmax=dmax)
