"""Exact-arithmetic toolkit for Leibniz and Lie algebras in the linear-map
category: axiom checking, liezation, enveloping dialgebras and truncated
formal integration."""

import json as _json

from ._core import __version__, run_json

__all__ = ["run", "run_json", "__version__"]


def run(command, text, order=4, degree=3, triv="left", name="<memory>"):
    """Run a command on an algebra description and return the report.

    command: one of "check", "liezation", "envelope", "integrate", "oracle".
    text: the algebra description (same line format the CLI reads).
    Returns the report as a dict; report["status"] is "pass" or "fail".
    Raises ValueError for unreadable or inconsistent input.
    """
    return _json.loads(run_json(command, text, order=order, degree=degree,
                                triv=triv, name=name))
