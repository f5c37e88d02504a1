"""Unoriented Schur and Bogomolov multipliers of finite groups."""

import json

from ._core import (
    InvariantError,
    ResourceError,
    UsageError,
    catalog_names,
    group_order,
    h2_dim,
    hopf_dims,
    run,
)
from . import _core


def bogomolov(name):
    """Multiplier report of a catalog group as a dict."""
    return json.loads(_core.bogomolov_json(name))


def extendable(name, surface):
    """Extendability verdict, e.g. extendable("klein4", "orientable g=1 pairs=(a,b)")."""
    return json.loads(_core.extendable_json(name, surface))


def cli(*args):
    """Runs a CLI command with --format json and returns (exit_code, parsed output or stderr)."""
    code, out, err = run(list(args) + ["--format", "json"])
    return code, json.loads(out) if code == 0 else err


__all__ = [
    "InvariantError",
    "ResourceError",
    "UsageError",
    "bogomolov",
    "catalog_names",
    "cli",
    "extendable",
    "group_order",
    "h2_dim",
    "hopf_dims",
    "run",
]
