"""Scale guards for the brute-force oracles and enumerations.

Defaults can be overridden with the ``CHROMACONF_GUARDS`` environment
variable, e.g. ``CHROMACONF_GUARDS="forest_edges=28,lattice_vertices=11"``,
or programmatically through :func:`configure`.
"""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass

from .errors import GuardExceeded, InputError

ENV_VAR = "CHROMACONF_GUARDS"


@dataclass
class Guards:
    coloring_vertices: int = 12
    coloring_lambda: int = 16
    orientation_edges: int = 24
    forest_edges: int = 24
    increasing_vertices: int = 9
    lattice_vertices: int = 10
    gm_vertices: int = 6
    poset_elements: int = 1000
    complex_faces: int = 2_000_000

    # groups used by the CLI's --guard-edges / --guard-vertices
    EDGE_FIELDS = ("orientation_edges", "forest_edges")
    VERTEX_FIELDS = ("coloring_vertices", "increasing_vertices", "lattice_vertices", "gm_vertices")


def parse_overrides(text: str) -> dict[str, int]:
    out = {}
    names = {f.name for f in dataclasses.fields(Guards)}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in names:
            raise InputError(f"bad guard override {item!r}; known guards: {', '.join(sorted(names))}")
        try:
            out[key] = int(value)
        except ValueError:
            raise InputError(f"guard {key} needs an integer, got {value.strip()!r}") from None
    return out


def _from_env() -> Guards:
    text = os.environ.get(ENV_VAR, "")
    return Guards(**parse_overrides(text)) if text else Guards()


GUARDS = _from_env()


def configure(**overrides: int) -> Guards:
    """Update the process-wide guards in place and return them."""
    for key, value in overrides.items():
        if not hasattr(GUARDS, key):
            raise InputError(f"unknown guard {key!r}")
        setattr(GUARDS, key, int(value))
    return GUARDS


def reset() -> Guards:
    fresh = _from_env()
    for f in dataclasses.fields(Guards):
        setattr(GUARDS, f.name, getattr(fresh, f.name))
    return GUARDS


def check(name: str, value: int, limit: int | None = None) -> None:
    """Raise GuardExceeded when ``value`` is above the guard ``name``."""
    bound = getattr(GUARDS, name) if limit is None else limit
    if value > bound:
        raise GuardExceeded(f"oracle scale exceeded: {name}={value} > {bound} (raise it via --guard-* or {ENV_VAR})")
