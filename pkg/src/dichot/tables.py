"""Bundled machine-readable copy of the published reference tables."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources


@lru_cache(maxsize=1)
def _load() -> dict:
    text = resources.files("dichot.data").joinpath("published_tables.json").read_text()
    return json.loads(text)


@lru_cache(maxsize=1)
def published_summary() -> dict[int, dict[str, int]]:
    """Per-modulus published values: D, S, R, pie, sieve."""
    return {int(k): v for k, v in _load()["summary"].items()}


@lru_cache(maxsize=1)
def published_strong() -> dict[int, tuple[int, ...]]:
    """Per-modulus published strong counts, one entry per polarity."""
    return {int(k): tuple(v) for k, v in _load()["strong"].items()}
