"""Exhaustive ground truth for subset patterns under a cell action.

Every subset of the cells is walked to its orbit minimum; each orbit is then
re-examined directly (orbit set, stabilizer, complement membership, the
maps sending the subset to its complement) with nothing shared with the
marks pipeline beyond the group tables themselves.  Deliberately plain:
this module is the referee for everything the formulas produce.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .affine import FiniteGroup
from .errors import IntegrityError, ResourceLimitError
from .lattice import SubgroupClassTraversal
from .swap import PolarityClass, StrongCountReport, polarity_class_of

MAX_CELLS_ALL = 24
MAX_CELLS_SIZED = 28


@dataclass(frozen=True)
class PatternClassRecord:
    """One orbit of subsets: canonical representative and its symmetry data."""

    canonical: int
    size: int
    orbit_size: int
    stabilizer_order: int
    self_complementary: bool
    rigid: bool
    stabilizer_mask: int
    polarity: PolarityClass | None
    polarity_element: str | None

    @property
    def strong(self) -> bool:
        return self.rigid and self.self_complementary

    def cells(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.canonical.bit_length())
                     if self.canonical >> i & 1)


def _subset_image_tables(group: FiniteGroup):
    """Per-element lookup tables mapping a subset mask to its image mask."""
    m = group.domain_size
    lo_bits = (m + 1) // 2
    hi_bits = m - lo_bits
    lo_in = np.arange(1 << lo_bits, dtype=np.int64)
    hi_in = np.arange(1 << hi_bits, dtype=np.int64)
    lo_tabs = np.zeros((group.order, 1 << lo_bits), dtype=np.int64)
    hi_tabs = np.zeros((group.order, 1 << hi_bits), dtype=np.int64)
    for g in range(group.order):
        p = group.dom_perms[g]
        lo = np.zeros(1 << lo_bits, dtype=np.int64)
        for j in range(lo_bits):
            lo |= ((lo_in >> j) & 1) << p[j]
        hi = np.zeros(1 << hi_bits, dtype=np.int64)
        for j in range(hi_bits):
            hi |= ((hi_in >> j) & 1) << p[lo_bits + j]
        lo_tabs[g] = lo
        hi_tabs[g] = hi
    return lo_bits, lo_tabs, hi_tabs


def _popcount(arr: np.ndarray) -> np.ndarray:
    out = np.zeros(arr.shape, dtype=np.int64)
    work = arr.copy()
    while work.any():
        out += work & 1
        work >>= 1
    return out


def _canonical_reps(group: FiniteGroup, size: int | None, chunk_bits: int = 20):
    """Subsets that are the minimum of their own orbit, by streaming chunks."""
    m = group.domain_size
    lo_bits, lo_tabs, hi_tabs = _subset_image_tables(group)
    lo_mask = (1 << lo_bits) - 1
    reps: list[int] = []
    total = 1 << m
    step = min(total, 1 << chunk_bits)
    for start in range(0, total, step):
        arr = np.arange(start, min(start + step, total), dtype=np.int64)
        if size is not None:
            arr = arr[_popcount(arr) == size]
            if arr.size == 0:
                continue
        canon = arr.copy()
        for g in range(group.order):
            img = lo_tabs[g][arr & lo_mask] | hi_tabs[g][arr >> lo_bits]
            np.minimum(canon, img, out=canon)
        reps.extend(int(v) for v in arr[canon == arr])
    return reps, (lo_bits, lo_tabs, hi_tabs)


def _record_for(group: FiniteGroup, rep: int, tables) -> PatternClassRecord:
    lo_bits, lo_tabs, hi_tabs = tables
    lo_mask = (1 << lo_bits) - 1
    images = lo_tabs[:, rep & lo_mask] | hi_tabs[:, rep >> lo_bits]
    orbit = np.unique(images)
    stab = np.nonzero(images == rep)[0]
    orbit_size = int(orbit.size)
    stab_order = int(stab.size)
    if orbit_size * stab_order != group.order:
        raise IntegrityError("orbit-stabilizer identity failed in the oracle")
    stab_mask = 0
    for g in stab:
        stab_mask |= 1 << int(g)
    comp = ((1 << group.domain_size) - 1) ^ rep
    self_comp = bool(np.isin(comp, orbit, assume_unique=True))
    rigid = stab_order == 1
    polarity = None
    pol_elem = None
    if self_comp:
        senders = np.nonzero(images == comp)[0]
        if senders.size != stab_order:
            raise IntegrityError("complement-sending maps are not a stabilizer coset")
        if rigid:
            g = int(senders[0])
            pol_elem = group.labels[g]
            if group.affine_parts is not None:
                a = group.affine_parts[g]
                polarity = polarity_class_of(a.shift, a.unit, a.modulus)
    return PatternClassRecord(canonical=rep, size=bin(rep).count("1"),
                              orbit_size=orbit_size, stabilizer_order=stab_order,
                              self_complementary=self_comp, rigid=rigid,
                              stabilizer_mask=stab_mask, polarity=polarity,
                              polarity_element=pol_elem)


def classify_orbits(group: FiniteGroup, size: int | None = None) -> list[PatternClassRecord]:
    """One record per orbit of subsets (optionally of one fixed size)."""
    m = group.domain_size
    if size is None and m > MAX_CELLS_ALL:
        raise ResourceLimitError(
            f"full classification capped at {MAX_CELLS_ALL} cells, got {m}")
    if size is not None and m > MAX_CELLS_SIZED:
        raise ResourceLimitError(
            f"sized classification capped at {MAX_CELLS_SIZED} cells, got {m}")
    reps, tables = _canonical_reps(group, size)
    records = [_record_for(group, rep, tables) for rep in reps]
    records.sort(key=lambda r: (r.size, r.canonical))
    _check_burnside(group, records, size)
    return records


def _fixed_subset_count(perm, size: int | None) -> int:
    m = len(perm)
    seen = [False] * m
    lengths = []
    for start in range(m):
        if seen[start]:
            continue
        x, ln = start, 0
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            ln += 1
        lengths.append(ln)
    if size is None:
        return 1 << len(lengths)
    dp = [0] * (size + 1)
    dp[0] = 1
    for ln in lengths:
        if ln <= size:
            for j in range(size, ln - 1, -1):
                dp[j] += dp[j - ln]
    return dp[size]


def _check_burnside(group: FiniteGroup, records, size: int | None) -> None:
    total = sum(_fixed_subset_count(group.dom_perms[g], size)
                for g in range(group.order))
    if total % group.order:
        raise IntegrityError("Burnside sum not divisible by |G|")
    if total // group.order != len(records):
        raise IntegrityError(
            f"oracle found {len(records)} orbits, Burnside demands {total // group.order}")


def strong_bruteforce(group: FiniteGroup) -> tuple[StrongCountReport, list[PatternClassRecord]]:
    """Strong patterns (rigid and self-complementary) grouped by polarity."""
    m = group.domain_size
    if m % 2:
        raise ValueError(f"strong patterns need an even cell count, got {m}")
    records = [r for r in classify_orbits(group, size=m // 2) if r.strong]
    by_class: dict[PolarityClass, int] = {}
    for r in records:
        if r.polarity is None:
            raise IntegrityError("strong record without a polarity class")
        by_class[r.polarity] = by_class.get(r.polarity, 0) + 1
    entries = tuple(sorted(by_class.items(), key=lambda e: e[0].sort_key()))
    return StrongCountReport(n=m, entries=entries), records


def stabilizer_census(group: FiniteGroup, traversal: SubgroupClassTraversal,
                      size: int | None = None) -> dict[int, tuple[int, ...]]:
    """Orbit counts per stabilizer class, graded by subset size.

    The oracle counterpart of the inventory vector: entry j of the tuple for
    class i counts orbits of j-subsets whose stabilizer lies in class i.
    """
    m = group.domain_size
    out: dict[int, list[int]] = {}
    for rec in classify_orbits(group, size):
        cls = traversal.index_of_mask(rec.stabilizer_mask)
        out.setdefault(cls, [0] * (m + 1))[rec.size] += 1
    return {k: tuple(v) for k, v in sorted(out.items())}
