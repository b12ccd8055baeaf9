"""On-disk cache of (traversal, marks, inverse) keyed by group descriptor.

The lattice enumeration dominates the cost for the doubled affine groups,
so a cache entry stores the class representatives (sorted element-index
lists) together with the dense integer marks rows and the inverse rows as
"p/q" strings.  Loading rebuilds the conjugates and normalizers from the
representatives and re-verifies B * M = I plus the diagonal marks before
trusting anything.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from pathlib import Path

from . import __version__
from .affine import FiniteGroup, GroupSpec, build_group
from .errors import IntegrityError
from .lattice import Subgroup, SubgroupClass, SubgroupClassTraversal
from .marks import MarksPair, _verify_inverse
from .pipeline import MarksResult, marks_for

CACHE_ENV = "DICHOT_CACHE_DIR"
DEFAULT_CACHE_DIR = ".dichot-cache"


def cache_dir(override: str | os.PathLike | None = None) -> Path:
    if override is not None:
        return Path(override)
    return Path(os.environ.get(CACHE_ENV, DEFAULT_CACHE_DIR))


def cache_path(directory: str | os.PathLike, spec: GroupSpec) -> Path:
    return Path(directory) / f"{spec.descriptor}.marks.json"


def _entry_dict(spec: GroupSpec, result: MarksResult) -> dict:
    pair = result.pair
    n = len(pair.m_rows)
    return {
        "descriptor": spec.descriptor,
        "tool_version": __version__,
        "group": spec.to_json_dict(),
        "traversal": [list(c.rep.members) for c in result.traversal.classes],
        "M": pair.dense_m(),
        "B": [[f"{v.numerator}/{v.denominator}" for v in row]
              for row in pair.dense_b()],
    }


def save_marks(path: str | os.PathLike, spec: GroupSpec, result: MarksResult) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    blob = json.dumps(_entry_dict(spec, result), sort_keys=True,
                      separators=(",", ":")) + "\n"
    path.write_text(blob)
    return path


def _rebuild_traversal(group: FiniteGroup, rep_lists: list[list[int]]) -> SubgroupClassTraversal:
    import numpy as np

    conj = group.conj_np
    classes = []
    total = 0
    for members in rep_lists:
        rep = Subgroup.from_members(members)
        idx = np.fromiter(rep.members, dtype=np.int32)
        rows = np.sort(conj[:, idx], axis=1)
        norm = int((rows == idx).all(axis=1).sum())
        uniq = np.unique(rows, axis=0)
        if tuple(int(i) for i in uniq[0]) != rep.members:
            raise IntegrityError("cached representative is not class-canonical")
        masks = []
        for r in uniq:
            m = 0
            for i in r:
                m |= 1 << int(i)
            masks.append(m)
        total += len(masks)
        classes.append(SubgroupClass(rep=rep, size=len(masks),
                                     conjugate_masks=tuple(masks),
                                     normalizer_order=norm))
    index = {}
    for i, c in enumerate(classes):
        for m in c.conjugate_masks:
            index[m] = i
    return SubgroupClassTraversal(classes=tuple(classes), subgroup_count=total,
                                  class_index_by_mask=index)


def load_marks(path: str | os.PathLike, spec: GroupSpec,
               group: FiniteGroup | None = None) -> MarksResult:
    """Load and re-verify a cache entry; raises IntegrityError if corrupt."""
    data = json.loads(Path(path).read_text())
    if data.get("descriptor") != spec.descriptor:
        raise IntegrityError(
            f"cache entry is for {data.get('descriptor')!r}, wanted {spec.descriptor!r}")
    if group is None:
        group = build_group(spec)
    traversal = _rebuild_traversal(group, data["traversal"])
    orders = traversal.orders
    if list(orders) != sorted(orders, reverse=True) or orders[0] != group.order or orders[-1] != 1:
        raise IntegrityError("cached traversal is not a descending class order")
    m_rows = tuple({j: v for j, v in enumerate(row) if v} for row in data["M"])
    b_rows = []
    for row in data["B"]:
        parsed = {}
        for j, s in enumerate(row):
            num, _, den = s.partition("/")
            v = Fraction(int(num), int(den or 1))
            if v:
                parsed[j] = v
        b_rows.append(parsed)
    b_rows = tuple(b_rows)
    if len(m_rows) != len(traversal.classes):
        raise IntegrityError("cached marks size disagrees with traversal")
    _verify_inverse(m_rows, b_rows)
    for i, cls in enumerate(traversal.classes):
        if m_rows[i].get(i) != cls.normalizer_order // cls.rep.order:
            raise IntegrityError(f"cached diagonal mark {i} disagrees with group")
    pair = MarksPair(traversal=traversal, m_rows=m_rows, b_rows=b_rows)
    return MarksResult(group=group, traversal=traversal, pair=pair)


def marks_with_cache(spec: GroupSpec, directory: str | os.PathLike | None) -> MarksResult:
    """Load from cache when possible, otherwise compute and store."""
    if directory is None:
        return marks_for(spec)
    path = cache_path(directory, spec)
    if path.exists():
        return load_marks(path, spec)
    result = marks_for(spec)
    save_marks(path, spec, result)
    return result
