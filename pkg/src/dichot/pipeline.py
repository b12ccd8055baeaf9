"""Memoized end-to-end construction: group -> lattice -> marks -> inventories.

Group construction is deterministic, so results are cached per GroupSpec for
the lifetime of the process.  Disk caching of the (traversal, M, B) stage is
layered on top by the cache module.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .affine import FiniteGroup, GroupSpec, build_group
from .inventory import inventory_vector
from .lattice import SubgroupClassTraversal, all_subgroups, conjugacy_classes
from .marks import MarksPair, marks_pair
from .poly import Polynomial


@dataclass(frozen=True)
class MarksResult:
    group: FiniteGroup
    traversal: SubgroupClassTraversal
    pair: MarksPair


@lru_cache(maxsize=None)
def group_for(spec: GroupSpec) -> FiniteGroup:
    return build_group(spec)


@lru_cache(maxsize=None)
def lattice_for(spec: GroupSpec) -> SubgroupClassTraversal:
    group = group_for(spec)
    return conjugacy_classes(group, all_subgroups(group))


@lru_cache(maxsize=None)
def marks_for(spec: GroupSpec) -> MarksResult:
    group = group_for(spec)
    traversal = lattice_for(spec)
    return MarksResult(group=group, traversal=traversal,
                       pair=marks_pair(group, traversal))


@lru_cache(maxsize=None)
def inventories_for(spec: GroupSpec) -> tuple[Polynomial, ...]:
    r = marks_for(spec)
    return tuple(inventory_vector(r.group, r.traversal, r.pair))


def clear_caches() -> None:
    for f in (group_for, lattice_for, marks_for, inventories_for):
        f.cache_clear()
