"""Subgroup enumeration and classification up to conjugacy.

The enumeration seeds with every cyclic subgroup and grows the collection by
single-element extensions until a fixed point, deduplicating by membership
bitset.  For solvable groups (all the affine families are) it suffices to
extend a class representative H by normalizing elements whose coset has
prime order, since every subgroup sits atop a chain of normal prime-index
steps; non-solvable explicit inputs fall back to extension by arbitrary
outside elements, which is complete for any finite group.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .affine import FiniteGroup
from .errors import IntegrityError, ResourceLimitError

DEFAULT_MAX_ORDER = 2048
DEFAULT_MAX_SUBGROUPS = 200_000


@dataclass(frozen=True)
class Subgroup:
    """A subgroup as a membership bitset over element indices."""

    mask: int
    members: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.members)

    def contains(self, other: "Subgroup") -> bool:
        return other.mask & self.mask == other.mask

    @classmethod
    def from_members(cls, members) -> "Subgroup":
        ms = tuple(sorted(int(i) for i in members))
        mask = 0
        for i in ms:
            mask |= 1 << i
        return cls(mask, ms)


def members_of_mask(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def closure(group: FiniteGroup, generators) -> Subgroup:
    """Smallest subgroup containing the given element indices."""
    mult = group.mult_rows
    gens = sorted({int(g) for g in generators})
    members = {group.identity}
    queue = [group.identity]
    while queue:
        cur = queue.pop()
        row = mult[cur]
        for g in gens:
            nxt = row[g]
            if nxt not in members:
                members.add(nxt)
                queue.append(nxt)
    return Subgroup.from_members(members)


def is_solvable(group: FiniteGroup) -> bool:
    """Derived series terminates at the trivial subgroup."""
    mult = group.mult_np
    inv = np.array(group.inv_row, dtype=np.int32)
    cur = np.arange(group.order, dtype=np.int32)
    while True:
        grid = mult[np.ix_(cur, cur)]
        comms = mult[grid, inv[grid.T]]          # [a,b] = ab(ba)^-1
        gens = np.unique(comms)
        der = closure(group, gens.tolist())
        if der.order == 1:
            return True
        if der.order == len(cur):
            return False
        cur = np.fromiter(der.members, dtype=np.int32)


def _is_prime(k: int) -> bool:
    if k < 2:
        return False
    if k < 4:
        return True
    if k % 2 == 0:
        return False
    f = 3
    while f * f <= k:
        if k % f == 0:
            return False
        f += 2
    return True


@dataclass
class _RawClass:
    rep: tuple[int, ...]                 # lex-least conjugate, sorted members
    masks: tuple[int, ...]               # all conjugates, deterministic order
    normalizer: tuple[int, ...]          # members of N_G(rep)


class _Enumerator:
    def __init__(self, group: FiniteGroup, max_count: int):
        self.group = group
        self.max_count = max_count
        self.conj = group.conj_np
        self.pow2 = [1 << i for i in range(group.order)]
        self.found: set[int] = set()
        self.classes: list[_RawClass] = []
        self.pending: deque[int] = deque()

    def _mask(self, row) -> int:
        m = 0
        p = self.pow2
        for i in row:
            m |= p[i]
        return m

    def register(self, members) -> bool:
        """Record the full conjugacy class of a subgroup; False if known."""
        ms = tuple(sorted(int(i) for i in members))
        if self._mask(ms) in self.found:
            return False
        idx = np.fromiter(ms, dtype=np.int32)
        rows = np.sort(self.conj[:, idx], axis=1)
        uniq = np.unique(rows, axis=0)
        masks = tuple(self._mask(r) for r in uniq)
        self.found.update(masks)
        if len(self.found) > self.max_count:
            raise ResourceLimitError(
                f"subgroup count exceeds cap {self.max_count}")
        # the normalizer must belong to the canonical representative, which
        # need not be the conjugate we were handed
        rep = uniq[0]
        rep_rows = np.sort(self.conj[:, rep], axis=1)
        norm_flags = (rep_rows == rep).all(axis=1)
        self.classes.append(_RawClass(
            rep=tuple(int(i) for i in rep),
            masks=masks,
            normalizer=tuple(int(i) for i in np.nonzero(norm_flags)[0]),
        ))
        self.pending.append(len(self.classes) - 1)
        return True

    def seed(self) -> None:
        g = self.group
        self.register((g.identity,))
        for x in range(g.order):
            cur, powers = x, {g.identity, x}
            while True:
                cur = g.mult_rows[cur][x]
                if cur in powers:
                    break
                powers.add(cur)
            self.register(powers)

    def run_prime_extension(self) -> None:
        mult = self.group.mult_rows
        while self.pending:
            cls = self.classes[self.pending.popleft()]
            h = cls.rep
            hmask = self._mask(h)
            # the rep's normalizer was computed for the lex-least conjugate
            nm = closureless = [x for x in cls.normalizer]
            if len(nm) == len(h):
                continue
            hset = set(h)
            for gidx in closureless:
                if gidx in hset:
                    continue
                # order of the coset g*H inside N(H)/H
                k, q = 1, gidx
                while q not in hset:
                    q = mult[q][gidx]
                    k += 1
                if not _is_prime(k):
                    continue
                new = list(h)
                gi = gidx
                for _ in range(k - 1):
                    row_gi = gi
                    new.extend(mult[x][row_gi] for x in h)
                    gi = mult[gi][gidx]
                self.register(new)

    def run_general_extension(self) -> None:
        g = self.group
        work = deque(range(len(self.classes)))
        seen = len(self.classes)
        while work:
            cls = self.classes[work.popleft()]
            h = cls.rep
            hset = set(h)
            for x in range(g.order):
                if x in hset:
                    continue
                sub = closure(g, list(h) + [x])
                self.register(sub.members)
            while seen < len(self.classes):
                work.append(seen)
                seen += 1


def _enumerate_classes(group: FiniteGroup, max_count: int) -> list[_RawClass]:
    enum = _Enumerator(group, max_count)
    enum.seed()
    if is_solvable(group):
        enum.run_prime_extension()
    else:
        enum.run_general_extension()
    return enum.classes


def all_subgroups(group: FiniteGroup, *, max_order: int = DEFAULT_MAX_ORDER,
                  max_count: int = DEFAULT_MAX_SUBGROUPS) -> list[Subgroup]:
    """Every subgroup exactly once, sorted by descending order then members."""
    if group.order > max_order:
        raise ResourceLimitError(
            f"group order {group.order} exceeds enumeration cap {max_order}")
    classes = _enumerate_classes(group, max_count)
    subs = [Subgroup(mask, members_of_mask(mask))
            for cls in classes for mask in cls.masks]
    subs.sort(key=lambda s: (-s.order, s.members))
    return subs


@dataclass(frozen=True)
class SubgroupClass:
    """A conjugacy class of subgroups with its canonical representative."""

    rep: Subgroup
    size: int
    conjugate_masks: tuple[int, ...]
    normalizer_order: int


@dataclass(frozen=True)
class SubgroupClassTraversal:
    """Class representatives ordered by descending subgroup order.

    Ties are broken by the representative's sorted member tuple, so the
    traversal is deterministic for a fixed group construction.
    """

    classes: tuple[SubgroupClass, ...]
    subgroup_count: int
    class_index_by_mask: dict[int, int] = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.classes)

    def index_of_mask(self, mask: int) -> int:
        return self.class_index_by_mask[mask]

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(c.rep.order for c in self.classes)


def conjugacy_classes(group: FiniteGroup, subgroups: list[Subgroup]) -> SubgroupClassTraversal:
    """Group a complete subgroup list into a deterministic class traversal."""
    by_mask = {s.mask: s for s in subgroups}
    if len(by_mask) != len(subgroups):
        raise IntegrityError("duplicate subgroups in input")
    conj = group.conj_np
    pow2 = [1 << i for i in range(group.order)]
    processed: set[int] = set()
    classes: list[SubgroupClass] = []
    for sub in subgroups:
        if sub.mask in processed:
            continue
        idx = np.fromiter(sub.members, dtype=np.int32)
        rows = np.sort(conj[:, idx], axis=1)
        norm_order = int((rows == idx).all(axis=1).sum())
        uniq = np.unique(rows, axis=0)
        masks = []
        for r in uniq:
            m = 0
            for i in r:
                m |= pow2[i]
            masks.append(m)
        for m in masks:
            if m not in by_mask:
                raise IntegrityError("subgroup list is not closed under conjugation")
        processed.update(masks)
        rep = Subgroup.from_members(uniq[0])
        if len(masks) * norm_order != group.order:
            raise IntegrityError("class size times normalizer order != |G|")
        classes.append(SubgroupClass(rep=rep, size=len(masks),
                                     conjugate_masks=tuple(masks),
                                     normalizer_order=norm_order))
    classes.sort(key=lambda c: (-c.rep.order, c.rep.members))
    if classes[0].rep.order != group.order:
        raise IntegrityError("full group missing from subgroup list")
    if classes[-1].rep.order != 1:
        raise IntegrityError("trivial subgroup missing from subgroup list")
    index = {}
    for i, c in enumerate(classes):
        for m in c.conjugate_masks:
            index[m] = i
    return SubgroupClassTraversal(classes=tuple(classes),
                                  subgroup_count=len(subgroups),
                                  class_index_by_mask=index)


def lattice(group: FiniteGroup, *, max_order: int = DEFAULT_MAX_ORDER,
            max_count: int = DEFAULT_MAX_SUBGROUPS) -> SubgroupClassTraversal:
    """Convenience: enumerate and classify in one call."""
    return conjugacy_classes(group, all_subgroups(group, max_order=max_order,
                                                  max_count=max_count))
