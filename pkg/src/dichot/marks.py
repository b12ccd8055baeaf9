"""The table of marks over a class traversal and its exact rational inverse.

With classes ordered by descending subgroup order, entry (i, j) counts the
conjugates of the i-th class representative contained in the j-th, scaled by
|N(G_i)| / |G_j|; the matrix is lower triangular with positive diagonal and
is inverted exactly by forward substitution.  Rows are kept sparse because
the matrices reach several hundred classes for the swap-extended groups.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from .affine import FiniteGroup
from .errors import IntegrityError
from .lattice import SubgroupClassTraversal, members_of_mask

logger = logging.getLogger(__name__)


def table_of_marks(group: FiniteGroup, traversal: SubgroupClassTraversal) -> list[dict[int, int]]:
    """Sparse rows of the marks matrix for (group, traversal)."""
    classes = traversal.classes
    n_cls = len(classes)
    orders = [c.rep.order for c in classes]
    masks = [c.rep.mask for c in classes]
    rows: list[dict[int, int]] = []
    for i, cls in enumerate(classes):
        row: dict[int, int] = {}
        norm = cls.normalizer_order
        oi = orders[i]
        for j in range(n_cls):
            if orders[j] < oi:
                break  # descending order: no later class can contain G_i
            gj = masks[j]
            cnt = sum(1 for c in cls.conjugate_masks if c & gj == c)
            if cnt == 0:
                continue
            num = cnt * norm
            if num % orders[j]:
                raise IntegrityError(
                    f"mark ({i},{j}) = {num}/{orders[j]} is not integral")
            row[j] = num // orders[j]
        if i not in row:
            raise IntegrityError(f"zero diagonal mark at class {i}")
        rows.append(row)
    return rows


def table_of_marks_literal(group: FiniteGroup, traversal: SubgroupClassTraversal) -> list[dict[int, int]]:
    """Direct-definition marks: sum over all group elements.

    Quadratic in |G| per entry; retained as an independent oracle for small
    groups (|G| <= 64 in the tests).
    """
    classes = traversal.classes
    conj = group.conj_np
    rows: list[dict[int, int]] = []
    import numpy as np
    for i, cls in enumerate(classes):
        idx = np.fromiter(cls.rep.members, dtype=np.int32)
        conj_rows = conj[:, idx]
        row: dict[int, int] = {}
        for j, other in enumerate(classes):
            gj = other.rep.mask
            total = 0
            for r in conj_rows:
                m = 0
                for x in r:
                    m |= 1 << int(x)
                if m & gj == m:
                    total += 1
            if total:
                if total % other.rep.order:
                    raise IntegrityError("literal mark not integral")
                row[j] = total // other.rep.order
        rows.append(row)
    return rows


def invert_marks(m_rows: list[dict[int, int]]) -> list[dict[int, Fraction]]:
    """Exact inverse of a lower-triangular integer matrix, sparse rows.

    Verifies B * M = I before returning.
    """
    n = len(m_rows)
    b_rows: list[dict[int, Fraction]] = []
    for i, row in enumerate(m_rows):
        if row.get(i, 0) == 0:
            raise IntegrityError(f"zero diagonal at row {i}; matrix not invertible")
        acc: dict[int, Fraction] = {i: Fraction(1)}
        for t in sorted(k for k in row if k < i):
            coeff = row[t]
            for k, v in b_rows[t].items():
                acc[k] = acc.get(k, Fraction(0)) - coeff * v
        diag = Fraction(1, row[i])
        b_rows.append({k: v * diag for k, v in acc.items() if v})
    _verify_inverse(m_rows, b_rows)
    return b_rows


def _verify_inverse(m_rows, b_rows) -> None:
    n = len(m_rows)
    for i in range(n):
        acc: dict[int, Fraction] = {}
        for t, bv in b_rows[i].items():
            for k, mv in m_rows[t].items():
                acc[k] = acc.get(k, Fraction(0)) + bv * mv
        for k, v in acc.items():
            want = 1 if k == i else 0
            if v != want:
                raise IntegrityError(f"inverse check failed at ({i},{k}): {v}")


@dataclass(frozen=True)
class MarksPair:
    """Marks matrix and its exact inverse, aligned to a traversal."""

    traversal: SubgroupClassTraversal
    m_rows: tuple[dict[int, int], ...]
    b_rows: tuple[dict[int, Fraction], ...]

    def __len__(self) -> int:
        return len(self.m_rows)

    def dense_m(self) -> list[list[int]]:
        n = len(self.m_rows)
        return [[self.m_rows[i].get(j, 0) for j in range(n)] for i in range(n)]

    def dense_b(self) -> list[list[Fraction]]:
        n = len(self.b_rows)
        return [[self.b_rows[i].get(j, Fraction(0)) for j in range(n)] for i in range(n)]


def marks_pair(group: FiniteGroup, traversal: SubgroupClassTraversal) -> MarksPair:
    """Compute M and B for a traversal, with consistency checks."""
    m_rows = table_of_marks(group, traversal)
    for i, cls in enumerate(traversal.classes):
        want = cls.normalizer_order // cls.rep.order
        if m_rows[i][i] != want:
            raise IntegrityError(
                f"diagonal mark {m_rows[i][i]} != |N(G_{i})|/|G_{i}| = {want}")
    b_rows = invert_marks(m_rows)
    order = group.order
    for i, row in enumerate(b_rows):
        for j, v in row.items():
            if order % v.denominator:
                logger.warning(
                    "inverse entry (%d,%d) = %s has denominator not dividing |G| = %d",
                    i, j, v, order)
    return MarksPair(traversal=traversal,
                     m_rows=tuple(m_rows),
                     b_rows=tuple(b_rows))
