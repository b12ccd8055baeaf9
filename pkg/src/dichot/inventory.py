"""Orbit monomials and exact-stabilizer pattern inventories (two colors).

For each class representative H the orbit index monomial records how many
orbits of each size H has on the cells.  Substituting 1 + x^d for an orbit
of size d turns the monomial into the generating function of H-fixed
bicolorings by black-cell count, and combining these with the inverse marks
rows yields, per class, the generating function of patterns whose full
stabilizer is conjugate to that class.
"""

from __future__ import annotations

from fractions import Fraction

from .affine import FiniteGroup
from .errors import IntegrityError
from .lattice import Subgroup, SubgroupClassTraversal
from .marks import MarksPair
from .poly import Polynomial, binomial_power


def orbits(group: FiniteGroup, sub: Subgroup) -> list[list[int]]:
    """Orbit partition of the cells under the subgroup's cell action."""
    m = group.domain_size
    perms = [group.dom_perms[g] for g in sub.members]
    seen = [False] * m
    out: list[list[int]] = []
    for start in range(m):
        if seen[start]:
            continue
        orbit = {start}
        queue = [start]
        while queue:
            x = queue.pop()
            for p in perms:
                y = p[x]
                if y not in orbit:
                    orbit.add(y)
                    queue.append(y)
        for x in orbit:
            seen[x] = True
        out.append(sorted(orbit))
    return out


def orbit_index_monomial(group: FiniteGroup, sub: Subgroup) -> dict[int, int]:
    """Map orbit size d -> number of orbits of that size."""
    mono: dict[int, int] = {}
    for orb in orbits(group, sub):
        mono[len(orb)] = mono.get(len(orb), 0) + 1
    if sum(d * q for d, q in mono.items()) != group.domain_size:
        raise IntegrityError("orbit sizes do not partition the cells")
    return mono


def monomial_bicolor(mono: dict[int, int]) -> Polynomial:
    """Substitute 1 + x^d for each orbit of size d."""
    out = Polynomial.one()
    for d in sorted(mono):
        out = out * binomial_power(d, mono[d])
    return out


def class_monomials(group: FiniteGroup, traversal: SubgroupClassTraversal) -> list[dict[int, int]]:
    return [orbit_index_monomial(group, c.rep) for c in traversal.classes]


def inventory_vector(group: FiniteGroup, traversal: SubgroupClassTraversal,
                     pair: MarksPair) -> list[Polynomial]:
    """Exact-stabilizer inventories Q_i, one per traversal class.

    Q_i(x) counts the patterns with stabilizer conjugate to the i-th class,
    graded by the number of black cells; every coefficient must come out a
    nonnegative integer.
    """
    fixed = [monomial_bicolor(m) for m in class_monomials(group, traversal)]
    out: list[Polynomial] = []
    for i, row in enumerate(pair.b_rows):
        q = Polynomial()
        for j in sorted(row):
            q = q + fixed[j].scale(row[j])
        if not q.is_integral() or not q.is_nonnegative():
            raise IntegrityError(f"inventory for class {i} is not a nonnegative "
                                 f"integer polynomial: {q!r}")
        out.append(q)
    return out


def rigid_inventory(group: FiniteGroup, traversal: SubgroupClassTraversal,
                    pair: MarksPair) -> Polynomial:
    """Inventory of the trivial-stabilizer class (the last traversal entry)."""
    fixed = [monomial_bicolor(m) for m in class_monomials(group, traversal)]
    row = pair.b_rows[-1]
    q = Polynomial()
    for j in sorted(row):
        q = q + fixed[j].scale(row[j])
    if not q.is_integral() or not q.is_nonnegative():
        raise IntegrityError(f"rigid inventory is not a nonnegative integer "
                             f"polynomial: {q!r}")
    return q


def sieve_value(q: Polynomial) -> int:
    """|q(-1)|, evaluated exactly."""
    v = q.evaluate(-1)
    if isinstance(v, Fraction):
        raise IntegrityError(f"sieve evaluation produced a fraction: {v}")
    return abs(v)
