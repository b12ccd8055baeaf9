"""Classical cycle-index counting for the same actions.

Provides the total two-color pattern inventory p(x) of a group acting on
cells, the dichotomy count [x^k] p for Z_2k under its affine group, the
self-complementary count |p(-1)| (also computed by the even-cycle sum, the
two must agree), and the inclusion-exclusion lower bound on strong
dichotomies assembled from these together with the rigid inventory.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .affine import FiniteGroup, GroupSpec, units_of
from .errors import IntegrityError
from .inventory import rigid_inventory, sieve_value
from .pipeline import marks_for
from .poly import Polynomial, binomial_power


@dataclass(frozen=True)
class CycleIndexTerm:
    """One cycle type of the cell action with its multiplicity."""

    cycles: tuple[tuple[int, int], ...]   # (length, count), lengths ascending
    multiplicity: int

    @property
    def total_moved(self) -> int:
        return sum(d * c for d, c in self.cycles)


def _cycle_type(perm) -> tuple[tuple[int, int], ...]:
    m = len(perm)
    seen = [False] * m
    counts: Counter[int] = Counter()
    for start in range(m):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        counts[length] += 1
    return tuple(sorted(counts.items()))


def _aggregate(perms) -> list[CycleIndexTerm]:
    counts: Counter[tuple] = Counter()
    for p in perms:
        counts[_cycle_type(p)] += 1
    return [CycleIndexTerm(cycles=t, multiplicity=c)
            for t, c in sorted(counts.items())]


def cycle_index(group: FiniteGroup) -> list[CycleIndexTerm]:
    """Cycle types of every element's cell permutation, aggregated."""
    return _aggregate(group.dom_perms)


def _affine_perms(n: int):
    for v in units_of(n):
        for u in range(n):
            yield tuple((v * x + u) % n for x in range(n))


def affine_cycle_index(n: int) -> list[CycleIndexTerm]:
    """Cycle index of Aff(Z_n) on Z_n without materializing the group."""
    return _aggregate(_affine_perms(n))


def pattern_inventory(terms: list[CycleIndexTerm]) -> Polynomial:
    """Total two-color inventory p(x): average of prod (1 + x^d)^c_d."""
    order = sum(t.multiplicity for t in terms)
    acc = Polynomial()
    for t in terms:
        prod = Polynomial.one()
        for d, c in t.cycles:
            prod = prod * binomial_power(d, c)
        acc = acc + prod.scale(t.multiplicity)
    p = acc.scale(Fraction(1, order))
    if not p.is_integral():
        raise IntegrityError("pattern inventory has non-integer coefficients")
    return p


def group_inventory(group: FiniteGroup) -> Polynomial:
    return pattern_inventory(cycle_index(group))


def affine_inventory_poly(n: int) -> Polynomial:
    return pattern_inventory(affine_cycle_index(n))


def _require_even(n: int) -> None:
    if n < 2 or n % 2:
        raise ValueError(f"dichotomy counts need an even modulus >= 2, got {n}")


def dichotomy_count(n: int) -> int:
    """Number of Aff(Z_n)-orbits of (n/2)-subsets of Z_n."""
    _require_even(n)
    return affine_inventory_poly(n).coeff(n // 2)


def _even_cycle_count(terms: list[CycleIndexTerm]) -> int:
    order = sum(t.multiplicity for t in terms)
    total = 0
    for t in terms:
        if any(d % 2 for d, _ in t.cycles):
            continue
        total += t.multiplicity * (1 << sum(c for _, c in t.cycles))
    if total % order:
        raise IntegrityError("even-cycle sum is not divisible by |G|")
    return total // order


def self_complementary_count(n: int) -> int:
    """|p(-1)|: patterns whose complement lies in their own orbit.

    Cross-checked against the even-cycle form of the same count.
    """
    _require_even(n)
    terms = affine_cycle_index(n)
    by_eval = abs(pattern_inventory(terms).evaluate(-1))
    by_cycles = _even_cycle_count(terms)
    if by_eval != by_cycles:
        raise IntegrityError(
            f"self-complementary count mismatch: p(-1) gives {by_eval}, "
            f"even-cycle sum gives {by_cycles}")
    return by_eval


@dataclass(frozen=True)
class PieReport:
    """Exact ingredients of the inclusion-exclusion bound at one modulus.

    rigid_total counts rigid patterns of every size; rigid_dichotomies is
    the coefficient at size n/2 only.  The bound S + R - D concerns subsets
    of the dichotomies, so R there is rigid_dichotomies; both counts are
    carried so either reading of the published table can be compared.
    """

    n: int
    dichotomies: int
    self_complementary: int
    rigid_total: int
    rigid_dichotomies: int
    bound: int
    sieve: int

    def __post_init__(self):
        if self.bound != self.self_complementary + self.rigid_dichotomies - self.dichotomies:
            raise IntegrityError("bound is not S + R - D")
        if self.bound > self.self_complementary or self.bound > self.rigid_dichotomies:
            raise IntegrityError("bound exceeds one of the sets it bounds")
        if self.dichotomies < self.self_complementary:
            raise IntegrityError("more self-complementary patterns than dichotomies")


def pie_report(n: int) -> PieReport:
    """Assemble D, S, R, the PIE bound, and the trivial-class sieve value."""
    _require_even(n)
    d = dichotomy_count(n)
    s = self_complementary_count(n)
    r = marks_for(GroupSpec.affine(n))
    q_rigid = rigid_inventory(r.group, r.traversal, r.pair)
    r_total = q_rigid.evaluate(1)
    r_dich = q_rigid.coeff(n // 2)
    return PieReport(n=n, dichotomies=d, self_complementary=s,
                     rigid_total=r_total, rigid_dichotomies=r_dich,
                     bound=s + r_dich - d, sieve=sieve_value(q_rigid))
