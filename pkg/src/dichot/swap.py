"""Simultaneous cell-and-color action of Aff(Z_2k) x C2.

A subgroup of the doubled group fixes a coloring under g.f = g o f o g^-1
exactly when, orbit by orbit, the coloring is constant (subgroups without
color swaps) or splits each orbit into equal halves (subgroups with swaps,
provided no cell stabilizer inside the subgroup contains a swap).  Feeding
those fixed-set weights through the inverse marks rows of the doubled group
isolates, per stabilizer class, the patterns with that exact symmetry; the
order-2 classes built from a swap paired with an involution carry the
strong dichotomies, one class per polarity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .affine import FiniteGroup, GroupSpec, conjugate_shift_class
from .errors import IntegrityError
from .lattice import Subgroup
from .pipeline import MarksResult, marks_for
from .poly import Polynomial, binomial_power
from .inventory import orbits


@dataclass(frozen=True)
class SwapClassInfo:
    """Color behaviour of one traversal class of the doubled group."""

    index: int
    mixed: bool                      # True iff the class contains color swaps
    kernel_order: int                # |H| for swap-free H, |H|/2 otherwise


def swap_class_info(group: FiniteGroup, index: int, sub: Subgroup) -> SwapClassInfo:
    bits = group.color_bits
    swaps = sum(bits[g] for g in sub.members)
    if swaps == 0:
        return SwapClassInfo(index=index, mixed=False, kernel_order=sub.order)
    if 2 * swaps != sub.order:
        raise IntegrityError("color kernel does not have index 2")
    return SwapClassInfo(index=index, mixed=True, kernel_order=sub.order - swaps)


def fixed_weight_polynomial(group: FiniteGroup, sub: Subgroup) -> Polynomial:
    """Generating function of colorings fixed by the subgroup, by black count."""
    bits = group.color_bits
    perms = group.dom_perms
    mixed = any(bits[g] for g in sub.members)
    parts = orbits(group, sub)
    if not mixed:
        out = Polynomial.one()
        for orb in parts:
            out = out * binomial_power(len(orb), 1)
        return out
    n_orbits = 0
    for orb in parts:
        b = orb[0]
        # a swap fixing a cell of the orbit forces f(b) = swap(f(b)): impossible
        if any(bits[g] for g in sub.members if perms[g][b] == b):
            return Polynomial.zero()
        if len(orb) % 2:
            raise IntegrityError("orbit admitting a half-half coloring has odd size")
        n_orbits += 1
    m = group.domain_size
    if m % 2:
        raise IntegrityError("half-half colorings on an odd number of cells")
    return Polynomial.x_power(m // 2, 1 << n_orbits)


@dataclass(frozen=True)
class PolarityClass:
    """Conjugacy class of the involution pairing a pattern with its complement."""

    shift: int          # lexicographically least (shift, unit) in the class
    unit: int
    modulus: int

    @property
    def label(self) -> str:
        return f"e^{self.shift}.{self.unit}"

    @property
    def display_label(self) -> str:
        if self.modulus > 2 and self.unit == self.modulus - 1:
            return f"e^{self.shift}.-1"
        return self.label

    def sort_key(self):
        return (self.shift, self.unit)


def polarity_class_of(u: int, v: int, n: int) -> PolarityClass:
    """Canonical label for the conjugates of e^u.v in Aff(Z_n)."""
    shifts = conjugate_shift_class(u, v, n)
    return PolarityClass(shift=shifts[0], unit=v, modulus=n)


@dataclass(frozen=True)
class StrongCountReport:
    """Strong dichotomy counts broken down by polarity class."""

    n: int
    entries: tuple[tuple[PolarityClass, int], ...]

    @property
    def total(self) -> int:
        return sum(c for _, c in self.entries)

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.entries)


@dataclass(frozen=True)
class ExtendedInventory:
    """Per-class inventories of the doubled group.

    Classes whose subgroups contain color swaps have plain integer
    inventories.  Swap-free classes see each complementary pair of patterns
    as a single orbit of the doubled action, so their inventories carry the
    two pattern sizes with weight 1/2 each; the balanced coefficient is
    always an integer.
    """

    result: MarksResult
    weights: tuple[Polynomial, ...]
    inventories: tuple[Polynomial, ...]
    infos: tuple[SwapClassInfo, ...]


@lru_cache(maxsize=None)
def extended_inventory(n: int) -> ExtendedInventory:
    """Inventories over the class traversal of Aff(Z_n) x C2."""
    if n < 2 or n % 2:
        raise ValueError(f"doubled-action inventories need even n >= 2, got {n}")
    r = marks_for(GroupSpec.affine_swap(n))
    classes = r.traversal.classes
    infos = tuple(swap_class_info(r.group, i, c.rep) for i, c in enumerate(classes))
    weights = tuple(fixed_weight_polynomial(r.group, c.rep) for c in classes)
    k = n // 2
    qs: list[Polynomial] = []
    for i, row in enumerate(r.pair.b_rows):
        q = Polynomial()
        for j in sorted(row):
            q = q + weights[j].scale(row[j])
        bal = q.coeff(k)
        if isinstance(bal, Fraction) or (bal < 0):
            raise IntegrityError(f"balanced coefficient of class {i} is {bal}")
        if infos[i].mixed and (not q.is_integral() or not q.is_nonnegative()):
            raise IntegrityError(f"swap-carrying class {i} has inventory {q!r}")
        qs.append(q)
    return ExtendedInventory(result=r, weights=weights,
                             inventories=tuple(qs), infos=infos)


def strong_counts(n: int) -> StrongCountReport:
    """Strong dichotomies per polarity: balanced coefficients of the order-2
    swap classes whose involution is a genuine cell symmetry."""
    ext = extended_inventory(n)
    group = ext.result.group
    k = n // 2
    entries: list[tuple[PolarityClass, int]] = []
    for i, cls in enumerate(ext.result.traversal.classes):
        if cls.rep.order != 2 or not ext.infos[i].mixed:
            continue
        other = [g for g in cls.rep.members if g != group.identity][0]
        aff = group.affine_parts[other]
        if aff.shift == 0 and aff.unit == 1:
            continue  # the bare color swap fixes nothing and names no polarity
        q = ext.inventories[i]
        if q.coeffs and any(c and j != k for j, c in enumerate(q.coeffs)):
            raise IntegrityError(
                f"strong-class inventory supported off the balanced degree: {q!r}")
        count = q.coeff(k)
        if count:
            entries.append((polarity_class_of(aff.shift, aff.unit, n), count))
    entries.sort(key=lambda e: e[0].sort_key())
    return StrongCountReport(n=n, entries=tuple(entries))


def _double_action_fixed_count(group: FiniteGroup, g: int) -> int:
    perm = group.dom_perms[g]
    swap = group.color_bits[g]
    m = group.domain_size
    seen = [False] * m
    cycles = []
    for start in range(m):
        if seen[start]:
            continue
        length, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        cycles.append(length)
    if not swap:
        return 1 << len(cycles)
    if any(c % 2 for c in cycles):
        return 0
    return 1 << len(cycles)


def burnside_double_orbits(group: FiniteGroup) -> int:
    """Orbit count of 2-colorings under the doubled action, by Burnside."""
    total = sum(_double_action_fixed_count(group, g) for g in range(group.order))
    if total % group.order:
        raise IntegrityError("Burnside sum not divisible by |G|")
    return total // group.order
