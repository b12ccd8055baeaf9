"""Finite groups with a cell action and a two-color action.

Covers the affine groups Aff(Z_n) = {x -> v*x + u : gcd(v, n) = 1}, their
color-swap doublings Aff(Z_n) x C2, and arbitrary explicit permutation
groups given by generators.  A group is materialized as dense index tables
(multiplication, inverses) together with, per element, one permutation of
the cells {0..m-1} and one permutation of the colors {0, 1}.  Everything is
immutable after construction and safe to share between threads.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import ResourceLimitError

# hard sanity cap on |G| for table materialization
MAX_GROUP_ORDER = 4096

_LABEL_RE = re.compile(r"^e\^\{?(-?\d+)\}?\.\{?(-?\d+)\}?$")


def units_of(n: int) -> list[int]:
    """All residues 0 <= v < n with gcd(v, n) = 1, ascending."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    return [v for v in range(n) if gcd(v, n) == 1]


@dataclass(frozen=True)
class AffineElement:
    """The map x -> unit*x + shift on Z_modulus, written e^shift.unit."""

    shift: int
    unit: int
    modulus: int

    def __post_init__(self):
        n = self.modulus
        if n < 1:
            raise ValueError(f"modulus must be positive, got {n}")
        if not (0 <= self.shift < n and 0 <= self.unit < n):
            raise ValueError(f"residues out of range mod {n}: {self.shift}, {self.unit}")
        if gcd(self.unit, n) != 1:
            raise ValueError(f"{self.unit} is not a unit mod {n}")

    @classmethod
    def make(cls, shift: int, unit: int, modulus: int) -> "AffineElement":
        """Construct with residues reduced mod the modulus."""
        return cls(shift % modulus, unit % modulus, modulus)

    @classmethod
    def from_label(cls, label: str, modulus: int) -> "AffineElement":
        """Parse "e^u.v"; negative residues such as "e^5.-1" are normalized."""
        m = _LABEL_RE.match(label.strip())
        if m is None:
            raise ValueError(f"cannot parse affine label {label!r}")
        return cls.make(int(m.group(1)), int(m.group(2)), modulus)

    @property
    def label(self) -> str:
        return f"e^{self.shift}.{self.unit}"

    @property
    def display_label(self) -> str:
        """Like `label`, but writes the unit n-1 as -1."""
        if self.modulus > 2 and self.unit == self.modulus - 1:
            return f"e^{self.shift}.-1"
        return self.label

    def apply(self, x: int) -> int:
        return (self.unit * x + self.shift) % self.modulus

    def compose(self, other: "AffineElement") -> "AffineElement":
        """self after other: (self . other)(x) = self(other(x))."""
        if self.modulus != other.modulus:
            raise ValueError(f"modulus mismatch: {self.modulus} vs {other.modulus}")
        n = self.modulus
        return AffineElement((self.shift + self.unit * other.shift) % n,
                             (self.unit * other.unit) % n, n)

    def inverse(self) -> "AffineElement":
        n = self.modulus
        w = pow(self.unit, -1, n) if n > 1 else 0
        return AffineElement((-w * self.shift) % n, w, n)

    def order(self) -> int:
        k, cur = 1, self
        ident = AffineElement.make(0, 1, self.modulus)
        while cur != ident:
            cur = cur.compose(self)
            k += 1
        return k

    def __str__(self) -> str:
        return self.label


def aff_apply(a: AffineElement, x: int) -> int:
    return a.apply(x)


def aff_compose(a: AffineElement, b: AffineElement) -> AffineElement:
    return a.compose(b)


def aff_inverse(a: AffineElement) -> AffineElement:
    return a.inverse()


@dataclass(frozen=True)
class GroupSpec:
    """Uniform front door for group construction (also the cache key).

    kind is one of "affine", "affine-swap", "explicit".  Explicit groups act
    on {0..domain_size-1} and each generator is a cell permutation plus a
    color-swap bit.
    """

    kind: str
    n: int | None = None
    domain_size: int | None = None
    generators: tuple[tuple[tuple[int, ...], bool], ...] | None = None

    @classmethod
    def affine(cls, n: int) -> "GroupSpec":
        if n < 1:
            raise ValueError(f"modulus must be positive, got {n}")
        return cls(kind="affine", n=n)

    @classmethod
    def affine_swap(cls, n: int) -> "GroupSpec":
        if n < 1:
            raise ValueError(f"modulus must be positive, got {n}")
        return cls(kind="affine-swap", n=n)

    @classmethod
    def explicit(cls, domain_size: int, generators) -> "GroupSpec":
        gens = tuple((tuple(int(i) for i in perm), bool(swap)) for perm, swap in generators)
        for perm, _ in gens:
            if sorted(perm) != list(range(domain_size)):
                raise ValueError(f"not a permutation of 0..{domain_size - 1}: {perm}")
        return cls(kind="explicit", domain_size=domain_size, generators=gens)

    @classmethod
    def from_json_dict(cls, d: dict) -> "GroupSpec":
        """Explicit-group input schema: {"domain_size": m, "generators": [...]}."""
        gens = [(g["perm"], g.get("swap", False)) for g in d["generators"]]
        return cls.explicit(int(d["domain_size"]), gens)

    def to_json_dict(self) -> dict:
        if self.kind == "explicit":
            return {
                "kind": self.kind,
                "domain_size": self.domain_size,
                "generators": [{"perm": list(p), "swap": s} for p, s in self.generators],
            }
        return {"kind": self.kind, "n": self.n}

    @property
    def descriptor(self) -> str:
        """Stable identifier used for cache file names and memoization."""
        if self.kind in ("affine", "affine-swap"):
            return f"{self.kind}-{self.n}"
        blob = json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))
        return "explicit-" + hashlib.sha256(blob.encode()).hexdigest()[:12]


class FiniteGroup:
    """A finite group as dense index tables plus its two actions."""

    __slots__ = ("spec", "labels", "domain_size", "_mult", "_inv", "identity",
                 "dom_perms", "color_bits", "affine_parts", "_mult_np", "_conj_np")

    def __init__(self, spec, labels, mult, dom_perms, color_bits, affine_parts=None):
        self.spec = spec
        self.labels = tuple(labels)
        self._mult = mult
        self.dom_perms = tuple(tuple(p) for p in dom_perms)
        self.color_bits = tuple(color_bits)
        self.domain_size = len(self.dom_perms[0])
        self.affine_parts = affine_parts
        n = len(labels)
        ident = None
        for i in range(n):
            if all(mult[i][j] == j for j in range(n)) and all(mult[j][i] == j for j in range(n)):
                ident = i
                break
        if ident is None:
            raise ValueError("multiplication table has no identity")
        self.identity = ident
        inv = [-1] * n
        for i in range(n):
            for j in range(n):
                if mult[i][j] == ident:
                    inv[i] = j
                    break
            if inv[i] < 0 or mult[inv[i]][i] != ident:
                raise ValueError(f"element {i} has no two-sided inverse")
        self._inv = inv
        self._mult_np = None
        self._conj_np = None

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def descriptor(self) -> str:
        return self.spec.descriptor

    def mul(self, a: int, b: int) -> int:
        return self._mult[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    @property
    def mult_rows(self):
        return self._mult

    @property
    def inv_row(self):
        return self._inv

    @property
    def mult_np(self) -> np.ndarray:
        if self._mult_np is None:
            self._mult_np = np.array(self._mult, dtype=np.int32)
        return self._mult_np

    @property
    def conj_np(self) -> np.ndarray:
        """conj_np[g, x] = g * x * g^-1."""
        if self._conj_np is None:
            mult = self.mult_np
            inv = np.array(self._inv, dtype=np.int32)
            t = mult[:, inv]            # t[x, g] = x * g^-1
            idx = np.arange(self.order, dtype=np.int32)
            self._conj_np = mult[idx[:, None], t.T]
        return self._conj_np

    def element_order(self, g: int) -> int:
        k, cur = 1, g
        while cur != self.identity:
            cur = self._mult[cur][g]
            k += 1
        return k

    def label(self, g: int) -> str:
        return self.labels[g]

    def is_abelian(self) -> bool:
        m = self._mult
        return all(m[a][b] == m[b][a] for a in range(self.order) for b in range(a))

    def validate(self, samples: int = 200, seed: int = 0) -> None:
        """Spot-check the group axioms and that both actions are homomorphisms."""
        rng = np.random.default_rng(seed)
        n = self.order
        for g in range(n):
            assert self._mult[g][self._inv[g]] == self.identity
            assert self._mult[self._inv[g]][g] == self.identity
        for _ in range(samples):
            a, b, c = (int(v) for v in rng.integers(0, n, size=3))
            assert self._mult[self._mult[a][b]][c] == self._mult[a][self._mult[b][c]]
            ab = self._mult[a][b]
            pa, pb = self.dom_perms[a], self.dom_perms[b]
            assert self.dom_perms[ab] == tuple(pa[pb[x]] for x in range(self.domain_size))
            assert self.color_bits[ab] == self.color_bits[a] ^ self.color_bits[b]
        assert self.dom_perms[self.identity] == tuple(range(self.domain_size))
        assert self.color_bits[self.identity] == 0


def _affine_tables(n: int):
    us = units_of(n)
    pos = {v: i for i, v in enumerate(us)}
    elems = [(u, v) for u in range(n) for v in us]
    order = len(elems)
    if order > MAX_GROUP_ORDER:
        raise ResourceLimitError(f"|Aff(Z_{n})| = {order} exceeds cap {MAX_GROUP_ORDER}")
    phi = len(us)
    mult = []
    for (u1, v1) in elems:
        row = [0] * order
        for j, (u2, v2) in enumerate(elems):
            row[j] = ((u1 + v1 * u2) % n) * phi + pos[(v1 * v2) % n]
        mult.append(row)
    perms = [tuple((v * x + u) % n for x in range(n)) for (u, v) in elems]
    parts = tuple(AffineElement(u, v, n) for (u, v) in elems)
    return elems, mult, perms, parts


def _build_affine(spec: GroupSpec) -> FiniteGroup:
    elems, mult, perms, parts = _affine_tables(spec.n)
    labels = [f"e^{u}.{v}" for (u, v) in elems]
    return FiniteGroup(spec, labels, mult, perms, [0] * len(elems), affine_parts=parts)


def _build_affine_swap(spec: GroupSpec) -> FiniteGroup:
    n = spec.n
    elems, amult, perms, parts = _affine_tables(n)
    base = len(elems)
    if 2 * base > MAX_GROUP_ORDER:
        raise ResourceLimitError(f"|Aff(Z_{n}) x C2| = {2 * base} exceeds cap {MAX_GROUP_ORDER}")
    # index = 2 * affine_index + swap_bit; the C2 factor is central
    mult = [[0] * (2 * base) for _ in range(2 * base)]
    for i in range(base):
        arow = amult[i]
        for s in (0, 1):
            row = mult[2 * i + s]
            for j in range(base):
                ij2 = 2 * arow[j]
                row[2 * j] = ij2 + s
                row[2 * j + 1] = ij2 + (s ^ 1)
    labels, dperms, bits, xparts = [], [], [], []
    for i, (u, v) in enumerate(elems):
        for s in (0, 1):
            labels.append(f"(e^{u}.{v}, {'swap' if s else 'id'})")
            dperms.append(perms[i])
            bits.append(s)
            xparts.append(parts[i])
    return FiniteGroup(spec, labels, mult, dperms, bits, affine_parts=tuple(xparts))


def _build_explicit(spec: GroupSpec) -> FiniteGroup:
    m = spec.domain_size
    gens = [(tuple(p), int(s)) for p, s in spec.generators]
    ident = (tuple(range(m)), 0)

    def compose(a, b):
        return (tuple(a[0][b[0][x]] for x in range(m)), a[1] ^ b[1])

    seen = {ident}
    queue = [ident]
    while queue:
        cur = queue.pop()
        for g in gens:
            nxt = compose(g, cur)
            if nxt not in seen:
                if len(seen) >= MAX_GROUP_ORDER:
                    raise ResourceLimitError(
                        f"explicit group closure exceeds cap {MAX_GROUP_ORDER}")
                seen.add(nxt)
                queue.append(nxt)
    elems = sorted(seen)
    index = {e: i for i, e in enumerate(elems)}
    mult = [[index[compose(a, b)] for b in elems] for a in elems]
    labels = ["[" + " ".join(map(str, p)) + ("]~swap" if s else "]") for p, s in elems]
    return FiniteGroup(spec, labels, mult, [p for p, _ in elems], [s for _, s in elems])


def build_group(spec: GroupSpec) -> FiniteGroup:
    """Materialize a FiniteGroup from its specification."""
    if spec.kind == "affine":
        return _build_affine(spec)
    if spec.kind == "affine-swap":
        return _build_affine_swap(spec)
    if spec.kind == "explicit":
        return _build_explicit(spec)
    raise ValueError(f"unknown group kind {spec.kind!r}")


def klein_rectangle_spec() -> GroupSpec:
    """Symmetries of a non-square rectangle acting on its 4 vertices."""
    return GroupSpec.explicit(4, [((1, 0, 3, 2), False), ((3, 2, 1, 0), False)])


def conjugate_shift_class(u: int, v: int, n: int) -> list[int]:
    """All shifts u' with e^u'.v conjugate to e^u.v in Aff(Z_n), ascending."""
    shifts = set()
    for w in units_of(n):
        for t in range(n):
            shifts.add((t + w * u - v * t) % n)
    return sorted(shifts)
