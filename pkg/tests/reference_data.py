"""Frozen reference values used across the tests.

The matrices are transcribed verbatim from the published worked examples;
the helpers search for the simultaneous permutation within equal-order
blocks under which two traversal-aligned matrices agree.
"""

from fractions import Fraction as F
from itertools import permutations

KLEIN_M = [
    [1, 0, 0, 0, 0],
    [1, 2, 0, 0, 0],
    [1, 0, 2, 0, 0],
    [1, 0, 0, 2, 0],
    [1, 2, 2, 2, 4],
]

KLEIN_B = [
    [F(1), F(0), F(0), F(0), F(0)],
    [F(-1, 2), F(1, 2), F(0), F(0), F(0)],
    [F(-1, 2), F(0), F(1, 2), F(0), F(0)],
    [F(-1, 2), F(0), F(0), F(1, 2), F(0)],
    [F(1, 2), F(-1, 4), F(-1, 4), F(-1, 4), F(1, 4)],
]

AFF6_M = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 2, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 2, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 2, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [1, 2, 2, 2, 0, 4, 0, 0, 0, 0],
    [1, 2, 0, 0, 1, 0, 2, 0, 0, 0],
    [1, 0, 2, 0, 1, 0, 0, 2, 0, 0],
    [1, 0, 0, 2, 3, 0, 0, 0, 6, 0],
    [1, 2, 2, 2, 3, 4, 6, 6, 6, 12],
]

# The inverse as printed alongside AFF6_M.  It is NOT the inverse of AFF6_M:
# it is the reverse-transpose of that inverse (the ascending-order convention
# of the source's software, printed without converting back); the tests
# assert exactly that relation.
AFF6_B_PRINTED = [
    [F(1, 12), 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [F(-1, 12), F(1, 6), 0, 0, 0, 0, 0, 0, 0, 0],
    [F(-1, 4), 0, F(1, 2), 0, 0, 0, 0, 0, 0, 0],
    [F(-1, 4), 0, 0, F(1, 2), 0, 0, 0, 0, 0, 0],
    [F(-1, 12), 0, 0, 0, F(1, 4), 0, 0, 0, 0, 0],
    [F(1, 2), F(-1, 2), F(-1, 2), F(-1, 2), 0, 1, 0, 0, 0, 0],
    [F(1, 12), F(-1, 6), 0, 0, F(-1, 4), 0, F(1, 2), 0, 0, 0],
    [F(1, 4), 0, F(-1, 2), 0, F(-1, 4), 0, 0, F(1, 2), 0, 0],
    [F(1, 4), 0, 0, F(-1, 2), F(-1, 4), 0, 0, 0, F(1, 2), 0],
    [F(-1, 2), F(1, 2), F(1, 2), F(1, 2), F(1, 2), -1, F(-1, 2), F(-1, 2), F(-1, 2), 1],
]

# Q_i for Aff(Z_6) after the two-color substitution, as a coefficient multiset
AFF6_Q_MULTISET = sorted([
    (1, 0, 0, 0, 0, 0, 1),        # 1 + x^6
    (0, 0, 0, 1),                 # x^3
    (0, 0, 0, 1),                 # x^3
    (0, 0, 1, 0, 1),              # x^2 + x^4
    (0, 0, 1, 0, 1),              # x^2 + x^4
    (0, 1, 1, 1, 1, 1),           # x + ... + x^5
    (), (), (), (),               # four zero inventories
])


def reverse_transpose(mat):
    n = len(mat)
    return [[mat[n - 1 - j][n - 1 - i] for j in range(n)] for i in range(n)]


def block_permutations(orders):
    """Yield index permutations that only move positions of equal order."""
    blocks = []
    start = 0
    for i in range(1, len(orders) + 1):
        if i == len(orders) or orders[i] != orders[start]:
            blocks.append(list(range(start, i)))
            start = i
    pools = [list(permutations(b)) for b in blocks]

    def rec(i, acc):
        if i == len(pools):
            yield tuple(acc)
            return
        for choice in pools[i]:
            yield from rec(i + 1, acc + list(choice))

    yield from rec(0, [])


def apply_perm(mat, perm):
    return [[mat[perm[i]][perm[j]] for j in range(len(mat))] for i in range(len(mat))]


def match_up_to_blocks(computed, reference, orders):
    """Return the block permutation aligning computed to reference, or None."""
    ref = [[F(v) for v in row] for row in reference]
    for perm in block_permutations(orders):
        if [[F(v) for v in row] for row in apply_perm(computed, perm)] == ref:
            return perm
    return None
