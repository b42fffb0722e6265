"""Independent brute-force oracles used to freeze expected values.

Everything here is deliberately computed along a different path from the
package: roots are enumerated from the classical coordinate descriptions,
type-A Weyl groups are modelled as permutation groups, and dimensions come
from closed-form counting formulas.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb
from typing import Iterable, Set, Tuple


def classical_roots(letter: str, n: int) -> Set[Tuple[Fraction, ...]]:
    """Roots of the classical and small exceptional types in their
    standard euclidean coordinates."""
    roots: Set[Tuple[Fraction, ...]] = set()

    def vec(dim, pairs):
        v = [Fraction(0)] * dim
        for i, x in pairs:
            v[i] = Fraction(x)
        return tuple(v)

    if letter == "A":
        dim = n + 1
        for i in range(dim):
            for j in range(dim):
                if i != j:
                    roots.add(vec(dim, [(i, 1), (j, -1)]))
    elif letter in ("B", "C", "D"):
        for i in range(n):
            for j in range(i + 1, n):
                for si in (1, -1):
                    for sj in (1, -1):
                        roots.add(vec(n, [(i, si), (j, sj)]))
        if letter == "B":
            for i in range(n):
                for s in (1, -1):
                    roots.add(vec(n, [(i, s)]))
        elif letter == "C":
            for i in range(n):
                for s in (2, -2):
                    roots.add(vec(n, [(i, s)]))
    elif letter == "G":
        assert n == 2
        half = [(1, -1, 0), (0, 1, -1), (1, 0, -1), (2, -1, -1), (-1, 2, -1), (1, 1, -2)]
        for v in half:
            roots.add(tuple(Fraction(x) for x in v))
            roots.add(tuple(Fraction(-x) for x in v))
    elif letter == "F":
        assert n == 4
        for i in range(4):
            for s in (1, -1):
                roots.add(vec(4, [(i, s)]))
        for i in range(4):
            for j in range(i + 1, 4):
                for si in (1, -1):
                    for sj in (1, -1):
                        roots.add(vec(4, [(i, si), (j, sj)]))
        for signs in itertools.product((Fraction(1, 2), Fraction(-1, 2)), repeat=4):
            roots.add(tuple(signs))
    else:
        raise ValueError(f"no classical enumeration for type {letter}")
    return roots


def _compose(a, b):
    return tuple(a[b[i]] for i in range(len(a)))


def sym_subgroup(n: int, levi: Iterable[int]) -> Set[Tuple[int, ...]]:
    """Closure of the adjacent transpositions (i, i+1), i in levi (1-based),
    inside the symmetric group on n letters."""
    gens = []
    for i in levi:
        g = list(range(n))
        g[i - 1], g[i] = g[i], g[i - 1]
        gens.append(tuple(g))
    sub = {tuple(range(n))}
    frontier = list(sub)
    while frontier:
        new = []
        for h in frontier:
            for g in gens:
                hg = _compose(h, g)
                if hg not in sub:
                    sub.add(hg)
                    new.append(hg)
        frontier = new
    return sub


def sym_coset_count(n: int, levi: Iterable[int]) -> int:
    """Number of left cosets of the Young subgroup in the symmetric group;
    the type-A oracle for parabolic coset enumeration."""
    sub = sym_subgroup(n, levi)
    seen: Set[Tuple[int, ...]] = set()
    count = 0
    for w in itertools.permutations(range(n)):
        if w in seen:
            continue
        count += 1
        for h in sub:
            seen.add(_compose(w, h))
    return count


def grs_dim(k: int, D: int) -> int:
    return k * (D - k)


def sp_grs_dim(k: int, D: int) -> int:
    """Isotropic k-planes for a non-degenerate skew form: the linear count
    minus one symmetric condition per pair of basis vectors."""
    return k * (D - k) - k * (k - 1) // 2


def o_grs_dim(k: int, D: int) -> int:
    """Isotropic k-planes for a non-degenerate symmetric form."""
    return k * (D - k) - k * (k + 1) // 2


def a2_irrep_dim(p: int, q: int) -> int:
    """Rank-two special linear hook length formula."""
    num = (p + 1) * (q + 1) * (p + q + 2)
    assert num % 2 == 0
    return num // 2


def projective_cohomology(n: int, k: int) -> dict:
    """Graded cohomology dimensions of the degree-k line bundle on
    projective n-space, from the binomial formulas."""
    out = {}
    if k >= 0:
        out[0] = comb(n + k, n)
    elif k <= -n - 1:
        out[n] = comb(-k - 1, n)
    return out
