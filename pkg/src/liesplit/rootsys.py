"""Exact root-system, weight-lattice and Weyl-group engine for the simple
Lie types A through G.

Conventions, fixed once for the whole package:

* simple roots carry the Bourbaki numbering (1-based everywhere);
* roots are integer vectors in the simple-root basis, weights are integer
  vectors in the fundamental-weight basis, and the Cartan matrix converts
  between the two, so reflections, pairings and the dot action are all
  integer matrix arithmetic;
* ``cartan[i][j]`` is the pairing of the j-th simple root against the i-th
  simple coroot, hence the weight coordinates of ``alpha_j`` are the j-th
  column of the Cartan matrix;
* the invariant bilinear form is normalised so that long roots have
  squared length 2 (short roots then have squared length 1, or 2/3 in
  type G).

No floating point is used anywhere; rational intermediates are
``fractions.Fraction`` and every advertised output is an integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

__all__ = [
    "DEFAULT_ENUMERATION_CAP", "EnumerationCapError", "Root", "Weight",
    "WeylElement", "BwbResult", "RootSystem", "build_root_system", "weyl_order",
    "coroot_pairing", "reflect", "weyl_action", "weyl_root_action", "dot_action",
    "minimal_coset_reps", "bwb_cohomology", "weyl_dimension",
    "weight_json", "root_json", "weyl_json", "bwb_json",
]

DEFAULT_ENUMERATION_CAP = 10**6

_RANK_BOUNDS = {"A": (1, None), "B": (2, None), "C": (2, None),
                "D": (3, None), "E": (6, 8), "F": (4, 4), "G": (2, 2)}

_ROOT_COUNT = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}

# Degrees of the fundamental invariants; the Weyl group order is their product.
_WEYL_DEGREES = {
    "A": lambda n: list(range(2, n + 2)),
    "B": lambda n: list(range(2, 2 * n + 1, 2)),
    "C": lambda n: list(range(2, 2 * n + 1, 2)),
    "D": lambda n: list(range(2, 2 * n - 1, 2)) + [n],
    "E": lambda n: {6: [2, 5, 6, 8, 9, 12],
                    7: [2, 6, 8, 10, 12, 14, 18],
                    8: [2, 8, 12, 14, 18, 20, 24, 30]}[n],
    "F": lambda n: [2, 6, 8, 12],
    "G": lambda n: [2, 6],
}


class EnumerationCapError(ValueError):
    """Raised when a Weyl-group enumeration would exceed the configured cap."""

    def __init__(self, cap: int):
        super().__init__(f"enumeration exceeds the configured cap of {cap} elements")
        self.cap = cap


def _validate_type(type_letter: str, rank: int) -> None:
    if type_letter not in _RANK_BOUNDS:
        raise ValueError(f"unknown simple type {type_letter!r}; expected one of A,B,C,D,E,F,G")
    lo, hi = _RANK_BOUNDS[type_letter]
    if rank < lo or (hi is not None and rank > hi):
        upper = hi if hi is not None else "inf"
        raise ValueError(f"rank {rank} invalid for type {type_letter} (allowed {lo}..{upper})")


def _cartan_matrix(type_letter: str, rank: int) -> Tuple[Tuple[int, ...], ...]:
    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def chain(pairs: Iterable[Tuple[int, int]]) -> None:
        for i, j in pairs:
            a[i][j] = -1
            a[j][i] = -1

    if type_letter in "ABCD" or type_letter == "E":
        chain((i, i + 1) for i in range(n - 1))
    if type_letter == "B":
        # alpha_n is short: its coroot pairs to -2 against alpha_{n-1}
        a[n - 1][n - 2] = -2
    elif type_letter == "C":
        # alpha_n is long
        a[n - 2][n - 1] = -2
    elif type_letter == "D":
        a[n - 2][n - 1] = 0
        a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = -1
        a[n - 1][n - 3] = -1
    elif type_letter == "E":
        # Bourbaki: node 2 hangs off node 4; the chain is 1-3-4-5-...-n
        a[0][1] = 0
        a[1][0] = 0
        a[1][2] = 0
        a[2][1] = 0
        a[0][2] = -1
        a[2][0] = -1
        a[1][3] = -1
        a[3][1] = -1
    elif type_letter == "F":
        chain([(0, 1), (2, 3)])
        a[1][2] = -1
        a[2][1] = -2
    elif type_letter == "G":
        # alpha_1 short, alpha_2 long
        a[0][1] = -3
        a[1][0] = -1
    return tuple(tuple(row) for row in a)


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> Tuple[Fraction, ...]:
    """Half squared lengths d_i with (alpha_i, alpha_j) = d_i * cartan[i][j],
    scaled so the long roots have d = 1."""
    n = len(cartan)
    d: List[Optional[Fraction]] = [None] * n
    d[0] = Fraction(1)
    pending = [0]
    while pending:
        i = pending.pop()
        for j in range(n):
            if i != j and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])
                pending.append(j)
    if any(x is None for x in d):
        raise ValueError("Cartan matrix is not connected")
    top = max(d)  # type: ignore[type-var]
    return tuple(x / top for x in d)  # type: ignore[operator]


def _close_roots(cartan: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    """Orbit of the simple roots under all simple reflections, in the
    simple-root basis."""
    n = len(cartan)
    seen = set()
    frontier = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen.update(frontier)
    while frontier:
        nxt = []
        for k in frontier:
            for i in range(n):
                pairing = sum(cartan[i][j] * k[j] for j in range(n))
                image = list(k)
                image[i] -= pairing
                t = tuple(image)
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return tuple(sorted(seen))


def _invert_rational(m: Sequence[Sequence[int]]) -> Tuple[Tuple[Fraction, ...], ...]:
    n = len(m)
    aug = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(1 if j == i else 0) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@dataclass(frozen=True)
class Root:
    """A root, as an integer vector in the simple-root basis."""

    coords: Tuple[int, ...]

    @property
    def is_positive(self) -> bool:
        return any(self.coords) and all(c >= 0 for c in self.coords)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coords))


@dataclass(frozen=True)
class Weight:
    """A lattice weight, as an integer vector in the fundamental-weight basis."""

    coords: Tuple[int, ...]

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-c for c in self.coords))


@dataclass(frozen=True)
class WeylElement:
    """A Weyl-group element given by a reduced word of 1-based simple
    reflection indices; the word acts rightmost reflection first."""

    word: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.word)


@dataclass(frozen=True)
class BwbResult:
    """Cohomology of one line bundle: zero, or a single surviving degree
    with the dominant weight of the resulting representation."""

    zero: bool
    degree: Optional[int] = None
    highest_weight: Optional[Weight] = None


class RootSystem:
    """Immutable root datum of one simple type.  Build via
    :func:`build_root_system`; all fields are read-only after construction."""

    def __init__(self, type_letter: str, rank: int):
        _validate_type(type_letter, rank)
        self.type_letter = type_letter
        self.rank = rank
        self.cartan_matrix = _cartan_matrix(type_letter, rank)
        self._d = _symmetrizer(self.cartan_matrix)

        coords = _close_roots(self.cartan_matrix)
        expected = _ROOT_COUNT[type_letter](rank)
        if len(coords) != expected:
            raise AssertionError(
                f"root closure produced {len(coords)} roots for {type_letter}{rank}, expected {expected}")
        self.roots: Tuple[Root, ...] = tuple(Root(k) for k in coords)
        self.positive_roots: Tuple[Root, ...] = tuple(r for r in self.roots if r.is_positive)
        self.simple_roots: Tuple[Root, ...] = tuple(
            Root(tuple(1 if j == i else 0 for j in range(rank))) for i in range(rank))
        self.fundamental_weights: Tuple[Weight, ...] = tuple(
            Weight(tuple(1 if j == i else 0 for j in range(rank))) for i in range(rank))
        self.rho = Weight((1,) * rank)

        self._root_index: Dict[Tuple[int, ...], int] = {r.coords: i for i, r in enumerate(self.roots)}
        # weight coordinates C.k and coroot coordinates of beta-vee, per root;
        # lengths are computed through the integer-scaled form L*(. , .)
        scale = math.lcm(*(d.denominator for d in self._d))
        scaled_d = [int(scale * d) for d in self._d]
        scaled_form = [[scaled_d[i] * self.cartan_matrix[i][j] for j in range(rank)]
                       for i in range(rank)]
        self._weight_coords: Dict[Tuple[int, ...], Tuple[int, ...]] = {}
        self._coroot_row: Dict[Tuple[int, ...], Tuple[int, ...]] = {}
        for r in self.roots:
            k = r.coords
            support = [j for j in range(rank) if k[j]]
            wc = tuple(sum(self.cartan_matrix[i][j] * k[j] for j in support) for i in range(rank))
            norm = sum(k[i] * k[j] * scaled_form[i][j] for i in support for j in support)
            # coroot coordinate: k_i * d_i / d_beta, with d_beta = norm / (2*scale)
            row = []
            for i in range(rank):
                num = 2 * k[i] * scaled_d[i]
                if num % norm:
                    raise AssertionError(f"non-integral coroot coordinates for root {k}")
                row.append(num // norm)
            self._weight_coords[k] = wc
            self._coroot_row[k] = tuple(row)
        # Gram matrix of the fundamental weights, for the invariant form
        cinv = _invert_rational(self.cartan_matrix)
        self._gram = tuple(tuple(cinv[j][i] * self._d[j] for j in range(rank)) for i in range(rank))

    # -- basic lookups -------------------------------------------------

    def contains_root(self, root: Root) -> bool:
        return root.coords in self._root_index

    def simple_root(self, i: int) -> Root:
        self._check_index(i)
        return self.simple_roots[i - 1]

    def fundamental_weight(self, i: int) -> Weight:
        self._check_index(i)
        return self.fundamental_weights[i - 1]

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise ValueError(f"simple-root index {i} out of range 1..{self.rank}")

    def root_weight_coords(self, root: Root) -> Tuple[int, ...]:
        return self._weight_coords[root.coords]

    def coroot_coords(self, root: Root) -> Tuple[int, ...]:
        return self._coroot_row[root.coords]

    def simple_pairing(self, i: int, j: int) -> int:
        """(alpha_j, alpha_i-vee), 1-based."""
        return self.cartan_matrix[i - 1][j - 1]

    def simple_root_norms(self) -> Tuple[Fraction, ...]:
        """Squared lengths (alpha_i, alpha_i), long roots normalised to 2."""
        return tuple(2 * d for d in self._d)

    def adjacent(self, i: int, j: int) -> bool:
        """Dynkin-diagram adjacency of two simple roots, 1-based."""
        return i != j and self.cartan_matrix[i - 1][j - 1] != 0

    def inner_product(self, x: Weight, y: Weight) -> Fraction:
        n = self.rank
        return sum(Fraction(x.coords[i]) * y.coords[j] * self._gram[i][j]
                   for i in range(n) for j in range(n))

    def __repr__(self) -> str:
        return f"RootSystem({self.type_letter}{self.rank})"


@lru_cache(maxsize=None)
def build_root_system(type_letter: str, rank: int) -> RootSystem:
    """Construct (and cache) the root system of a valid simple type."""
    return RootSystem(type_letter, rank)


def weyl_order(rs: RootSystem) -> int:
    return math.prod(_WEYL_DEGREES[rs.type_letter](rs.rank))


# -- pairings and reflections ------------------------------------------


def coroot_pairing(rs: RootSystem, weight: Weight, root: Root) -> int:
    """(weight, root-vee); integral on the weight lattice."""
    if not rs.contains_root(root):
        raise ValueError(f"{root.coords} is not a root of {rs.type_letter}{rs.rank}")
    row = rs.coroot_coords(root)
    return sum(r * c for r, c in zip(row, weight.coords))


def reflect(rs: RootSystem, root: Root, weight: Weight) -> Weight:
    """Reflection of a weight in the hyperplane orthogonal to a root."""
    pairing = coroot_pairing(rs, weight, root)
    wc = rs.root_weight_coords(root)
    return Weight(tuple(c - pairing * w for c, w in zip(weight.coords, wc)))


def _reflect_simple(rs: RootSystem, i: int, coords: Tuple[int, ...]) -> Tuple[int, ...]:
    # weight coords; i is 1-based
    c = coords[i - 1]
    if c == 0:
        return coords
    col = tuple(rs.cartan_matrix[r][i - 1] for r in range(rs.rank))
    return tuple(x - c * col[r] for r, x in enumerate(coords))


def _reflect_simple_root(rs: RootSystem, i: int, coords: Tuple[int, ...]) -> Tuple[int, ...]:
    # root coords; i is 1-based
    row = rs.cartan_matrix[i - 1]
    pairing = sum(row[j] * coords[j] for j in range(rs.rank))
    out = list(coords)
    out[i - 1] -= pairing
    return tuple(out)


def weyl_action(rs: RootSystem, w: WeylElement, weight: Weight) -> Weight:
    coords = weight.coords
    for i in reversed(w.word):
        coords = _reflect_simple(rs, i, coords)
    return Weight(coords)


def weyl_root_action(rs: RootSystem, w: WeylElement, root: Root) -> Root:
    coords = root.coords
    for i in reversed(w.word):
        coords = _reflect_simple_root(rs, i, coords)
    return Root(coords)


def dot_action(rs: RootSystem, w: WeylElement, chi: Weight) -> Weight:
    """The shifted action w(chi + rho) - rho."""
    return weyl_action(rs, w, chi + rs.rho) - rs.rho


# -- coset enumeration --------------------------------------------------


def _orbit_with_words(rs: RootSystem, start: Tuple[int, ...], cap: int):
    """BFS orbit of a weight vector under simple reflections.  Returns the
    discovery dict {coords: (index, word)}; words are reduced, length equals
    BFS depth, and new elements are discovered in (depth, word) order."""
    found: Dict[Tuple[int, ...], Tuple[int, Tuple[int, ...]]] = {start: (0, ())}
    frontier: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = [(start, ())]
    while frontier:
        nxt: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = []
        for coords, word in frontier:
            for i in range(1, rs.rank + 1):
                image = _reflect_simple(rs, i, coords)
                if image not in found:
                    if len(found) >= cap:
                        raise EnumerationCapError(cap)
                    new_word = (i,) + word
                    found[image] = (len(found), new_word)
                    nxt.append((image, new_word))
        frontier = sorted(nxt, key=lambda item: item[1])
    return found


def minimal_coset_reps(rs: RootSystem, levi: Iterable[int],
                       cap: int = DEFAULT_ENUMERATION_CAP) -> Tuple[WeylElement, ...]:
    """One minimal-length representative per coset of the parabolic Weyl
    subgroup generated by the simple reflections in ``levi`` (1-based)."""
    levi_set = frozenset(levi)
    for i in levi_set:
        rs._check_index(i)
    anchor = Weight(tuple(0 if i + 1 in levi_set else 1 for i in range(rs.rank)))
    found = _orbit_with_words(rs, anchor.coords, cap)
    words = sorted(word for _, word in found.values())
    return tuple(WeylElement(w) for w in words)


# -- line-bundle cohomology ---------------------------------------------


def bwb_cohomology(rs: RootSystem, chi: Weight) -> BwbResult:
    """Cohomology of the equivariant line bundle attached to ``chi``: zero
    when ``chi + rho`` is singular, otherwise the unique surviving degree
    together with the dominant representative of the shifted orbit."""
    v = tuple(c + 1 for c in chi.coords)
    # independent degree count: positive coroots paired negatively
    inversions = 0
    for beta in rs.positive_roots:
        pairing = sum(r * c for r, c in zip(rs.coroot_coords(beta), v))
        if pairing == 0:
            return BwbResult(zero=True)
        if pairing < 0:
            inversions += 1
    steps = 0
    coords = v
    while True:
        neg = next((i for i in range(rs.rank) if coords[i] < 0), None)
        if neg is None:
            break
        coords = _reflect_simple(rs, neg + 1, coords)
        steps += 1
    if steps != inversions:
        raise AssertionError("dominance walk disagrees with the inversion count")
    return BwbResult(zero=False, degree=steps,
                     highest_weight=Weight(tuple(c - 1 for c in coords)))


def weyl_dimension(rs: RootSystem, chi: Weight) -> int:
    """Dimension of the irreducible representation with dominant highest
    weight ``chi``, as a product over positive roots."""
    if not chi.is_dominant:
        raise ValueError(f"weight {chi.coords} is not dominant")
    result = Fraction(1)
    shifted = tuple(c + 1 for c in chi.coords)
    for beta in rs.positive_roots:
        row = rs.coroot_coords(beta)
        num = sum(r * c for r, c in zip(row, shifted))
        den = sum(row)
        result *= Fraction(num, den)
    if result.denominator != 1:
        raise AssertionError("dimension product is not an integer")
    return int(result)


# -- JSON shapes --------------------------------------------------------


def weight_json(w: Weight) -> List[int]:
    return list(w.coords)


def root_json(r: Root) -> List[int]:
    return list(r.coords)


def weyl_json(w: WeylElement) -> List[int]:
    return list(w.word)


def bwb_json(res: BwbResult) -> dict:
    if res.zero:
        return {"zero": True}
    return {"zero": False, "degree": res.degree,
            "highest_weight": weight_json(res.highest_weight)}
