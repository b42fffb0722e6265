"""Fixed-point analysis of a one-parameter torus action on a homogeneous
quotient variety.

The 1-PS is encoded by its integer pairings with the simple roots.  Torus
fixed points of the quotient are the minimal coset representatives; the
fixed components of the 1-PS action group them into orbits of the Weyl
group of the centralizer, and every dimension in sight is a count of
tangent-root pairings:

* tangent roots at the base coset are the negative roots outside the Levi,
  and at a general coset their image under the representative;
* a component collects the cosets reachable by reflections in roots paired
  to zero, its dimension is the number of zero pairings, the attracting
  cell adds the positive ones;
* the source is the unique component with no strictly negative pairing.

The sign convention is pinned by the requirement that on the Grassmannian
of 2-planes in 4-space, with pairings (-1, 0, 0), the source is the plane
family through a fixed vector (a projective plane) rather than its mirror.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from . import parabolic as _parabolic
from .rootsys import (
    DEFAULT_ENUMERATION_CAP,
    EnumerationCapError,
    RootSystem,
    WeylElement,
    _reflect_simple,
    _reflect_simple_root,
    weyl_json,
)


@dataclass(frozen=True)
class OneParamSubgroup:
    """Integer cocharacter, entry i = pairing with the i-th simple root."""

    pairings: Tuple[int, ...]

    def root_weight(self, root_coords: Tuple[int, ...]) -> int:
        return sum(k * p for k, p in zip(root_coords, self.pairings))


@dataclass(frozen=True)
class FixedComponent:
    rep: WeylElement
    orbit: Tuple[WeylElement, ...]
    weights: Tuple[int, ...]
    comp_dim: int
    plus_cell_dim: int
    neg_count: int
    is_source: bool


@dataclass(frozen=True)
class PositivityCertificate:
    status: str  # "certified" | "cd-only"
    p: Optional[int]
    cd_complement: int
    scalar_weight: Optional[int]
    codim_source: int


@dataclass(frozen=True)
class SplitHypothesisReport:
    one_splitting: bool
    gap: int
    codim: int
    inequality_holds: bool
    transversality: str


def one_param_subgroup(rs: RootSystem, pairings: Iterable[int]) -> OneParamSubgroup:
    t = tuple(int(x) for x in pairings)
    if len(t) != rs.rank:
        raise ValueError(f"lambda needs {rs.rank} pairings, got {len(t)}")
    return OneParamSubgroup(t)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def fixed_components(rs: RootSystem, levi: Iterable[int], lam: OneParamSubgroup,
                     cap: int = DEFAULT_ENUMERATION_CAP) -> Tuple[FixedComponent, ...]:
    """Fixed components of the 1-PS action, sorted by representative word."""
    levi_set = frozenset(levi)
    p = _parabolic.ParabolicSubset(rs, levi_set)
    if len(lam.pairings) != rs.rank:
        raise ValueError(f"lambda needs {rs.rank} pairings, got {len(lam.pairings)}")
    if not any(lam.pairings):
        raise ValueError("lambda is zero: the action is trivial")

    tangent0 = [r.coords for r in _parabolic.radical_roots(p)]
    dim_x = len(tangent0)
    if dim_x == 0:
        raise ValueError("the quotient is a point: the action is trivial")

    # BFS over cosets, carrying tangent roots along: the tangent roots at
    # s_i . w are the simple reflection of those at w.
    anchor = tuple(0 if i + 1 in levi_set else 1 for i in range(rs.rank))
    index: Dict[Tuple[int, ...], int] = {anchor: 0}
    words: List[Tuple[int, ...]] = [()]
    tangents: List[List[Tuple[int, ...]]] = [list(tangent0)]
    weight_vecs: List[Tuple[int, ...]] = [anchor]
    frontier = [0]
    while frontier:
        nxt = []
        for idx in frontier:
            coords = weight_vecs[idx]
            for i in range(1, rs.rank + 1):
                image = _reflect_simple(rs, i, coords)
                if image not in index:
                    if len(index) >= cap:
                        raise EnumerationCapError(cap)
                    index[image] = len(words)
                    words.append((i,) + words[idx])
                    tangents.append([_reflect_simple_root(rs, i, k) for k in tangents[idx]])
                    weight_vecs.append(image)
                    nxt.append(index[image])
        frontier = sorted(nxt, key=lambda j: words[j])

    n = len(words)
    weight_multisets = []
    for k_list in tangents:
        ws = tuple(sorted(lam.root_weight(k) for k in k_list))
        weight_multisets.append(ws)

    # group cosets by reflections in the zero-paired roots; the simple
    # system of the zero subsystem suffices to generate its Weyl group
    uf = _UnionFind(n)
    zero_all = {r.coords for r in rs.positive_roots if lam.root_weight(r.coords) == 0}
    zero_roots = []
    for coords in zero_all:
        decomposable = any(
            tuple(a - b for a, b in zip(coords, other)) in zero_all
            for other in zero_all if other != coords)
        if not decomposable:
            zero_roots.append(rs.roots[rs._root_index[coords]])
    for j in range(n):
        coords = weight_vecs[j]
        for gamma in zero_roots:
            pairing = sum(a * b for a, b in zip(rs.coroot_coords(gamma), coords))
            if pairing == 0:
                continue
            wc = rs.root_weight_coords(gamma)
            image = tuple(c - pairing * w for c, w in zip(coords, wc))
            uf.union(j, index[image])

    classes: Dict[int, List[int]] = {}
    for j in range(n):
        classes.setdefault(uf.find(j), []).append(j)

    components = []
    sources = sinks = 0
    for members in classes.values():
        members.sort(key=lambda j: (len(words[j]), words[j]))
        rep_idx = members[0]
        ws = weight_multisets[rep_idx]
        for j in members[1:]:
            if weight_multisets[j] != ws:
                raise AssertionError(
                    "tangent weight multiset is not constant on a fixed component")
        zero = sum(1 for w in ws if w == 0)
        pos = sum(1 for w in ws if w > 0)
        neg = len(ws) - zero - pos
        if zero + pos + neg != dim_x:
            raise AssertionError("tangent weights do not partition the tangent space")
        is_source = neg == 0
        sources += is_source
        sinks += pos == 0
        components.append(FixedComponent(
            rep=WeylElement(words[rep_idx]),
            orbit=tuple(WeylElement(words[j]) for j in members),
            weights=ws,
            comp_dim=zero,
            plus_cell_dim=zero + pos,
            neg_count=neg,
            is_source=is_source,
        ))
    if len(components) < 2:
        raise ValueError("lambda acts trivially on this variety (a single fixed component)")
    if sources != 1 or sinks != 1:
        raise AssertionError(f"expected one source and one sink, found {sources} and {sinks}")
    components.sort(key=lambda c: c.rep.word)
    return tuple(components)


def _source_of(components: Tuple[FixedComponent, ...]) -> FixedComponent:
    return next(c for c in components if c.is_source)


def total_dimension(components: Tuple[FixedComponent, ...]) -> int:
    c = components[0]
    return len(c.weights)


def cd_complement(rs: RootSystem, levi: Iterable[int], lam: OneParamSubgroup,
                  cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Largest attracting-cell dimension away from the source; this equals
    both the dimension of the complement of the open cell and the
    cohomological dimension of the complement of the source."""
    components = fixed_components(rs, levi, lam, cap)
    return max(c.plus_cell_dim for c in components if not c.is_source)


def normal_is_scalar(rs: RootSystem, levi: Iterable[int], lam: OneParamSubgroup,
                     cap: int = DEFAULT_ENUMERATION_CAP) -> Tuple[bool, Optional[int]]:
    """Whether the 1-PS acts on the normal bundle of the source by a single
    scalar weight; checked at every torus-fixed point of the source, which
    settles the bundle statement by homogeneity of the source."""
    components = fixed_components(rs, levi, lam, cap)
    src = _source_of(components)
    positives = {w for w in src.weights if w > 0}
    if len(positives) == 1:
        return True, positives.pop()
    return False, None


def ppos_certificate(rs: RootSystem, levi: Iterable[int], lam: OneParamSubgroup,
                     cap: int = DEFAULT_ENUMERATION_CAP) -> PositivityCertificate:
    """Positivity certificate for the source: with a scalar normal action
    the positivity index is dim X - dim(complement of the open cell) - 1;
    otherwise only the cohomological-dimension half is reported."""
    components = fixed_components(rs, levi, lam, cap)
    src = _source_of(components)
    dim_x = total_dimension(components)
    cd = max(c.plus_cell_dim for c in components if not c.is_source)
    codim_source = sum(1 for w in src.weights if w != 0)
    positives = {w for w in src.weights if w > 0}
    if len(positives) == 1:
        return PositivityCertificate(status="certified", p=dim_x - cd - 1,
                                     cd_complement=cd, scalar_weight=positives.pop(),
                                     codim_source=codim_source)
    return PositivityCertificate(status="cd-only", p=None, cd_complement=cd,
                                 scalar_weight=None, codim_source=codim_source)


def check_split_homog(rs: RootSystem, levi: Iterable[int], lam: OneParamSubgroup,
                      cap: int = DEFAULT_ENUMERATION_CAP) -> SplitHypothesisReport:
    """Hypothesis audit for the restriction criterion on a homogeneous
    variety: the vanishing property of the ambient space plus the gap
    inequality gap >= 2*codim + 2 >= 6.  Transversality of the translated
    sources is not decided here."""
    components = fixed_components(rs, levi, lam, cap)
    src = _source_of(components)
    dim_x = total_dimension(components)
    cd = max(c.plus_cell_dim for c in components if not c.is_source)
    gap = dim_x - cd
    codim = sum(1 for w in src.weights if w != 0)
    report = _parabolic.is_one_splitting(_parabolic.ParabolicSubset(rs, frozenset(levi)))
    holds = gap >= 2 * codim + 2 and 2 * codim + 2 >= 6
    return SplitHypothesisReport(one_splitting=report.is_one_splitting, gap=gap,
                                 codim=codim, inequality_holds=holds,
                                 transversality="not checked")


def pic_source_iso(rs: RootSystem, levi: Iterable[int], lam: OneParamSubgroup,
                   cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    """Restriction to the source is a Picard-group isomorphism once the
    complement of the open cell has codimension at least two."""
    components = fixed_components(rs, levi, lam, cap)
    dim_x = total_dimension(components)
    cd = max(c.plus_cell_dim for c in components if not c.is_source)
    return dim_x - cd >= 2


def component_json(c: FixedComponent) -> dict:
    return {
        "rep": weyl_json(c.rep),
        "orbit": [weyl_json(w) for w in c.orbit],
        "weights": list(c.weights),
        "comp_dim": c.comp_dim,
        "plus_cell_dim": c.plus_cell_dim,
        "neg_count": c.neg_count,
        "is_source": c.is_source,
    }


def certificate_json(cert: PositivityCertificate) -> dict:
    return {
        "status": cert.status,
        "p": cert.p,
        "cd_complement": cert.cd_complement,
        "scalar_weight": cert.scalar_weight,
        "codim_source": cert.codim_source,
    }
