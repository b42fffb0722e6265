"""Parabolic-subgroup combinatorics on a root system.

A parabolic subgroup is encoded by the set ``I`` of simple roots of its
Levi factor (1-based Bourbaki indices).  The module computes the dimension
data of the quotient variety, its Picard lattice, the Dynkin test deciding
whether every line bundle has vanishing first cohomology, and the
diagram-shrinking iteration step used by the reduction machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Tuple

from .rootsys import (
    Root,
    RootSystem,
    Weight,
    WeylElement,
    bwb_cohomology,
    dot_action,
)

DEFAULT_WITNESS_BOUND = 10


@dataclass(frozen=True)
class ParabolicSubset:
    """Levi simple roots of a parabolic subgroup."""

    rs: RootSystem
    levi: FrozenSet[int]

    def __post_init__(self):
        for i in self.levi:
            self.rs._check_index(i)

    @property
    def levi_sorted(self) -> Tuple[int, ...]:
        return tuple(sorted(self.levi))


def parabolic(rs: RootSystem, levi: Iterable[int]) -> ParabolicSubset:
    return ParabolicSubset(rs, frozenset(levi))


@dataclass(frozen=True)
class OneSplittingReport:
    levi: Tuple[int, ...]
    tilde: Tuple[int, ...]
    is_one_splitting: bool
    witness: Optional[Weight]
    witness_degree: Optional[int]
    search_exhausted: bool


@dataclass(frozen=True)
class SubsystemParabolic:
    """A parabolic inside the sub-diagram on ``nodes``; indices stay those
    of the ambient system."""

    rs: RootSystem
    nodes: Tuple[int, ...]
    levi: Tuple[int, ...]
    is_one_splitting: bool


@dataclass(frozen=True)
class IterationStep:
    alpha0: int
    child: SubsystemParabolic


def radical_roots(p: ParabolicSubset) -> Tuple[Root, ...]:
    """Negative roots outside the Levi subsystem; their number is the
    dimension of the quotient variety."""
    rs = p.rs
    out = []
    for r in rs.roots:
        if r.is_positive:
            continue
        support = {i + 1 for i, c in enumerate(r.coords) if c != 0}
        if not support <= p.levi:
            out.append(r)
    return tuple(sorted(out, key=lambda r: r.coords))


def quotient_dimension(p: ParabolicSubset) -> int:
    return len(radical_roots(p))


def picard_lattice_basis(p: ParabolicSubset) -> Tuple[Weight, ...]:
    """Fundamental weights of the omitted nodes; a basis of the face of the
    weight lattice orthogonal to the Levi."""
    rs = p.rs
    return tuple(rs.fundamental_weight(i) for i in range(1, rs.rank + 1) if i not in p.levi)


def tilde_I(p: ParabolicSubset) -> FrozenSet[int]:
    """The Levi set together with all diagram neighbours of its members."""
    rs = p.rs
    extra = {b for b in range(1, rs.rank + 1) if b not in p.levi
             and any(rs.adjacent(b, a) for a in p.levi)}
    return frozenset(p.levi | extra)


def _perpendicular_outside_roots(p: ParabolicSubset) -> Tuple[int, ...]:
    """Simple roots orthogonal to the whole Levi span, in index order."""
    rs = p.rs
    out = []
    for b in range(1, rs.rank + 1):
        if b in p.levi:
            continue
        if all(rs.simple_pairing(a, b) == 0 for a in p.levi):
            out.append(b)
    return tuple(out)


def _dominant_lattice_points(free: Tuple[int, ...], rank: int, total: int):
    """Dominant weights supported on ``free`` with coefficient sum ``total``,
    in lexicographic coordinate order."""
    if not free:
        if total == 0:
            yield (0,) * rank
        return
    head, tail = free[0], free[1:]
    for c in range(total, -1, -1):
        for rest in _dominant_lattice_points(tail, rank, total - c):
            coords = list(rest)
            coords[head - 1] = c
            yield tuple(coords)


def is_one_splitting(p: ParabolicSubset, bound: int = DEFAULT_WITNESS_BOUND) -> OneSplittingReport:
    """Dynkin test: the quotient variety kills first cohomology of every
    line bundle exactly when the Levi set together with its neighbours is
    the whole diagram.  In the failing case a witness character with
    one-dimensional-degree cohomology is produced and verified."""
    rs = p.rs
    tilde = tilde_I(p)
    splitting = tilde == frozenset(range(1, rs.rank + 1))
    perp = _perpendicular_outside_roots(p)
    # the two formulations of the test must agree on every input
    if splitting != (len(perp) == 0):
        raise RuntimeError(
            f"adjacency and orthogonality formulations disagree on {rs} with levi {p.levi_sorted}")
    if splitting:
        return OneSplittingReport(p.levi_sorted, tuple(sorted(tilde)), True, None, None, False)

    beta = perp[0]
    free = tuple(i for i in range(1, rs.rank + 1) if i not in p.levi)
    tau_beta = WeylElement((beta,))
    for total in range(0, bound + 1):
        for coords in _dominant_lattice_points(free, rs.rank, total):
            chi_plus = Weight(coords)
            witness = dot_action(rs, tau_beta, chi_plus)
            if any(witness.coords[i - 1] != 0 for i in p.levi):
                continue
            res = bwb_cohomology(rs, witness)
            if not res.zero and res.degree == 1:
                return OneSplittingReport(p.levi_sorted, tuple(sorted(tilde)), False,
                                          witness, 1, False)
    return OneSplittingReport(p.levi_sorted, tuple(sorted(tilde)), False, None, None, True)


def _sub_one_splitting(rs: RootSystem, nodes: Tuple[int, ...], levi: Tuple[int, ...]) -> bool:
    """Dynkin test on the induced sub-diagram (which may be disconnected)."""
    outside = [b for b in nodes if b not in levi]
    return all(any(rs.adjacent(b, a) for a in levi) for b in outside)


def iterate_source(p: ParabolicSubset) -> IterationStep:
    """Drop one Levi node so that the corresponding fixed-point source is
    again a quotient with the vanishing property.  Requires the parent to
    have the property and the Levi to fill at least half the diagram."""
    rs = p.rs
    report = is_one_splitting(p)
    if not report.is_one_splitting:
        raise ValueError("iteration step requires a parent with the 1-splitting property")
    if 2 * len(p.levi) < 1 + rs.rank:
        raise ValueError(
            f"iteration step needs 2*|I| >= 1 + rank; got |I|={len(p.levi)}, rank={rs.rank}")
    outside = [b for b in range(1, rs.rank + 1) if b not in p.levi]
    for alpha0 in sorted(p.levi):
        neighbours_lost = [b for b in outside
                           if {a for a in p.levi if rs.adjacent(b, a)} == {alpha0}]
        if neighbours_lost:
            continue
        nodes = tuple(i for i in range(1, rs.rank + 1) if i != alpha0)
        child_levi = tuple(sorted(p.levi - {alpha0}))
        child_splitting = _sub_one_splitting(rs, nodes, child_levi)
        if not child_splitting:
            raise RuntimeError(
                f"internal contradiction: node {alpha0} passed the diagram test "
                f"but the child on {nodes} with levi {child_levi} is not 1-splitting")
        return IterationStep(alpha0, SubsystemParabolic(rs, nodes, child_levi, True))
    raise RuntimeError(
        f"no admissible node found for {rs} with levi {p.levi_sorted}; "
        "this contradicts the counting argument behind the iteration step")


def one_splitting_json(rep: OneSplittingReport) -> dict:
    return {
        "levi": list(rep.levi),
        "tilde_I": list(rep.tilde),
        "is_one_splitting": rep.is_one_splitting,
        "witness": None if rep.witness is None else list(rep.witness.coords),
        "witness_degree": rep.witness_degree,
        "search_exhausted": rep.search_exhausted,
    }
