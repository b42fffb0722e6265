"""Positivity calculus: the index bookkeeping rules that gate the
splitting machinery.

Every function here is a total affine-integer rule.  The module never
claims that a geometric object exists; it only transforms indices, and
each derived quantity carries a provenance tag:

* ``certified`` - produced by the fixed-point engine of :mod:`.bbfix`;
* ``claimed``   - a catalog value taken on trust, not machine-certified;
* ``derived``   - obtained by applying one of the rules below.

Two index dialects are in use: a subvariety is ``p``-positive when ideal
powers kill cohomology up to degree ``p``, equivalently its amplitude
index is ``q = dim Y - p`` (``q = 0`` being the classical ample case).
"""

from __future__ import annotations

from dataclasses import dataclass

CERTIFIED = "certified"
CLAIMED = "claimed"
DERIVED = "derived"


@dataclass(frozen=True)
class PositivityFact:
    """A positivity index for a subvariety of stated dimensions, with its
    provenance."""

    dim_ambient: int
    dim_sub: int
    p: int
    kind: str
    note: str = ""

    def __post_init__(self):
        if not 0 <= self.dim_sub < self.dim_ambient:
            raise ValueError(
                f"need 0 <= dim_sub < dim_ambient, got {self.dim_sub}, {self.dim_ambient}")
        if self.p > self.dim_sub:
            raise ValueError(f"index p={self.p} exceeds dim_sub={self.dim_sub}")
        if self.kind not in (CERTIFIED, CLAIMED, DERIVED):
            raise ValueError(f"unknown provenance kind {self.kind!r}")


@dataclass(frozen=True)
class AmpleBound:
    """An amplitude index q, in the cohomology-vanishing sense."""

    q: int
    context: str = ""


@dataclass(frozen=True)
class TransitivityResult:
    normal_ample_bound: int
    cd_bound: int
    p_composed: int
    approx_p: int
    note: str


def qample_to_ppos(dim_sub: int, q: int) -> int:
    """Amplitude index to positivity index: p = dim_sub - q."""
    return dim_sub - q


def ppos_to_qample(dim_sub: int, p: int) -> int:
    """Positivity index to amplitude index: q = dim_sub - p."""
    return dim_sub - p


def blowup_index(dim_sub: int, delta: int, q: int) -> int:
    """Amplitude of the exceptional divisor over a codimension-delta
    centre whose complement amplitude is q: it is q + delta - 1."""
    if delta < 1:
        raise ValueError(f"codimension must be >= 1, got {delta}")
    return q + delta - 1


def transitivity(dim_x: int, dim_y: int, dim_z: int, r: int, p: int) -> TransitivityResult:
    """Compose positivity through a chain Z in Y in X, where Y is
    r-positive in X and Z is p-positive in Y.

    Returns the normal-bundle amplitude bound dim_y + dim_z - (r + p), the
    cohomological-dimension bound dim_x - (min(r, p) + 1), the composed
    index p - (dim_y - r), and the approximate index min(r, p) that the
    composition satisfies in the weaker, neighbourhood-restricted sense.
    """
    if not dim_z <= dim_y <= dim_x:
        raise ValueError(f"need dim_z <= dim_y <= dim_x, got {dim_z}, {dim_y}, {dim_x}")
    if p > dim_z:
        raise ValueError(f"p={p} exceeds dim_z={dim_z}")
    if r > dim_y:
        raise ValueError(f"r={r} exceeds dim_y={dim_y}")
    return TransitivityResult(
        normal_ample_bound=dim_y + dim_z - (r + p),
        cd_bound=dim_x - (min(r, p) + 1),
        p_composed=p - (dim_y - r),
        approx_p=min(r, p),
        note="the min(r, p) index holds only in the approximate sense "
             "(sections extend from a neighbourhood, not from the ambient space)",
    )


def fiber_criterion(dim_total: int, dim_image: int) -> int:
    """Positivity from a fibration of the blow-up: when the exceptional
    divisor is relatively ample over an image of the stated dimension,
    the centre is p-positive for p = dim_total - dim_image - 1."""
    if dim_image >= dim_total:
        raise ValueError(f"image dimension {dim_image} must be below {dim_total}")
    return dim_total - dim_image - 1


def sommese_zero_locus_ppos(dim_ambient: int, nu: int, q: int) -> int:
    """Positivity of the zero locus of a regular section in a q-ample
    bundle of rank nu: p = dim_ambient - nu - q."""
    if nu < 1:
        raise ValueError(f"rank must be >= 1, got {nu}")
    if not 0 <= q <= dim_ambient:
        raise ValueError(f"q={q} out of range 0..{dim_ambient}")
    return dim_ambient - nu - q


def pullback_ppos(p: int) -> int:
    """Positivity index of the preimage under a flat surjection with
    smooth total space: unchanged."""
    return p


def pullback_line_amplitude(q: int, d: int) -> int:
    """Amplitude of a pulled-back line bundle under a smooth morphism of
    relative dimension d: q + d."""
    if d < 0:
        raise ValueError(f"relative dimension must be >= 0, got {d}")
    return q + d


def intersections_ok(delta: int, p: int) -> bool:
    """Non-emptiness and connectedness of double and triple intersections
    within a family of codimension-delta, p-positive subvarieties:
    guaranteed when 2*delta + 1 <= p."""
    if delta < 1:
        raise ValueError(f"codimension must be >= 1, got {delta}")
    return 2 * delta + 1 <= p


def intersections_ok_cd(dim_ambient: int, delta: int, cd: int) -> bool:
    """Same conclusion from the cohomological-dimension form of the
    hypothesis: cd of the complement at most dim_ambient - 2*delta - 2."""
    if delta < 1:
        raise ValueError(f"codimension must be >= 1, got {delta}")
    return cd <= dim_ambient - 2 * delta - 2


def pic_0loci_check(variant: str, dim_ambient: int, nu: int, q_or_fiberdim: int) -> bool:
    """Picard-diagram hypotheses for families of zero loci.

    variant "sommese": rank-nu bundle with amplitude q; requires
    dim_ambient - q >= 3*nu + 1 for nu >= 2, or >= 5 for nu = 1.
    variant "fiber": generic fibre dimension of the universal reduction
    map; requires nu >= 2 and fibre dimension >= 2*(nu + 1).
    """
    if nu < 1:
        raise ValueError(f"rank must be >= 1, got {nu}")
    if variant == "sommese":
        margin = dim_ambient - q_or_fiberdim
        return margin >= 3 * nu + 1 if nu >= 2 else margin >= 5
    if variant == "fiber":
        return nu >= 2 and q_or_fiberdim >= 2 * (nu + 1)
    raise ValueError(f"unknown variant {variant!r}; expected 'sommese' or 'fiber'")


def pic_restriction_iso(p: int) -> bool:
    """Restriction to a p-positive subvariety is a Picard isomorphism once
    p >= 3."""
    return p >= 3


def fact_json(fact: PositivityFact) -> dict:
    return {
        "dim_ambient": fact.dim_ambient,
        "dim_sub": fact.dim_sub,
        "p": fact.p,
        "kind": fact.kind,
        "note": fact.note,
    }
