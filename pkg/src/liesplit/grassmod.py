"""Closed-form models of linear, symplectic and orthogonal Grassmannians,
the positivity catalog for their standard subvarieties, and the reduction
planners that carry a splitting problem down to a terminal model.

Model coordinates are (k, D, kappa): k-dimensional subspaces of a
D-dimensional space, isotropic for a form with kernel dimension kappa
(kappa is 0 except for degenerate skew forms, where it is D mod 2).  The
catalog literature states its inequalities in the shifted variables
u = k - 1 and w = D - 1; the table below is the single translation point:

    rule                    stated bound            in (k, D, kappa)
    symplectic hyperplane   w >= 2u+3+kappa         D >= 2k+2+kappa
      (strict-ineq. alt)    w >= 2u+2+kappa         D >= 2k+1+kappa
    symplectic point        w >= 2u+1+kappa, u>=2   D >= 2k+kappa, k>=3
    orthogonal hyperplane   w >= 2u+4               D >= 2k+3
    orthogonal point        w >= 2u+1,      u>=3    D >= 2k,       k>=4

Hypothesis checks evaluate the stated bounds literally and report
pass/fail; a failing check is flagged, never patched, and the planner's
terminal always comes from the endpoint theorems.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

from . import bbfix
from .poscalc import CERTIFIED, CLAIMED, DERIVED, PositivityFact, fact_json
from .rootsys import build_root_system

LINEAR = "linear"
SYMPLECTIC = "symplectic"
ORTHOGONAL = "orthogonal"

HYPERPLANE = "hyperplane"
POINT = "point"
LAGRANGIAN = "lagrangian"

RULE_NAMES = {HYPERPLANE: "hyperplane-section", POINT: "point-reduction",
              LAGRANGIAN: "levi-example"}

PASS = "pass"
FAIL = "fail"

ARBITRARY = "arbitrary"
VERY_GENERAL = "very-general"


@dataclass(frozen=True)
class GrassmannianModel:
    kind: str
    k: int
    D: int
    kappa: int = 0

    def __post_init__(self):
        if self.kind not in (LINEAR, SYMPLECTIC, ORTHOGONAL):
            raise ValueError(f"unknown model kind {self.kind!r}")
        if self.kind == LINEAR:
            if self.kappa != 0:
                raise ValueError("linear models have kappa = 0")
            if not 1 <= self.k <= self.D - 1:
                raise ValueError(f"linear model needs 1 <= k <= D-1, got k={self.k}, D={self.D}")
        elif self.kind == SYMPLECTIC:
            if self.kappa not in (0, 1):
                raise ValueError(f"symplectic kernel dimension must be 0 or 1, got {self.kappa}")
            if self.kappa != self.D % 2:
                raise ValueError(
                    f"kernel parity violated: kappa={self.kappa} but D={self.D} "
                    "(a skew form on odd-dimensional space has a kernel)")
            if self.k < 1 or 2 * self.k > self.D + self.kappa:
                raise ValueError(
                    f"symplectic model is empty: needs 1 <= k and 2k <= D+kappa, "
                    f"got k={self.k}, D={self.D}, kappa={self.kappa}")
        else:
            if self.kappa != 0:
                raise ValueError("orthogonal models have kappa = 0")
            if self.k < 1 or self.D < 2 * self.k:
                raise ValueError(
                    f"orthogonal model is empty: needs 1 <= k and D >= 2k, "
                    f"got k={self.k}, D={self.D}")


def linear_model(k: int, D: int) -> GrassmannianModel:
    return GrassmannianModel(LINEAR, k, D, 0)


def symplectic_model(k: int, D: int, kappa: Optional[int] = None) -> GrassmannianModel:
    if kappa is None:
        kappa = D % 2
    return GrassmannianModel(SYMPLECTIC, k, D, kappa)


def orthogonal_model(k: int, D: int) -> GrassmannianModel:
    return GrassmannianModel(ORTHOGONAL, k, D, 0)


def dim_model(m: GrassmannianModel) -> int:
    """Dimension of the model variety.  The symplectic formula holds for
    both kernel dimensions; at D = 2k the orthogonal formula gives the
    dimension of either connected component of the maximal family."""
    k, D = m.k, m.D
    if m.kind == LINEAR:
        return k * (D - k)
    if m.kind == SYMPLECTIC:
        return k * (2 * D - 3 * k + 1) // 2
    return k * (2 * D - 3 * k - 1) // 2


def pic_cyclic_check(m: GrassmannianModel) -> bool:
    """Cyclic Picard group test for symplectic models: passes exactly when
    w >= 2u + 1 + kappa, that is D >= 2k + kappa."""
    if m.kind != SYMPLECTIC:
        raise ValueError(f"pic_cyclic_check applies to symplectic models, got {m.kind}")
    return m.D - 1 >= 2 * (m.k - 1) + 1 + m.kappa


@dataclass(frozen=True)
class Realization:
    """Homogeneous realization of a (model, family) source computation."""

    type_letter: str
    rank: int
    levi: Tuple[int, ...]
    pairings: Tuple[int, ...]


def bb_realization(m: GrassmannianModel, family: str) -> Realization:
    """The documented (type, Levi set, 1-PS) triple whose fixed-point
    source realizes the family's subvariety.  Families without a
    homogeneous kappa = 0 realization are rejected."""
    k, D = m.k, m.D

    def drop(rank: int, dropped: Iterable[int]) -> Tuple[int, ...]:
        gone = set(dropped)
        return tuple(i for i in range(1, rank + 1) if i not in gone)

    if m.kind == LINEAR and family == POINT:
        rank = D - 1
        if rank < 1 or not 1 <= k <= rank:
            raise ValueError(f"no type-A realization for linear ({k},{D})")
        return Realization("A", rank, drop(rank, [k]), (-1,) + (0,) * (rank - 1))
    if m.kind == SYMPLECTIC and family in (POINT, LAGRANGIAN):
        if m.kappa != 0:
            raise ValueError("degenerate symplectic models have no homogeneous realization")
        rank = D // 2
        if rank < 2 or k > rank:
            raise ValueError(f"no type-C realization for symplectic ({k},{D})")
        if family == POINT:
            return Realization("C", rank, drop(rank, [k]), (-1,) + (0,) * (rank - 1))
        return Realization("C", rank, drop(rank, [k]), (0,) * (rank - 1) + (-2,))
    if m.kind == ORTHOGONAL and family == POINT:
        if D % 2 == 1:
            rank = (D - 1) // 2
            if rank < 2 or k > rank:
                raise ValueError(f"no type-B realization for orthogonal ({k},{D})")
            return Realization("B", rank, drop(rank, [k]), (-1,) + (0,) * (rank - 1))
        rank = D // 2
        if rank < 3:
            raise ValueError(f"no type-D realization for orthogonal ({k},{D})")
        if k == rank:
            raise ValueError(
                "the maximal orthogonal family has two components; "
                "fixed-point cross-validation is skipped there")
        lam = (-1,) + (0,) * (rank - 1)
        if k == rank - 1:
            return Realization("D", rank, drop(rank, [rank - 1, rank]), lam)
        return Realization("D", rank, drop(rank, [k]), lam)
    raise ValueError(f"no documented realization for ({m.kind}, {family})")


@lru_cache(maxsize=None)
def _bb_certificate(type_letter: str, rank: int, levi: Tuple[int, ...],
                    pairings: Tuple[int, ...]) -> bbfix.PositivityCertificate:
    rs = build_root_system(type_letter, rank)
    return bbfix.ppos_certificate(rs, levi, bbfix.OneParamSubgroup(pairings))


def _certified_fact(m: GrassmannianModel, family: str, dim_sub: int,
                    expected_p: int, note: str) -> PositivityFact:
    real = bb_realization(m, family)
    cert = _bb_certificate(real.type_letter, real.rank, real.levi, real.pairings)
    if cert.status != "certified" or cert.p != expected_p:
        raise AssertionError(
            f"fixed-point engine disagrees with the catalog on ({m.kind} {m.k},{m.D}, "
            f"{family}): expected p={expected_p}, got {cert}")
    return PositivityFact(dim_model(m), dim_sub, expected_p, CERTIFIED, note)


def catalog_ppos(m: GrassmannianModel, family: str) -> PositivityFact:
    """Positivity of the family's standard subvariety inside the model.

    Catalog values are claimed; the three families with a documented
    fixed-point realization (linear point, symplectic lagrangian,
    orthogonal point off the maximal case) are machine-certified and the
    two routes are asserted equal.
    """
    k, D, kappa = m.k, m.D, m.kappa
    if m.kind == LINEAR:
        if family != POINT:
            raise ValueError(f"linear models catalog only the point family, got {family!r}")
        if k < 2:
            raise ValueError("linear point family needs k >= 2")
        sub_dim = (k - 1) * (D - k)
        return _certified_fact(m, POINT, sub_dim, k - 1,
                               "planes through a fixed vector; certified at the fixed-point source")
    if m.kind == SYMPLECTIC:
        if family == HYPERPLANE:
            if k < 2:
                raise ValueError("symplectic hyperplane family needs k >= 2")
            sub = GrassmannianModel(SYMPLECTIC, k, D - 1, 1 - kappa)
            return PositivityFact(dim_model(m), dim_model(sub), D - 2 * k, CLAIMED,
                                  "planes inside a fixed hyperplane; catalog value")
        if family == POINT:
            if k < 2:
                raise ValueError("symplectic point family needs k >= 2")
            sub = GrassmannianModel(SYMPLECTIC, k - 1, D - 2, kappa)
            if k - 1 > dim_model(sub):
                raise ValueError(
                    f"catalog index {k - 1} exceeds the subvariety dimension "
                    f"{dim_model(sub)}; the point entry does not apply to ({k},{D},{kappa})")
            return PositivityFact(dim_model(m), dim_model(sub), k - 1, CLAIMED,
                                  "planes through a fixed vector, modulo that vector; "
                                  "catalog value, only the cohomological-dimension half "
                                  "is machine-checkable")
        if family == LAGRANGIAN:
            if kappa != 0:
                raise ValueError("the lagrangian family needs a non-degenerate form")
            if D < 4:
                raise ValueError("lagrangian family needs D >= 4")
            sub_dim = k * (D // 2 - k)
            return _certified_fact(m, LAGRANGIAN, sub_dim, (D - 2 * k) // 2,
                                   "planes inside a fixed lagrangian summand; "
                                   "certified at the fixed-point source (scalar weight 2)")
        raise ValueError(f"unknown symplectic family {family!r}")
    # orthogonal
    if family == HYPERPLANE:
        if k < 2:
            raise ValueError("orthogonal hyperplane family needs k >= 2")
        if D < 2 * k + 1:
            raise ValueError("orthogonal hyperplane family needs D >= 2k+1")
        sub = GrassmannianModel(ORTHOGONAL, k, D - 1, 0)
        return PositivityFact(dim_model(m), dim_model(sub), D - 2 * k - 1, CLAIMED,
                              "planes inside a fixed non-isotropic hyperplane; catalog value")
    if family == POINT:
        if k < 2:
            raise ValueError("orthogonal point family needs k >= 2")
        sub = GrassmannianModel(ORTHOGONAL, k - 1, D - 2, 0)
        if D == 2 * k:
            if k < 3:
                raise ValueError("orthogonal point family at D = 2k needs k >= 3")
            return PositivityFact(dim_model(m), dim_model(sub), k - 2, CLAIMED,
                                  "maximal case: catalog value, fixed-point check skipped "
                                  "(two components)")
        return _certified_fact(m, POINT, dim_model(sub), k - 1,
                               "planes through a fixed isotropic vector, modulo that vector; "
                               "certified at the fixed-point source")
    raise ValueError(f"unknown orthogonal family {family!r}")


@dataclass(frozen=True)
class HypothesisCheck:
    status: str  # "pass" | "fail" | "claimed"
    formula: str
    instance: str


@dataclass(frozen=True)
class ReductionStep:
    src: GrassmannianModel
    dst: GrassmannianModel
    rule: str
    justification: str
    step_ppos: PositivityFact
    check: HypothesisCheck
    alt_check: Optional[HypothesisCheck]
    genericity: str


@dataclass(frozen=True)
class ReductionPlan:
    start: GrassmannianModel
    steps: Tuple[ReductionStep, ...]
    terminal: GrassmannianModel
    theorem_terminal: GrassmannianModel
    agrees: bool
    genericity: str


def _check(cond: bool, formula: str, instance: str) -> HypothesisCheck:
    return HypothesisCheck(PASS if cond else FAIL, formula, instance)


def step(m: GrassmannianModel, family: str) -> ReductionStep:
    """One reduction step out of the model.  The transition is always
    constructed when the target model is non-empty; the stated bound is
    evaluated literally and recorded as pass or fail."""
    k, D, kappa = m.k, m.D, m.kappa
    u, w = k - 1, D - 1
    if m.kind == LINEAR:
        if family == POINT:
            dst = GrassmannianModel(LINEAR, k - 1, D - 1, 0)
            fact = catalog_ppos(m, POINT)
            check = _check(k >= 3 and D >= k + 2,
                           "k >= 3 and D >= k+2",
                           f"{k} >= 3 and {D} >= {k + 2}")
            return ReductionStep(m, dst, RULE_NAMES[POINT], "red:gl-point",
                                 fact, check, None, ARBITRARY)
        if family == HYPERPLANE:
            dst = GrassmannianModel(LINEAR, k, D - 1, 0)
            fact = PositivityFact(dim_model(m), dim_model(dst), D - k - 1, DERIVED,
                                  "planes inside a fixed hyperplane; dual form of the "
                                  "point-reduction positivity")
            check = _check(D >= k + 3, "D >= k+3", f"{D} >= {k + 3}")
            return ReductionStep(m, dst, RULE_NAMES[HYPERPLANE], "red:gl-hyperplane",
                                 fact, check, None, ARBITRARY)
        raise ValueError(f"linear models have no {family!r} step")
    if m.kind == SYMPLECTIC:
        if family == HYPERPLANE:
            dst = GrassmannianModel(SYMPLECTIC, k, D - 1, 1 - kappa)
            fact = catalog_ppos(m, HYPERPLANE)
            check = _check(w >= 2 * u + 3 + kappa,
                           "w >= 2u+3+kappa",
                           f"{w} >= {2 * u + 3 + kappa}")
            alt = _check(w >= 2 * u + 2 + kappa,
                         "w >= 2u+2+kappa (strict-inequality reading)",
                         f"{w} >= {2 * u + 2 + kappa}")
            return ReductionStep(m, dst, RULE_NAMES[HYPERPLANE], "red:sp-hyperplane",
                                 fact, check, alt, VERY_GENERAL)
        if family == POINT:
            dst = GrassmannianModel(SYMPLECTIC, k - 1, D - 2, kappa)
            fact = catalog_ppos(m, POINT)
            check = _check(w >= 2 * u + 1 + kappa and u >= 2,
                           "w >= 2u+1+kappa and u >= 2",
                           f"{w} >= {2 * u + 1 + kappa} and {u} >= 2")
            return ReductionStep(m, dst, RULE_NAMES[POINT], "red:sp-point",
                                 fact, check, None, VERY_GENERAL)
        if family == LAGRANGIAN:
            dst = GrassmannianModel(LINEAR, k, D // 2, 0)
            fact = catalog_ppos(m, LAGRANGIAN)
            check = HypothesisCheck(CLAIMED,
                                    "not a stepwise reduction rule",
                                    f"certified positivity index {fact.p}")
            return ReductionStep(m, dst, RULE_NAMES[LAGRANGIAN], "red:sp-lagrangian",
                                 fact, check, None, VERY_GENERAL)
        raise ValueError(f"unknown symplectic family {family!r}")
    if family == HYPERPLANE:
        dst = GrassmannianModel(ORTHOGONAL, k, D - 1, 0)
        fact = catalog_ppos(m, HYPERPLANE)
        check = _check(w >= 2 * u + 4, "w >= 2u+4", f"{w} >= {2 * u + 4}")
        return ReductionStep(m, dst, RULE_NAMES[HYPERPLANE], "red:o-hyperplane",
                             fact, check, None, VERY_GENERAL)
    if family == POINT:
        dst = GrassmannianModel(ORTHOGONAL, k - 1, D - 2, 0)
        fact = catalog_ppos(m, POINT)
        check = _check(w >= 2 * u + 1 and u >= 3,
                       "w >= 2u+1 and u >= 3",
                       f"{w} >= {2 * u + 1} and {u} >= 3")
        return ReductionStep(m, dst, RULE_NAMES[POINT], "red:o-point",
                             fact, check, None, VERY_GENERAL)
    raise ValueError(f"unknown orthogonal family {family!r}")


def theorem_terminal(m: GrassmannianModel) -> GrassmannianModel:
    """The endpoint model named by the splitting theorem for this kind."""
    if m.kind == LINEAR:
        return GrassmannianModel(LINEAR, 2, 4, 0)
    if m.kind == SYMPLECTIC:
        return GrassmannianModel(SYMPLECTIC, 2, 4 + m.kappa, m.kappa)
    if m.D == 2 * m.k:
        return GrassmannianModel(ORTHOGONAL, 3, 6, 0)
    if m.D == 2 * m.k + 1:
        return GrassmannianModel(ORTHOGONAL, 3, 7, 0)
    return GrassmannianModel(ORTHOGONAL, 3, 8, 0)


def reduction_plan(m: GrassmannianModel) -> ReductionPlan:
    """Hyperplane steps down to the intermediate width, then point steps
    down to the terminal plane dimension.  Every step carries its literal
    hypothesis verdict; the terminal is never adjusted to force agreement.
    """
    if m.kind == LINEAR:
        if m.k < 2 or m.D < m.k + 2:
            raise ValueError(f"linear planner needs k >= 2 and D >= k+2, got ({m.k},{m.D})")
        stop_width = lambda cur: cur.D > cur.k + 2
        stop_k = 2
        genericity = ARBITRARY
    elif m.kind == SYMPLECTIC:
        if m.k < 2 or m.D < 2 * m.k:
            raise ValueError(
                f"symplectic planner needs k >= 2 and D >= 2k, got ({m.k},{m.D})")
        stop_width = lambda cur: cur.D > 2 * cur.k + m.kappa
        stop_k = 2
        genericity = VERY_GENERAL
    else:
        if m.k < 3:
            raise ValueError(f"orthogonal planner needs k >= 3, got k={m.k}")
        stop_width = (lambda cur: cur.D > 2 * cur.k + 2) if m.D >= 2 * m.k + 2 \
            else (lambda cur: False)
        stop_k = 3
        genericity = VERY_GENERAL

    steps: List[ReductionStep] = []
    cur = m
    while stop_width(cur):
        s = step(cur, HYPERPLANE)
        steps.append(s)
        cur = s.dst
    while cur.k > stop_k:
        s = step(cur, POINT)
        steps.append(s)
        cur = s.dst
    goal = theorem_terminal(m)
    return ReductionPlan(start=m, steps=tuple(steps), terminal=cur,
                         theorem_terminal=goal, agrees=cur == goal,
                         genericity=genericity)


def flagged_steps(plan: ReductionPlan) -> Tuple[int, ...]:
    """Indices of steps whose primary hypothesis did not pass."""
    return tuple(i for i, s in enumerate(plan.steps) if s.check.status != PASS)


@dataclass(frozen=True)
class CrossCheckReport:
    model: GrassmannianModel
    family: str
    realization: Realization
    catalog: PositivityFact
    certificate: bbfix.PositivityCertificate
    comparisons: Dict[str, bool]
    ok: bool
    note: str


def cross_validate_bb(m: GrassmannianModel, family: str) -> CrossCheckReport:
    """Compare the catalog value for (model, family) against the
    fixed-point engine on the documented realization.  Any mismatch makes
    the report's ok flag false."""
    real = bb_realization(m, family)
    fact = catalog_ppos(m, family)
    rs = build_root_system(real.type_letter, real.rank)
    lam = bbfix.OneParamSubgroup(real.pairings)
    components = bbfix.fixed_components(rs, real.levi, lam)
    cert = bbfix.ppos_certificate(rs, real.levi, lam)
    dim_x = bbfix.total_dimension(components)
    gap = dim_x - cert.cd_complement
    if dim_x != dim_model(m):
        raise AssertionError(
            f"realization dimension {dim_x} disagrees with the model formula {dim_model(m)}")

    if m.kind == SYMPLECTIC and family == POINT:
        comparisons = {
            "status_cd_only": cert.status == "cd-only",
            "cd_matches": cert.cd_complement == dim_x - m.k,
        }
        note = (f"positivity index {fact.p} is claimed, not machine-certified; "
                "the cohomological-dimension half is checked exactly")
    elif m.kind == SYMPLECTIC and family == LAGRANGIAN:
        comparisons = {
            "certified": cert.status == "certified",
            "p_matches": cert.p == fact.p,
            "scalar_weight_is_2": cert.scalar_weight == 2,
        }
        note = "certified with scalar normal weight 2"
    else:  # linear point, orthogonal point
        comparisons = {
            "certified": cert.status == "certified",
            "p_matches": cert.p == fact.p,
            "gap_is_k": gap == m.k,
        }
        note = "certified with scalar normal weight 1"
    return CrossCheckReport(m, family, real, fact, cert, comparisons,
                            all(comparisons.values()), note)


# -- parsing and serialization -------------------------------------------

_KIND_PREFIX = {"gl": LINEAR, "sp": SYMPLECTIC, "o": ORTHOGONAL}


def parse_model(text: str) -> GrassmannianModel:
    """Parse 'gl:3,7', 'sp:3,10,0' or 'o:4,12' (kind:k,D[,kappa])."""
    head, _, tail = text.partition(":")
    if head not in _KIND_PREFIX or not tail:
        raise ValueError(f"malformed model {text!r}; expected kind:k,D[,kappa] "
                         "with kind in gl, sp, o")
    try:
        parts = [int(x) for x in tail.split(",")]
    except ValueError:
        raise ValueError(f"malformed model {text!r}: non-integer component") from None
    kind = _KIND_PREFIX[head]
    if len(parts) == 2:
        k, D = parts
        kappa = D % 2 if kind == SYMPLECTIC else 0
    elif len(parts) == 3:
        k, D, kappa = parts
    else:
        raise ValueError(f"malformed model {text!r}; expected 2 or 3 integers")
    return GrassmannianModel(kind, k, D, kappa)


def model_json(m: GrassmannianModel) -> dict:
    return {"kind": m.kind, "k": m.k, "D": m.D, "kappa": m.kappa}


def check_json(c: Optional[HypothesisCheck]) -> Optional[dict]:
    if c is None:
        return None
    return {"status": c.status, "formula": c.formula, "instance": c.instance}


def step_json(s: ReductionStep) -> dict:
    return {
        "from": model_json(s.src),
        "to": model_json(s.dst),
        "rule": s.rule,
        "justification": s.justification,
        "step_ppos": fact_json(s.step_ppos),
        "hypothesis_check": check_json(s.check),
        "alt_check": check_json(s.alt_check),
        "genericity": s.genericity,
    }


def plan_json(plan: ReductionPlan) -> dict:
    return {
        "start": model_json(plan.start),
        "steps": [step_json(s) for s in plan.steps],
        "terminal": model_json(plan.terminal),
        "theorem_terminal": model_json(plan.theorem_terminal),
        "agrees": plan.agrees,
        "genericity": plan.genericity,
        "flagged_steps": list(flagged_steps(plan)),
    }


def catalog_latex_table(entries: Iterable[Tuple[GrassmannianModel, str]]) -> str:
    """LaTeX tabular of catalog positivity values for the given
    (model, family) pairs."""
    lines = [r"\begin{tabular}{llrrl}",
             r"model & family & $\dim$ & $p$ & provenance \\",
             r"\hline"]
    for m, family in entries:
        fact = catalog_ppos(m, family)
        name = {LINEAR: "Grs", SYMPLECTIC: "spGrs", ORTHOGONAL: "oGrs"}[m.kind]
        label = f"${name}({m.k};{m.D})$" + (f", $\\kappa={m.kappa}$" if m.kappa else "")
        lines.append(f"{label} & {family} & {fact.dim_ambient} & {fact.p} & {fact.kind} \\\\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"
