import pytest

from liesplit.grassmod import (
    FAIL,
    HYPERPLANE,
    LAGRANGIAN,
    PASS,
    POINT,
    GrassmannianModel,
    bb_realization,
    catalog_latex_table,
    catalog_ppos,
    cross_validate_bb,
    dim_model,
    flagged_steps,
    linear_model,
    orthogonal_model,
    parse_model,
    pic_cyclic_check,
    reduction_plan,
    step,
    symplectic_model,
    theorem_terminal,
)
from liesplit.poscalc import CERTIFIED, CLAIMED
from oracles import grs_dim, o_grs_dim, sp_grs_dim


# -- models and dimensions ---------------------------------------------------

def test_dimension_examples():
    assert dim_model(symplectic_model(2, 4, 0)) == 3  # a three-dimensional quadric
    assert dim_model(linear_model(2, 4)) == 4
    assert dim_model(orthogonal_model(3, 8)) == 9


def test_dimensions_match_counting_oracles():
    for D in range(2, 21):
        for k in range(1, D):
            assert dim_model(linear_model(k, D)) == grs_dim(k, D)
    for D in range(4, 21, 2):
        for k in range(1, D // 2 + 1):
            assert dim_model(symplectic_model(k, D, 0)) == sp_grs_dim(k, D)
    for D in range(2, 21):
        for k in range(1, D // 2 + 1):
            assert dim_model(orthogonal_model(k, D)) == o_grs_dim(k, D)


def test_model_validation():
    with pytest.raises(ValueError):
        GrassmannianModel("unitary", 2, 4, 0)
    with pytest.raises(ValueError):
        linear_model(4, 4)
    with pytest.raises(ValueError):
        symplectic_model(3, 6, 1)  # parity: a skew form on even space has no kernel
    with pytest.raises(ValueError):
        symplectic_model(4, 6, 0)  # empty: 2k > D
    with pytest.raises(ValueError):
        orthogonal_model(4, 7)
    # a one-dimensional kernel makes room for one more isotropic direction
    symplectic_model(4, 7, 1)


def test_pic_cyclic_check():
    assert pic_cyclic_check(symplectic_model(2, 4, 0))      # 3 >= 3
    assert not pic_cyclic_check(symplectic_model(3, 5, 1))  # 4 < 6
    assert pic_cyclic_check(symplectic_model(2, 5, 1))      # 4 >= 4
    with pytest.raises(ValueError):
        pic_cyclic_check(linear_model(2, 4))


# -- the positivity catalog ---------------------------------------------------

def test_catalog_values():
    fact = catalog_ppos(symplectic_model(3, 10, 0), HYPERPLANE)
    assert fact.p == 4 and fact.kind == CLAIMED

    fact = catalog_ppos(orthogonal_model(3, 8), POINT)
    assert fact.p == 2 and fact.kind == CERTIFIED

    fact = catalog_ppos(linear_model(2, 4), POINT)
    assert fact.p == 1 and fact.kind == CERTIFIED

    fact = catalog_ppos(symplectic_model(2, 6, 0), LAGRANGIAN)
    assert fact.p == 1 and fact.kind == CERTIFIED

    fact = catalog_ppos(symplectic_model(2, 6, 0), POINT)
    assert fact.p == 1 and fact.kind == CLAIMED

    fact = catalog_ppos(orthogonal_model(3, 6), POINT)  # maximal case
    assert fact.p == 1 and fact.kind == CLAIMED

    fact = catalog_ppos(orthogonal_model(3, 10), HYPERPLANE)
    assert fact.p == 3 and fact.kind == CLAIMED


def test_catalog_rejections():
    with pytest.raises(ValueError):
        catalog_ppos(linear_model(2, 4), HYPERPLANE)
    with pytest.raises(ValueError):
        catalog_ppos(symplectic_model(2, 5, 1), LAGRANGIAN)  # degenerate form
    with pytest.raises(ValueError):
        catalog_ppos(orthogonal_model(2, 4), POINT)  # maximal case needs k >= 3


# -- steps ---------------------------------------------------------------------

def test_symplectic_hyperplane_step():
    s = step(symplectic_model(3, 10, 0), HYPERPLANE)
    assert (s.dst.k, s.dst.D, s.dst.kappa) == (3, 9, 1)
    assert s.check.status == PASS
    assert s.check.instance == "9 >= 7"
    assert s.alt_check is not None and s.alt_check.status == PASS
    assert s.step_ppos.p == 4


def test_symplectic_point_step():
    s = step(symplectic_model(3, 8, 0), POINT)
    assert (s.dst.k, s.dst.D, s.dst.kappa) == (2, 6, 0)
    assert s.check.status == PASS
    assert s.check.instance == "7 >= 5 and 2 >= 2"


def test_orthogonal_hyperplane_step_can_fail():
    s = step(orthogonal_model(3, 7), HYPERPLANE)
    assert (s.dst.k, s.dst.D) == (3, 6)
    assert s.check.status == FAIL
    assert s.check.instance == "6 >= 8"


def test_kappa_flip_and_parity():
    m = symplectic_model(3, 9, 1)
    s = step(m, HYPERPLANE)
    assert s.dst.kappa == 0 and s.dst.D == 8
    s = step(m, POINT)
    assert s.dst.kappa == 1 and s.dst.D == 7


def test_structural_rejections():
    with pytest.raises(ValueError):
        step(symplectic_model(3, 5, 1), HYPERPLANE)  # child would be empty
    with pytest.raises(ValueError):
        step(linear_model(2, 4), LAGRANGIAN)


# -- plans -----------------------------------------------------------------------

def test_linear_plans_all_pass():
    for D in range(4, 21):
        for k in range(2, D - 1):
            plan = reduction_plan(linear_model(k, D))
            assert plan.agrees
            assert (plan.terminal.k, plan.terminal.D) == (2, 4)
            assert all(s.check.status == PASS for s in plan.steps)
            assert plan.genericity == "arbitrary"


def test_symplectic_plan_flags_the_written_bound():
    plan = reduction_plan(symplectic_model(3, 10, 0))
    assert plan.agrees
    assert (plan.terminal.k, plan.terminal.D, plan.terminal.kappa) == (2, 4, 0)
    flags = flagged_steps(plan)
    assert flags, "the last hyperplane step must be flagged"
    for i in flags:
        s = plan.steps[i]
        assert s.check.status == FAIL
        # the strict-inequality reading fails there as well
        assert s.alt_check is not None and s.alt_check.status == FAIL
    # flagged, never silently repaired
    assert plan.theorem_terminal == plan.terminal


def test_symplectic_degenerate_start_passes():
    plan = reduction_plan(symplectic_model(3, 9, 1))
    assert plan.agrees
    assert (plan.terminal.k, plan.terminal.D, plan.terminal.kappa) == (2, 5, 1)
    assert all(s.check.status == PASS for s in plan.steps)


def test_orthogonal_terminals_by_width():
    assert (lambda t: (t.k, t.D))(reduction_plan(orthogonal_model(5, 10)).terminal) == (3, 6)
    assert (lambda t: (t.k, t.D))(reduction_plan(orthogonal_model(4, 9)).terminal) == (3, 7)
    assert (lambda t: (t.k, t.D))(reduction_plan(orthogonal_model(4, 12)).terminal) == (3, 8)
    for m in (orthogonal_model(5, 10), orthogonal_model(4, 9), orthogonal_model(4, 12)):
        plan = reduction_plan(m)
        assert plan.agrees and plan.terminal == theorem_terminal(m)


def test_step_positivity_at_least_two_on_pass():
    models = []
    for D in range(4, 17):
        models += [linear_model(k, D) for k in range(2, D - 1)]
        models += [symplectic_model(k, D, D % 2) for k in range(2, D // 2 + 1)]
        models += [orthogonal_model(k, D) for k in range(3, D // 2 + 1)]
    for m in models:
        plan = reduction_plan(m)
        exp_kappa = m.kappa
        for s in plan.steps:
            if s.check.status == PASS:
                assert s.step_ppos.p >= 2
            if s.src.kind == "symplectic":
                assert (s.src.kappa + s.src.D) % 2 == (s.dst.kappa + s.dst.D) % 2


def test_plan_preconditions():
    with pytest.raises(ValueError):
        reduction_plan(linear_model(1, 4))
    with pytest.raises(ValueError):
        reduction_plan(linear_model(2, 3))
    with pytest.raises(ValueError):
        reduction_plan(symplectic_model(1, 4, 0))
    with pytest.raises(ValueError):
        reduction_plan(orthogonal_model(2, 6))


def test_single_node_plans():
    for m in (linear_model(2, 4), symplectic_model(2, 4, 0), symplectic_model(2, 5, 1),
              orthogonal_model(3, 6), orthogonal_model(3, 7), orthogonal_model(3, 8)):
        plan = reduction_plan(m)
        assert plan.steps == () and plan.terminal == m and plan.agrees


# -- the fixed-point crosscheck ---------------------------------------------------

def test_cross_validation_examples():
    rep = cross_validate_bb(symplectic_model(2, 6, 0), LAGRANGIAN)
    assert rep.ok and rep.catalog.p == 1 and rep.certificate.scalar_weight == 2

    rep = cross_validate_bb(symplectic_model(2, 6, 0), POINT)
    assert rep.ok
    assert rep.certificate.cd_complement == dim_model(symplectic_model(2, 6, 0)) - 2

    rep = cross_validate_bb(orthogonal_model(2, 8), POINT)
    assert rep.ok and rep.certificate.p == 1


def test_cross_validation_battery():
    cases = [(linear_model(2, 5), POINT), (linear_model(3, 7), POINT),
             (symplectic_model(3, 8, 0), POINT), (symplectic_model(3, 8, 0), LAGRANGIAN),
             (orthogonal_model(2, 7), POINT), (orthogonal_model(3, 8), POINT),
             (orthogonal_model(2, 9), POINT), (orthogonal_model(3, 10), POINT)]
    for m, family in cases:
        assert cross_validate_bb(m, family).ok, (m, family)


def test_cross_validation_rejections():
    with pytest.raises(ValueError):
        cross_validate_bb(orthogonal_model(3, 6), POINT)  # two components
    with pytest.raises(ValueError):
        cross_validate_bb(symplectic_model(2, 5, 1), POINT)  # degenerate form
    with pytest.raises(ValueError):
        bb_realization(symplectic_model(2, 6, 0), HYPERPLANE)  # not homogeneous


# -- parsing and emitters ------------------------------------------------------------

def test_parse_model():
    assert parse_model("gl:3,7") == linear_model(3, 7)
    assert parse_model("sp:3,10,0") == symplectic_model(3, 10, 0)
    assert parse_model("sp:3,9") == symplectic_model(3, 9, 1)  # kappa from parity
    assert parse_model("o:4,12") == orthogonal_model(4, 12)
    for bad in ("xx:3,7", "gl:3", "gl:3,7,0,0", "gl:a,b", "gl"):
        with pytest.raises(ValueError):
            parse_model(bad)


def test_latex_table():
    table = catalog_latex_table([(symplectic_model(3, 10, 0), HYPERPLANE),
                                 (linear_model(2, 4), POINT)])
    assert table.startswith(r"\begin{tabular}")
    assert table.rstrip().endswith(r"\end{tabular}")
    assert "spGrs(3;10)" in table and "claimed" in table and "certified" in table
