import random

import pytest

from liesplit.rootsys import (
    EnumerationCapError,
    Root,
    Weight,
    WeylElement,
    build_root_system,
    bwb_cohomology,
    coroot_pairing,
    dot_action,
    minimal_coset_reps,
    reflect,
    weyl_dimension,
    weyl_order,
    _reflect_simple,
)
from oracles import a2_irrep_dim, classical_roots, projective_cohomology, sym_coset_count

ALL_SMALL = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4),
             ("C", 2), ("C", 3), ("C", 4), ("D", 3), ("D", 4), ("G", 2), ("F", 4)]


def rand_weight(rng, rank, lo=-6, hi=6):
    return Weight(tuple(rng.randint(lo, hi) for _ in range(rank)))


# -- construction ---------------------------------------------------------

def test_smallest_system():
    rs = build_root_system("A", 1)
    assert len(rs.roots) == 2
    assert len(rs.positive_roots) == 1


@pytest.mark.parametrize("letter,rank", [("A", 3), ("C", 3), ("B", 4), ("D", 4),
                                         ("G", 2), ("F", 4)])
def test_counts_match_classical_enumeration(letter, rank):
    rs = build_root_system(letter, rank)
    oracle = classical_roots(letter, rank)
    assert len(rs.roots) == len(oracle)
    assert len(rs.positive_roots) * 2 == len(oracle)


def test_counts_match_classification_formulas():
    expected = {("A", 1): 2, ("A", 3): 12, ("B", 2): 8, ("C", 3): 18, ("D", 3): 12,
                ("D", 5): 40, ("G", 2): 12, ("F", 4): 48, ("E", 6): 72, ("E", 7): 126,
                ("E", 8): 240}
    for (letter, rank), count in expected.items():
        assert len(build_root_system(letter, rank).roots) == count


@pytest.mark.parametrize("letter,rank", ALL_SMALL + [("E", 6)])
def test_root_system_invariants(letter, rank):
    rs = build_root_system(letter, rank)
    coords = {r.coords for r in rs.roots}
    for r in rs.roots:
        assert (-r).coords in coords
        assert r.is_positive != (-r).is_positive
    # fundamental weights are dual to the simple coroots
    for i in range(1, rs.rank + 1):
        for j in range(1, rs.rank + 1):
            pairing = coroot_pairing(rs, rs.fundamental_weight(i), rs.simple_root(j))
            assert pairing == (1 if i == j else 0)


def test_invalid_types_rejected():
    for letter, rank in [("B", 1), ("C", 1), ("D", 2), ("E", 5), ("E", 9),
                         ("F", 3), ("G", 3), ("H", 2), ("A", 0)]:
        with pytest.raises(ValueError):
            build_root_system(letter, rank)


def test_long_roots_have_square_length_two():
    for letter, rank in ALL_SMALL:
        rs = build_root_system(letter, rank)
        norms = set()
        for r in rs.roots:
            w = Weight(rs.root_weight_coords(r))
            norms.add(rs.inner_product(w, w))
        assert max(norms) == 2


# -- pairings and reflections ---------------------------------------------

def test_coroot_pairing_examples():
    a2 = build_root_system("A", 2)
    assert coroot_pairing(a2, a2.fundamental_weight(1), a2.simple_root(1)) == 1
    assert coroot_pairing(a2, a2.fundamental_weight(1), a2.simple_root(2)) == 0
    for letter, rank in ALL_SMALL:
        rs = build_root_system(letter, rank)
        for i in range(1, rank + 1):
            assert coroot_pairing(rs, rs.rho, rs.simple_root(i)) == 1


def test_coroot_pairing_rejects_non_roots():
    rs = build_root_system("A", 2)
    with pytest.raises(ValueError):
        coroot_pairing(rs, rs.rho, Root((2, 0)))


def test_reflect_examples():
    rs = build_root_system("B", 3)
    for i in range(1, 4):
        alpha = rs.simple_root(i)
        alpha_wt = Weight(rs.root_weight_coords(alpha))
        assert reflect(rs, alpha, alpha_wt) == -alpha_wt
        omega = rs.fundamental_weight(i)
        assert reflect(rs, alpha, omega) == omega - alpha_wt


def test_reflect_involution_and_form_preserved():
    rng = random.Random(7)
    for letter, rank in ALL_SMALL:
        rs = build_root_system(letter, rank)
        for _ in range(10):
            chi = rand_weight(rng, rank)
            eta = rand_weight(rng, rank)
            beta = rng.choice(rs.roots)
            assert reflect(rs, beta, reflect(rs, beta, chi)) == chi
            assert rs.inner_product(reflect(rs, beta, chi), reflect(rs, beta, eta)) \
                == rs.inner_product(chi, eta)


# -- coset enumeration -----------------------------------------------------

def test_minimal_coset_reps_examples():
    a1 = build_root_system("A", 1)
    assert [w.word for w in minimal_coset_reps(a1, [])] == [(), (1,)]
    a3 = build_root_system("A", 3)
    assert len(minimal_coset_reps(a3, [1, 3])) == 6
    assert sym_coset_count(4, [1, 3]) == 6
    a2 = build_root_system("A", 2)
    assert len(minimal_coset_reps(a2, [1])) == 3
    assert sym_coset_count(3, [1]) == 3


def test_minimal_coset_reps_match_permutation_oracle():
    for n in (2, 3, 4):
        rs = build_root_system("A", n)
        for levi_mask in range(2 ** n):
            levi = [i + 1 for i in range(n) if levi_mask >> i & 1]
            assert len(minimal_coset_reps(rs, levi)) == sym_coset_count(n + 1, levi)


def test_exceptional_coset_counts():
    # classical incidence counts: 27 lines, 56 points
    e6 = build_root_system("E", 6)
    assert len(minimal_coset_reps(e6, [2, 3, 4, 5, 6])) == 27
    e7 = build_root_system("E", 7)
    assert len(minimal_coset_reps(e7, [1, 2, 3, 4, 5, 6])) == 56


def _subgroup_order(rs, levi):
    # orbit of a regular weight under the Levi reflections only
    seen = {rs.rho.coords}
    frontier = [rs.rho.coords]
    while frontier:
        new = []
        for c in frontier:
            for i in levi:
                img = _reflect_simple(rs, i, c)
                if img not in seen:
                    seen.add(img)
                    new.append(img)
        frontier = new
    return len(seen)


def test_coset_sizes_multiply_to_group_order():
    for letter, rank in [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G", 2), ("F", 4)]:
        rs = build_root_system(letter, rank)
        for levi_mask in range(2 ** rank):
            levi = [i + 1 for i in range(rank) if levi_mask >> i & 1]
            reps = minimal_coset_reps(rs, levi)
            assert len(reps) * _subgroup_order(rs, levi) == weyl_order(rs)


def _true_length(rs, word):
    # inversions of the element: positive roots sent to negative
    from liesplit.rootsys import weyl_root_action
    w = WeylElement(word)
    return sum(1 for beta in rs.positive_roots
               if not weyl_root_action(rs, w, beta).is_positive)


def test_reps_are_reduced_and_sorted():
    rs = build_root_system("B", 3)
    reps = minimal_coset_reps(rs, [2])
    words = [w.word for w in reps]
    assert words == sorted(words)
    for w in reps:
        assert _true_length(rs, w.word) == len(w.word)


def test_enumeration_cap():
    rs = build_root_system("A", 3)
    with pytest.raises(EnumerationCapError) as exc:
        minimal_coset_reps(rs, [], cap=5)
    assert exc.value.cap == 5


# -- dot action -------------------------------------------------------------

def test_dot_action_examples():
    a1 = build_root_system("A", 1)
    s = WeylElement((1,))
    for k in range(-5, 6):
        assert dot_action(a1, s, Weight((k,))) == Weight((-k - 2,))
    for letter, rank in [("A", 2), ("C", 3)]:
        rs = build_root_system(letter, rank)
        chi = Weight(tuple(range(rank)))
        assert dot_action(rs, WeylElement(()), chi) == chi
        minus_rho = -rs.rho
        for i in range(1, rank + 1):
            assert dot_action(rs, WeylElement((i,)), minus_rho) == minus_rho


def test_dot_action_is_a_group_action():
    rng = random.Random(11)
    for letter, rank in [("A", 2), ("B", 2), ("G", 2), ("A", 3)]:
        rs = build_root_system(letter, rank)
        elements = minimal_coset_reps(rs, [])
        for _ in range(20):
            w1 = rng.choice(elements)
            w2 = rng.choice(elements)
            chi = rand_weight(rng, rank)
            composed = WeylElement(w1.word + w2.word)
            assert dot_action(rs, w1, dot_action(rs, w2, chi)) == dot_action(rs, composed, chi)


# -- cohomology and dimensions ----------------------------------------------

def test_bwb_examples():
    a1 = build_root_system("A", 1)
    res = bwb_cohomology(a1, Weight((-2,)))
    assert (res.zero, res.degree, res.highest_weight) == (False, 1, Weight((0,)))
    assert bwb_cohomology(a1, Weight((-1,))).zero
    for letter, rank in ALL_SMALL:
        rs = build_root_system(letter, rank)
        res = bwb_cohomology(rs, Weight((0,) * rank))
        assert (res.zero, res.degree, res.highest_weight) == (False, 0, Weight((0,) * rank))


def test_bwb_dominant_is_degree_zero():
    rng = random.Random(13)
    for letter, rank in ALL_SMALL:
        rs = build_root_system(letter, rank)
        for _ in range(5):
            chi = Weight(tuple(rng.randint(0, 5) for _ in range(rank)))
            res = bwb_cohomology(rs, chi)
            assert res.degree == 0 and res.highest_weight == chi


def test_weyl_dimension_examples():
    for letter, rank in ALL_SMALL:
        rs = build_root_system(letter, rank)
        assert weyl_dimension(rs, Weight((0,) * rank)) == 1
    a1 = build_root_system("A", 1)
    for m in range(13):
        assert weyl_dimension(a1, Weight((m,))) == m + 1
    a2 = build_root_system("A", 2)
    assert weyl_dimension(a2, Weight((1, 1))) == 8
    for p in range(4):
        for q in range(4):
            assert weyl_dimension(a2, Weight((p, q))) == a2_irrep_dim(p, q)


def test_weyl_dimension_rejects_non_dominant():
    rs = build_root_system("A", 2)
    with pytest.raises(ValueError):
        weyl_dimension(rs, Weight((-1, 0)))


def test_projective_space_line_bundles():
    # smaller copy of the full acceptance sweep
    for n in (1, 2, 3):
        rs = build_root_system("A", n)
        for k in range(-8, 9):
            chi = Weight((k,) + (0,) * (n - 1))
            res = bwb_cohomology(rs, chi)
            expected = projective_cohomology(n, k)
            if res.zero:
                assert expected == {}
            else:
                assert expected == {res.degree: weyl_dimension(rs, res.highest_weight)}
