import json
import random
from fractions import Fraction

import pytest

import goldens
from gradedorbits import jmrealize as jm
from gradedorbits import linalg
from gradedorbits.grading import Box, GradingSpec, supp
from gradedorbits.orbits import Orbit, SplitTag, enumerate_orbits
from gradedorbits.sweep import check_grading, iter_gradings, SweepResult
from gradedorbits.tableaux import CoefficientFunction
from gradedorbits.jmrealize import INV_SQRT2, SQRT2, SQRT_MINUS2, Scalar


def coeffs(family, m, boxes):
    spec = GradingSpec(family, m)
    return spec, CoefficientFunction.from_boxes(spec, boxes)


def random_scalar(rng):
    return Scalar(*(Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(4)))


# --- scalars -------------------------------------------------------------------


def test_scalar_generators():
    assert SQRT2 * SQRT2 == 2
    assert SQRT_MINUS2 * SQRT_MINUS2 == -2
    assert (SQRT2 * SQRT_MINUS2) * (SQRT2 * SQRT_MINUS2) == -4
    assert INV_SQRT2 * SQRT2 == 1
    assert jm.INV_SQRT_MINUS2 * SQRT_MINUS2 == 1
    assert Scalar(3) == 3 and not Scalar()
    assert Scalar(Fraction(1, 2)).to_json() == ["1/2", "0", "0", "0"]


def test_scalar_ring_axioms():
    rng = random.Random(7)
    for _ in range(200):
        a, b, c = (random_scalar(rng) for _ in range(3))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == 0
        assert 2 - a == -(a - 2)


# --- construction --------------------------------------------------------------


def test_h_eigenvalue_example():
    spec, c = coeffs("even-sp", 2, {Box(3, -1, 0): 1})
    t = jm.build_jm(spec, c)
    for n, l in enumerate(t.labels):
        if l.box == Box(3, -1, 0) and l.degree == 3:
            assert t.H.matrix[n][n] == 2
    assert [t.H.matrix[n][n] for n, l in enumerate(t.labels) if l.box == Box(3, -1, 0)] == [2, 0, -2]


def test_e_kills_top_of_support(example):
    spec, delta = goldens.grading(example)
    for o in enumerate_orbits(spec, delta):
        t = jm.build_jm(spec, o.coeffs, o.split.value)
        E = t.E.matrix
        for n, l in enumerate(t.labels):
            # the ''-variant moves one degree-0 vector between boxes, so compare by box support
            if not t.doubleprime and l.degree == supp(spec, l.box)[0]:
                assert all(not E[r][n] for r in range(t.dim))


def test_verify_passes_on_examples(example):
    spec, delta = goldens.grading(example)
    for o in enumerate_orbits(spec, delta):
        t = jm.build_jm(spec, o.coeffs, o.split.value)
        rep = jm.verify_jm(t)
        assert rep.ok, (o.tableau.to_json(), rep.failures)
        assert jm.check_isometry(spec, o.coeffs, o.split.value)
        assert jm.rank_tableau_from_matrices(t) == o.rank_tableau
        assert jm.jordan_from_ranks(t) == list(o.jordan)
        if spec.is_even:
            assert jm.is_permutation(jm.base_change(spec, o.coeffs))


def test_bad_split_tags():
    spec, c = coeffs("odd-o", 2, {Box(2, -2, 0): 1})
    with pytest.raises(jm.JMError):
        jm.build_jm(spec, c, "prime")
    with pytest.raises(jm.JMError):
        jm.build_jm(spec, c, "sideways")


def test_flipped_sign_at_crossing_breaks_form():
    spec, c = coeffs("even-so", 2, {Box(3, -1, 0): 1, Box(1, -1, 0): 1})
    t = jm.build_jm(spec, c)
    assert jm.verify_jm(t).ok
    rows = t.E.matrix
    hit = next((r, q) for r in range(t.dim) for q in range(t.dim)
               if rows[r][q] and t.labels[q].degree == -1 and t.labels[r].degree == 1)
    rows[hit[0]][hit[1]] *= -1
    bad = jm.JMTriple(t.spec, t.coeffs, t.labels, jm.GradedMatrix.build(t.labels, t.labels, rows, 2),
                      t.H, t.F, t.gram)
    rep = jm.verify_jm(bad)
    assert "E is not compatible with the form" in rep.failures


def test_shifted_h_is_reported():
    spec, c = coeffs("even-sp", 2, {Box(3, -3, 0): 1, Box(1, -1, 0): 1})
    t = jm.build_jm(spec, c)
    h = linalg.add(t.H.matrix, linalg.identity(t.dim))
    bad = jm.JMTriple(t.spec, t.coeffs, t.labels, t.E, jm.GradedMatrix.build(t.labels, t.labels, h, 0),
                      t.F, t.gram)
    rep = jm.verify_jm(bad)
    assert not rep.ok
    # the identity commutes with E, so the failure shows up in [E,F], the form and the trace
    assert "[E,F] != H" in rep.failures
    assert "trace(H) != 0" in rep.failures
    assert "[H,E] != 2E" not in rep.failures


def test_gram_values():
    spec, c = coeffs("even-sp", 1, {Box(1, -1, 0): 1})
    t = jm.build_jm(spec, c)
    idx = {l.degree: n for n, l in enumerate(t.labels)}
    G = t.gram.matrix
    assert G[idx[1]][idx[-1]] == 1 and G[idx[-1]][idx[1]] == -1
    spec, c = coeffs("odd-o", 2, {Box(2, -2, 0): 1})
    t = jm.build_jm(spec, c)
    n0 = next(n for n, l in enumerate(t.labels) if l.degree == 0)
    assert t.gram.matrix[n0][n0] == 1


def test_base_change_square_roots():
    spec, c = coeffs("odd-o", 2, {Box(2, -2, 0): 2})
    T = jm.base_change(spec, c).matrix
    flat = [Scalar.lift(x) for r in T for x in r]
    assert any(x.coords[1] for x in flat) and any(x.coords[2] for x in flat)
    assert jm.check_isometry(spec, c)
    # a single self-dual box: its middle vector goes straight to a standard one
    spec, c = coeffs("odd-o", 2, {Box(2, -2, 0): 1, Box(0, -2, 0): 1})
    T = jm.base_change(spec, c).matrix
    assert all(Scalar.lift(x).coords[1:] == (0, 0, 0) for r in T for x in r)
    assert jm.check_isometry(spec, c)


def test_rational_entries_outside_odd_orthogonal():
    for spec, delta in iter_gradings(2, 8):
        if spec.family.value in ("odd-o", "odd-so-special"):
            continue
        for o in enumerate_orbits(spec, delta):
            t = jm.build_jm(spec, o.coeffs)
            T = jm.base_change(spec, o.coeffs)
            for m in (t.E, t.H, t.F, T):
                assert all(Scalar.lift(x).coords[1:] == (0, 0, 0) for r in m.rows for x in r)


def test_zero_nilpotent_rank_tableau():
    spec, c = coeffs("even-sp", 2, {Box(3, 3, 0): 1, Box(1, 1, 0): 2})
    t = jm.build_jm(spec, c)
    r = jm.rank_tableau_from_matrices(t)
    assert all(v == 0 for (i, j), v in r.entries if i > j)
    assert [r[(i, i)] for i in spec.indices] == [1, 2, 2, 1]


def test_isotropic_example():
    spec, c = coeffs("even-so", 1, {Box(1, -1, 0): 1})
    t = jm.build_jm(spec, c)
    assert t.dim == 4
    rep = jm.isotropic_subspace(t)
    assert rep.ok and rep.dimension == 2
    assert set(rep.labels) == {jm.BasisLabel(Box(1, -1, 0), 1, 1), jm.BasisLabel(Box(1, -1, 1), 1, 1)}


def test_isotropic_needs_totally_even():
    spec, c = coeffs("even-so", 2, {Box(3, -1, 0): 1})
    with pytest.raises(jm.JMError):
        jm.isotropic_subspace(jm.build_jm(spec, c))


def first_very_even_split():
    for spec, delta in iter_gradings(3, 12):
        if spec.family.value == "odd-so-special":
            for o in enumerate_orbits(spec, delta):
                if o.split is SplitTag.DOUBLEPRIME and o.parity_defined:
                    return o
    raise AssertionError("no totally even split orbit in range")


def test_doubleprime_swaps_one_label():
    o = first_very_even_split()
    t = jm.build_jm(o.spec, o.coeffs, "doubleprime")
    b = jm.canonical_swap_box(o.coeffs)
    expected = jm.expected_isotropic_labels(t)
    plain = jm.expected_isotropic_labels(jm.build_jm(o.spec, o.coeffs, "prime"))
    assert set(plain) - set(expected) == {jm.BasisLabel(jm.tau(o.spec, b), o.coeffs(b), 0)}
    assert set(expected) - set(plain) == {jm.BasisLabel(b, o.coeffs(b), 0)}
    assert jm.verify_jm(t).ok
    assert jm.isotropic_subspace(t).ok


def test_very_even_halves_isotropic_parity():
    checked = 0
    for spec, delta in iter_gradings(2, 10):
        if spec.family.value != "odd-so-special":
            continue
        for o in enumerate_orbits(spec, delta):
            if o.parity_defined:
                t = jm.build_jm(spec, o.coeffs, o.split.value)
                rep = jm.isotropic_subspace(t)
                assert rep.ok
                expected = 0 if o.parity == "even" else 1
                assert jm.isotropic_parity_count(t, rep.labels) % 2 == expected
                checked += 1
    assert checked


def test_small_sweep_is_clean():
    res = SweepResult()
    for spec, delta in iter_gradings(2, 8):
        check_grading(spec, delta, result=res)
    assert res.ok, [f.reproducer() for f in res.failures[:3]]
    assert res.orbits_checked > 100


def test_dump_is_json():
    g = goldens.match_orbits(goldens.load("o9_odd"))
    o = g["O_8^1"]
    dump = jm.dump_matrices(jm.build_jm(o.spec, o.coeffs))
    text = json.dumps(dump)
    assert set(json.loads(text)) >= {"legend", "E", "H", "F", "gram", "T"}
