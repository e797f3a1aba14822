import json
from itertools import product

import pytest

import goldens
from gradedorbits.grading import Box, Family, GradingSpec, supp, tau_orbits
from gradedorbits.tableaux import (
    CoefficientFunction,
    DimensionVector,
    RankTableau,
    SymmetricTableau,
    TableauError,
    dimension_vector,
    enumerate_coefficients,
    from_tableau,
    parse_tableau_json,
    quiver_decomposition,
    theta,
    theta_inv,
    to_tableau,
)
from gradedorbits.sweep import iter_gradings

SP6 = GradingSpec("even-sp", 2)


def o51():
    return CoefficientFunction.from_boxes(SP6, {Box(3, -3, 0): 1, Box(1, -1, 0): 1})


def tableau_from_golden(family, m, entries):
    return parse_tableau_json({"family": family, "m": m, "entries": entries})


def brute_coefficients(spec, delta):
    """Every coefficient vector with entries bounded by the total dimension, filtered."""
    bound = max(delta.as_dict.values()) if delta.total else 0
    out = set()
    for vals in product(range(bound + 1), repeat=len(tau_orbits(spec))):
        c = CoefficientFunction(spec, vals)
        if dimension_vector(c) == delta:
            out.add(c)
    return out


def test_dimension_vector_examples():
    assert dimension_vector(o51()).as_dict == {3: 1, 1: 2, -1: 2, -3: 1}
    assert dimension_vector(CoefficientFunction.zero(SP6)).total == 0
    g = goldens.load("sp12_odd")
    top = next(o for o in g["orbits"] if o["name"] == "O_12^1")
    c = from_tableau(tableau_from_golden("odd-sp", 3, top["tableau"]))
    assert dimension_vector(c).positive == [2, 2, 4]
    assert dimension_vector(c)[-4] == 2


def test_dimension_vector_wire_format():
    spec = GradingSpec("odd-o", 3)
    dv = DimensionVector.from_positive(spec, [1, 2, 3])
    assert [dv[i] for i in spec.indices] == [1, 2, 3, 2, 1]
    with pytest.raises(TableauError):
        DimensionVector.from_positive(spec, [1, 2])
    with pytest.raises(TableauError):
        DimensionVector.from_positive(spec, [1, -2, 3])
    with pytest.raises(TableauError):
        DimensionVector.from_positive(GradingSpec("odd-sp", 2), [1, 3])


def test_to_tableau_example():
    t = to_tableau(o51())
    assert {cell: v for cell, v in t.entries if v} == {(3, -3): 1, (1, -1): 1}


def test_diagonal_split_evenly():
    spec = GradingSpec("even-so", 2)
    t = SymmetricTableau.from_dict(spec, {(3, -3): 2, (1, 1): 1, (-1, -1): 1})
    c = from_tableau(t)
    assert c(Box(3, -3, 0)) == c(Box(3, -3, 1)) == 1
    assert c(Box(1, 1, 0)) == c(Box(-1, -1, 0)) == 1
    assert to_tableau(c) == t


def test_theta_example():
    r = theta(to_tableau(o51()))
    rows = [[r[(i, j)] for j in reversed(SP6.indices) if j <= i] for i in SP6.indices]
    assert rows == [[1, 1, 1, 1], [1, 2, 2], [1, 2], [1]]
    zero = to_tableau(CoefficientFunction.zero(SP6))
    assert all(v == 0 for _, v in theta(zero).entries)


@pytest.mark.parametrize("n", range(4))
def test_theta_reference_pairs(n):
    pair = json.loads((goldens.GOLDEN / "theta_pairs.json").read_text())[n]
    t = tableau_from_golden(pair["family"], pair["m"], pair["tableau"])
    r = theta(t)
    assert [[i, j, v] for (i, j), v in r.entries] == pair["rank_tableau"]
    assert theta_inv(r) == t
    assert dimension_vector(from_tableau(t)).positive == pair["delta"]


def test_theta_inv_rejects_bad_rank_tableaux():
    r = theta(to_tableau(o51()))
    d = dict(r.as_dict)
    d[(3, -3)] = 5
    with pytest.raises(TableauError):
        theta_inv(RankTableau.from_dict(SP6, d))
    d = dict(r.as_dict)
    d[(3, 1)] = 0
    with pytest.raises(TableauError):
        theta_inv(RankTableau.from_dict(SP6, d))


@pytest.mark.parametrize("family,m,delta,count", [
    ("even-sp", 2, [1, 2], 8),
    ("odd-o", 3, [1, 2, 3], 14),
    ("even-so", 2, [2, 3], 8),
])
def test_enumeration_counts(family, m, delta, count):
    spec = GradingSpec(family, m)
    assert len(enumerate_coefficients(spec, DimensionVector.from_positive(spec, delta))) == count


@pytest.mark.parametrize("family,m,delta", [
    ("even-sp", 2, [1, 2]),
    ("even-so", 2, [2, 2]),
    ("odd-sp", 2, [1, 2]),
    ("odd-o", 2, [2, 1]),
    ("odd-so-special", 3, [1, 1, 2]),
    ("even-so", 1, [4]),
])
def test_enumeration_matches_brute_force(family, m, delta):
    spec = GradingSpec(family, m)
    dv = DimensionVector.from_positive(spec, delta)
    found = enumerate_coefficients(spec, dv)
    assert len(found) == len(set(found))
    assert set(found) == brute_coefficients(spec, dv)


def test_enumeration_is_deterministic():
    spec = GradingSpec("odd-o", 3)
    dv = DimensionVector.from_positive(spec, [1, 2, 3])
    assert enumerate_coefficients(spec, dv) == enumerate_coefficients(spec, dv)


def test_round_trips_exhaustive():
    n = 0
    for spec, dv in iter_gradings(3, 12):
        for c in enumerate_coefficients(spec, dv):
            t = to_tableau(c)
            r = theta(t)
            assert from_tableau(t) == c
            assert theta_inv(r) == t
            assert all(r[(i, i)] == dv[i] for i in spec.indices)
            assert dimension_vector(c) == dv
            lengths = sum(c(b) * len(supp(spec, b)) for b in spec.boxes)
            assert lengths == dv.total
            n += 1
    assert n > 1000


def test_quiver_decomposition():
    spec = GradingSpec("even-sp", 2)
    assert quiver_decomposition(spec, [Box(3, 1, 0), Box(-1, -3, 0)]) == [(1, 3), (-3, -1)]
    assert quiver_decomposition(spec, [Box(1, -1, 0)]) == [(-1, 1)]
    so = GradingSpec("even-so", 1)
    assert quiver_decomposition(so, [Box(1, -1, 0), Box(1, -1, 1)]) == [(-1, 1), (-1, 1)]


def test_json_round_trip():
    t = to_tableau(o51())
    doc = t.to_json()
    assert parse_tableau_json(json.dumps(doc)) == t
    # one side of each mirrored pair is enough
    half = {"family": "even-sp", "m": 2, "entries": [[3, -3, 1], [1, -1, 1]]}
    assert parse_tableau_json(half) == t


@pytest.mark.parametrize("doc", [
    {"family": "even-so", "m": 1, "entries": [[1, -1, 1]]},
    {"family": "even-sp", "m": 2, "entries": [[3, 1, 1], [-1, -3, 2]]},
    {"family": "even-sp", "m": 2, "entries": [[1, 3, 1]]},
    {"family": "even-sp", "m": 2, "entries": [[5, 1, 1]]},
    {"family": "even-sp", "m": 2, "entries": [[3, 1, -1]]},
    {"family": "even-sp", "m": 2, "entries": [[3, 1]]},
    {"family": "even-sp", "entries": []},
    {"family": "even-sp", "m": 2, "entries": [[3, 1, 1], [3, 1, 2]]},
    {"family": "odd-sp", "m": 2, "entries": [[2, -2, 1]]},
])
def test_json_rejections(doc):
    with pytest.raises(TableauError):
        parse_tableau_json(doc)


def test_dimension_vector_symmetric_everywhere():
    for spec, dv in iter_gradings(2, 8):
        for c in enumerate_coefficients(spec, dv):
            d = dimension_vector(c)
            assert all(d[i] == d[-i] for i in spec.indices)
