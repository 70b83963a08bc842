import random

import pytest
from hypothesis import given, settings

from bhtranspose import (
    HomologyGroup,
    WeightSystem,
    betti_middle,
    homology_report,
    link_homology,
    link_report,
    parse_polynomial,
    reduced_pair,
    solve_weights,
    torsion,
)
from bhtranspose.errors import InvalidPolynomialError, TooManyVariablesError
from atomic_gen import atomic_polynomials, random_atomic
from oracles import orlik_bruteforce

# frozen from oracles.orlik_bruteforce
GOLDEN = [
    ((1, 1, 1), 2, 0, (2,)),
    ((15, 10, 6), 30, 0, ()),
    ((21, 14, 6), 42, 0, ()),
    ((33, 22, 6), 66, 0, ()),
    ((1, 7, 4, 3, 2), 16, 108, (8, 2, 2)),
    ((3, 16, 12, 16, 4), 48, 30, (48, 48, 12) + (4,) * 9),
    ((1, 4, 3, 4, 1), 12, 120, (4, 4)),
    ((4, 21, 12, 9, 6), 48, 24, (24, 6, 6) + (3,) * 6),
    ((8, 20, 13, 20), 60, 2, ()),
    ((11, 49, 69, 128), 256, 1, ()),
    ((13, 35, 81, 128), 256, 1, ()),
]


@pytest.mark.parametrize("weights, degree, rank, tors", GOLDEN)
def test_golden_homology(weights, degree, rank, tors):
    ws = WeightSystem(weights, degree)
    assert betti_middle(ws) == rank
    assert torsion(ws) == tors
    assert link_homology(ws) == HomologyGroup(rank, tors)


def test_reduced_pair():
    rp = reduced_pair(WeightSystem((15, 10, 6), 30))
    assert rp.u == (2, 3, 5)
    assert rp.v == (1, 1, 1)
    rp = reduced_pair(WeightSystem((9, 15, 17, 20), 60))
    assert rp.u == (20, 4, 60, 3)
    assert rp.v == (3, 1, 17, 1)


@pytest.mark.parametrize(
    "group, text",
    [
        (HomologyGroup(108, (8, 2, 2)), "Z^108 + Z_8 + Z_2^2"),
        (HomologyGroup(30, (48, 48, 12) + (4,) * 9), "Z^30 + Z_48^2 + Z_12 + Z_4^9"),
        (HomologyGroup(1, ()), "Z"),
        (HomologyGroup(0, ()), "0"),
        (HomologyGroup(0, (2,)), "Z_2"),
        (HomologyGroup(5, None), "Z^5 + (torsion withheld)"),
    ],
)
def test_render(group, text):
    assert group.render() == text == str(group)


def test_invariant_ignores_order():
    assert HomologyGroup(2, (2, 4)).invariant() == HomologyGroup(2, (4, 2)).invariant()
    assert HomologyGroup(2, None).invariant() != HomologyGroup(2, ()).invariant()


def test_too_many_variables():
    ws = WeightSystem((1,) * 13, 13)
    with pytest.raises(TooManyVariablesError):
        betti_middle(ws)
    with pytest.raises(TooManyVariablesError):
        link_homology(WeightSystem((1,) * 4, 4), max_vars=3)


def test_link_report_shape():
    rep = link_report(WeightSystem((1, 7, 4, 3, 2), 16))
    assert (rep.dimension, rep.connectivity, rep.homology_degree) == (7, 2, 3)
    assert rep.milnor == 1755
    assert rep.fano and not rep.calabi_yau and rep.well_formed
    d = rep.to_dict()
    assert d["homology"] == {"rank": 108, "torsion": [8, 2, 2]}
    assert d["link"] == {"dimension": 7, "connectivity": 2, "homology_degree": 3}


def test_sasaki_einstein_status():
    assert link_report(WeightSystem((1, 1, 1, 1, 1), 5)).sasaki_einstein.startswith("not applicable")
    assert link_report(WeightSystem((8, 20, 13, 20), 60)).sasaki_einstein == "sufficient inequality holds"
    assert link_report(WeightSystem((1, 1, 1), 2)).sasaki_einstein == "unknown"
    rep = link_report(WeightSystem((1, 1, 1), 2), ke_literature="known")
    assert rep.sasaki_einstein == "KE base from literature"


def test_homology_report_withholds_torsion_for_non_atomic():
    # x^2*y^2 has no exponent-one pointer
    p = parse_polynomial("x^2*y^2 + y^3 + z^6")
    ws = solve_weights(p.matrix)
    assert ws == WeightSystem((1, 2, 1), 6)
    rep = homology_report(p, ws)
    assert rep.homology.torsion is None
    assert any("withheld" in n for n in rep.notes)


def test_cubic_curve_link():
    rep = homology_report(parse_polynomial("x^2*y + y^2*z + x*z^2"), WeightSystem((1, 1, 1), 3))
    assert rep.homology == HomologyGroup(2, (3,))


def test_homology_report_rejects_wrong_weights(f60):
    with pytest.raises(InvalidPolynomialError):
        homology_report(f60, WeightSystem((1, 1, 1, 1), 4))


def _check_against_oracle(ws):
    g = link_homology(ws)
    assert (g.rank, g.torsion) == orlik_bruteforce(ws.weights, ws.degree)


@settings(max_examples=150, deadline=None)
@given(atomic_polynomials(max_vars=5, max_exp=7))
def test_fast_path_matches_bruteforce(gen):
    rows, _ = gen
    _check_against_oracle(solve_weights(rows))


def test_fast_path_matches_bruteforce_seeded():
    rng = random.Random(20261016)
    for _ in range(60):
        rows, _ = random_atomic(rng, max_vars=5, max_exp=8, min_vars=3)
        _check_against_oracle(solve_weights(rows))


@settings(max_examples=200, deadline=None)
@given(atomic_polynomials(max_vars=6, max_exp=9))
def test_torsion_divisibility_chain(gen):
    rows, _ = gen
    t = torsion(solve_weights(rows))
    assert all(x > 1 for x in t)
    assert all(t[i] % t[i + 1] == 0 for i in range(len(t) - 1))
