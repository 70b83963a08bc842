"""Acceptance criteria, one test each.

Run ``pytest tests/test_acceptance.py`` (or this file directly); the
terminal summary prints one PASS/FAIL line per criterion.
"""

import json
import random
import sys
from math import gcd
from functools import reduce
from pathlib import Path

import pytest

from bhtranspose import (
    HomologyGroup,
    InvertiblePolynomial,
    WeightSystem,
    betti_middle,
    is_well_formed,
    ke_sufficient,
    link_homology,
    milnor_number,
    parse_polynomial,
    run_pipeline,
    solve_weights,
    torsion,
    transpose,
)
from bhtranspose.cli import main
from bhtranspose.errors import FermatInputError
from bhtranspose.linalg import matmul
from bhtranspose.weights import is_calabi_yau, is_fano, weight_ratio
from atomic_gen import random_atomic
from conftest import F60, F256, G256, K3

SEED = 20261016
N_RANDOM = 250
K3_POOL = Path(__file__).parent / "data" / "k3_all.jsonl"

acc = pytest.mark.acceptance


def _samples(seed_offset, **kw):
    rng = random.Random(SEED + seed_offset)
    return [random_atomic(rng, **kw)[0] for _ in range(N_RANDOM)]


@acc(1, "f256 transposes to g256 in P(13,35,81,128), d=256")
def test_f256_transpose():
    pt, ws = transpose(parse_polynomial(F256))
    assert pt.matrix == parse_polynomial(G256).matrix
    assert ws == WeightSystem((13, 35, 81, 128), 256)


@acc(2, "f60 transpose: P(8,20,13,20), d=60; KE inequality, Milnor 94, Betti 2")
def test_f60_transpose():
    _, ws = transpose(parse_polynomial(F60))
    assert ws == WeightSystem((8, 20, 13, 20), 60)
    assert ke_sufficient(ws) is True
    assert milnor_number(ws) == 94
    assert betti_middle(ws) == 2


@acc(3, "four-link table reproduced exactly")
def test_table():
    expected = [
        ((1, 7, 4, 3, 2), 16, HomologyGroup(108, (8, 2, 2))),
        ((3, 16, 12, 16, 4), 48, HomologyGroup(30, (48, 48, 12) + (4,) * 9)),
        ((1, 4, 3, 4, 1), 12, HomologyGroup(120, (4, 4))),
        ((4, 21, 12, 9, 6), 48, HomologyGroup(24, (24, 6, 6) + (3,) * 6)),
    ]
    res = run_pipeline(parse_polynomial(K3), WeightSystem((7, 4, 3, 2), 16))
    got = [(s.weights.weights, s.weights.degree, link.homology) for s, link in zip(res.stages, res.links)]
    assert got == expected
    assert [str(link.homology) for link in res.links] == [
        "Z^108 + Z_8 + Z_2^2",
        "Z^30 + Z_48^2 + Z_12 + Z_4^9",
        "Z^120 + Z_4^2",
        "Z^24 + Z_24 + Z_6^2 + Z_3^6",
    ]


@acc(4, "both degree-256 links have H_2 = Z (rank 1, no torsion)")
def test_s2xs3():
    for ws in (solve_weights(parse_polynomial(F256).matrix), WeightSystem((13, 35, 81, 128), 256)):
        assert link_homology(ws) == HomologyGroup(1, ())


@acc(5, "classical links: RP^3, Poincare sphere, Sigma(2,3,7)")
def test_classical():
    assert link_homology(WeightSystem((1, 1, 1), 2)) == HomologyGroup(0, (2,))
    assert link_homology(WeightSystem((15, 10, 6), 30)) == HomologyGroup(0, ())
    assert link_homology(WeightSystem((21, 14, 6), 42)) == HomologyGroup(0, ())


def _poly(rows):
    return InvertiblePolynomial.from_matrix(rows)


def _permuted(rows, perm):
    # rename variables by perm and shuffle monomial order
    n = len(rows)
    return [[r[perm[j]] for j in range(n)] for r in reversed(rows)]


@acc(6, f"property suite on {N_RANDOM} seeded atomic polynomials per part")
def test_properties():
    # (a) involution
    for rows in _samples(1):
        p = _poly(rows)
        assert transpose(transpose(p)[0])[0].matrix == p.matrix

    # (b) Calabi-Yau and Fano preserved
    pool = [json.loads(line) for line in K3_POOL.read_text().splitlines()]
    rng = random.Random(SEED + 2)
    for rec in rng.sample(pool, min(N_RANDOM, len(pool))):
        p = parse_polynomial(rec["polynomial"])
        assert is_calabi_yau(WeightSystem(tuple(rec["weights"]), rec["degree"]))
        assert is_calabi_yau(transpose(p)[1])
    for rows in _samples(3):
        ws = solve_weights(rows)
        wt = transpose(_poly(rows))[1]
        assert weight_ratio(ws) == weight_ratio(wt)
        assert is_fano(ws) == is_fano(wt)

    # (c) A w = d 1, gcd(w) = 1
    for rows in _samples(4):
        ws = solve_weights(rows)
        assert all(x == (ws.degree,) for x in matmul(rows, [[w] for w in ws.weights]))
        assert reduce(gcd, ws.weights) == 1

    # (d) torsion divisibility chain, (e) Betti integrality
    for rows in _samples(5, max_vars=7):
        ws = solve_weights(rows)
        t = torsion(ws)
        assert all(t[i] % t[i + 1] == 0 for i in range(len(t) - 1))
        assert isinstance(betti_middle(ws), int) and betti_middle(ws) >= 0

    # (f) permutation invariance
    rng = random.Random(SEED + 6)
    for rows in _samples(7):
        n = len(rows)
        perm = list(range(n))
        rng.shuffle(perm)
        q = _permuted(rows, perm)
        ws, wq = solve_weights(rows), solve_weights(q)
        assert wq.weights == tuple(ws.weights[perm[j]] for j in range(n))
        assert link_homology(ws) == link_homology(wq)
        assert sorted(transpose(_poly(q))[1].weights) == sorted(transpose(_poly(rows))[1].weights)


@acc(7, "P(3,16,12,16,4), d=48 is not well-formed")
def test_not_well_formed():
    assert is_well_formed(WeightSystem((3, 16, 12, 16, 4), 48)) is False


@acc(8, "Fermat quintic rejected by the pipeline (exit code 4)")
def test_fermat_rejected(capsys):
    quintic = "x0^5 + x1^5 + x2^5 + x3^5 + x4^5"
    with pytest.raises(FermatInputError):
        run_pipeline(parse_polynomial(quintic), WeightSystem((1,) * 5, 5))
    assert main(["pipeline", quintic]) == 4
    assert "Fermat" in capsys.readouterr().err


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
