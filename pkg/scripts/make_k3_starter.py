"""Generate the starter batch file of K3 weight systems with invertible polynomials.

Enumerates well-formed weight systems ``(w0 <= w1 <= w2 <= w3; d)`` with
``|w| = d <= 66`` and searches each for a polynomial made of Fermat, loop and
chain blocks (every owner exponent >= 2).  The output is data for
``bhtranspose scan``; it is computed here, not copied from any table.

    python scripts/make_k3_starter.py > src/bhtranspose/data/k3_invertible.jsonl
    python scripts/make_k3_starter.py --all > tests/data/k3_all.jsonl
"""

import argparse
import json
import sys
from functools import reduce
from math import gcd

from bhtranspose.geometry import is_well_formed
from bhtranspose.polynomial import InvertiblePolynomial, classify_atomic, render
from bhtranspose.weights import WeightSystem, solve_weights


def monomial_options(weights, d, i):
    """(exponent, target) pairs with ``a*w_i + w_target = d``; target None for a pure power."""
    wi = weights[i]
    opts = []
    if d % wi == 0 and d // wi >= 2:
        opts.append((d // wi, None))
    for j, wj in enumerate(weights):
        if j != i and d > wj and (d - wj) % wi == 0 and (d - wj) // wi >= 2:
            opts.append(((d - wj) // wi, j))
    return opts


def invertible_polynomials(weights, d):
    """Every atomic-type exponent matrix for ``(w, d)``."""
    n = len(weights)
    options = [monomial_options(weights, d, i) for i in range(n)]
    choice = [None] * n

    def rec(i, used_targets):
        if i == n:
            rows = []
            for k, (a, t) in enumerate(choice):
                row = [0] * n
                row[k] = a
                if t is not None:
                    row[t] = 1
                rows.append(tuple(row))
            yield rows
            return
        for a, t in options[i]:
            if t is not None and t in used_targets:
                continue
            choice[i] = (a, t)
            yield from rec(i + 1, used_targets | ({t} if t is not None else set()))

    yield from rec(0, frozenset())


def k3_weight_systems(max_degree):
    for d in range(4, max_degree + 1):
        for w0 in range(1, d // 4 + 1):
            for w1 in range(w0, (d - w0) // 3 + 1):
                for w2 in range(w1, (d - w0 - w1) // 2 + 1):
                    w3 = d - w0 - w1 - w2
                    if w3 < w2 or reduce(gcd, (w0, w1, w2, w3)) != 1:
                        continue
                    yield (w0, w1, w2, w3), d


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-degree", type=int, default=66)
    ap.add_argument("--all", action="store_true", help="one record per polynomial instead of per weight system")
    args = ap.parse_args(argv)
    names = ("z1", "z2", "z3", "z4")
    count = 0
    for weights, d in k3_weight_systems(args.max_degree):
        ws = WeightSystem(weights, d)
        if not is_well_formed(ws):
            continue
        found = []
        for rows in invertible_polynomials(weights, d):
            p = InvertiblePolynomial.from_matrix(rows, names)
            try:
                dec = classify_atomic(p)
            except Exception:
                continue
            if solve_weights(p.matrix) != ws:
                continue
            found.append((dec.is_fermat, p))
        if not found:
            continue
        # prefer non-Fermat so the record exercises the full pipeline
        found.sort(key=lambda fp: (fp[0], render(fp[1])))
        count += 1
        chosen = found if args.all else found[:1]
        for k, (_, p) in enumerate(chosen):
            rec = {
                "id": f"k3-{count:03d}" + (f"-{k}" if args.all else ""),
                "polynomial": render(p),
                "weights": list(weights),
                "degree": d,
                "source": "generated by scripts/make_k3_starter.py (enumeration)",
                "invertible_count": len(found),
            }
            print(json.dumps(rec))
    print(f"{count} weight systems", file=sys.stderr)


if __name__ == "__main__":
    main()
