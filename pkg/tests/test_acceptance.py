"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line that is printed in the terminal summary
(see conftest.py), so a plain ``pytest`` run shows the full scorecard.
"""

import json
import random
import time

from onecob import matrix as mx
from onecob.brauer import verify_faithfulness_all, verify_functoriality_all
from onecob.cli import main
from onecob.cobordism import Generator, enumerate_homset, generator, iter_objects
from onecob.matrix import ExactMatrix
from onecob.tqft import (
    falsify_snakes,
    random_invertible,
    random_matrix,
    snake_minus,
    snake_plus,
    tqft_eval,
    tqft_new,
    verify_theta,
    verify_tqft_faithfulness,
)
from onecob.words import decompose, recompose

FIVE_MINUTES = 300.0


def record(acceptance, n, title, ok, detail):
    acceptance[n] = f"criterion {n} {title}: {'PASS' if ok else 'FAIL'} ({detail})"
    print(acceptance[n])
    return ok


def criterion3_homsets():
    for a in iter_objects(8):
        for b in iter_objects(8 - len(a)):
            if (len(a) + len(b)) % 2 == 0:
                yield a, b


def test_1_example_matrix(acceptance, tmp_path, capsys, example_rows):
    doc = {"source": "+−−+", "target": "+−",
           "arcs": [["in0", "in1"], ["in2", "out1"], ["in3", "out0"]], "circles": 0}
    path = tmp_path / "example.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    start = time.perf_counter()
    code = main(["brauer", str(path), "--p", "2", "--format", "csv"])
    elapsed = time.perf_counter() - start
    rows = [line.split(",") for line in capsys.readouterr().out.splitlines()]
    expected = [list(r) for r in example_rows]
    ones = sum(v == "1" for r in rows for v in r)
    # the 1-based entry A(K)[2,3] is row "01", column "0010"
    # the displayed matrix has p^{#arcs} = 8 ones
    ok = code == 0 and rows == expected and ones == 8 and rows[1][2] == "1" and elapsed < 1.0
    assert record(acceptance, 1, "example matrix", ok, f"{ones} ones, {elapsed:.3f}s")


def test_2_functoriality(acceptance):
    start = time.perf_counter()
    reps = [verify_functoriality_all(p, max_len=3, max_circles=1) for p in (2, 3)]
    elapsed = time.perf_counter() - start
    checked = sum(r.checked for r in reps)
    failed = sum(r.failed for r in reps)
    ok = failed == 0 and elapsed < FIVE_MINUTES
    assert record(acceptance, 2, "functoriality of B", ok,
                  f"{checked} checks at p=2,3, {failed} counterexamples, {elapsed:.1f}s")


def test_3_faithfulness(acceptance):
    start = time.perf_counter()
    rep = verify_faithfulness_all(2, max_points=8, max_circles=2)
    elapsed = time.perf_counter() - start
    ok = rep.ok and elapsed < FIVE_MINUTES
    assert record(acceptance, 3, "faithfulness of B", ok,
                  f"{rep.checked} morphisms in {rep.info['homsets']} hom-sets, "
                  f"{rep.failed} collisions, {elapsed:.1f}s")


def _theories(seed):
    rng = random.Random(seed)
    return [tqft_new(random_invertible(p, rng)) for p in (2, 3) for _ in range(50)]


def test_4_circle_value(acceptance):
    circle = generator(Generator.CIRCLE)
    theories = _theories(4)
    bad = [t for t in theories if tqft_eval(t, circle) != ExactMatrix(1, 1, [t.p])]
    assert record(acceptance, 4, "F(S1) = p", not bad,
                  f"{len(theories)} random X at p=2,3, {len(bad)} failures")


def test_5_snakes(acceptance):
    theories = _theories(5)
    bad = 0
    for t in theories:
        e = mx.identity(t.p)
        cap, cup = t.image(Generator.CAP_PM), t.image(Generator.CUP_MP)
        cap_bar, cup_bar = t.image(Generator.CAP_MP), t.image(Generator.CUP_PM)
        bad += snake_plus(cap, cup, t.p, t.p) != e
        bad += snake_minus(cap_bar, cup_bar, t.p, t.p) != e
    harness = [falsify_snakes(p, q, trials=25, seed=p * 7 + q)
               for p, q in ((2, 2), (3, 3), (2, 3), (3, 2))]
    survivors = sum(r.failed for r in harness)
    tried = sum(r.checked for r in harness)
    ok = bad == 0 and survivors == 0
    assert record(acceptance, 5, "snake equations", ok,
                  f"{len(theories)} X, {bad} snake failures; {tried} non-inverse candidates, "
                  f"{survivors} satisfied both snakes")


def test_6_commutation_identities(acceptance):
    rng = random.Random(6)
    bad = 0
    trials = 500
    for _ in range(trials):
        p, q = rng.randint(1, 6), rng.randint(1, 6)
        x = random_matrix(p, q, rng)
        y = random_matrix(q, p, rng)
        # H(X)·S_{qp} = H(X^T) and S_{qp}·L(Y) = L(Y^T)
        bad += mx.matmul(mx.vec_row(x), mx.commutation_matrix(q, p)) != mx.vec_row(x.T)
        bad += mx.matmul(mx.commutation_matrix(q, p), mx.vec_col(y)) != mx.vec_col(y.T)
        r1, c1, r2, c2, c3, c4 = (rng.randint(1, 6) for _ in range(6))
        a, b = random_matrix(r1, c1, rng), random_matrix(r2, c2, rng)
        c, d = random_matrix(c1, c3, rng), random_matrix(c2, c4, rng)
        bad += mx.matmul(mx.kron(a, b), mx.kron(c, d)) != mx.kron(mx.matmul(a, c), mx.matmul(b, d))
    assert record(acceptance, 6, "commutation identities and mixed product", bad == 0,
                  f"{trials} trials x 3 identities, {bad} failures")


def test_7_theta(acceptance):
    rep = verify_theta(2, max_points=6, trials=100, seed=7, n_matrices=20)
    assert record(acceptance, 7, "theta natural isomorphism", rep.ok,
                  f"7 generators + 100 composites x 20 X = {rep.checked} checks, {rep.failed} failures")


def test_8_tqft_faithfulness(acceptance):
    rng = random.Random(8)
    start = time.perf_counter()
    reps = [verify_tqft_faithfulness(tqft_new(random_invertible(2, rng)), 8, 2) for _ in range(10)]
    elapsed = time.perf_counter() - start
    failed = sum(r.failed for r in reps)
    assert record(acceptance, 8, "every strict 1-TQFT is faithful", failed == 0,
                  f"10 X, {sum(r.checked for r in reps)} images, {failed} collisions, {elapsed:.1f}s")


def test_9_decomposition(acceptance):
    total = bad = 0
    for a, b in criterion3_homsets():
        for k in enumerate_homset(a, b, 2):
            total += 1
            bad += recompose(decompose(k)) != k
    assert record(acceptance, 9, "decomposition round trip", bad == 0,
                  f"{total} cobordisms, {bad} mismatches")
