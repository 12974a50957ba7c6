import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from onecob import matrix as mx
from onecob.brauer import DimensionBaseError, brauer_image
from onecob.cobordism import (
    Generator,
    compose,
    enumerate_homset,
    generator,
    identity,
    iter_objects,
    permutation_cobordism,
    tau,
    tensor,
)
from onecob.matrix import ExactMatrix
from onecob.tqft import (
    ALL_GENERATORS,
    InvalidTqftError,
    check_axioms,
    eval_via_theta,
    falsify_snakes,
    random_cobordism,
    random_invertible,
    tensor_permutation_matrix,
    theta,
    tqft_eval,
    tqft_new,
    verify_theta,
    verify_tqft_faithfulness,
    verify_tqft_functoriality,
)

M = ExactMatrix.from_rows
SHEAR = M([[1, 1], [0, 1]])


def swap_chain(perm, p):
    """Tensor-permutation matrix built from adjacent commutation matrices.

    Bubble-sorts the factors; each adjacent swap at position i is
    E ⊗ S_{p,p} ⊗ E.
    """
    n = len(perm)
    pos = list(perm)  # factor k currently headed for pos[k]
    order = list(range(n))  # order[slot] = factor in that slot
    out = mx.identity(p ** n)
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if pos[order[i]] > pos[order[i + 1]]:
                step = mx.kron_all([mx.identity(p ** i), mx.commutation_matrix(p, p),
                                    mx.identity(p ** (n - i - 2))])
                out = mx.matmul(step, out)
                order[i], order[i + 1] = order[i + 1], order[i]
                changed = True
    return out


# -- construction ------------------------------------------------------------


def test_identity_theory_is_brauer():
    t = tqft_new(mx.identity(2))
    assert t.image(Generator.CAP_PM) == brauer_image(generator(Generator.CAP_PM), 2)
    assert t.image(Generator.CUP_MP) == brauer_image(generator(Generator.CUP_MP), 2)


def test_shear_theory():
    t = tqft_new(SHEAR)
    assert t.image(Generator.CUP_MP) == mx.vec_col(M([[1, -1], [0, 1]]))
    assert t.image(Generator.CAP_MP) == mx.vec_row(SHEAR.T)


def test_invalid_theories():
    with pytest.raises(InvalidTqftError):
        tqft_new(M([[1, 1], [1, 1]]))
    with pytest.raises(InvalidTqftError):
        tqft_new(M([[1, 2, 3], [4, 5, 6]]))
    with pytest.raises(DimensionBaseError):
        tqft_new(M([[3]]))


# -- permutation matrices -------------------------------------------------------


@pytest.mark.parametrize("p", [2, 3])
def test_tensor_permutation_matches_commutation_products(p):
    for n in range(4):
        for perm in itertools.permutations(range(n)):
            assert tensor_permutation_matrix(perm, p) == swap_chain(perm, p), perm


@pytest.mark.parametrize("p", [2, 3])
def test_tensor_permutation_matches_brauer(p):
    for n in range(5):
        for perm in itertools.permutations(range(n)):
            k = permutation_cobordism(perm, "+" * n)
            assert tensor_permutation_matrix(perm, p) == brauer_image(k, p)


def test_block_swap_is_commutation_matrix():
    t = tqft_new(SHEAR)
    for a, b in itertools.product(iter_objects(2), repeat=2):
        expected = mx.commutation_matrix(2 ** len(a), 2 ** len(b))
        assert tqft_eval(t, tau(a, b)) == expected


# -- evaluation -----------------------------------------------------------------


def test_circle_and_snake():
    t = tqft_new(SHEAR)
    assert tqft_eval(t, generator(Generator.CIRCLE)) == M([[2]])
    snake = compose(tensor(identity("+"), generator(Generator.CUP_MP)),
                    tensor(generator(Generator.CAP_PM), identity("+")))
    assert tqft_eval(t, snake) == mx.identity(2)


def test_identity_theory_reproduces_example(example):
    assert tqft_eval(tqft_new(mx.identity(2)), example) == brauer_image(example, 2)


def test_empty_cobordism():
    assert tqft_eval(tqft_new(SHEAR), identity("")) == M([[1]])


def test_generator_images():
    t = tqft_new(SHEAR)
    for g in Generator:
        assert tqft_eval(t, generator(g)) == t.image(g)


def test_functoriality_exhaustive_small():
    rep = verify_tqft_functoriality(tqft_new(M([[2, 1], [1, 1]])), max_len=2)
    assert rep.ok and rep.checked > 0


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_functoriality_random_x(seed):
    rng = random.Random(seed)
    t = tqft_new(random_invertible(2, rng))
    homs = [k for a in iter_objects(3) for b in iter_objects(3) for k in enumerate_homset(a, b, 1)]
    k = rng.choice(homs)
    nxt = [l for l in homs if l.source == k.target]
    l = rng.choice(nxt)
    assert tqft_eval(t, compose(k, l)) == mx.matmul(tqft_eval(t, l), tqft_eval(t, k))
    m = rng.choice(homs)
    assert tqft_eval(t, tensor(k, m)) == mx.kron(tqft_eval(t, k), tqft_eval(t, m))


# -- theta --------------------------------------------------------------------


def test_theta_components():
    t = tqft_new(SHEAR)
    assert theta(t, "") == M([[1]])
    assert theta(t, "+") == mx.identity(2)
    assert theta(t, "−+") == mx.kron(t.x_inv, mx.identity(2))


def test_theta_on_cap():
    t = tqft_new(SHEAR)
    cap = generator(Generator.CAP_PM)
    b_cap = brauer_image(cap, 2)
    assert tqft_eval(t, cap) == mx.matmul(b_cap, mx.kron(mx.identity(2), t.x))
    assert b_cap == mx.matmul(tqft_eval(t, cap), mx.kron(mx.identity(2), t.x_inv))


def test_theta_naturality_square():
    rng = random.Random(11)
    for _ in range(30):
        t = tqft_new(random_invertible(2, rng))
        k = random_cobordism(rng, 5)
        lhs = mx.matmul(eval_via_theta(t, k), theta(t, k.source))
        rhs = mx.matmul(theta(t, k.target), brauer_image(k, 2))
        assert lhs == rhs
        assert eval_via_theta(t, k) == tqft_eval(t, k)


def test_theta_identity():
    t = tqft_new(SHEAR)
    for a in iter_objects(3):
        assert eval_via_theta(t, identity(a)) == tqft_eval(t, identity(a)) == mx.identity(2 ** len(a))


def test_verify_theta_small():
    rep = verify_theta(3, max_points=4, trials=10, seed=2, n_matrices=3)
    assert rep.ok
    assert rep.checked == 3 * len(ALL_GENERATORS) + 10 * 3


# -- axioms -------------------------------------------------------------------


def test_axioms_identity():
    rep = check_axioms(tqft_new(mx.identity(2)))
    assert rep.ok and rep.checked == 8


def test_axioms_random_3x3():
    rng = random.Random(0)
    for _ in range(50):
        assert check_axioms(tqft_new(random_invertible(3, rng))).ok


def test_circle_is_sum_of_diagonal_blocks():
    rng = random.Random(4)
    for p in (2, 3):
        t = tqft_new(random_invertible(p, rng))
        # B · S · C = sum_i (X X^-1)_{ii}
        xy = mx.matmul(t.x, t.x_inv)
        assert sum(xy[i, i] for i in range(p)) == p
        cap, cup = t.image(Generator.CAP_PM), t.image(Generator.CUP_MP)
        assert mx.matmul(mx.matmul(cap, mx.commutation_matrix(p, p)), cup) == M([[p]])


def test_bad_data_fails_axioms():
    t = tqft_new(SHEAR)
    broken = dict(t.images)
    broken[Generator.CUP_MP.value] = mx.vec_col(SHEAR)
    from dataclasses import replace

    rep = check_axioms(replace(t, images=broken))
    assert not rep.ok
    assert {c["law"] for c in rep.counterexamples} >= {"snake+", "cup-reversed"}


# -- p = q ----------------------------------------------------------------------


@pytest.mark.parametrize("p,q", [(2, 3), (3, 2), (1, 2), (2, 1), (2, 2), (3, 3)])
def test_snake_falsification(p, q):
    rep = falsify_snakes(p, q, trials=20, seed=p * 10 + q)
    assert rep.ok and rep.checked == 20


# -- faithfulness ---------------------------------------------------------------


def test_faithfulness_small():
    rep = verify_tqft_faithfulness(tqft_new(M([[1, 2], [3, 4]])), max_points=4)
    assert rep.ok and rep.checked > 0
