"""Strict 1-dimensional TQFTs ``1Cob -> Mat(Q)``.

Such a functor is fixed by ``p = F(+) = F(-)`` and an invertible ``p x p``
matrix ``X``: the cap ``+- -> ∅`` goes to the row ``vec_row(X)``, the cup
``∅ -> -+`` to the column ``vec_col(X^-1)``, and everything else follows
from the symmetric monoidal structure.  Evaluation goes through the
generator decomposition of :mod:`onecob.words` and never through the
Brauer functor, so comparing the two (via :func:`eval_via_theta`) is a
real check.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import brauer
from . import matrix as mx
from .cobordism import (
    PLUS,
    Cobordism,
    Generator,
    SignedObject,
    compose,
    enumerate_homset,
    generator,
    identity,
    iter_objects,
    obj,
    tensor,
)
from .matrix import ExactMatrix, SingularMatrixError
from .report import Report
from .serialize import cobordism_to_doc
from .words import Atom, AtomLayer, PermutationLayer, decompose


class InvalidTqftError(ValueError):
    """The matrix data does not define a strict 1-TQFT."""


@dataclass(frozen=True)
class StrictTqft:
    p: int
    x: ExactMatrix
    x_inv: ExactMatrix
    images: dict = field(repr=False, compare=False, hash=False)
    max_cells: int = field(default=brauer.DEFAULT_MAX_CELLS, compare=False)
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def image(self, name: Generator | Atom | str) -> ExactMatrix:
        """Cached image of a generator, an identity atom, or ``"tau-+"``."""
        key = name.value if isinstance(name, (Generator, Atom)) else name
        return self.images[key]


def tqft_new(x: ExactMatrix, max_cells: int = brauer.DEFAULT_MAX_CELLS) -> StrictTqft:
    """Build the strict 1-TQFT determined by the invertible matrix ``x``."""
    if not x.is_square():
        raise InvalidTqftError(f"X must be square, got {x.rows}x{x.cols}")
    p = x.rows
    if p < 2:
        raise brauer.DimensionBaseError(f"X must be at least 2x2 (p >= 2), got p = {p}")
    try:
        x_inv = mx.inverse(x)
    except SingularMatrixError:
        raise InvalidTqftError("X is singular, so the snake equations cannot hold") from None
    e = mx.identity(p)
    swap = mx.commutation_matrix(p, p)
    images = {
        Atom.ID_PLUS.value: e,
        Atom.ID_MINUS.value: e,
        Generator.CAP_PM.value: mx.vec_row(x),
        Generator.CAP_MP.value: mx.vec_row(x.T),
        Generator.CUP_MP.value: mx.vec_col(x_inv),
        Generator.CUP_PM.value: mx.vec_col(x_inv.T),
        Generator.CIRCLE.value: ExactMatrix(1, 1, [p]),
        "tau-+": swap,
    }
    t = StrictTqft(p, x, x_inv, images, max_cells)
    rep = check_axioms(t)
    if not rep.ok:
        raise InvalidTqftError(f"axioms fail: {rep.counterexamples}")
    return t


# -- permutations -----------------------------------------------------------


def _digits(code: int, n: int, p: int) -> list[int]:
    out = [0] * n
    for k in range(n - 1, -1, -1):
        code, out[k] = divmod(code, p)
    return out


def _permutation_sources(perm: Sequence[int], p: int) -> list[int]:
    # row r of the permutation matrix has its single 1 in column src[r],
    # where digit k of src[r] is digit perm[k] of r
    n = len(perm)
    src = []
    for r in range(p ** n):
        d = _digits(r, n, p)
        c = 0
        for k in range(n):
            c = c * p + d[perm[k]]
        src.append(c)
    return src


def tensor_permutation_matrix(perm: Sequence[int], p: int) -> ExactMatrix:
    """The ``p**n`` square matrix moving tensor factor ``k`` to position ``perm[k]``.

    Cell ``[r, c]`` is 1 iff digit ``perm[k]`` of ``r`` equals digit ``k`` of
    ``c`` for every ``k`` (base ``p``, most significant digit first).
    """
    src = _permutation_sources(perm, p)
    size = len(src)
    return ExactMatrix.from_sparse(size, size, {(r, c): 1 for r, c in enumerate(src)})


# -- evaluation -------------------------------------------------------------


def _layer_matrix(t: StrictTqft, layer: AtomLayer) -> ExactMatrix:
    return mx.kron_all(t.image(a) for a in layer.atoms)


def _eval_layers(t: StrictTqft, layers, dim: int) -> ExactMatrix:
    # Permutation layers only re-index rows or columns; a leading one is
    # folded into the columns of the first atom layer so no p**n x p**n
    # matrix is built.
    p = t.p
    m = None
    cols = None
    for layer in layers:
        if isinstance(layer, PermutationLayer):
            if layer.is_identity():
                continue
            src = _permutation_sources(layer.perm, p)
            if m is not None:
                m = mx.select(m, row_order=src)
            else:
                cols = _compose_index(cols, _invert(src))
        else:
            a = _layer_matrix(t, layer)
            if m is None:
                m = a if cols is None else mx.select(a, col_order=cols)
            else:
                m = mx.matmul(a, m)
    if m is None:
        m = mx.identity(dim) if cols is None else mx.select(mx.identity(dim), col_order=cols)
    return m


def _invert(index: list[int]) -> list[int]:
    out = [0] * len(index)
    for r, c in enumerate(index):
        out[c] = r
    return out


def _compose_index(first: list[int] | None, second: list[int]) -> list[int]:
    # column c of A·P2·P1 is column second[first[c]] of A
    return second if first is None else [second[j] for j in first]


def tqft_eval(t: StrictTqft, k: Cobordism) -> ExactMatrix:
    """``F(K)`` as a ``p**len(target) x p**len(source)`` matrix."""
    p = t.p
    brauer.check_cells(p, len(k.source), len(k.target), t.max_cells)
    body = k.without_circles()
    m = t._cache.get(body)
    if m is None:
        m = _eval_layers(t, decompose(body).layers, p ** len(k.source))
        t._cache[body] = m
    return m * p ** k.circles if k.circles else m


def theta(t: StrictTqft, a) -> ExactMatrix:
    """Component ``B(a) -> F(a)``: ``E_p`` per ``+`` and ``X^-1`` per ``-``, tensored."""
    e = mx.identity(t.p)
    return mx.kron_all(e if s == PLUS else t.x_inv for s in obj(a))


def theta_inverse(t: StrictTqft, a) -> ExactMatrix:
    e = mx.identity(t.p)
    return mx.kron_all(e if s == PLUS else t.x for s in obj(a))


def eval_via_theta(t: StrictTqft, k: Cobordism) -> ExactMatrix:
    """The matrix ``M`` with ``M · theta(a) = theta(b) · B(K)``."""
    b = brauer.brauer_image(k, t.p, t.max_cells)
    return mx.matmul(mx.matmul(theta(t, k.target), b), theta_inverse(t, k.source))


# -- axioms -----------------------------------------------------------------


def snake_plus(cap: ExactMatrix, cup: ExactMatrix, p: int, q: int) -> ExactMatrix:
    """``(F(cap) ⊗ E_p) · (E_p ⊗ F(cup))`` for ``F(+) = p``, ``F(-) = q``."""
    return mx.matmul(mx.kron(cap, mx.identity(p)), mx.kron(mx.identity(p), cup))


def snake_minus(cap_bar: ExactMatrix, cup_bar: ExactMatrix, p: int, q: int) -> ExactMatrix:
    """``(F(cap_bar) ⊗ E_q) · (E_q ⊗ F(cup_bar))``."""
    return mx.matmul(mx.kron(cap_bar, mx.identity(q)), mx.kron(mx.identity(q), cup_bar))


def check_axioms(t: StrictTqft) -> Report:
    """Snake equations, the circle value, and the reversed cap/cup images."""
    p = t.p
    e = mx.identity(p)
    swap = mx.commutation_matrix(p, p)
    cap, cup = t.image(Generator.CAP_PM), t.image(Generator.CUP_MP)
    cap_bar, cup_bar = t.image(Generator.CAP_MP), t.image(Generator.CUP_PM)
    rep = Report("axioms", info={"p": p, "X": mx.to_json(t.x)})
    checks = [
        ("inverse", mx.matmul(t.x, t.x_inv), e),
        ("inverse-left", mx.matmul(t.x_inv, t.x), e),
        ("snake+", snake_plus(cap, cup, p, p), e),
        ("snake-", snake_minus(cap_bar, cup_bar, p, p), e),
        ("circle", mx.matmul(mx.matmul(cap, swap), cup), ExactMatrix(1, 1, [p])),
        ("circle-image", t.image(Generator.CIRCLE), ExactMatrix(1, 1, [p])),
        ("cap-reversed", cap_bar, mx.matmul(cap, swap)),
        ("cup-reversed", cup_bar, mx.matmul(swap, cup)),
    ]
    for name, lhs, rhs in checks:
        if lhs == rhs:
            rep.record(True)
        else:
            rep.record(False, law=name, lhs=mx.to_json(lhs), rhs=mx.to_json(rhs))
    return rep


# -- random data and verification drivers -----------------------------------


def random_rational(rng: random.Random, bound: int = 4, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


def random_matrix(rows: int, cols: int, rng: random.Random, bound: int = 4,
                  max_den: int = 3) -> ExactMatrix:
    return ExactMatrix(rows, cols, [random_rational(rng, bound, max_den)
                                    for _ in range(rows * cols)])


def random_invertible(p: int, rng: random.Random) -> ExactMatrix:
    while True:
        x = random_matrix(p, p, rng)
        if mx.rank(x) == p:
            return x


def random_cobordism(rng: random.Random, max_points: int, max_circles: int = 1) -> Cobordism:
    """A random composite ``a -> b -> c`` with ``len(a) + len(c) <= max_points``."""
    objects = list(iter_objects(max_points))
    while True:
        a, b, c = (rng.choice(objects) for _ in range(3))
        if len(a) + len(c) > max_points or len(a) + len(b) > max_points \
                or len(b) + len(c) > max_points:
            continue
        h1 = enumerate_homset(a, b, max_circles)
        h2 = enumerate_homset(b, c, max_circles)
        if h1 and h2:
            return compose(rng.choice(h1), rng.choice(h2))


ALL_GENERATORS = [identity("+"), identity("-")] + [generator(g) for g in Generator]


def verify_theta(p: int, max_points: int = 6, trials: int = 100, seed: int = 0,
                 n_matrices: int = 20) -> Report:
    """``eval_via_theta == tqft_eval`` on the generators and on random composites."""
    rng = random.Random(seed)
    rep = Report("theta", info={"p": p, "max_points": max_points, "trials": trials,
                                "seed": seed, "matrices": n_matrices})
    theories = [tqft_new(random_invertible(p, rng)) for _ in range(n_matrices)]
    for t in theories:
        for k in ALL_GENERATORS:
            _compare_theta(rep, t, k)
    for _ in range(trials):
        k = random_cobordism(rng, max_points)
        for t in theories:
            _compare_theta(rep, t, k)
    return rep


def _compare_theta(rep: Report, t: StrictTqft, k: Cobordism) -> None:
    lhs, rhs = eval_via_theta(t, k), tqft_eval(t, k)
    if lhs == rhs:
        rep.record(True)
    else:
        rep.record(False, law="theta", K=cobordism_to_doc(k), X=mx.to_json(t.x),
                   lhs=mx.to_json(lhs), rhs=mx.to_json(rhs))


def verify_tqft_functoriality(t: StrictTqft, max_len: int = 3, max_circles: int = 1) -> Report:
    """Composition and tensor laws for ``tqft_eval`` over all objects up to ``max_len``."""
    objects = list(iter_objects(max_len))
    rep = Report("tqft-functoriality", info={"p": t.p, "max_len": max_len})
    homs = {(a, b): enumerate_homset(a, b, max_circles) for a in objects for b in objects}
    for (a, b), hom_ab in homs.items():
        for c in objects:
            for k, l in itertools.product(hom_ab, homs[b, c]):
                lhs = tqft_eval(t, compose(k, l))
                rhs = mx.matmul(tqft_eval(t, l), tqft_eval(t, k))
                _record(rep, "composition", lhs, rhs, k, l)
    for (a, b), hom_ab in homs.items():
        for (a2, b2), hom_2 in homs.items():
            if len(a) + len(a2) > max_len or len(b) + len(b2) > max_len:
                continue
            for k, l in itertools.product(hom_ab, hom_2):
                lhs = tqft_eval(t, tensor(k, l))
                rhs = mx.kron(tqft_eval(t, k), tqft_eval(t, l))
                _record(rep, "tensor", lhs, rhs, k, l)
    return rep


def _record(rep, law, lhs, rhs, k, l):
    if lhs == rhs:
        rep.record(True)
    else:
        rep.record(False, law=law, K=cobordism_to_doc(k), L=cobordism_to_doc(l),
                   lhs=mx.to_json(lhs), rhs=mx.to_json(rhs))


def verify_tqft_faithfulness(t: StrictTqft, max_points: int = 8, max_circles: int = 2) -> Report:
    rep = brauer.verify_faithfulness_all(
        t.p, max_points, max_circles, evaluate=lambda k: tqft_eval(t, k)
    )
    rep.name = "tqft-faithfulness"
    return rep


def falsify_snakes(p: int, q: int, trials: int, seed: int) -> Report:
    """Search for cap/cup data with ``F(+) = p``, ``F(-) = q`` satisfying both snakes.

    Each trial draws a random ``p x q`` matrix ``X`` and a one-sided inverse
    ``Y`` (right inverse when ``p <= q``, left inverse otherwise), or a
    random non-inverse when ``p == q``.  A trial passes when at least one
    snake equation fails, which the rank argument guarantees unless ``Y``
    is a genuine two-sided inverse.
    """
    rng = random.Random(seed)
    rep = Report("snake-falsification", info={"p": p, "q": q, "trials": trials, "seed": seed})
    for _ in range(trials):
        x, y = _candidate(p, q, rng)
        cap, cup = mx.vec_row(x), mx.vec_col(y)
        cap_bar = mx.matmul(cap, mx.commutation_matrix(q, p))
        cup_bar = mx.matmul(mx.commutation_matrix(q, p), cup)
        plus_ok = snake_plus(cap, cup, p, q) == mx.identity(p)
        minus_ok = snake_minus(cap_bar, cup_bar, p, q) == mx.identity(q)
        if plus_ok and minus_ok:
            rep.record(False, law="both snakes hold", X=mx.to_json(x), Y=mx.to_json(y))
        else:
            rep.record(True)
    return rep


def _candidate(p: int, q: int, rng: random.Random) -> tuple[ExactMatrix, ExactMatrix]:
    while True:
        x = random_matrix(p, q, rng)
        if p == q:
            y = random_matrix(q, p, rng)
            if mx.matmul(x, y) != mx.identity(p):
                return x, y
            continue
        if mx.rank(x) != min(p, q):
            continue
        xt = x.T
        if p < q:
            # right inverse X^T (X X^T)^-1
            return x, mx.matmul(xt, mx.inverse(mx.matmul(x, xt)))
        # left inverse (X^T X)^-1 X^T
        return x, mx.matmul(mx.inverse(mx.matmul(xt, x)), xt)
