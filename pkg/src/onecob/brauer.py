"""The Brauerian functor from 1Cob to rational matrices.

A cobordism ``K: a -> b`` goes to the ``p**len(b) x p**len(a)`` matrix whose
cell ``[i, j]`` is 1 exactly when colouring the outgoing points by the
base-``p`` digits of ``i`` and the incoming points by those of ``j`` gives
both ends of every arc the same colour.  Closed components contribute a
factor ``p`` each.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from . import matrix as mx
from .cobordism import (
    Cobordism,
    Side,
    SignedObject,
    compose,
    enumerate_homset,
    identity,
    iter_objects,
    obj,
    tau,
    tensor,
)
from .matrix import ExactMatrix
from .report import Report
from .serialize import cobordism_to_doc

DEFAULT_MAX_CELLS = 2 ** 24


class SizeCapError(ValueError):
    """A requested matrix would exceed the configured cell budget."""


class DimensionBaseError(ValueError):
    """The base ``p`` must be at least 2."""


def check_base(p: int) -> int:
    if isinstance(p, bool) or not isinstance(p, int) or p < 2:
        raise DimensionBaseError(
            f"p must be an integer >= 2 (got {p!r}); with p = 1 circles are invisible "
            "and distinct cobordisms collapse"
        )
    return p


def check_cells(p: int, n_in: int, n_out: int, max_cells: int = DEFAULT_MAX_CELLS) -> None:
    cells = p ** (n_in + n_out)
    if cells > max_cells:
        raise SizeCapError(
            f"{p}^{n_out} x {p}^{n_in} matrix has {cells} cells, over the cap of {max_cells}"
        )


@dataclass(frozen=True)
class ColorIndex:
    """A function ``{0..arity-1} -> {0..base-1}`` packed as a base-``p`` number.

    The value at position 0 is the most significant digit, so numeric order
    of codes is lexicographic order of the sequences.
    """

    arity: int
    base: int
    code: int

    def __post_init__(self):
        if not 0 <= self.code < self.base ** self.arity:
            raise ValueError(f"code {self.code} out of range for {self.base}^{self.arity}")

    def digits(self) -> tuple[int, ...]:
        return decode(self)


def encode(values: Sequence[int], p: int) -> ColorIndex:
    check_base(p)
    code = 0
    for v in values:
        if not 0 <= v < p:
            raise ValueError(f"colour {v} out of range for p = {p}")
        code = code * p + v
    return ColorIndex(len(values), p, code)


def decode(c: ColorIndex) -> tuple[int, ...]:
    out = []
    code = c.code
    for _ in range(c.arity):
        code, d = divmod(code, c.base)
        out.append(d)
    return tuple(reversed(out))


def coloring_entries(k: Cobordism, p: int) -> dict[tuple[int, int], int]:
    """Nonzero cells of the 0/1 colouring matrix, one per arc colouring."""
    n, m = len(k.source), len(k.target)
    row_w, col_w = [], []
    for arc in k.arcs:
        rw = cw = 0
        for e in arc:
            if e.side == Side.IN:
                cw += p ** (n - 1 - e.index)
            else:
                rw += p ** (m - 1 - e.index)
        row_w.append(rw)
        col_w.append(cw)
    cells = {}
    for colours in itertools.product(range(p), repeat=len(k.arcs)):
        i = sum(c * w for c, w in zip(colours, row_w))
        j = sum(c * w for c, w in zip(colours, col_w))
        cells[i, j] = 1
    return cells


def coloring_matrix(k: Cobordism, p: int, max_cells: int = DEFAULT_MAX_CELLS) -> ExactMatrix:
    check_base(p)
    n, m = len(k.source), len(k.target)
    check_cells(p, n, m, max_cells)
    return ExactMatrix.from_sparse(p ** m, p ** n, coloring_entries(k, p))


def brauer_image(k: Cobordism, p: int, max_cells: int = DEFAULT_MAX_CELLS) -> ExactMatrix:
    """``p**circles`` times the colouring matrix."""
    a = coloring_matrix(k, p, max_cells)
    return a if not k.circles else a * p ** k.circles


def brauer_object(a: SignedObject, p: int) -> int:
    return check_base(p) ** len(a)


@lru_cache(maxsize=None)
def _image(k: Cobordism, p: int) -> ExactMatrix:
    return brauer_image(k, p)


def _mdoc(x: ExactMatrix) -> dict:
    return mx.to_json(x)


def _record(rep: Report, lhs: ExactMatrix, rhs: ExactMatrix, law: str, *cobs: Cobordism) -> None:
    if lhs == rhs:
        rep.record(True)
        return
    details = {"law": law, "lhs": _mdoc(lhs), "rhs": _mdoc(rhs)}
    for name, k in zip("KL", cobs):
        details[name] = cobordism_to_doc(k)
    rep.record(False, **details)


def _check_composition(rep: Report, k: Cobordism, l: Cobordism, p: int) -> None:
    lhs = _image(compose(k, l), p)
    rhs = mx.matmul(_image(l, p), _image(k, p))
    _record(rep, lhs, rhs, "composition", k, l)


def _check_tensor(rep: Report, k: Cobordism, l: Cobordism, p: int) -> None:
    lhs = _image(tensor(k, l), p)
    rhs = mx.kron(_image(k, p), _image(l, p))
    _record(rep, lhs, rhs, "tensor", k, l)


def _check_identity(rep: Report, a: SignedObject, p: int) -> None:
    lhs = _image(identity(a), p)
    rhs = mx.identity(p ** len(a))
    _record(rep, lhs, rhs, "identity", identity(a))


def _check_symmetry(rep: Report, a: SignedObject, b: SignedObject, p: int) -> None:
    lhs = _image(tau(a, b), p)
    rhs = mx.commutation_matrix(p ** len(a), p ** len(b))
    _record(rep, lhs, rhs, "symmetry", tau(a, b))


def verify_functoriality(
    p: int,
    a,
    b,
    c,
    max_circles: int = 1,
    trials: int | None = None,
    seed: int | None = None,
) -> Report:
    """Check the functor laws on ``hom(a,b) x hom(b,c)``.

    Each pair ``(K, L)`` is checked for composition and for tensor; identity
    on ``a`` and the symmetry ``a·b -> b·a`` are checked once.  With
    ``trials`` set, that many random pairs are drawn instead of all of them.
    """
    check_base(p)
    a, b, c = obj(a), obj(b), obj(c)
    rep = Report("functoriality", info={"p": p})
    _check_identity(rep, a, p)
    _check_symmetry(rep, a, b, p)
    hom_ab = enumerate_homset(a, b, max_circles)
    hom_bc = enumerate_homset(b, c, max_circles)
    if trials is None:
        pairs = itertools.product(hom_ab, hom_bc)
    elif hom_ab and hom_bc:
        rng = random.Random(seed)
        pairs = ((rng.choice(hom_ab), rng.choice(hom_bc)) for _ in range(trials))
    else:
        pairs = ()
    for k, l in pairs:
        _check_composition(rep, k, l, p)
        _check_tensor(rep, k, l, p)
    return rep


def verify_functoriality_all(p: int, max_len: int = 3, max_circles: int = 1) -> Report:
    """Exhaustive functor-law check with every object of length at most ``max_len``.

    Composition runs over all composable pairs between such objects; tensor,
    identity and symmetry over all instances whose objects (the tensored
    ones included) stay within ``max_len``.
    """
    check_base(p)
    objects = list(iter_objects(max_len))
    rep = Report("functoriality", info={"p": p, "max_len": max_len, "max_circles": max_circles})
    homs = {(a, b): enumerate_homset(a, b, max_circles) for a in objects for b in objects}
    for a in objects:
        _check_identity(rep, a, p)
        for b in objects:
            if len(a) + len(b) <= max_len:
                _check_symmetry(rep, a, b, p)
    for (a, b), hom_ab in homs.items():
        for c in objects:
            for k in hom_ab:
                for l in homs[b, c]:
                    _check_composition(rep, k, l, p)
    for (a, b), hom_ab in homs.items():
        for (a2, b2), hom_2 in homs.items():
            if len(a) + len(a2) > max_len or len(b) + len(b2) > max_len:
                continue
            for k in hom_ab:
                for l in hom_2:
                    _check_tensor(rep, k, l, p)
    _image.cache_clear()
    return rep


def verify_functoriality_random(
    p: int, max_len: int, trials: int, seed: int, max_circles: int = 1
) -> Report:
    """``trials`` random composable pairs over objects of length at most ``max_len``.

    Each pair is checked for composition and tensor.
    """
    check_base(p)
    rng = random.Random(seed)
    objects = list(iter_objects(max_len))
    rep = Report("functoriality", info={"p": p, "max_len": max_len, "trials": trials, "seed": seed})
    done = 0
    while done < trials:
        a, b, c = (rng.choice(objects) for _ in range(3))
        hom_ab = enumerate_homset(a, b, max_circles)
        hom_bc = enumerate_homset(b, c, max_circles)
        if hom_ab and hom_bc:
            k, l = rng.choice(hom_ab), rng.choice(hom_bc)
            _check_composition(rep, k, l, p)
            _check_tensor(rep, k, l, p)
            done += 1
    _image.cache_clear()
    return rep


def verify_faithfulness(p: int, a, b, max_circles: int = 2, evaluate=None) -> Report:
    """Check that distinct cobordisms ``a -> b`` have distinct images.

    ``evaluate`` defaults to the Brauer image; any functor ``K -> matrix``
    can be passed to test it the same way.
    """
    check_base(p)
    a, b = obj(a), obj(b)
    if evaluate is None:
        def evaluate(k):
            return brauer_image(k, p)
    hom = enumerate_homset(a, b, max_circles)
    rep = Report("faithfulness", info={"p": p, "source": str(a), "target": str(b),
                                       "homset_size": len(hom)})
    seen: dict[ExactMatrix, Cobordism] = {}
    for k in hom:
        img = evaluate(k)
        other = seen.setdefault(img, k)
        if other is k:
            rep.record(True)
        else:
            rep.record(False, law="injectivity", K=cobordism_to_doc(other),
                       L=cobordism_to_doc(k), lhs=_mdoc(img))
    return rep


def verify_faithfulness_all(p: int, max_points: int = 8, max_circles: int = 2,
                            evaluate=None) -> Report:
    """Faithfulness on every hom-set with ``len(a) + len(b) <= max_points``."""
    rep = Report("faithfulness", info={"p": p, "max_points": max_points,
                                       "max_circles": max_circles})
    homsets = 0
    for a in iter_objects(max_points):
        for b in iter_objects(max_points - len(a)):
            if (len(a) + len(b)) % 2:
                continue
            sub = verify_faithfulness(p, a, b, max_circles, evaluate)
            homsets += sub.info["homset_size"] > 0
            rep.merge(sub)
    rep.info["homsets"] = homsets
    return rep


def constant_colorings(classes: Sequence[Sequence[int]], points: int, p: int) -> frozenset:
    """All colourings of ``points`` points by ``p`` colours constant on each class.

    Brute force over all ``p**points`` colourings; used as an independent oracle.
    """
    out = []
    for f in itertools.product(range(p), repeat=points):
        if all(len({f[x] for x in cls}) == 1 for cls in classes):
            out.append(f)
    return frozenset(out)
