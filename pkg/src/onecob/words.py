"""Layered generator words and the canonical decomposition of a cobordism.

Every cobordism factors as

    permutation ; caps (+- -> ∅ and identities) ; cups (∅ -> -+ and identities) ; permutation

tensored with some circles.  Only the ``+-`` cap and the ``-+`` cup are
used; the permutation layers absorb any orientation reversal.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .cobordism import (
    MINUS,
    PLUS,
    Cobordism,
    CobordismError,
    Generator,
    Side,
    SignedObject,
    compose_all,
    generator,
    identity,
    obj,
    permutation_cobordism,
    tensor,
    tensor_all,
)


class Atom(str, enum.Enum):
    ID_PLUS = "IdPlus"
    ID_MINUS = "IdMinus"
    CAP_PM = "CapPM"
    CUP_MP = "CupMP"

    @property
    def source(self) -> tuple[int, ...]:
        return _ATOM_TYPES[self][0]

    @property
    def target(self) -> tuple[int, ...]:
        return _ATOM_TYPES[self][1]

    def cobordism(self) -> Cobordism:
        if self is Atom.ID_PLUS:
            return identity("+")
        if self is Atom.ID_MINUS:
            return identity("-")
        return generator(Generator(self.value))

    @classmethod
    def through(cls, sign: int) -> Atom:
        return cls.ID_PLUS if sign == PLUS else cls.ID_MINUS


_ATOM_TYPES = {
    Atom.ID_PLUS: ((PLUS,), (PLUS,)),
    Atom.ID_MINUS: ((MINUS,), (MINUS,)),
    Atom.CAP_PM: ((PLUS, MINUS), ()),
    Atom.CUP_MP: ((), (MINUS, PLUS)),
}


@dataclass(frozen=True)
class PermutationLayer:
    """Moves the point at position ``i`` of ``source`` to position ``perm[i]``."""

    perm: tuple[int, ...]
    source: SignedObject

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        object.__setattr__(self, "source", obj(self.source))
        if len(self.perm) != len(self.source) or sorted(self.perm) != list(range(len(self.perm))):
            raise CobordismError(f"{self.perm} is not a permutation of {len(self.source)} points")

    @property
    def target(self) -> SignedObject:
        out = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            out[j] = self.source[i]
        return SignedObject(tuple(out))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.perm))

    def cobordism(self) -> Cobordism:
        return permutation_cobordism(self.perm, self.source)


@dataclass(frozen=True)
class AtomLayer:
    """Tensor product of atoms, left to right."""

    atoms: tuple[Atom, ...]

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(Atom(a) for a in self.atoms))

    @property
    def source(self) -> SignedObject:
        return SignedObject(tuple(s for a in self.atoms for s in a.source))

    @property
    def target(self) -> SignedObject:
        return SignedObject(tuple(s for a in self.atoms for s in a.target))

    def cobordism(self) -> Cobordism:
        return tensor_all(a.cobordism() for a in self.atoms)


Layer = Union[PermutationLayer, AtomLayer]


@dataclass(frozen=True)
class GeneratorWord:
    """Layers applied first to last, tensored with ``scalar_circles`` circles."""

    scalar_circles: int = 0
    layers: tuple[Layer, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(self.layers))
        if self.scalar_circles < 0:
            raise CobordismError("scalar_circles must be >= 0")
        for prev, nxt in zip(self.layers, self.layers[1:]):
            if prev.target != nxt.source:
                raise CobordismError(
                    f"layer mismatch: {prev.target or '∅'} feeds {nxt.source or '∅'}"
                )

    @property
    def source(self) -> SignedObject:
        return self.layers[0].source if self.layers else SignedObject()

    @property
    def target(self) -> SignedObject:
        return self.layers[-1].target if self.layers else SignedObject()


def recompose(word: GeneratorWord) -> Cobordism:
    """Evaluate a word back to a cobordism."""
    body = compose_all([identity(word.source)] + [layer.cobordism() for layer in word.layers])
    return tensor(body, tensor_all(generator(Generator.CIRCLE) for _ in range(word.scalar_circles)))


def decompose(k: Cobordism) -> GeneratorWord:
    """Canonical four-layer word for ``k``.

    Caps are listed by their smaller incoming index, cups by their smaller
    outgoing index, and through-strands keep source order.
    """
    a, b = k.source, k.target
    caps, cups, through = [], [], []
    for x, y in k.arcs:
        if x.side == Side.IN and y.side == Side.IN:
            caps.append((x, y))
        elif x.side == Side.OUT:
            cups.append((x, y))
        else:
            through.append((x, y))
    # arcs are sorted, so each list is already in tie-break order

    perm_in = [0] * len(a)
    for c, (x, y) in enumerate(caps):
        plus, minus = (x, y) if a[x.index] == PLUS else (y, x)
        perm_in[plus.index] = 2 * c
        perm_in[minus.index] = 2 * c + 1
    base = 2 * len(caps)
    for t, (x, _) in enumerate(through):
        perm_in[x.index] = base + t

    through_signs = [a[x.index] for x, _ in through]
    cap_layer = AtomLayer(tuple([Atom.CAP_PM] * len(caps) + [Atom.through(s) for s in through_signs]))
    cup_layer = AtomLayer(tuple([Atom.through(s) for s in through_signs] + [Atom.CUP_MP] * len(cups)))

    perm_out = [0] * len(b)
    for t, (_, y) in enumerate(through):
        perm_out[t] = y.index
    base = len(through)
    for c, (x, y) in enumerate(cups):
        minus, plus = (x, y) if b[x.index] == MINUS else (y, x)
        perm_out[base + 2 * c] = minus.index
        perm_out[base + 2 * c + 1] = plus.index

    return GeneratorWord(
        k.circles,
        (
            PermutationLayer(tuple(perm_in), a),
            cap_layer,
            cup_layer,
            PermutationLayer(tuple(perm_out), cup_layer.target),
        ),
    )
