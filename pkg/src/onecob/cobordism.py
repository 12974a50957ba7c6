"""Oriented 1-dimensional cobordisms, stored up to equivalence.

A morphism ``a -> b`` is kept as the perfect matching its arcs induce on
the ``len(a) + len(b)`` boundary points together with the number of closed
components.  That pair is a complete invariant, so structural equality of
:class:`Cobordism` values is equivalence of cobordisms.

>>> cup = generator(Generator.CUP_MP)
>>> cap = generator(Generator.CAP_MP)
>>> compose(cup, cap) == generator(Generator.CIRCLE)
True
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

PLUS, MINUS = 1, -1


class CobordismError(ValueError):
    """A cobordism violates the matching or orientation rules."""


class CompositionError(CobordismError):
    """Boundaries of the two factors do not agree."""


@dataclass(frozen=True)
class SignedObject:
    """A finite sequence of oriented points; the empty sequence is the unit."""

    signs: tuple[int, ...] = ()

    def __post_init__(self):
        signs = tuple(self.signs)
        if any(s not in (PLUS, MINUS) for s in signs):
            raise CobordismError(f"signs must be +1 or -1, got {signs}")
        object.__setattr__(self, "signs", signs)

    @classmethod
    def parse(cls, text: str) -> SignedObject:
        """Read ``"+-"``; the typographic minus ``−`` is accepted too."""
        table = {"+": PLUS, "-": MINUS, "−": MINUS}
        try:
            return cls(tuple(table[ch] for ch in text if not ch.isspace()))
        except KeyError as exc:
            raise CobordismError(f"bad sign character {exc.args[0]!r}") from None

    def __str__(self):
        return "".join("+" if s == PLUS else "-" for s in self.signs)

    def __repr__(self):
        return f"SignedObject({str(self)!r})"

    def __len__(self):
        return len(self.signs)

    def __iter__(self):
        return iter(self.signs)

    def __getitem__(self, k):
        if isinstance(k, slice):
            return SignedObject(self.signs[k])
        return self.signs[k]

    def __add__(self, other: SignedObject) -> SignedObject:
        return SignedObject(self.signs + other.signs)


def obj(spec: str | SignedObject | Sequence[int]) -> SignedObject:
    """Coerce a sign string or sequence to a :class:`SignedObject`."""
    if isinstance(spec, SignedObject):
        return spec
    if isinstance(spec, str):
        return SignedObject.parse(spec)
    return SignedObject(tuple(spec))


class Side(enum.IntEnum):
    IN = 0
    OUT = 1


class Endpoint(NamedTuple):
    side: Side
    index: int

    def __str__(self):
        return f"{'in' if self.side == Side.IN else 'out'}{self.index}"

    __repr__ = __str__

    @classmethod
    def parse(cls, text: str) -> Endpoint:
        t = text.strip().lower()
        for prefix, side in (("in", Side.IN), ("out", Side.OUT)):
            if t.startswith(prefix) and t[len(prefix):].isdigit():
                return cls(side, int(t[len(prefix):]))
        raise CobordismError(f"bad endpoint {text!r}; expected in<k> or out<k>")


def In(k: int) -> Endpoint:
    return Endpoint(Side.IN, k)


def Out(k: int) -> Endpoint:
    return Endpoint(Side.OUT, k)


Arc = tuple[Endpoint, Endpoint]


def _arc(x: Endpoint, y: Endpoint) -> Arc:
    x, y = Endpoint(Side(x[0]), x[1]), Endpoint(Side(y[0]), y[1])
    return (x, y) if x <= y else (y, x)


@dataclass(frozen=True)
class Cobordism:
    """A morphism ``source -> target`` of 1Cob: boundary matching plus circle count.

    Arcs are normalized on construction (each pair sorted, pairs sorted) so
    that ``==`` and ``hash`` are equivalence of cobordisms.
    """

    source: SignedObject
    target: SignedObject
    arcs: tuple[Arc, ...]
    circles: int = 0
    _partner: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "source", obj(self.source))
        object.__setattr__(self, "target", obj(self.target))
        arcs = tuple(sorted(_arc(*a) for a in self.arcs))
        object.__setattr__(self, "arcs", arcs)
        if not isinstance(self.circles, int) or self.circles < 0:
            raise CobordismError(f"circle count must be a non-negative int, got {self.circles!r}")
        partner = {}
        for x, y in arcs:
            for e in (x, y):
                if e in partner:
                    raise CobordismError(f"endpoint {e} lies on two arcs")
                if e.index < 0 or e.index >= len(self._side(e.side)):
                    raise CobordismError(f"endpoint {e} out of range")
            if x == y:
                raise CobordismError(f"arc joins {x} to itself")
            if _effective_sign(self, x) != -_effective_sign(self, y):
                raise CobordismError(f"arc {x}-{y} violates orientation: {_rule(x, y)}")
            partner[x] = y
            partner[y] = x
        missing = [e for e in self.endpoints() if e not in partner]
        if missing:
            raise CobordismError(f"endpoints not matched: {', '.join(map(str, missing))}")
        object.__setattr__(self, "_partner", partner)

    def _side(self, side: Side) -> SignedObject:
        return self.source if side == Side.IN else self.target

    def endpoints(self) -> Iterator[Endpoint]:
        for k in range(len(self.source)):
            yield In(k)
        for k in range(len(self.target)):
            yield Out(k)

    def partner(self, e: Endpoint) -> Endpoint:
        return self._partner[e]

    def sign(self, e: Endpoint) -> int:
        return self._side(e.side)[e.index]

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    def without_circles(self) -> Cobordism:
        return self if not self.circles else Cobordism(self.source, self.target, self.arcs, 0)

    def __str__(self):
        arcs = " ".join(f"{x}-{y}" for x, y in self.arcs)
        return f"{self.source or '∅'} -> {self.target or '∅'} [{arcs}] circles={self.circles}"


def _effective_sign(k: Cobordism, e: Endpoint) -> int:
    # outgoing points count with reversed orientation; arcs join opposite effective signs
    s = k.sign(e)
    return s if e.side == Side.IN else -s


def _rule(x: Endpoint, y: Endpoint) -> str:
    if x.side != y.side:
        return "an in-out arc must join points of equal sign"
    return "an arc between two points on the same side must join opposite signs"


# -- constructors ---------------------------------------------------------


class Generator(str, enum.Enum):
    CAP_PM = "CapPM"    # +- -> ∅
    CAP_MP = "CapMP"    # -+ -> ∅
    CUP_MP = "CupMP"    # ∅ -> -+
    CUP_PM = "CupPM"    # ∅ -> +-
    CIRCLE = "Circle"   # ∅ -> ∅


_GENERATORS = {
    Generator.CAP_PM: ("+-", "", [(In(0), In(1))], 0),
    Generator.CAP_MP: ("-+", "", [(In(0), In(1))], 0),
    Generator.CUP_MP: ("", "-+", [(Out(0), Out(1))], 0),
    Generator.CUP_PM: ("", "+-", [(Out(0), Out(1))], 0),
    Generator.CIRCLE: ("", "", [], 1),
}


def generator(kind: Generator | str) -> Cobordism:
    """One of the connected non-identity cobordisms."""
    src, tgt, arcs, circles = _GENERATORS[Generator(kind)]
    return Cobordism(obj(src), obj(tgt), tuple(arcs), circles)


def identity(a) -> Cobordism:
    a = obj(a)
    return Cobordism(a, a, tuple((In(k), Out(k)) for k in range(len(a))))


def empty() -> Cobordism:
    return identity(SignedObject())


def tau(a, b) -> Cobordism:
    """The block symmetry ``a·b -> b·a``."""
    a, b = obj(a), obj(b)
    n, m = len(a), len(b)
    arcs = [(In(k), Out(k + m)) for k in range(n)]
    arcs += [(In(n + k), Out(k)) for k in range(m)]
    return Cobordism(a + b, b + a, tuple(arcs))


def permutation_cobordism(perm: Sequence[int], a) -> Cobordism:
    """Cobordism sending the point at position ``i`` of ``a`` to position ``perm[i]``."""
    a = obj(a)
    perm = tuple(perm)
    k = len(a)
    if len(perm) != k or sorted(perm) != list(range(k)):
        raise CobordismError(f"{perm} is not a permutation of {k} points")
    target = [0] * k
    for i, j in enumerate(perm):
        target[j] = a[i]
    return Cobordism(a, SignedObject(tuple(target)), tuple((In(i), Out(perm[i])) for i in range(k)))


# -- category structure -----------------------------------------------------


def compose(k: Cobordism, l: Cobordism) -> Cobordism:
    """Glue ``k: a -> b`` and ``l: b -> c`` along ``b``; returns ``l ∘ k``."""
    if k.target != l.source:
        raise CompositionError(
            f"cannot compose: target {k.target or '∅'} != source {l.source or '∅'}"
        )
    # Walk from each free endpoint, alternating k and l through the middle.
    # Middle points are Out(j) of k == In(j) of l.
    arcs = []
    seen_mid = set()
    starts = [(True, In(i)) for i in range(len(k.source))]
    starts += [(False, Out(j)) for j in range(len(l.target))]
    done = set()
    for in_k, start in starts:
        if (in_k, start) in done:
            continue
        done.add((in_k, start))
        here, e = in_k, start
        while True:
            f = (k if here else l).partner(e)
            if here and f.side == Side.OUT:
                seen_mid.add(f.index)
                here, e = False, In(f.index)
            elif not here and f.side == Side.IN:
                seen_mid.add(f.index)
                here, e = True, Out(f.index)
            else:
                break
        # stopped on In(a) inside k or on Out(c) inside l
        done.add((here, f))
        arcs.append((start, f))
    circles = k.circles + l.circles
    for j in range(len(k.target)):
        if j in seen_mid:
            continue
        circles += 1
        m = j
        while m not in seen_mid:
            seen_mid.add(m)
            nxt = l.partner(In(m))      # stays in the middle: In(m') of l
            seen_mid.add(nxt.index)
            m = k.partner(Out(nxt.index)).index
    return Cobordism(k.source, l.target, tuple(arcs), circles)


def compose_all(cobs: Iterable[Cobordism]) -> Cobordism:
    """Compose in diagrammatic order: first element applied first."""
    it = iter(cobs)
    out = next(it)
    for c in it:
        out = compose(out, c)
    return out


def tensor(k: Cobordism, l: Cobordism) -> Cobordism:
    """Place ``k`` and ``l`` side by side."""
    n, m = len(k.source), len(k.target)

    def shift(e: Endpoint) -> Endpoint:
        return Endpoint(e.side, e.index + (n if e.side == Side.IN else m))

    arcs = k.arcs + tuple((shift(x), shift(y)) for x, y in l.arcs)
    return Cobordism(k.source + l.source, k.target + l.target, arcs, k.circles + l.circles)


def tensor_all(cobs: Iterable[Cobordism]) -> Cobordism:
    out = empty()
    for c in cobs:
        out = tensor(out, c)
    return out


def equivalent(k: Cobordism, l: Cobordism) -> bool:
    return k == l


def enumerate_homset(a, b, max_circles: int = 0) -> list[Cobordism]:
    """All cobordisms ``a -> b`` with at most ``max_circles`` circles."""
    if max_circles < 0:
        raise ValueError("max_circles must be >= 0")
    return [
        Cobordism(a_, b_, arcs, c)
        for a_, b_, arcs in _matchings(obj(a), obj(b))
        for c in range(max_circles + 1)
    ]


def _matchings(a: SignedObject, b: SignedObject):
    # arcs always pair a positive with a negative effective sign (out points flip sign)
    pos, neg = [], []
    for k, s in enumerate(a):
        (pos if s == PLUS else neg).append(In(k))
    for k, s in enumerate(b):
        (pos if s == MINUS else neg).append(Out(k))
    if len(pos) != len(neg):
        return
    for perm in itertools.permutations(neg):
        yield a, b, tuple(zip(pos, perm))


def iter_objects(max_len: int) -> Iterator[SignedObject]:
    """Every signed object of length at most ``max_len``, shortest first."""
    for n in range(max_len + 1):
        for signs in itertools.product((PLUS, MINUS), repeat=n):
            yield SignedObject(signs)
