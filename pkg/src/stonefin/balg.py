"""Finite Boolean algebras, their F_2-algebra structure, and filters.

A finite Boolean algebra is the powerset of its atoms.  Elements are int
bitmasks over the atom list; bit ``i`` set means atom ``i`` lies below the
element.  Filters are stored in canonical form as the full set of member
masks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Hashable, Iterable, Iterator


class AlgebraError(ValueError):
    pass


@lru_cache(maxsize=1 << 16)
def bits(mask: int) -> tuple[int, ...]:
    """Positions of the set bits of ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class BoolAlg:
    atoms: tuple[Hashable, ...]

    @classmethod
    def powerset(cls, n: int) -> "BoolAlg":
        return cls(tuple(range(n)))

    @property
    def size(self) -> int:
        return 1 << len(self.atoms)

    @property
    def top(self) -> int:
        return self.size - 1

    @property
    def bottom(self) -> int:
        return 0

    def elements(self) -> range:
        return range(self.size)

    def check(self, a: int) -> int:
        if not 0 <= a < self.size:
            raise AlgebraError(f"{a} is not an element of an algebra with {len(self.atoms)} atoms")
        return a

    def join(self, a: int, b: int) -> int:
        return a | b

    def meet(self, a: int, b: int) -> int:
        return a & b

    def neg(self, a: int) -> int:
        return self.top & ~a

    def leq(self, a: int, b: int) -> bool:
        return a & ~b == 0

    def f2_add(self, a: int, b: int) -> int:
        return self.meet(self.join(a, b), self.neg(self.meet(a, b)))

    def f2_mul(self, a: int, b: int) -> int:
        return self.meet(a, b)

    def wedge(self, items: Iterable[int]) -> int:
        """Meet of a family; the empty wedge is the top element."""
        out = self.top
        for a in items:
            out &= a
        return out

    def upset(self, a: int) -> frozenset[int]:
        return frozenset(a | s for s in submasks(self.neg(a)))

    def atom(self, i: int) -> int:
        return 1 << i

    def element(self, mask: int) -> "Element":
        return Element(self, self.check(mask))

    def label(self, a: int) -> tuple:
        return tuple(self.atoms[i] for i in bits(a))


@dataclass(frozen=True)
class Element:
    """An element bound to its algebra, so that mixing algebras is caught."""

    algebra: BoolAlg
    mask: int

    def _peer(self, other: "Element") -> int:
        if not isinstance(other, Element) or other.algebra != self.algebra:
            raise AlgebraError("operands belong to different Boolean algebras")
        return other.mask

    def __or__(self, other):
        return Element(self.algebra, self.mask | self._peer(other))

    def __and__(self, other):
        return Element(self.algebra, self.mask & self._peer(other))

    def __invert__(self):
        return Element(self.algebra, self.algebra.neg(self.mask))

    def __add__(self, other):
        return f2_add(self, other)

    def __mul__(self, other):
        return f2_mul(self, other)


def f2_add(a: Element, b: Element) -> Element:
    """Symmetric difference ``(a or b) and not (a and b)``."""
    b_mask = a._peer(b)
    return Element(a.algebra, a.algebra.f2_add(a.mask, b_mask))


def f2_mul(a: Element, b: Element) -> Element:
    b_mask = a._peer(b)
    return Element(a.algebra, a.algebra.f2_mul(a.mask, b_mask))


def is_filter(algebra: BoolAlg, members: Iterable[int]) -> bool:
    """Check the filter axioms directly on an explicit member set."""
    members = frozenset(members)
    if algebra.top not in members:
        return False
    for a in members:
        if any(a & b not in members for b in members):
            return False
        if any(a | b not in members for b in algebra.elements()):
            return False
    return True


@dataclass(frozen=True)
class Filter:
    algebra: BoolAlg
    members: frozenset[int]

    @classmethod
    def from_members(cls, algebra: BoolAlg, members: Iterable[int]) -> "Filter":
        members = frozenset(algebra.check(a) for a in members)
        if not is_filter(algebra, members):
            raise AlgebraError("member set violates the filter axioms")
        return cls(algebra, members)

    @property
    def minimum(self) -> int:
        return self.algebra.wedge(self.members)

    @property
    def is_proper(self) -> bool:
        return self.algebra.bottom not in self.members

    def __contains__(self, a: int) -> bool:
        return a in self.members

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class Ultrafilter(Filter):
    atom: int = -1

    def __post_init__(self):
        if not 0 <= self.atom < len(self.algebra.atoms):
            raise AlgebraError(f"atom index {self.atom} out of range")

    @classmethod
    def of_atom(cls, algebra: BoolAlg, i: int) -> "Ultrafilter":
        return cls(algebra, algebra.upset(algebra.atom(i)), i)


def fil_generate(algebra: BoolAlg, generators: Iterable[int]) -> Filter:
    """The filter ``{(a_1 and ... and a_n) or b : a_i in S, b in A}``."""
    gens = {algebra.check(a) for a in generators}
    wedges = {algebra.top}
    frontier = set(wedges)
    while frontier:
        new = {w & a for w in frontier for a in gens} - wedges
        wedges |= new
        frontier = new
    members = frozenset(w | b for w in wedges for b in algebra.elements())
    return Filter(algebra, members)


def is_ultrafilter(f: Filter) -> bool:
    alg = f.algebra
    m = f.members
    if alg.bottom in m:
        return False
    for a in m:
        if any(a & b not in m for b in m):
            return False
        if any(a | b not in m for b in alg.elements()):
            return False
    return all(a in m or alg.neg(a) in m for a in alg.elements())


def extend_to_ultrafilter(f: Filter) -> Ultrafilter:
    """Deterministic extension: the lowest-indexed atom below the minimum."""
    low = f.minimum
    if low == f.algebra.bottom:
        raise AlgebraError("no ultrafilter extends the improper filter")
    return Ultrafilter.of_atom(f.algebra, bits(low)[0])


def enumerate_ultrafilters(algebra: BoolAlg) -> list[Ultrafilter]:
    return [Ultrafilter.of_atom(algebra, i) for i in range(len(algebra.atoms))]


def as_ultrafilter(f: Filter) -> Ultrafilter:
    if isinstance(f, Ultrafilter):
        return f
    if not is_ultrafilter(f):
        raise AlgebraError("filter is not an ultrafilter")
    low = f.minimum
    return Ultrafilter(f.algebra, f.members, bits(low)[0])

