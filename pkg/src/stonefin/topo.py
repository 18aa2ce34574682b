"""Finite topological spaces given by explicit open-set families.

Points are opaque strings.  Internally a subset is an int bitmask over point
positions, so every set operation is deterministic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

from .balg import BoolAlg, bits, submasks


class TopologyError(ValueError):
    pass


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class FiniteSpace:
    points: tuple[str, ...]
    opens: frozenset[int]

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise TopologyError("duplicate point identifiers")
        problem = closure_violation(len(self.points), self.opens)
        if problem:
            raise TopologyError(problem)

    @classmethod
    def from_sets(cls, points: Sequence[str], opens: Iterable[Iterable[str]]) -> "FiniteSpace":
        points = tuple(str(p) for p in points)
        index = {p: i for i, p in enumerate(points)}
        masks = set()
        for u in opens:
            m = 0
            for p in u:
                if str(p) not in index:
                    raise TopologyError(f"open set mentions unknown point {p!r}")
                m |= 1 << index[str(p)]
            masks.add(m)
        return cls(points, frozenset(masks))

    @classmethod
    def discrete(cls, points: Sequence[str]) -> "FiniteSpace":
        points = tuple(str(p) for p in points)
        return cls(points, frozenset(submasks((1 << len(points)) - 1)))

    @classmethod
    def indiscrete(cls, points: Sequence[str]) -> "FiniteSpace":
        points = tuple(str(p) for p in points)
        return cls(points, frozenset({0, (1 << len(points)) - 1}))

    @classmethod
    def sierpinski(cls) -> "FiniteSpace":
        return cls.from_sets(["0", "1"], [[], ["1"], ["0", "1"]])

    @property
    def full(self) -> int:
        return (1 << len(self.points)) - 1

    def __len__(self):
        return len(self.points)

    def index(self, point: str) -> int:
        try:
            return self.points.index(str(point))
        except ValueError:
            raise TopologyError(f"unknown point {point!r}") from None

    def mask(self, pts: Iterable[str]) -> int:
        m = 0
        for p in pts:
            m |= 1 << self.index(p)
        return m

    def names(self, mask: int) -> list[str]:
        return [self.points[i] for i in bits(mask)]

    def sorted_opens(self) -> list[int]:
        return sorted(self.opens, key=lambda m: (popcount(m), m))

    def is_open(self, mask: int) -> bool:
        return mask in self.opens

    def is_clopen(self, mask: int) -> bool:
        return mask in self.opens and (self.full & ~mask) in self.opens

    @cached_property
    def clopen_masks(self) -> tuple[int, ...]:
        return tuple(m for m in self.sorted_opens() if self.is_clopen(m))

    @cached_property
    def component_masks(self) -> tuple[int, ...]:
        # block of x = intersection of all clopens containing x
        blocks = []
        seen = 0
        for i in range(len(self.points)):
            if seen >> i & 1:
                continue
            block = self.full
            for c in self.clopen_masks:
                if c >> i & 1:
                    block &= c
            blocks.append(block)
            seen |= block
        return tuple(blocks)

    def component_of(self, i: int) -> int:
        """Index of the component containing point position ``i``."""
        for j, block in enumerate(self.component_masks):
            if block >> i & 1:
                return j
        raise TopologyError(f"point position {i} out of range")

    def is_discrete(self) -> bool:
        return len(self.opens) == 1 << len(self.points)

    def to_json(self) -> dict:
        return {"points": list(self.points), "opens": [self.names(m) for m in self.sorted_opens()]}

    def __repr__(self):
        return f"FiniteSpace({list(self.points)}, {[self.names(m) for m in self.sorted_opens()]})"


def closure_violation(n: int, opens: frozenset[int]) -> str:
    """Describe the first axiom an open family violates, or return ''."""
    full = (1 << n) - 1
    for m in opens:
        if m & ~full or m < 0:
            return f"open set {m:#b} is not a subset of the points"
    if 0 not in opens:
        return "opens must contain the empty set"
    if full not in opens:
        return "opens must contain the full point set"
    ordered = sorted(opens)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            if a | b not in opens:
                return f"opens not closed under union: {a:#b} | {b:#b}"
            if a & b not in opens:
                return f"opens not closed under intersection: {a:#b} & {b:#b}"
    return ""


def components(space: FiniteSpace) -> list[list[str]]:
    return [space.names(b) for b in space.component_masks]


def clopens(space: FiniteSpace) -> BoolAlg:
    """CO(X) as the powerset algebra on the components.

    Atom ``i`` is the point mask of component ``i``; see :func:`clopen_points`.
    """
    return BoolAlg(space.component_masks)


def clopen_points(algebra: BoolAlg, element: int) -> int:
    """Point mask of an element of a clopen algebra."""
    out = 0
    for i in bits(element):
        out |= algebra.atoms[i]
    return out


def clopen_element(algebra: BoolAlg, points: int) -> int:
    """Inverse of :func:`clopen_points`; ``points`` must be a union of atoms."""
    out = 0
    covered = 0
    for i, atom in enumerate(algebra.atoms):
        if atom & points:
            if atom & ~points:
                raise TopologyError(f"{points:#b} is not clopen")
            out |= 1 << i
            covered |= atom
    if covered != points:
        raise TopologyError(f"{points:#b} is not a union of components")
    return out


@dataclass(frozen=True)
class ContinuousMap:
    source: FiniteSpace
    target: FiniteSpace
    assignment: tuple[int, ...]

    def __post_init__(self):
        if len(self.assignment) != len(self.source):
            raise TopologyError("assignment must cover every source point")
        if any(not 0 <= j < len(self.target) for j in self.assignment):
            raise TopologyError("assignment leaves the target space")

    @classmethod
    def from_mapping(cls, source, target, mapping: Mapping[str, str]) -> "ContinuousMap":
        return cls(source, target, tuple(target.index(mapping[p]) for p in source.points))

    @classmethod
    def identity(cls, space: FiniteSpace) -> "ContinuousMap":
        return cls(space, space, tuple(range(len(space))))

    def preimage(self, mask: int) -> int:
        out = 0
        for i, j in enumerate(self.assignment):
            if mask >> j & 1:
                out |= 1 << i
        return out

    def image(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= 1 << self.assignment[i]
        return out

    def __call__(self, point: str) -> str:
        return self.target.points[self.assignment[self.source.index(point)]]


def check_continuous(f: ContinuousMap) -> bool:
    return all(f.source.is_open(f.preimage(u)) for u in f.target.opens)


def is_homeomorphism(f: ContinuousMap) -> bool:
    if len(set(f.assignment)) != len(f.source) or len(f.source) != len(f.target):
        return False
    return check_continuous(f) and all(f.target.is_open(f.image(u)) for u in f.source.opens)


def validate_partition(space: FiniteSpace, blocks: Sequence[Iterable[str]]) -> list[int]:
    masks = []
    seen = 0
    for block in blocks:
        m = space.mask(block)
        if m == 0:
            raise TopologyError("partition has an empty block")
        if m & seen:
            raise TopologyError("partition blocks overlap")
        seen |= m
        masks.append(m)
    if seen != space.full:
        raise TopologyError("partition does not cover every point")
    return masks


def block_name(space: FiniteSpace, mask: int) -> str:
    names = space.names(mask)
    return names[0] if len(names) == 1 else "{" + ",".join(names) + "}"


def quotient(space: FiniteSpace, blocks: Sequence[Iterable[str]]) -> tuple[FiniteSpace, ContinuousMap]:
    """Quotient by a partition, with the projection map."""
    masks = validate_partition(space, blocks)
    n = len(masks)
    opens = set()
    for sel in range(1 << n):
        pre = 0
        for j in bits(sel):
            pre |= masks[j]
        if space.is_open(pre):
            opens.add(sel)
    q = FiniteSpace(tuple(block_name(space, m) for m in masks), frozenset(opens))
    assignment = [0] * len(space)
    for j, m in enumerate(masks):
        for i in bits(m):
            assignment[i] = j
    return q, ContinuousMap(space, q, tuple(assignment))


def parse_partition(text: str) -> list[list[str]]:
    """``"1,2|3"`` -> ``[["1", "2"], ["3"]]``."""
    return [[p.strip() for p in block.split(",") if p.strip()] for block in text.split("|") if block.strip()]


def topology_from_preorder(n: int, leq: Sequence[Sequence[bool]]) -> frozenset[int]:
    """Alexandrov opens (up-sets) of a preorder on ``range(n)``."""
    ups = []
    for i in range(n):
        m = 0
        for j in range(n):
            if leq[i][j]:
                m |= 1 << j
        ups.append(m)
    opens = {0}
    for sel in range(1 << n):
        m = 0
        for i in bits(sel):
            m |= ups[i]
        opens.add(m)
    return frozenset(opens)


def _transitive_closure(n: int, rel: list[list[bool]]) -> list[list[bool]]:
    r = [row[:] for row in rel]
    for i in range(n):
        r[i][i] = True
    for k in range(n):
        for i in range(n):
            if r[i][k]:
                for j in range(n):
                    if r[k][j]:
                        r[i][j] = True
    return r


def enumerate_topologies(n: int) -> Iterator[FiniteSpace]:
    """Every topology on the points ``"0" .. "n-1"``, each exactly once.

    Finite topologies correspond to preorders (specialisation order), so we
    enumerate preorders and take their up-sets.
    """
    points = tuple(str(i) for i in range(n))
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    seen = set()
    for choice in product((False, True), repeat=len(pairs)):
        rel = [[i == j for j in range(n)] for i in range(n)]
        for (i, j), on in zip(pairs, choice):
            rel[i][j] = on
        if _transitive_closure(n, rel) != rel:
            continue
        opens = topology_from_preorder(n, rel)
        if opens not in seen:
            seen.add(opens)
            yield FiniteSpace(points, opens)


def random_topology(n: int, rng: random.Random, density: float | None = None) -> FiniteSpace:
    """Sample a topology from a random preorder."""
    if density is None:
        density = rng.random() * 0.5
    rel = [[i == j or rng.random() < density for j in range(n)] for i in range(n)]
    rel = _transitive_closure(n, rel)
    return FiniteSpace(tuple(str(i) for i in range(n)), topology_from_preorder(n, rel))


def space_from_json(data: Mapping) -> FiniteSpace:
    try:
        return FiniteSpace.from_sets(data["points"], data["opens"])
    except KeyError as exc:
        raise TopologyError(f"space JSON is missing {exc.args[0]!r}") from None
