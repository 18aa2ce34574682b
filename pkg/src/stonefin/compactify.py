"""Evaluation embeddings, extension to UF(X), separation quotients,
locally constant approximation and ground field extension.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .balg import bits
from .funcalg import BoundedFunction, sup_norm
from .topo import (
    ContinuousMap,
    FiniteSpace,
    TopologyError,
    clopen_points,
    quotient,
    validate_partition,
)
from .ufspace import build_uf
from .valfield import (
    ZERO,
    AbsValue,
    FieldError,
    FiniteField,
    GaussianField,
    RationalField,
    Scalar,
    ValuedField,
    abs_value,
    is_integral,
    uniformizer_power,
)


@dataclass(frozen=True)
class EvaluationEmbedding:
    space: FiniteSpace
    field: ValuedField
    coordinates: tuple[int, ...]  # clopen point masks, one per coordinate
    images: tuple[tuple[Scalar, ...], ...]  # image of each point

    @property
    def injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def image_space(self) -> FiniteSpace:
        # a finite subset of the Hausdorff space (k°)^CO(X) is discrete
        distinct = sorted(set(self.images), key=self.images.index)
        names = ["(" + ",".join(str(v) for v in img) + ")" for img in distinct]
        return FiniteSpace.discrete(names)

    def as_map(self) -> ContinuousMap:
        target = self.image_space()
        distinct = sorted(set(self.images), key=self.images.index)
        return ContinuousMap(self.space, target, tuple(distinct.index(img) for img in self.images))


def sc_embed(space: FiniteSpace, field: ValuedField) -> tuple[EvaluationEmbedding, dict]:
    coords = space.clopen_masks
    one, zero = field.one(), field.zero()
    images = tuple(
        tuple(one if u >> i & 1 else zero for u in coords) for i in range(len(space))
    )
    emb = EvaluationEmbedding(space, field, coords, images)
    f = emb.as_map()
    continuous = all(space.is_open(f.preimage(u)) for u in f.target.opens)
    open_onto_image = all(f.target.is_open(f.image(u)) for u in space.opens)
    verdict = {
        "injective": emb.injective,
        "continuous": continuous,
        "open_onto_image": open_onto_image,
        "homeomorphism_onto_image": emb.injective and continuous and open_onto_image,
        "integral_coordinates": all(is_integral(v) for img in images for v in img),
    }
    return emb, verdict


def extend_function(f: BoundedFunction, scale: Scalar | None = None) -> BoundedFunction:
    """Extend ``f`` continuously to UF(X).

    ``a^{-1} f`` takes values in the unit ball, so it is a coordinate of the
    evaluation embedding; the coordinate extends by its value on the minimum
    of each ultrafilter and is then scaled back by ``a``.
    """
    ufx = build_uf(f.space)
    target = ufx.space
    if len(f.space) == 0:
        return BoundedFunction(target, f.field, ())
    if scale is None:
        scale = uniformizer_power(f.field, sup_norm(f))
    if scale.is_zero() or abs_value(scale) < sup_norm(f):
        raise FieldError("scale must be invertible with |a| >= ||f||")
    unit = BoundedFunction(f.space, f.field, tuple(v / scale for v in f.values))
    values = []
    for uf in ufx.ultrafilters:
        low = clopen_points(uf.algebra, uf.minimum)
        values.append(scale * unit.values[bits(low)[0]])
    return BoundedFunction(target, f.field, tuple(values))


@dataclass(frozen=True)
class SubalgebraDescriptor:
    space: FiniteSpace
    field: ValuedField
    generators: tuple[BoundedFunction, ...]

    @classmethod
    def all_indicators(cls, space, field) -> "SubalgebraDescriptor":
        return cls(space, field, tuple(BoundedFunction.indicator(space, field, u) for u in space.clopen_masks))

    @classmethod
    def of_partition(cls, space, field, blocks: Sequence[int]) -> "SubalgebraDescriptor":
        return cls(space, field, tuple(BoundedFunction.indicator(space, field, b) for b in blocks))

    def signature(self, i: int) -> tuple:
        return tuple(g.values[i] for g in self.generators)


def separation_partition(space: FiniteSpace, algebra: SubalgebraDescriptor) -> list[int]:
    """Blocks of points that no generator tells apart (the constants are implicit)."""
    blocks: dict[tuple, int] = {}
    for i in range(len(space)):
        sig = algebra.signature(i)
        blocks[sig] = blocks.get(sig, 0) | (1 << i)
    return list(blocks.values())


def separation_quotient(space: FiniteSpace, algebra: SubalgebraDescriptor):
    blocks = separation_partition(space, algebra)
    q, proj = quotient(space, [space.names(b) for b in blocks])
    return [space.names(b) for b in blocks], q, proj


def _closure_step(algebra: SubalgebraDescriptor) -> SubalgebraDescriptor:
    gens = list(algebra.generators)
    extra = [g + h for g in gens for h in gens] + [g * h for g in gens for h in gens]
    return SubalgebraDescriptor(algebra.space, algebra.field, tuple(gens + extra))


def gelfand_roundtrip(space: FiniteSpace, blocks: Sequence[Iterable[str]], field: ValuedField | None = None) -> bool:
    """Partition -> block-indicator subalgebra -> separation partition."""
    if not space.is_discrete():
        raise TopologyError("the finite correspondence is stated for discrete spaces")
    field = field or RationalField()
    masks = validate_partition(space, blocks)
    forward = SubalgebraDescriptor.of_partition(space, field, masks)
    back = separation_partition(space, forward)
    if sorted(back) != sorted(masks):
        return False
    # sums and products of generators separate exactly the same pairs
    if sorted(separation_partition(space, _closure_step(forward))) != sorted(back):
        return False
    again = SubalgebraDescriptor.of_partition(space, field, back)
    return sorted(separation_partition(space, again)) == sorted(back)


def locally_constant_approx(f: BoundedFunction, eps: AbsValue) -> tuple[BoundedFunction, list[int]]:
    """Greedy clopen blocks in point order with pairwise distance below ``eps``.

    Returns the approximation and its blocks as point masks.
    """
    if eps.is_zero:
        raise FieldError("epsilon must be positive")
    n = len(f.space)
    assigned = 0
    blocks = []
    values = [None] * n
    for i in range(n):
        if assigned >> i & 1:
            continue
        rep = f.values[i]
        block = 0
        for j in range(i, n):
            if not assigned >> j & 1 and abs_value(f.values[j] - rep) < eps:
                block |= 1 << j
                values[j] = rep
        assigned |= block
        blocks.append(block)
    return BoundedFunction(f.space, f.field, tuple(values)), blocks


def idempotent_density_check(f: BoundedFunction) -> list[tuple[Scalar, list[str]]]:
    """Exact decomposition ``f = sum a_U 1_U`` over the clopen level sets of f."""
    levels: dict[Scalar, int] = {}
    for j, block in enumerate(f.space.component_masks):
        v = f.component_value(j)
        if not v.is_zero():
            levels[v] = levels.get(v, 0) | block
    witness = [(a, f.space.names(u)) for a, u in levels.items()]
    total = BoundedFunction.constant(f.space, f.field, 0)
    for a, u in levels.items():
        total = total + BoundedFunction.indicator(f.space, f.field, u) * a
    if total != f:
        raise AssertionError("idempotent decomposition does not sum to f")
    return witness


@dataclass(frozen=True)
class Extension:
    """A finite extension K/k with an orthogonal k-basis of K."""

    name: str
    big: ValuedField
    small: ValuedField
    basis: tuple[Scalar, ...]

    def embed(self, x: Scalar) -> Scalar:
        if x.field != self.small:
            raise FieldError(f"{x} is not in {self.small}")
        if isinstance(self.big, FiniteField):
            return self.big(x.value[0])
        return self.big(x.value)

    def coordinates(self, c: Scalar) -> tuple[Scalar, ...]:
        """Coefficients of ``c`` in ``basis``."""
        if c.field != self.big:
            raise FieldError(f"{c} is not in {self.big}")
        return tuple(self.small(v) for v in c.value)


def catalogue(name: str) -> Extension:
    key = name.replace(" ", "").upper()
    if key in ("F4/F2",):
        big = FiniteField(4)
        return Extension("F4/F2", big, FiniteField(2), (big.one(), big.generator()))
    if key in ("Q(I)/Q", "QI/Q"):
        big = GaussianField()
        return Extension("Q(i)/Q", big, RationalField(), (big.one(), big((0, 1))))
    raise FieldError(f"extension {name!r} is not in the catalogue (F4/F2, Q(i)/Q)")


@dataclass(frozen=True)
class TensorElement:
    extension: Extension
    terms: tuple[tuple[Scalar, BoundedFunction], ...]

    def __post_init__(self):
        for c, g in self.terms:
            if c.field != self.extension.big:
                raise FieldError(f"coefficient {c} is not in {self.extension.big}")
            if g.field != self.extension.small:
                raise FieldError(f"function values must lie in {self.extension.small}")
        if len({g.space for _, g in self.terms}) > 1:
            raise FieldError("all functions must live on one space")

    def canonical(self, space: FiniteSpace) -> list[BoundedFunction]:
        """The unique functions g''_i with ``t = sum b_i (x) g''_i``."""
        ext = self.extension
        out = [BoundedFunction.constant(space, ext.small, 0) for _ in ext.basis]
        for c, g in self.terms:
            for i, coord in enumerate(ext.coordinates(c)):
                out[i] = out[i] + g * coord
        return out


def _space(t: TensorElement, space: FiniteSpace | None) -> FiniteSpace:
    if t.terms:
        return t.terms[0][1].space
    if space is None:
        raise FieldError("empty tensor needs an explicit space")
    return space


def tensor_norm(t: TensorElement, space: FiniteSpace | None = None) -> AbsValue:
    """``max_i |b_i| ||g''_i||`` in the orthogonal basis."""
    parts = t.canonical(_space(t, space))
    return max((abs_value(b) * sup_norm(g) for b, g in zip(t.extension.basis, parts)), default=ZERO)


def presentation_bound(t: TensorElement) -> AbsValue:
    """``max |a_j| ||g_j||`` for the presentation as given."""
    return max((abs_value(c) * sup_norm(g) for c, g in t.terms), default=ZERO)


def apply_extension(t: TensorElement, space: FiniteSpace | None = None) -> BoundedFunction:
    space = _space(t, space)
    ext = t.extension
    out = BoundedFunction.constant(space, ext.big, 0)
    for c, g in t.terms:
        lifted = BoundedFunction(space, ext.big, tuple(ext.embed(v) for v in g.values))
        out = out + lifted * c
    return out


def isometry_check(t: TensorElement, space: FiniteSpace | None = None) -> bool:
    return sup_norm(apply_extension(t, space)) == tensor_norm(t, space)

