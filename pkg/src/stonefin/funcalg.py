"""The algebra C(X, k) of k-valued continuous functions on a finite space.

On a finite space a continuous k-valued function is constant on each
connected component, so C(X, k) is the product of one copy of k per
component.  Every ideal is then determined by its zero set (a set of
components) and all ideals are closed; this is the model used throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .balg import BoolAlg, Ultrafilter, bits, enumerate_ultrafilters
from .topo import FiniteSpace, clopen_points, clopens
from .ufspace import build_uf
from .valfield import ONE, ZERO, AbsValue, Scalar, ValuedField, abs_value


class FunctionError(ValueError):
    pass


class IdealError(ValueError):
    pass


@dataclass(frozen=True)
class BoundedFunction:
    space: FiniteSpace
    field: ValuedField
    values: tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.values) != len(self.space):
            raise FunctionError("need exactly one value per point")
        if any(v.field != self.field for v in self.values):
            raise FunctionError(f"values must lie in {self.field}")
        for block in self.space.component_masks:
            first, *rest = bits(block)
            if any(self.values[i] != self.values[first] for i in rest):
                names = self.space.names(block)
                raise FunctionError(f"function is not constant on the component {names}")

    @classmethod
    def _trusted(cls, space, field, values) -> "BoundedFunction":
        # pointwise sums and products of valid functions stay component-constant
        out = object.__new__(cls)
        object.__setattr__(out, "space", space)
        object.__setattr__(out, "field", field)
        object.__setattr__(out, "values", values)
        return out

    @classmethod
    def from_mapping(cls, space, field, values: Mapping[str, object]) -> "BoundedFunction":
        missing = set(space.points) - set(map(str, values))
        if missing:
            raise FunctionError(f"no value given for points {sorted(missing)}")
        lookup = {str(k): v for k, v in values.items()}
        return cls(space, field, tuple(field(lookup[p]) for p in space.points))

    @classmethod
    def from_values(cls, space, field, values: Sequence) -> "BoundedFunction":
        return cls(space, field, tuple(field(v) for v in values))

    @classmethod
    def constant(cls, space, field, c=1) -> "BoundedFunction":
        c = field(c)
        return cls(space, field, (c,) * len(space))

    @classmethod
    def indicator(cls, space, field, mask: int) -> "BoundedFunction":
        one, zero = field.one(), field.zero()
        return cls(space, field, tuple(one if mask >> i & 1 else zero for i in range(len(space))))

    def _peer(self, other: "BoundedFunction") -> "BoundedFunction":
        if not isinstance(other, BoundedFunction):
            return BoundedFunction.constant(self.space, self.field, other)
        if other.space != self.space or other.field != self.field:
            raise FunctionError("functions live on different spaces or fields")
        return other

    def __add__(self, other):
        other = self._peer(other)
        return BoundedFunction._trusted(self.space, self.field, tuple(a + b for a, b in zip(self.values, other.values)))

    __radd__ = __add__

    def __neg__(self):
        return BoundedFunction._trusted(self.space, self.field, tuple(-a for a in self.values))

    def __sub__(self, other):
        return self + (-self._peer(other))

    def __mul__(self, other):
        other = self._peer(other)
        return BoundedFunction._trusted(self.space, self.field, tuple(a * b for a, b in zip(self.values, other.values)))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def at(self, point: str) -> Scalar:
        return self.values[self.space.index(point)]

    def component_value(self, j: int) -> Scalar:
        return self.values[bits(self.space.component_masks[j])[0]]

    def zero_components(self) -> int:
        out = 0
        for j in range(len(self.space.component_masks)):
            if self.component_value(j).is_zero():
                out |= 1 << j
        return out

    def to_json(self) -> dict:
        return {p: str(v) for p, v in zip(self.space.points, self.values)}


def sup_norm(f: BoundedFunction) -> AbsValue:
    """Maximum of the pointwise magnitudes; the empty supremum is zero."""
    return max((abs_value(v) for v in f.values), default=ZERO)


def sup_over(f: BoundedFunction, mask: int) -> AbsValue:
    return max((abs_value(f.values[i]) for i in bits(mask)), default=ZERO)


def _check_algebra(f: BoundedFunction, uf: Ultrafilter) -> BoolAlg:
    algebra = clopens(f.space)
    if uf.algebra != algebra:
        raise FunctionError("ultrafilter is not over the clopen algebra of the function's space")
    return algebra


def uf_seminorm(f: BoundedFunction, uf: Ultrafilter) -> AbsValue:
    """``inf`` over members U of ``sup_{x in U} |f(x)|``."""
    algebra = _check_algebra(f, uf)
    # a clopen is a union of components, so its sup is the max over them
    comp_sup = [sup_over(f, block) for block in algebra.atoms]
    return min(max((comp_sup[j] for j in bits(a)), default=ZERO) for a in uf.members)


@dataclass(frozen=True)
class IdealDescriptor:
    space: FiniteSpace
    field: ValuedField
    generators: tuple[BoundedFunction, ...]
    # bitmask over component indices where every generator vanishes
    zero_set: int

    @classmethod
    def generated_by(cls, space, field, generators: Iterable[BoundedFunction]) -> "IdealDescriptor":
        gens = tuple(generators)
        zero = (1 << len(space.component_masks)) - 1
        for g in gens:
            if g.space != space or g.field != field:
                raise IdealError("generator lives on a different space or field")
            zero &= g.zero_components()
        return cls(space, field, gens, zero)

    @classmethod
    def of_zero_set(cls, space, field, zero_set: int) -> "IdealDescriptor":
        """The ideal of functions vanishing on the given components."""
        outside = 0
        for j, block in enumerate(space.component_masks):
            if not zero_set >> j & 1:
                outside |= block
        gens = (BoundedFunction.indicator(space, field, outside),)
        return cls.generated_by(space, field, gens)

    @classmethod
    def at_point(cls, space, field, point: str) -> "IdealDescriptor":
        """``m_x``: functions vanishing at ``point``."""
        return cls.of_zero_set(space, field, 1 << space.component_of(space.index(point)))

    def __contains__(self, f: BoundedFunction) -> bool:
        return f.zero_components() & self.zero_set == self.zero_set

    @property
    def zero_points(self) -> int:
        out = 0
        for j in bits(self.zero_set):
            out |= self.space.component_masks[j]
        return out

    @property
    def is_proper(self) -> bool:
        return self.zero_set != 0

    @property
    def is_maximal(self) -> bool:
        return bin(self.zero_set).count("1") == 1

    is_prime = is_maximal

    def same_ideal(self, other: "IdealDescriptor") -> bool:
        return self.space == other.space and self.field == other.field and self.zero_set == other.zero_set


def ideal_from_uf(uf: Ultrafilter, field: ValuedField, space: FiniteSpace) -> IdealDescriptor:
    """``{f : ||f||_F = 0}``."""
    if len(space) == 0:
        raise IdealError("the empty space carries no ultrafilters")
    if uf.algebra != clopens(space):
        raise IdealError("ultrafilter is not over the clopen algebra of this space")
    # component j is outside the zero set iff 1_{C_j} has seminorm zero; by
    # multiplicativity every member vanishes on the remaining components
    gens = []
    for block in space.component_masks:
        ind = BoundedFunction.indicator(space, field, block)
        if uf_seminorm(ind, uf).is_zero:
            gens.append(ind)
    return IdealDescriptor.generated_by(space, field, gens)


def uf_from_ideal(m: IdealDescriptor) -> Ultrafilter:
    """``{U in CO(X) : 1_U not in m}``."""
    if not m.is_prime:
        raise IdealError("ideal is not prime: its zero set is not a single component")
    algebra = clopens(m.space)
    members = frozenset(
        a
        for a in algebra.elements()
        if BoundedFunction.indicator(m.space, m.field, clopen_points(algebra, a)) not in m
    )
    return Ultrafilter(algebra, members, bits(m.zero_set)[0])


def quotient_norm(f: BoundedFunction, m: IdealDescriptor) -> AbsValue:
    """``inf_{g in m} ||f - g||``: attained by letting g agree with f off the zero set."""
    if not m.is_maximal:
        raise IdealError("quotient norm needs a maximal ideal")
    return sup_over(f, m.zero_points)


def residue(f: BoundedFunction, m: IdealDescriptor) -> Scalar:
    """The image of ``f`` in ``C(X, k) / m``, identified with k."""
    if not m.is_maximal:
        raise IdealError("residue needs a maximal ideal")
    return f.component_value(bits(m.zero_set)[0])


def enumerate_max_ideals(space: FiniteSpace, field: ValuedField) -> list[IdealDescriptor]:
    return [IdealDescriptor.of_zero_set(space, field, 1 << j) for j in range(len(space.component_masks))]


def enumerate_ideals(space: FiniteSpace, field: ValuedField) -> list[IdealDescriptor]:
    n = len(space.component_masks)
    return [IdealDescriptor.of_zero_set(space, field, z) for z in range(1 << n)]


def orthogonal_decomposition_check(a: Scalar, g: BoundedFunction, m: IdealDescriptor) -> bool:
    """``||a + g|| == max(|a|, ||g||)`` for a scalar a and g in m."""
    if g not in m:
        raise IdealError("g does not belong to the maximal ideal")
    if not m.is_maximal:
        raise IdealError("orthogonality needs a maximal ideal")
    return sup_norm(g + a) == max(abs_value(a), sup_norm(g))


def algebraic_norm(f: BoundedFunction) -> AbsValue:
    """``max_m ||f + m||`` over maximal ideals."""
    return max((quotient_norm(f, m) for m in enumerate_max_ideals(f.space, f.field)), default=ZERO)


@dataclass(frozen=True)
class BerkovichPoint:
    space: FiniteSpace
    field: ValuedField
    ultrafilter: Ultrafilter

    def __call__(self, f: BoundedFunction) -> AbsValue:
        if f.space != self.space or f.field != self.field:
            raise FunctionError("function does not belong to this algebra")
        return uf_seminorm(f, self.ultrafilter)

    def support(self) -> IdealDescriptor:
        return ideal_from_uf(self.ultrafilter, self.field, self.space)

    def axiom_failures(self, functions: Sequence[BoundedFunction]) -> list[str]:
        """Check unit, multiplicativity, boundedness and ultrametricity on samples."""
        fails = []
        if self(BoundedFunction.constant(self.space, self.field, 1)) != ONE:
            fails.append("|1| != 1")
        for f in functions:
            if self(f) > sup_norm(f):
                fails.append(f"unbounded at {f.to_json()}")
            for g in functions:
                if self(f * g) != self(f) * self(g):
                    fails.append(f"not multiplicative at {f.to_json()}, {g.to_json()}")
                if self(f + g) > max(self(f), self(g)):
                    fails.append(f"not ultrametric at {f.to_json()}, {g.to_json()}")
        return fails


def spectrum(space: FiniteSpace, field: ValuedField) -> list[BerkovichPoint]:
    return [BerkovichPoint(space, field, uf) for uf in enumerate_ultrafilters(clopens(space))]


def spectrum_matches_uf(space: FiniteSpace, field: ValuedField) -> bool:
    """The spectrum maps bijectively onto UF(X), basic opens to basic opens.

    The Berkovich basic open attached to a clopen U is the set of points with
    ``|1_U| = 1``; it must coincide with ``{F : U in F}``.
    """
    points = spectrum(space, field)
    ufx = build_uf(space)
    images = [ufx.index_of(x.ultrafilter) for x in points]
    if sorted(images) != list(range(len(ufx))):
        return False
    algebra = ufx.algebra
    for a in algebra.elements():
        one_a = BoundedFunction.indicator(space, field, clopen_points(algebra, a))
        berk = 0
        for x, j in zip(points, images):
            if x(one_a) == ONE:
                berk |= 1 << j
        if berk != ufx.basis[a]:
            return False
    return True
