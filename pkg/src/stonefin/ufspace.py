"""The ultrafilter space UF(X) of the clopen algebra of a finite space."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .balg import BoolAlg, Ultrafilter, bits, enumerate_ultrafilters, is_ultrafilter
from .topo import (
    ContinuousMap,
    FiniteSpace,
    TopologyError,
    check_continuous,
    clopen_element,
    clopen_points,
    clopens,
    is_homeomorphism,
)


class UniversalityError(ValueError):
    pass


@dataclass(frozen=True)
class UFSpace:
    base: FiniteSpace
    algebra: BoolAlg
    ultrafilters: tuple[Ultrafilter, ...]
    # clopen element -> bitmask over ultrafilter positions containing it
    basis: dict[int, int] = field(compare=False, hash=False)

    def __len__(self):
        return len(self.ultrafilters)

    def point_name(self, i: int) -> str:
        atom_points = self.algebra.atoms[self.ultrafilters[i].atom]
        return "uf(" + ",".join(self.base.names(atom_points)) + ")"

    @cached_property
    def space(self) -> FiniteSpace:
        """The realised topology: all unions of basic opens."""
        opens = {0}
        basics = set(self.basis.values())
        for b in basics:
            opens |= {o | b for o in opens}
        names = tuple(self.point_name(i) for i in range(len(self)))
        return FiniteSpace(names, frozenset(opens))

    def index_of(self, f: Ultrafilter) -> int:
        for i, g in enumerate(self.ultrafilters):
            if g.members == f.members:
                return i
        raise UniversalityError("ultrafilter does not belong to this space")

    def principal_map(self) -> ContinuousMap:
        return ContinuousMap(
            self.base,
            self.space,
            tuple(self.index_of(principal(self.base, p)) for p in self.base.points),
        )


def build_uf(space: FiniteSpace) -> UFSpace:
    algebra = clopens(space)
    ufs = tuple(enumerate_ultrafilters(algebra))
    basis = {}
    for a in algebra.elements():
        m = 0
        for i, f in enumerate(ufs):
            if a in f:
                m |= 1 << i
        basis[a] = m
    return UFSpace(space, algebra, ufs, basis)


def principal(space: FiniteSpace, point: str) -> Ultrafilter:
    """All clopens containing ``point``."""
    i = space.index(point)
    algebra = clopens(space)
    members = frozenset(a for a in algebra.elements() if clopen_points(algebra, a) >> i & 1)
    return Ultrafilter(algebra, members, space.component_of(i))


def cluster_points(space: FiniteSpace, f: Ultrafilter) -> list[str]:
    """The intersection of all clopens in ``f``."""
    inter = space.full
    for a in f.members:
        inter &= clopen_points(f.algebra, a)
    return space.names(inter)


def cluster_points_by_neighbourhoods(space: FiniteSpace, f: Ultrafilter) -> list[str]:
    """Points all of whose clopen neighbourhoods belong to ``f``."""
    alg = f.algebra
    out = []
    for i, p in enumerate(space.points):
        if all(a in f for a in alg.elements() if clopen_points(alg, a) >> i & 1):
            out.append(p)
    return out


def pushforward(f: ContinuousMap, uf: Ultrafilter) -> Ultrafilter:
    if not check_continuous(f):
        raise UniversalityError("map is not continuous")
    src_alg = uf.algebra
    tgt_alg = clopens(f.target)
    members = set()
    for a in tgt_alg.elements():
        pre = f.preimage(clopen_points(tgt_alg, a))
        if clopen_element(src_alg, pre) in uf:
            members.add(a)
    members = frozenset(members)
    low = tgt_alg.wedge(members)
    return Ultrafilter(tgt_alg, members, bits(low)[0])


def uf_map(f: ContinuousMap) -> ContinuousMap:
    """The unique continuous extension UF(X) -> Y of ``f`` through ``principal``."""
    target = f.target
    if not target.is_discrete():
        raise UniversalityError(
            "target is not totally disconnected compact Hausdorff (a finite such space is discrete)"
        )
    ufx = build_uf(f.source)
    assignment = []
    for uf in ufx.ultrafilters:
        pts = cluster_points(target, pushforward(f, uf))
        if len(pts) != 1:
            raise UniversalityError(f"pushforward has {len(pts)} cluster points, expected exactly one")
        assignment.append(target.index(pts[0]))
    return ContinuousMap(ufx.space, target, tuple(assignment))


def clopens_form_basis(space: FiniteSpace) -> bool:
    """Every open set is a union of clopen sets."""
    clop = space.clopen_masks
    for u in space.opens:
        cover = 0
        for c in clop:
            if c & ~u == 0:
                cover |= c
        if cover != u:
            return False
    return True


def criterion_report(space: FiniteSpace) -> dict:
    ufx = build_uf(space)
    report = {"basis": clopens_form_basis(space)}
    if not report["basis"]:
        report["verdict"] = "criterion inapplicable: clopen sets do not form a basis"
        return report
    counts = [len(cluster_points(space, f)) for f in ufx.ultrafilters]
    compact = all(c >= 1 for c in counts)
    hausdorff = all(c <= 1 for c in counts)
    pmap = ufx.principal_map()
    surjective = set(pmap.assignment) == set(range(len(ufx)))
    injective = len(set(pmap.assignment)) == len(space)
    report.update(
        {
            "cluster_counts": {ufx.point_name(i): c for i, c in enumerate(counts)},
            "compact": compact,
            "hausdorff": hausdorff,
            "td_compact_hausdorff": compact and hausdorff,
            "principal_surjective": surjective,
            "principal_injective": injective,
            "principal_homeomorphism": is_homeomorphism(pmap),
        }
    )
    report["verdict"] = (
        "totally disconnected compact Hausdorff" if compact and hausdorff else "not Hausdorff"
    )
    return report


def principal_is_dense(space: FiniteSpace) -> bool:
    ufx = build_uf(space)
    image = 0
    for j in ufx.principal_map().assignment:
        image |= 1 << j
    return all(m == 0 or m & image for m in ufx.basis.values())


def check_idempotent(space: FiniteSpace) -> bool:
    """UF(UF(X)) is homeomorphic to UF(X) through the principal map."""
    ufx = build_uf(space)
    inner = ufx.space
    try:
        return is_homeomorphism(build_uf(inner).principal_map())
    except TopologyError:
        return False


def uf_to_json(ufx: UFSpace) -> dict:
    alg = ufx.algebra
    return {
        "points": [ufx.point_name(i) for i in range(len(ufx))],
        "ultrafilters": [
            {
                "name": ufx.point_name(i),
                "members": sorted(
                    (ufx.base.names(clopen_points(alg, a)) for a in f.members),
                    key=lambda s: (len(s), s),
                ),
                "cluster_points": cluster_points(ufx.base, f),
                "is_ultrafilter": is_ultrafilter(f),
            }
            for i, f in enumerate(ufx.ultrafilters)
        ],
        "basis": [
            {
                "clopen": ufx.base.names(clopen_points(alg, a)),
                "ultrafilters": [ufx.point_name(i) for i in bits(m)],
            }
            for a, m in sorted(ufx.basis.items())
        ],
        "criterion": criterion_report(ufx.base),
    }
