"""Named verification suites over generated instances.

Each suite recomputes the library's answers against an independent route
(brute-force enumeration, direct evaluation) and records one keyed check per
property.  Instance generation is driven by an explicit seed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Iterator, Optional

from . import balg, compactify, funcalg, topo, ufspace
from .balg import BoolAlg, bits
from .funcalg import BoundedFunction, IdealDescriptor, sup_norm
from .topo import ContinuousMap, FiniteSpace
from .valfield import ONE, AbsValue, FiniteField, RationalField, ValuedField, abs_value

SUITES = (
    "boolean-laws",
    "filters",
    "uf-universality",
    "ideal-bijection",
    "seminorm-identities",
    "orthogonality",
    "gelfand",
    "approximation",
    "tensor-isometry",
)

DEFAULTS = {
    "boolean-laws": {"max_points": 4},
    "filters": {"max_points": 4, "max_generated_atoms": 3},
    "uf-universality": {"max_points": 6, "samples": 60, "map_source_points": 4, "map_target_points": 3},
    "ideal-bijection": {"max_points": 8, "samples": 40},
    "seminorm-identities": {"max_points": 6, "samples": 1000, "oracle_points": 4},
    "orthogonality": {"max_points": 5, "samples": 1000},
    "gelfand": {"max_points": 6},
    "approximation": {"max_points": 6, "samples": 1000},
    "tensor-isometry": {"max_points": 5, "samples": 1000},
}


class SuiteError(ValueError):
    pass


@dataclass
class VerificationReport:
    suite: str
    seed: int
    config: dict
    instances: list[str] = field(default_factory=list)
    checks: dict[str, dict] = field(default_factory=dict)
    seconds: float = 0.0

    def record(self, key: str, ok: bool, detail: Optional[Callable[[], object]] = None):
        entry = self.checks.setdefault(key, {"status": "pass", "cases": 0, "failures": []})
        entry["cases"] += 1
        if not ok:
            entry["status"] = "fail"
            if len(entry["failures"]) < 10:
                entry["failures"].append(detail() if detail else None)

    @property
    def failed(self) -> list[str]:
        return sorted(k for k, v in self.checks.items() if v["status"] == "fail")

    @property
    def ok(self) -> bool:
        return not self.failed

    def merge(self, other: "VerificationReport"):
        self.instances.extend(f"{other.suite}: {d}" for d in other.instances)
        for key, entry in other.checks.items():
            self.checks[f"{other.suite}/{key}"] = entry

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "config": self.config,
            "ok": self.ok,
            "failed": self.failed,
            "instances": self.instances,
            "checks": dict(sorted(self.checks.items())),
            "seconds": round(self.seconds, 3),
        }


# ---------------------------------------------------------------- generators


def spaces_up_to(max_points: int, rng: random.Random, samples: int, exhaustive_up_to: int = 4) -> Iterator[FiniteSpace]:
    """All topologies on up to ``exhaustive_up_to`` points, then random samples."""
    for n in range(0, min(max_points, exhaustive_up_to) + 1):
        yield from topo.enumerate_topologies(n)
    for n in range(exhaustive_up_to + 1, max_points + 1):
        yield FiniteSpace.discrete([str(i) for i in range(n)])
        yield FiniteSpace.indiscrete([str(i) for i in range(n)])
        for _ in range(samples):
            yield topo.random_topology(n, rng)


def set_partitions(items: list) -> Iterator[list[list]]:
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[head]] + part
        for i in range(len(part)):
            yield part[:i] + [[head] + part[i]] + part[i + 1:]


def random_scalar(fld: ValuedField, rng: random.Random):
    if isinstance(fld, FiniteField):
        return fld(tuple(rng.randrange(fld.p) for _ in range(fld.degree)))
    if isinstance(fld, RationalField):
        if rng.random() < 0.15:
            return fld(0)
        p = fld.p or rng.choice((2, 3, 5))
        num = rng.randint(-30, 30) or 1
        den = rng.randint(1, 30)
        e = rng.randint(-3, 3)
        value = Fraction(num, den) * Fraction(p) ** e
        return fld(value)
    return fld((Fraction(rng.randint(-5, 5), rng.randint(1, 5)), Fraction(rng.randint(-5, 5), rng.randint(1, 5))))


def random_function(space: FiniteSpace, fld: ValuedField, rng: random.Random) -> BoundedFunction:
    comp_values = [random_scalar(fld, rng) for _ in space.component_masks]
    values = [None] * len(space)
    for j, block in enumerate(space.component_masks):
        for i in bits(block):
            values[i] = comp_values[j]
    return BoundedFunction(space, fld, tuple(values))


def describe(space: FiniteSpace) -> str:
    return f"{len(space)} points, opens {[space.names(m) for m in space.sorted_opens()]}"


STANDARD_FIELDS = (FiniteField(2), RationalField(2), RationalField(3))


# ---------------------------------------------------------------- oracles


def components_by_specialisation(space: FiniteSpace) -> list[int]:
    """Connected components from the specialisation preorder (union-find)."""
    n = len(space)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(n):
            # i lies in the closure of j: every open containing i contains j
            if all(u >> j & 1 for u in space.opens if u >> i & 1):
                parent[find(i)] = find(j)
    blocks: dict[int, int] = {}
    for i in range(n):
        blocks[find(i)] = blocks.get(find(i), 0) | (1 << i)
    return sorted(blocks.values())


def brute_filters(n_atoms: int) -> list[frozenset[int]]:
    """Every filter of the powerset algebra on ``n_atoms`` atoms, by exhaustion."""
    size = 1 << n_atoms
    top = size - 1
    out = []
    for sel in range(1 << size):
        if not sel >> top & 1:
            continue
        members = [a for a in range(size) if sel >> a & 1]
        ok = all(sel >> (a | (1 << i)) & 1 for a in members for i in range(n_atoms))
        ok = ok and all(sel >> (a & b) & 1 for a in members for b in members)
        if ok:
            out.append(frozenset(members))
    return out


def brute_quotient_norm(f: BoundedFunction, zero_set: int, rng: random.Random) -> AbsValue:
    """``min ||f - g||`` over g vanishing on ``zero_set`` with values from a finite grid."""
    space = f.space
    comps = space.component_masks
    free = [j for j in range(len(comps)) if not zero_set >> j & 1]
    grids = []
    for j in free:
        fv = f.component_value(j)
        grids.append([f.field(0), fv, random_scalar(f.field, rng)])
    best = None
    for choice in product(*grids):
        comp_vals = [f.field(0)] * len(comps)
        for j, v in zip(free, choice):
            comp_vals[j] = v
        values = [None] * len(space)
        for j, block in enumerate(comps):
            for i in bits(block):
                values[i] = comp_vals[j]
        g = BoundedFunction(space, f.field, tuple(values))
        d = sup_norm(f - g)
        best = d if best is None else min(best, d)
    return best


# ---------------------------------------------------------------- suites


def suite_boolean_laws(rep: VerificationReport, cfg: dict, rng: random.Random):
    for n in range(cfg["max_points"] + 1):
        alg = BoolAlg.powerset(n)
        rep.instances.append(f"powerset algebra on {n} atoms")
        els = list(alg.elements())
        top, bot = alg.top, alg.bottom
        for a in els:
            rep.record("identities", alg.join(a, bot) == a and alg.meet(a, top) == a)
            rep.record("complements", alg.join(a, alg.neg(a)) == top and alg.meet(a, alg.neg(a)) == bot)
            rep.record("f2-negation", alg.neg(a) == alg.f2_add(top, a))
            rep.record("f2-characteristic-two", alg.f2_add(a, a) == bot)
            for b in els:
                rep.record("commutativity", alg.join(a, b) == alg.join(b, a) and alg.meet(a, b) == alg.meet(b, a))
                ab = alg.f2_mul(a, b)
                rep.record(
                    "f2-join-roundtrip",
                    alg.join(a, b) == alg.f2_add(alg.f2_add(a, b), ab),
                    lambda: {"atoms": n, "a": a, "b": b},
                )
                for c in els:
                    rep.record(
                        "associativity",
                        alg.join(alg.join(a, b), c) == alg.join(a, alg.join(b, c))
                        and alg.meet(alg.meet(a, b), c) == alg.meet(a, alg.meet(b, c)),
                    )
                    rep.record(
                        "distributivity",
                        alg.meet(a, alg.join(b, c)) == alg.join(alg.meet(a, b), alg.meet(a, c))
                        and alg.join(a, alg.meet(b, c)) == alg.meet(alg.join(a, b), alg.join(a, c)),
                    )


def check_fil_generate(rep: VerificationReport, max_atoms: int):
    for n in range(max_atoms + 1):
        alg = BoolAlg.powerset(n)
        filters = brute_filters(n)
        rep.instances.append(f"all generator sets in the powerset algebra on {n} atoms")
        for sel in range(1 << alg.size):
            s = [a for a in alg.elements() if sel >> a & 1]
            got = balg.fil_generate(alg, s)
            smallest = frozenset.intersection(*[f for f in filters if set(s) <= f])
            rep.record("fil-generate-is-smallest-filter", got.members == smallest, lambda: {"atoms": n, "S": s})
            wedge_ok = all(alg.wedge(c) != alg.bottom for c in _subfamilies(s))
            rep.record("fil-generate-properness", (got.members != frozenset(alg.elements())) == wedge_ok, lambda: {"atoms": n, "S": s})


def check_ultrafilters(rep: VerificationReport, max_atoms: int):
    for n in range(max_atoms + 1):
        alg = BoolAlg.powerset(n)
        filters = brute_filters(n)
        proper = [f for f in filters if alg.bottom not in f]
        maximal = {f for f in proper if not any(f < g for g in proper)}
        rep.instances.append(f"all {len(filters)} filters of the powerset algebra on {n} atoms")
        for f in filters:
            flt = balg.Filter(alg, f)
            rep.record("ultrafilter-iff-maximal", balg.is_ultrafilter(flt) == (f in maximal), lambda: {"atoms": n, "filter": sorted(f)})
            if alg.bottom not in f:
                ext = balg.extend_to_ultrafilter(flt)
                rep.record("extension-contains-filter", f <= ext.members and ext.members in maximal)
        ufs = balg.enumerate_ultrafilters(alg)
        rep.record("ultrafilter-count-equals-atoms", len(ufs) == n == len(maximal))
        rep.record("ultrafilters-are-atom-upsets", {u.members for u in ufs} == maximal)


def suite_filters(rep: VerificationReport, cfg: dict, rng: random.Random):
    check_fil_generate(rep, min(cfg["max_points"], cfg["max_generated_atoms"]))
    check_ultrafilters(rep, cfg["max_points"])


def _subfamilies(s: list[int]) -> Iterator[list[int]]:
    for sel in range(1 << len(s)):
        yield [s[i] for i in range(len(s)) if sel >> i & 1]


def suite_uf_universality(rep: VerificationReport, cfg: dict, rng: random.Random):
    check_uf_spaces(rep, spaces_up_to(cfg["max_points"], rng, cfg["samples"]), rng)
    check_uf_maps(rep, cfg["map_source_points"], cfg["map_target_points"])


def check_uf_spaces(rep: VerificationReport, spaces: Iterable[FiniteSpace], rng: random.Random):
    for space in spaces:
        rep.instances.append(describe(space))
        d = lambda space=space: describe(space)  # noqa: E731
        ufx = ufspace.build_uf(space)
        comps = topo.components(space)
        rep.record("components-match-connectivity", sorted(space.component_masks) == components_by_specialisation(space), d)
        rep.record("components-are-clopen", all(space.is_clopen(b) for b in space.component_masks), d)
        rep.record("uf-size-equals-components", len(ufx) == len(comps), d)
        rep.record("uf-realised-discrete", ufx.space.is_discrete(), d)
        rep.record("principal-dense", ufspace.principal_is_dense(space), d)
        rep.record(
            "basis-partitions",
            all(ufx.basis[a] | ufx.basis[ufx.algebra.neg(a)] == (1 << len(ufx)) - 1
                and ufx.basis[a] & ufx.basis[ufx.algebra.neg(a)] == 0 for a in ufx.algebra.elements()),
            d,
        )
        principals = {ufspace.principal(space, p).members for p in space.points}
        for uf in ufx.ultrafilters:
            cps = ufspace.cluster_points(space, uf)
            rep.record("cluster-points-two-routes", cps == ufspace.cluster_points_by_neighbourhoods(space, uf), d)
            if cps:
                rep.record("clustered-ultrafilter-is-principal", uf.members in principals, d)
        report = ufspace.criterion_report(space)
        rep.record("criterion-verdict-iff-discrete", bool(report.get("td_compact_hausdorff")) == space.is_discrete(), d)
        if report["basis"]:
            rep.record(
                "criterion-corollary-consistent",
                report["principal_homeomorphism"] == report["td_compact_hausdorff"],
                d,
            )
        rep.record("idempotent", ufspace.check_idempotent(space), d)
        emb, verdict = compactify.sc_embed(space, FiniteField(2))
        rep.record("sc-embed-iff-discrete", verdict["homeomorphism_onto_image"] == space.is_discrete(), d)
        rep.record("sc-embed-integral", verdict["integral_coordinates"], d)
        if len(space) <= 4:
            f = random_function(space, RationalField(2), rng)
            ext = compactify.extend_function(f)
            pmap = ufx.principal_map()
            rep.record("extension-restricts", all(ext.values[pmap.assignment[i]] == f.values[i] for i in range(len(space))), d)
            rep.record("extension-norm", sup_norm(ext) == sup_norm(f), d)
            if not f.is_zero():
                alt = compactify.extend_function(f, f.field(Fraction(1, 2)) * compactify.uniformizer_power(f.field, sup_norm(f)))
                rep.record("extension-scale-independent", alt == ext, d)


def check_uf_maps(rep: VerificationReport, source_points: int, target_points: int):
    rep.instances.append(f"all continuous maps from spaces on <= {source_points} points to discrete spaces on <= {target_points} points")
    for n in range(source_points + 1):
        for x in topo.enumerate_topologies(n):
            ufx = ufspace.build_uf(x)
            pmap = ufx.principal_map()
            for m in range(1, target_points + 1):
                y = FiniteSpace.discrete([chr(ord("a") + i) for i in range(m)])
                # a map to a discrete space is continuous iff constant on components
                for comp_choice in product(range(m), repeat=len(x.component_masks)):
                    assignment = tuple(comp_choice[x.component_of(i)] for i in range(n))
                    f = ContinuousMap(x, y, assignment)
                    g = ufspace.uf_map(f)
                    fact = all(g.assignment[pmap.assignment[i]] == assignment[i] for i in range(n))
                    rep.record("uf-map-factorisation", fact, lambda: {"source": describe(x), "map": assignment})
                    rep.record("uf-map-continuous", topo.check_continuous(g))
                    candidates = 0
                    for cand in product(range(m), repeat=len(ufx)):
                        h = ContinuousMap(ufx.space, y, cand)
                        if topo.check_continuous(h) and all(cand[pmap.assignment[i]] == assignment[i] for i in range(n)):
                            candidates += 1
                    rep.record("uf-map-unique", candidates == 1, lambda: {"source": describe(x), "map": assignment})
                    for uf in ufx.ultrafilters:
                        rep.record("pushforward-is-ultrafilter", balg.is_ultrafilter(ufspace.pushforward(f, uf)))


def suite_ideal_bijection(rep: VerificationReport, cfg: dict, rng: random.Random):
    spaces = [FiniteSpace.discrete([str(i) for i in range(n)]) for n in range(cfg["max_points"] + 1)]
    spaces += [topo.random_topology(n, rng) for n in range(1, cfg["max_points"] + 1) for _ in range(cfg["samples"] // cfg["max_points"] or 1)]
    spaces.append(FiniteSpace.sierpinski())
    for space in spaces:
        rep.instances.append(describe(space))
        d = lambda space=space: describe(space)  # noqa: E731
        ufs = ufspace.build_uf(space).ultrafilters
        for fld in STANDARD_FIELDS:
            for p in space.points:
                m_x = IdealDescriptor.at_point(space, fld, p)
                rep.record("ideal-of-point-gives-principal", funcalg.uf_from_ideal(m_x).members == ufspace.principal(space, p).members, d)
            for uf in ufs:
                m = funcalg.ideal_from_uf(uf, fld, space)
                rep.record("ideal-from-uf-maximal", m.is_maximal, d)
                rep.record("uf-ideal-uf", funcalg.uf_from_ideal(m).members == uf.members, d)
            maxes = funcalg.enumerate_max_ideals(space, fld)
            rep.record("max-ideal-count", len(maxes) == len(space.component_masks), d)
            for m in maxes:
                back = funcalg.ideal_from_uf(funcalg.uf_from_ideal(m), fld, space)
                rep.record("ideal-uf-ideal", back.same_ideal(m), d)
            if len(space.component_masks) <= 4:
                _prime_and_order_checks(rep, space, fld, d)
        if len(space) <= 6:
            _base_field_independence(rep, space)


def _prime_and_order_checks(rep, space, fld, d):
    ideals = funcalg.enumerate_ideals(space, fld)
    # idempotents 1_U for clopen U; C(X, k) is spanned by them, so primality
    # can be decided on idempotent pairs e(1 - e) = 0
    idem = [BoundedFunction.indicator(space, fld, u) for u in space.clopen_masks]
    for ideal in ideals:
        prime = ideal.is_proper and all(
            e in ideal or (BoundedFunction.constant(space, fld, 1) - e) in ideal for e in idem
        )
        rep.record("prime-iff-maximal", prime == ideal.is_maximal, d)
    alg = topo.clopens(space)

    def filt(ideal):
        return {a for a in alg.elements() if BoundedFunction.indicator(space, fld, topo.clopen_points(alg, a)) not in ideal}

    for i in ideals:
        for j in ideals:
            # zero-set containment reverses ideal inclusion
            if i.zero_set & ~j.zero_set == 0 and i.is_proper:
                rep.record("anti-order", filt(i) <= filt(j), d)


def suite_seminorm_identities(rep: VerificationReport, cfg: dict, rng: random.Random):
    n_max = cfg["max_points"]
    spaces = [FiniteSpace.discrete([str(i) for i in range(n)]) for n in range(1, n_max + 1)]
    spaces += [FiniteSpace.sierpinski()] + [topo.random_topology(n, rng) for n in range(2, n_max + 1)]
    for space in spaces:
        for fld in STANDARD_FIELDS + (RationalField(),):
            rep.instances.append(f"{describe(space)} over {fld}")
            d = lambda space=space, fld=fld: f"{describe(space)} over {fld}"  # noqa: E731
            points = funcalg.spectrum(space, fld)
            maxes = funcalg.enumerate_max_ideals(space, fld)
            fs = [random_function(space, fld, rng) for _ in range(cfg["samples"])]
            oracle = len(space) <= cfg["oracle_points"]
            uf_of = [funcalg.uf_from_ideal(m) for m in maxes]
            supports = [x.support() for x in points]
            for idx, f in enumerate(fs):
                g = fs[idx - 1]
                norm = sup_norm(f)
                rep.record("sup-equals-algebraic-norm", norm == funcalg.algebraic_norm(f), lambda: (d(), f.to_json()))
                for m, uf in zip(maxes, uf_of):
                    q = funcalg.quotient_norm(f, m)
                    rep.record("quotient-equals-uf-seminorm", q == funcalg.uf_seminorm(f, uf), lambda: (d(), f.to_json()))
                    if oracle and idx < 250:
                        rep.record("quotient-norm-brute-force", q == brute_quotient_norm(f, m.zero_set, rng), lambda: (d(), f.to_json()))
                fg, f_plus_g = f * g, f + g
                for x, supp in zip(points, supports):
                    fx, gx = x(f), x(g)
                    rep.record("seminorm-multiplicative", x(fg) == fx * gx, lambda: (d(), f.to_json(), g.to_json()))
                    rep.record("seminorm-bounded", fx <= norm, d)
                    rep.record("seminorm-ultrametric", x(f_plus_g) <= max(fx, gx), d)
                    rep.record("point-equals-support-seminorm", fx == funcalg.quotient_norm(f, supp), d)
            for x in points:
                rep.record("berkovich-axioms", not x.axiom_failures(fs[:6]), d)
            rep.record("spectrum-homeomorphic-to-uf", funcalg.spectrum_matches_uf(space, fld), d)


def check_base_field_independence(rep: VerificationReport, spaces: Iterable[FiniteSpace]):
    for space in spaces:
        _base_field_independence(rep, space)


def _base_field_independence(rep, space):
    ufx = ufspace.build_uf(space)
    maps = []
    for fld in STANDARD_FIELDS:
        pts = funcalg.spectrum(space, fld)
        assignment = [ufx.index_of(x.ultrafilter) for x in pts]
        # which clopen indicators each point sees with norm one
        seen = [
            frozenset(a for a in ufx.algebra.elements()
                      if x(BoundedFunction.indicator(space, fld, topo.clopen_points(ufx.algebra, a))) == ONE)
            for x in pts
        ]
        maps.append((assignment, seen))
    rep.record("base-field-independence", all(m == maps[0] for m in maps), lambda: describe(space))


def suite_orthogonality(rep: VerificationReport, cfg: dict, rng: random.Random):
    spaces = [FiniteSpace.discrete([str(i) for i in range(n)]) for n in range(1, cfg["max_points"] + 1)]
    spaces += [topo.random_topology(n, rng) for n in range(2, cfg["max_points"] + 1)]
    if not spaces:
        return
    rep.instances.extend(describe(s) for s in spaces)
    for _ in range(cfg["samples"]):
        space = rng.choice(spaces)
        fld = rng.choice(STANDARD_FIELDS)
        m = rng.choice(funcalg.enumerate_max_ideals(space, fld))
        a = random_scalar(fld, rng)
        g = random_function(space, fld, rng) * BoundedFunction.indicator(space, fld, space.full & ~m.zero_points)
        ok = funcalg.orthogonal_decomposition_check(a, g, m)
        rep.record("orthogonal-decomposition", ok, lambda: {"a": str(a), "g": g.to_json(), "field": str(fld)})
        f = g + a
        r = funcalg.residue(f, m)
        rep.record("norm-splits-at-residue", sup_norm(f) == max(abs_value(r), sup_norm(f - r)))


def suite_gelfand(rep: VerificationReport, cfg: dict, rng: random.Random):
    for n in range(cfg["max_points"] + 1):
        space = FiniteSpace.discrete([str(i + 1) for i in range(n)])
        rep.instances.append(f"all partitions of discrete {n}-point space")
        for part in set_partitions(list(space.points)):
            ok = compactify.gelfand_roundtrip(space, part)
            rep.record("gelfand-roundtrip", ok, lambda: part)
            _, q, proj = compactify.separation_quotient(space, compactify.SubalgebraDescriptor.of_partition(space, RationalField(), [space.mask(b) for b in part]))
            rep.record("quotient-projection-continuous", topo.check_continuous(proj) and len(q) == len(part))
        full = compactify.SubalgebraDescriptor.all_indicators(space, RationalField())
        rep.record("full-algebra-separates-points", len(compactify.separation_partition(space, full)) == n)


def suite_approximation(rep: VerificationReport, cfg: dict, rng: random.Random):
    fld = RationalField(2)
    x4 = FiniteSpace.discrete(["1", "2", "3", "4"])
    f = BoundedFunction.from_values(x4, fld, [1, 3, 4, 12])
    g, blocks = compactify.locally_constant_approx(f, ONE)
    rep.record(
        "worked-example",
        [x4.names(b) for b in blocks] == [["1", "2"], ["3", "4"]]
        and [str(v) for v in g.values] == ["1", "1", "4", "4"]
        and sup_norm(f - g) == AbsValue(-1, 2),
        lambda: {"blocks": [x4.names(b) for b in blocks], "g": g.to_json()},
    )
    spaces = [FiniteSpace.discrete([str(i) for i in range(n)]) for n in range(1, cfg["max_points"] + 1)]
    spaces += [topo.random_topology(n, rng) for n in range(2, cfg["max_points"] + 1)]
    if not spaces:
        return
    rep.instances.extend(describe(s) for s in spaces)
    for _ in range(cfg["samples"]):
        space = rng.choice(spaces)
        fld = rng.choice(STANDARD_FIELDS + (RationalField(5),))
        f = random_function(space, fld, rng)
        eps = AbsValue.power(fld.p, rng.randint(-4, 3)) if isinstance(fld, RationalField) else ONE
        g, blocks = compactify.locally_constant_approx(f, eps)
        detail = lambda: {"f": f.to_json(), "eps": str(eps), "field": str(fld)}  # noqa: E731
        rep.record("approx-within-epsilon", sup_norm(f - g) <= eps, detail)
        rep.record("approx-norm-bound", sup_norm(g) <= sup_norm(f), detail)
        rep.record("approx-blocks-clopen", all(space.is_clopen(b) for b in blocks), detail)
        rep.record("approx-locally-constant", all(len({g.values[i] for i in bits(b)}) == 1 for b in blocks), detail)
        witness = compactify.idempotent_density_check(f)
        total = BoundedFunction.constant(space, fld, 0)
        for a, pts in witness:
            total = total + BoundedFunction.indicator(space, fld, space.mask(pts)) * a
        rep.record("idempotent-density-exact", total == f, detail)


def suite_tensor_isometry(rep: VerificationReport, cfg: dict, rng: random.Random):
    exts = [compactify.catalogue("F4/F2"), compactify.catalogue("Q(i)/Q")]
    spaces = [FiniteSpace.discrete([str(i) for i in range(n)]) for n in range(1, cfg["max_points"] + 1)]
    spaces += [topo.random_topology(n, rng) for n in range(2, cfg["max_points"] + 1)]
    if not spaces:
        return
    rep.instances.extend(describe(s) for s in spaces)
    for _ in range(cfg["samples"]):
        ext = rng.choice(exts)
        space = rng.choice(spaces)
        terms = tuple(
            (random_scalar(ext.big, rng), random_function(space, ext.small, rng))
            for _ in range(rng.randint(0, 4))
        )
        t = compactify.TensorElement(ext, terms)
        image = compactify.apply_extension(t, space)
        detail = lambda: {"extension": ext.name, "terms": [(str(c), g.to_json()) for c, g in terms]}  # noqa: E731
        rep.record("isometry", compactify.isometry_check(t, space), detail)
        rep.record("presentation-bounds-image", compactify.presentation_bound(t) >= sup_norm(image), detail)


RUNNERS = {
    "boolean-laws": suite_boolean_laws,
    "filters": suite_filters,
    "uf-universality": suite_uf_universality,
    "ideal-bijection": suite_ideal_bijection,
    "seminorm-identities": suite_seminorm_identities,
    "orthogonality": suite_orthogonality,
    "gelfand": suite_gelfand,
    "approximation": suite_approximation,
    "tensor-isometry": suite_tensor_isometry,
}


def suite_config(name: str, max_points: Optional[int] = None, samples: Optional[int] = None, **extra) -> dict:
    cfg = dict(DEFAULTS[name])
    if max_points is not None:
        if max_points < 0:
            raise SuiteError("max_points must be non-negative")
        cfg["max_points"] = max_points
        for key in ("map_source_points", "map_target_points", "max_generated_atoms"):
            if key in cfg:
                cfg[key] = min(cfg[key], max_points)
    if samples is not None:
        if samples < 0:
            raise SuiteError("samples must be non-negative")
        cfg["samples"] = samples
    for key, value in extra.items():
        if key not in cfg:
            raise SuiteError(f"suite {name!r} has no option {key!r}")
        cfg[key] = value
    return cfg


def run_suite(name: str, seed: int = 0, max_points: Optional[int] = None, samples: Optional[int] = None, **extra) -> VerificationReport:
    if name == "all":
        if extra:
            raise SuiteError("per-suite options are not accepted with 'all'")
        total = VerificationReport("all", seed, {"max_points": max_points, "samples": samples})
        start = time.perf_counter()
        for sub in SUITES:
            total.merge(run_suite(sub, seed, max_points, samples))
        total.seconds = time.perf_counter() - start
        return total
    if name not in RUNNERS:
        raise SuiteError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
    cfg = suite_config(name, max_points, samples, **extra)
    rep = VerificationReport(name, seed, cfg)
    start = time.perf_counter()
    RUNNERS[name](rep, cfg, random.Random(seed))
    rep.seconds = time.perf_counter() - start
    return rep
