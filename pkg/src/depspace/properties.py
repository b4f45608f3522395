"""Exchange properties of dependence spaces, checked exhaustively.

Covers the Steinitz exchange lemma, extension of independent sets, basis
enumeration and dimension, and the exchange-of-independent-sets (EIS)
property.  Empty sets are allowed for every argument of the EIS conditions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from depspace._scan import run_scan
from depspace.axioms import Verdict, check_transitivity_idempotence
from depspace.core import (
    ContractError,
    DependenceError,
    DependenceSpace,
    check_limit,
    submasks_ascending,
)

STEINITZ_LIMIT = 14
BASES_LIMIT = 20
EIS_LIMIT = 10


@dataclass(frozen=True)
class SteinitzCounterexample:
    a: str
    b: str
    base: tuple

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "base-set": list(self.base)}


@dataclass(frozen=True)
class EisCounterexample:
    p: tuple
    q: tuple
    r: tuple

    def to_dict(self) -> dict:
        return {"p": list(self.p), "q": list(self.q), "r": list(self.r)}


@dataclass(frozen=True)
class ScanReport:
    prop: str  # "steinitz" | "eis"
    verdict: Verdict
    witness: SteinitzCounterexample | EisCounterexample | None
    scanned_count: int

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS

    def to_dict(self) -> dict:
        return {
            "property": self.prop,
            "verdict": self.verdict.value,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "scanned-count": self.scanned_count,
        }


@dataclass(frozen=True)
class BasisReport:
    bases: list
    equicardinal: bool
    dimension: int | None
    witness_pair: tuple | None

    def to_dict(self) -> dict:
        return {
            "bases": [list(b) for b in self.bases],
            "equicardinal": self.equicardinal,
            "dimension": self.dimension,
            "witness-pair": None if self.witness_pair is None else [list(b) for b in self.witness_pair],
        }


@dataclass(frozen=True)
class EisTripleVerdict:
    disjoint: bool  # P and Q share no element
    union_independent: bool  # P | Q independent
    r_condition: bool  # R independent and inside span(Q)
    conclusion: bool | None  # P | R independent; None unless all premises hold

    @property
    def premises_hold(self) -> bool:
        return self.disjoint and self.union_independent and self.r_condition

    def to_dict(self) -> dict:
        return {"7": self.disjoint, "8": self.union_independent, "9": self.r_condition, "10": self.conclusion}


# Steinitz exchange


def _steinitz_chunk(ctx, start, stop):
    n, spans = ctx
    count = 0
    for base in range(start, stop):
        sb = spans[base]
        for a in range(n):
            abit = 1 << a
            for b in range(n):
                if a == b:
                    continue
                count += 1
                bbit = 1 << b
                if (
                    not spans[base | bbit] & abit
                    and not sb & bbit
                    and spans[base | abit] & bbit
                ):
                    return count, (a, b, base)
    return count, None


def steinitz_scan(space: DependenceSpace, workers: int = 1) -> ScanReport:
    """Look for ``a, b, A`` with a outside span(A+b), b outside span(A) and
    yet b inside span(A+a).  Scan order: ``A``, then ``a``, then ``b``."""
    check_limit("steinitz_scan", space.n, STEINITZ_LIMIT)
    ctx = (space.n, space.span_table())
    count, raw = run_scan(_steinitz_chunk, ctx, 1 << space.n, workers)
    if raw is None:
        return ScanReport("steinitz", Verdict.HOLDS, None, count)
    a, b, base = raw
    ok = (
        not space.depends_mask(a, base | 1 << b)
        and not space.depends_mask(b, base)
        and space.depends_mask(b, base | 1 << a)
    )
    if not ok:
        raise RuntimeError(f"steinitz witness failed re-validation: {raw}")
    w = SteinitzCounterexample(space.labels[a], space.labels[b], space.members(base))
    return ScanReport("steinitz", Verdict.FAILS, w, count)


# Extension and bases


def extend_independent(space: DependenceSpace, a: Iterable[str], x: str) -> tuple:
    """Return ``a`` plus ``x``, which is independent whenever ``a`` is
    independent and ``x`` does not depend on ``a``."""
    am = space.mask(a)
    i = space.index(x)
    if space.dependent_mask(am):
        raise ContractError("independent", f"{list(space.members(am))} is dependent")
    if space.depends_mask(i, am):
        raise ContractError("not-dependent", f"{x} depends on {list(space.members(am))}")
    out = am | 1 << i
    if space.dependent_mask(out):
        raise RuntimeError(f"extension {list(space.members(out))} is dependent")
    return space.members(out)


class ExtensionFailure(DependenceError):
    def __init__(self, partial: tuple):
        self.partial = partial
        super().__init__(f"greedy extension stopped at {list(partial)} without spanning")


def extend_to_basis(space: DependenceSpace, a: Iterable[str], strict: bool = True) -> tuple:
    """Greedily add the least element outside the current span until the span
    is the whole ground set.

    In strict mode the space must pass the transitivity check first.
    """
    cur = space.mask(a)
    if space.dependent_mask(cur):
        raise ContractError("independent", f"{list(space.members(cur))} is dependent")
    if strict and not check_transitivity_idempotence(space).holds:
        raise ContractError("transitive", "space fails the transitivity axiom (use non-strict mode)")
    while True:
        s = space.span_mask(cur)
        outside = space.full & ~s
        if not outside:
            return space.members(cur)
        low = outside & -outside
        cur |= low
        if space.dependent_mask(cur):
            # cannot happen: x outside span(A) keeps A + x independent
            raise ExtensionFailure(space.members(cur ^ low))


def basis_masks(space: DependenceSpace) -> list:
    check_limit("enumerate_bases", space.n, BASES_LIMIT)
    indep = space.independence_table()
    full = space.full
    return [m for m in range(1 << space.n) if indep[m] and space.span_mask(m) == full]


def enumerate_bases(space: DependenceSpace) -> BasisReport:
    masks = basis_masks(space)
    bases = [space.members(m) for m in masks]
    sizes = {len(b) for b in bases}
    if len(sizes) <= 1:
        dim = sizes.pop() if sizes else None
        return BasisReport(bases, True, dim, None)
    first = bases[0]
    other = next(b for b in bases if len(b) != len(first))
    return BasisReport(bases, False, None, (first, other))


def dimension(space: DependenceSpace) -> int | None:
    return enumerate_bases(space).dimension


# Exchange of independent sets


def eis_check_triple(space: DependenceSpace, p: Iterable[str], q: Iterable[str], r: Iterable[str]) -> EisTripleVerdict:
    pm, qm, rm = space.mask(p), space.mask(q), space.mask(r)
    disjoint = pm & qm == 0
    union_ind = not space.dependent_mask(pm | qm)
    r_cond = not space.dependent_mask(rm) and rm & ~space.span_mask(qm) == 0
    conclusion = None
    if disjoint and union_ind and r_cond:
        conclusion = not space.dependent_mask(pm | rm)
    return EisTripleVerdict(disjoint, union_ind, r_cond, conclusion)


def _eis_chunk(ctx, start, stop):
    indep, spans = ctx
    count = 0
    for union in range(start, stop):
        if not indep[union]:
            continue
        for p in submasks_ascending(union):
            q = union ^ p
            for r in submasks_ascending(spans[q]):
                if not indep[r]:
                    continue
                count += 1
                if not indep[p | r]:
                    return count, (p, q, r)
    return count, None


def eis_scan(space: DependenceSpace, workers: int = 1) -> ScanReport:
    """Exhaustive EIS check.

    Outer loop: independent sets ``P | Q`` by mask; then ``P`` over its
    submasks ascending; then independent ``R`` inside span(Q) ascending.
    ``scanned_count`` counts the ``(P, Q, R)`` triples satisfying all premises.
    """
    check_limit("eis_scan", space.n, EIS_LIMIT)
    ctx = (space.independence_table(), space.span_table())
    count, raw = run_scan(_eis_chunk, ctx, 1 << space.n, workers)
    if raw is None:
        return ScanReport("eis", Verdict.HOLDS, None, count)
    p, q, r = (space.members(m) for m in raw)
    v = eis_check_triple(space, p, q, r)
    if not (v.premises_hold and v.conclusion is False):
        raise RuntimeError(f"EIS witness failed re-validation: {raw}")
    return ScanReport("eis", Verdict.FAILS, EisCounterexample(p, q, r), count)
