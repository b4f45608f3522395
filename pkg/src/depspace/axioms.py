"""Well-formedness and transitivity checks for finite dependence spaces.

Transitivity is checked two ways.  ``check_transitivity_direct`` scans every
``(x, A, B)`` literally.  ``check_transitivity_idempotence`` uses the derived
equivalence: since span is extensive and monotone, "``A`` inside span(B) and
``x`` in span(A) imply ``x`` in span(B)" holds for all triples exactly when
span(span(B)) == span(B) for every ``B``.  The two must always agree.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from enum import Enum

import numpy as np

from depspace._scan import run_scan
from depspace.core import (
    DependenceError,
    DependenceSpace,
    RawSpace,
    check_limit,
    validate_label,
)

DIRECT_LIMIT = 12
IDEMPOTENCE_LIMIT = 20


class Verdict(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"


@dataclass(frozen=True)
class MalformedMember:
    member: tuple
    reason: str

    def to_dict(self) -> dict:
        return {"member": list(self.member), "reason": self.reason}


@dataclass(frozen=True)
class TransitivityCounterexample:
    """``x`` depends on ``a``, every element of ``a`` depends on ``b``, but
    ``x`` does not depend on ``b``."""

    x: str
    a: tuple
    b: tuple

    def to_dict(self) -> dict:
        return {"x": self.x, "a": list(self.a), "b": list(self.b)}


@dataclass(frozen=True)
class AxiomReport:
    axiom: str  # "well-formed" | "transitivity"
    verdict: Verdict
    witness: MalformedMember | TransitivityCounterexample | None
    method: str  # "direct-scan" | "idempotence"
    scanned_count: int

    def __post_init__(self):
        if (self.verdict is Verdict.FAILS) != (self.witness is not None):
            raise ValueError("verdict fails iff a witness is present")

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS

    def to_dict(self) -> dict:
        d = asdict(self)
        d["verdict"] = self.verdict.value
        d["witness"] = None if self.witness is None else self.witness.to_dict()
        return d


def check_well_formed(space: DependenceSpace | RawSpace) -> AxiomReport:
    """Report the first delta member of size < 2 or naming an unknown element."""
    if isinstance(space, DependenceSpace):
        # construction already enforced everything
        return AxiomReport("well-formed", Verdict.HOLDS, None, "direct-scan", len(space.delta))

    def fail(member, reason, count):
        return AxiomReport(
            "well-formed", Verdict.FAILS, MalformedMember(tuple(member), reason),
            "direct-scan", count,
        )

    for lab in space.elements:
        try:
            validate_label(lab)
        except DependenceError:
            return fail((str(lab),), f"invalid element label {lab!r}", 0)
    ground = set(space.elements)
    for count, member in enumerate(space.delta, start=1):
        for lab in member:
            if lab not in ground:
                return fail(member, f"unknown element {lab}", count)
        size = len(set(member))
        if size < 2:
            return fail(member, f"member of size {size}", count)
    return AxiomReport("well-formed", Verdict.HOLDS, None, "direct-scan", len(space.delta))


def _literal_spans(space: DependenceSpace) -> np.ndarray:
    n = space.n
    out = np.zeros(1 << n, dtype=np.int64)
    for a in range(1 << n):
        s = 0
        for i in range(n):
            if space.depends_mask(i, a):
                s |= 1 << i
        out[a] = s
    return out


def _direct_chunk(ctx, start, stop):
    n, spans = ctx
    size = 1 << n
    low = size - 1
    not_in = [((spans >> x) & 1) == 0 for x in range(n)]
    count = 0
    for k in range(start, stop):
        x, a = k >> n, k & low
        if not (int(spans[a]) >> x) & 1:
            count += size
            continue
        hits = np.flatnonzero(((a & ~spans) == 0) & not_in[x])
        if hits.size:
            b = int(hits[0])
            return count + b + 1, (x, a, b)
        count += size
    return count, None


def _idempotence_chunk(spans, start, stop):
    once = spans[start:stop]
    extra = spans[once] & ~once
    bad = np.flatnonzero(extra)
    if bad.size:
        k = int(bad[0])
        e = int(extra[k])
        x = (e & -e).bit_length() - 1
        return k + 1, (x, int(once[k]), start + k)
    return stop - start, None


def _transitivity_witness(space, raw) -> TransitivityCounterexample:
    x, a, b = raw
    ok = (
        space.depends_mask(x, a)
        and all(space.depends_mask(t, b) for t in range(space.n) if a >> t & 1)
        and not space.depends_mask(x, b)
    )
    if not ok:
        raise RuntimeError(f"transitivity witness failed re-validation: {raw}")
    return TransitivityCounterexample(space.labels[x], space.members(a), space.members(b))


def check_transitivity_direct(space: DependenceSpace, workers: int = 1) -> AxiomReport:
    """Scan all ``(x, A, B)`` for a violation of transitivity.

    Order: ``x`` by label, then ``A``, then ``B`` by characteristic-vector
    value.  The first violation in that order is reported.
    """
    check_limit("check_transitivity_direct", space.n, DIRECT_LIMIT)
    ctx = (space.n, _literal_spans(space))
    count, raw = run_scan(_direct_chunk, ctx, space.n << space.n, workers)
    if raw is None:
        return AxiomReport("transitivity", Verdict.HOLDS, None, "direct-scan", count)
    return AxiomReport(
        "transitivity", Verdict.FAILS, _transitivity_witness(space, raw), "direct-scan", count
    )


def check_transitivity_idempotence(space: DependenceSpace, workers: int = 1) -> AxiomReport:
    """Check span(span(B)) == span(B) for every ``B``.

    On failure the first such ``B`` yields the witness ``A = span(B)`` and the
    least ``x`` in span(A) outside span(B).
    """
    check_limit("check_transitivity_idempotence", space.n, IDEMPOTENCE_LIMIT)
    count, raw = run_scan(_idempotence_chunk, space.span_array(), 1 << space.n, workers)
    if raw is None:
        return AxiomReport("transitivity", Verdict.HOLDS, None, "idempotence", count)
    return AxiomReport(
        "transitivity", Verdict.FAILS, _transitivity_witness(space, raw), "idempotence", count
    )


def check_transitivity(space: DependenceSpace, method: str = "direct", workers: int = 1) -> AxiomReport:
    if method == "direct":
        return check_transitivity_direct(space, workers)
    if method == "idempotence":
        return check_transitivity_idempotence(space, workers)
    raise ValueError(f"unknown method {method!r}")


def is_transitive(space: DependenceSpace) -> bool:
    return check_transitivity_idempotence(space).holds
