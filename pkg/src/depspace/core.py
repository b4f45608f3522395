"""Finite dependence spaces: ground set, directly dependent sets, span, bases.

Subsets of the ground set are handled internally as integer bitmasks over the
sorted label order (bit ``i`` is ``labels[i]``).  The public functions accept
any iterable of labels and return sorted label tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

MAX_GROUND = 64

Element = str
ElementSet = tuple  # tuple[str, ...], sorted


class DependenceError(ValueError):
    """Base class for errors raised by this package."""


class DomainError(DependenceError):
    """A label does not belong to the ground set."""


class SizeLimitError(DependenceError):
    """An exhaustive scan was requested on a ground set above its guard."""

    def __init__(self, operation: str, size: int, limit: int):
        self.operation = operation
        self.size = size
        self.limit = limit
        super().__init__(
            f"{operation}: ground set has {size} elements, limit is {limit}"
        )


class WellFormednessError(DependenceError):
    """Raw input violates the dependence-space definition."""

    def __init__(self, member: tuple, reason: str):
        self.member = tuple(member)
        self.reason = reason
        super().__init__(f"ill-formed delta member {list(self.member)}: {reason}")


class ContractError(DependenceError):
    """A precondition (or asserted postcondition) of an operation failed."""

    def __init__(self, clause: str, message: str):
        self.clause = clause
        super().__init__(f"{clause}: {message}")


def check_limit(operation: str, n: int, limit: int) -> None:
    if n > limit:
        raise SizeLimitError(operation, n, limit)


def validate_label(label: object) -> str:
    if not isinstance(label, str) or not label or any(c.isspace() for c in label):
        raise DependenceError(f"invalid element label {label!r}")
    return label


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks_ascending(mask: int):
    """All submasks of ``mask`` in increasing numeric order, starting at 0."""
    sub = 0
    while True:
        yield sub
        sub = (sub - mask) & mask
        if sub == 0:
            return


@dataclass(frozen=True)
class DependenceSpace:
    """A finite ground set together with its family of directly dependent sets.

    ``labels`` is sorted and duplicate free; ``delta`` holds the members of the
    family as bitmasks, deduplicated and in increasing order.  Instances are
    validated on construction and never mutated.
    """

    labels: tuple
    delta: tuple
    provenance: str | None = field(default=None, compare=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        if len(labels) > MAX_GROUND:
            raise SizeLimitError("DependenceSpace", len(labels), MAX_GROUND)
        for lab in labels:
            validate_label(lab)
        if list(labels) != sorted(set(labels)):
            raise DependenceError("labels must be sorted and unique")
        full = (1 << len(labels)) - 1
        delta = tuple(sorted(set(self.delta)))
        for d in delta:
            if d & ~full or d < 0:
                raise DomainError(f"delta member {d:#x} outside the ground set")
            if d.bit_count() < 2:
                raise WellFormednessError(
                    tuple(labels[i] for i in iter_bits(d)),
                    f"member of size {d.bit_count()}",
                )
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(labels)})

    @classmethod
    def from_labels(
        cls,
        elements: Iterable[str],
        delta: Iterable[Iterable[str]],
        provenance: str | None = None,
    ) -> "DependenceSpace":
        """Build a space from label lists, rejecting anything ill-formed.

        Duplicate elements and duplicate delta members are collapsed.
        """
        from depspace.axioms import check_well_formed

        raw = RawSpace(tuple(elements), tuple(tuple(d) for d in delta))
        report = check_well_formed(raw)
        if not report.holds:
            w = report.witness
            raise WellFormednessError(w.member, w.reason)
        labels = tuple(sorted(set(raw.elements)))
        index = {lab: i for i, lab in enumerate(labels)}
        masks = []
        for member in raw.delta:
            m = 0
            for lab in member:
                m |= 1 << index[lab]
            masks.append(m)
        return cls(labels, tuple(masks), provenance)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << len(self.labels)) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise DomainError(f"unknown element {label!r}") from None

    def mask(self, labels: Iterable[str]) -> int:
        if isinstance(labels, str):
            raise TypeError("expected an iterable of labels, got a single string")
        m = 0
        for lab in labels:
            m |= 1 << self.index(lab)
        return m

    def members(self, mask: int) -> ElementSet:
        return tuple(self.labels[i] for i in iter_bits(mask))

    def delta_sets(self) -> list:
        return [self.members(d) for d in self.delta]

    # Bitmask primitives used by the exhaustive scans.

    def depends_mask(self, i: int, a: int) -> bool:
        """Literal dependence test: ``i`` in ``a`` or a delta witness exists."""
        bit = 1 << i
        if a & bit:
            return True
        for d in self.delta:
            if d & bit and (d & ~bit) & ~a == 0:
                return True
        return False

    def span_mask(self, a: int) -> int:
        out = a
        for d in self.delta:
            missing = d & ~a
            # a single element outside ``a`` is forced into the span
            if missing and missing & (missing - 1) == 0:
                out |= missing
        return out

    def dependent_mask(self, a: int) -> bool:
        return any(d & ~a == 0 for d in self.delta)

    def span_array(self) -> np.ndarray:
        """One-step span of every subset, indexed by mask."""
        masks = np.arange(1 << self.n, dtype=np.int64)
        out = masks.copy()
        for d in self.delta:
            missing = d & ~masks
            single = (missing != 0) & ((missing & (missing - 1)) == 0)
            out |= np.where(single, missing, 0)
        return out

    def span_table(self) -> list:
        return self.span_array().tolist()

    def independence_table(self) -> list:
        """``table[m]`` is True iff subset ``m`` contains no delta member."""
        dep = np.zeros(1 << self.n, dtype=bool)
        dep[list(self.delta)] = True
        # close upward under adding one element at a time
        for i in range(self.n):
            view = dep.reshape(-1, 2, 1 << i)
            view[:, 1, :] |= view[:, 0, :]
        return (~dep).tolist()


@dataclass(frozen=True)
class RawSpace:
    """Unvalidated space as read from a file (labels as given)."""

    elements: tuple
    delta: tuple


def is_directly_dependent(space: DependenceSpace, a: Iterable[str]) -> bool:
    return space.mask(a) in space.delta


def depends_on(space: DependenceSpace, x: str, a: Iterable[str]) -> bool:
    """True iff ``x`` lies in ``a`` or ``x`` together with some elements of
    ``a`` forms a directly dependent set."""
    return space.depends_mask(space.index(x), space.mask(a))


def span(space: DependenceSpace, x: Iterable[str]) -> ElementSet:
    """One-step span: every element that depends on ``x``.  Not iterated."""
    a = space.mask(x)
    return tuple(lab for i, lab in enumerate(space.labels) if space.depends_mask(i, a))


def iterated_span(space: DependenceSpace, x: Iterable[str]) -> ElementSet:
    cur = space.mask(x)
    while True:
        nxt = space.span_mask(cur)
        if nxt == cur:
            return space.members(cur)
        cur = nxt


def is_dependent(space: DependenceSpace, a: Iterable[str]) -> bool:
    return space.dependent_mask(space.mask(a))


def is_independent(space: DependenceSpace, a: Iterable[str]) -> bool:
    return not space.dependent_mask(space.mask(a))


def is_basis(space: DependenceSpace, a: Iterable[str]) -> bool:
    m = space.mask(a)
    return not space.dependent_mask(m) and space.span_mask(m) == space.full


def contained_member(space: DependenceSpace, a: Iterable[str]) -> ElementSet | None:
    """First delta member inside ``a``, or None if ``a`` is independent."""
    m = space.mask(a)
    for d in space.delta:
        if d & ~m == 0:
            return space.members(d)
    return None


def canonical(space: DependenceSpace, labels: Sequence[str]) -> ElementSet:
    return space.members(space.mask(labels))
