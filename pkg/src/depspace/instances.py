"""Instance generators and rank oracles.

The matroid generators (uniform, graphic, binary) produce spaces whose delta is
the circuit family of the matroid.  They are a validation harness: circuit
families are known to give transitive dependence, and each comes with a rank
oracle that is computed without looking at delta at all.

Dependence spaces forbid delta members of size one, so graph loops and zero
matrix columns (loops of the matroid) are rejected rather than modelled.

``gen_random`` draws delta members with numpy's PCG64 generator
(``numpy.random.Generator(numpy.random.PCG64(seed))``): the candidate subsets
of size 2..max_size are listed in increasing bitmask order and ``m`` of them
are picked with ``Generator.choice(..., replace=False)``.  Equal arguments give
identical output.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

import numpy as np

from depspace import gf2
from depspace._scan import run_scan
from depspace.axioms import Verdict
from depspace.core import (
    DependenceError,
    DependenceSpace,
    DomainError,
    check_limit,
    iter_bits,
    submasks_ascending,
    validate_label,
)
from depspace.unionfind import UnionFind

UNIFORM_LIMIT = 20
GRAPHIC_LIMIT = 12
BINARY_LIMIT = 16
RANDOM_LIMIT = 16
COMPARE_LIMIT = 16


class GeneratorError(DependenceError):
    """Generator parameters are out of range or describe an invalid space."""


def numbered(prefix: str, n: int) -> list[str]:
    return [f"{prefix}{i}" for i in range(1, n + 1)]


def _from_masks(labels: Sequence[str], masks: Iterable[int], provenance: str) -> DependenceSpace:
    """Build a space from masks over ``labels`` given in *their own* order."""
    order = sorted(range(len(labels)), key=lambda i: labels[i])
    pos = {old: new for new, old in enumerate(order)}
    remapped = []
    for m in masks:
        r = 0
        for i in iter_bits(m):
            r |= 1 << pos[i]
        remapped.append(r)
    return DependenceSpace(tuple(labels[i] for i in order), tuple(remapped), provenance)


def _circuits(n: int, independent: Sequence[bool]) -> list[int]:
    out = []
    for m in range(1 << n):
        if independent[m]:
            continue
        if all(independent[m ^ (1 << i)] for i in iter_bits(m)):
            out.append(m)
    return out


def with_dependent_sets(space: DependenceSpace, max_size: int) -> DependenceSpace:
    """Add every superset of a delta member with at most ``max_size`` elements.

    Independence is unchanged; the one-step span generally grows.
    """
    check_limit("with_dependent_sets", space.n, RANDOM_LIMIT)
    extra = [m for m in range(1 << space.n)
             if 2 <= m.bit_count() <= max_size and space.dependent_mask(m)]
    prov = f"{space.provenance or ''} +dependent-sets<={max_size}".strip()
    return DependenceSpace(space.labels, space.delta + tuple(extra), prov)


# Generators


def gen_uniform(n: int, k: int, redundant: int | None = None) -> DependenceSpace:
    """Uniform matroid of rank ``k`` on ``n`` elements: delta is every
    ``(k+1)``-subset of ``e1..en``."""
    if not (0 < k < n):
        raise GeneratorError(f"uniform: need 0 < k < n, got n={n}, k={k}")
    if n > UNIFORM_LIMIT:
        raise GeneratorError(f"uniform: n={n} exceeds limit {UNIFORM_LIMIT}")
    labels = numbered("e", n)
    masks = [sum(1 << i for i in c) for c in combinations(range(n), k + 1)]
    space = _from_masks(labels, masks, f"gen uniform n={n} k={k}")
    return space if redundant is None else with_dependent_sets(space, redundant)


@dataclass(frozen=True)
class GraphSpec:
    """Multigraph on vertices ``0..vertex_count-1``; edges are ``(u, v, label)``."""

    vertex_count: int
    edges: tuple

    def __post_init__(self):
        if self.vertex_count < 1:
            raise GeneratorError("graph needs at least one vertex")
        edges = tuple((int(u), int(v), str(lab)) for u, v, lab in self.edges)
        seen = set()
        for u, v, lab in edges:
            validate_label(lab)
            if lab in seen:
                raise GeneratorError(f"duplicate edge label {lab}")
            seen.add(lab)
            for w in (u, v):
                if not 0 <= w < self.vertex_count:
                    raise GeneratorError(f"edge {lab}: vertex {w} out of range")
        object.__setattr__(self, "edges", edges)

    @property
    def labels(self) -> tuple:
        return tuple(lab for _, _, lab in self.edges)


def is_forest(graph: GraphSpec, edge_indices: Iterable[int]) -> bool:
    uf = UnionFind(graph.vertex_count)
    for i in edge_indices:
        u, v, _ = graph.edges[i]
        if not uf.union(u, v):
            return False
    return True


def gen_graphic(graph: GraphSpec, redundant: int | None = None) -> DependenceSpace:
    """Delta is the set of edge sets of cycles (minimal non-forests)."""
    m = len(graph.edges)
    if m > GRAPHIC_LIMIT:
        raise GeneratorError(f"graphic: {m} edges exceeds limit {GRAPHIC_LIMIT}")
    for u, v, lab in graph.edges:
        if u == v:
            raise GeneratorError(
                f"graphic: loop edge {lab} would be a dependent set of size 1"
            )
    forest = [is_forest(graph, iter_bits(s)) for s in range(1 << m)]
    space = _from_masks(
        list(graph.labels), _circuits(m, forest),
        f"gen graphic vertices={graph.vertex_count} edges={m}",
    )
    return space if redundant is None else with_dependent_sets(space, redundant)


def gen_binary(
    rows: Sequence[Sequence[int]],
    labels: Sequence[str] | None = None,
    redundant: int | None = None,
) -> DependenceSpace:
    """Delta is the set of minimal column sets summing to zero over GF(2)."""
    try:
        cols = gf2.columns(rows)
    except ValueError as e:
        raise GeneratorError(f"binary: {e}") from None
    n = len(cols)
    if n > BINARY_LIMIT:
        raise GeneratorError(f"binary: {n} columns exceeds limit {BINARY_LIMIT}")
    labels = list(labels) if labels is not None else numbered("c", n)
    if len(labels) != n:
        raise GeneratorError(f"binary: {len(labels)} labels for {n} columns")
    for lab, c in zip(labels, cols):
        if c == 0:
            raise GeneratorError(f"binary: zero column {lab} would be a dependent set of size 1")
    indep = [gf2.rank([cols[i] for i in iter_bits(s)]) == s.bit_count() for s in range(1 << n)]
    space = _from_masks(labels, _circuits(n, indep), f"gen binary rows={len(rows)} cols={n}")
    return space if redundant is None else with_dependent_sets(space, redundant)


def gen_random(n: int, m: int, max_size: int, seed: int) -> DependenceSpace:
    """``m`` distinct delta members drawn uniformly from the subsets of
    ``e1..en`` with 2..max_size elements (``max_size`` is capped at ``n``)."""
    if not 1 <= n <= RANDOM_LIMIT:
        raise GeneratorError(f"random: need 1 <= n <= {RANDOM_LIMIT}, got {n}")
    if max_size < 2:
        raise GeneratorError(f"random: max-size must be >= 2, got {max_size}")
    if m < 0:
        raise GeneratorError(f"random: m must be nonnegative, got {m}")
    if not 0 <= seed < 1 << 64:
        raise GeneratorError("random: seed must be a 64-bit unsigned integer")
    top = min(max_size, n)
    candidates = [s for s in range(1 << n) if 2 <= s.bit_count() <= top]
    if m > len(candidates):
        raise GeneratorError(
            f"random: requested {m} members but only {len(candidates)} subsets of size 2..{top} exist"
        )
    rng = np.random.Generator(np.random.PCG64(seed))
    picks = rng.choice(len(candidates), size=m, replace=False) if m else []
    prov = f"gen random n={n} m={m} max-size={max_size} seed={seed}"
    return _from_masks(numbered("e", n), [candidates[int(i)] for i in picks], prov)


# Named fixtures


def fixture_u23() -> DependenceSpace:
    return DependenceSpace.from_labels("abc", [("a", "b", "c")], "fixture u23")


def fixture_nontransitive() -> DependenceSpace:
    return DependenceSpace.from_labels("123", [("1", "2"), ("2", "3")], "fixture nontransitive")


def fixture_star() -> DependenceSpace:
    return DependenceSpace.from_labels("123", [("1", "2"), ("1", "3")], "fixture star")


def triangle_graph() -> GraphSpec:
    return GraphSpec(3, ((0, 1, "t1"), (1, 2, "t2"), (2, 0, "t3")))


def square_chord_graph() -> GraphSpec:
    return GraphSpec(4, ((0, 1, "s1"), (1, 2, "s2"), (2, 3, "s3"), (3, 0, "s4"), (0, 2, "d")))


def k4_graph() -> GraphSpec:
    edges = [(u, v, f"k{u}{v}") for u, v in combinations(range(4), 2)]
    return GraphSpec(4, tuple(edges))


def fano_rows() -> list[list[int]]:
    """3 x 7 matrix whose column j (1-based) is the binary expansion of j."""
    return [[(j >> i) & 1 for j in range(1, 8)] for i in range(3)]


def transitive_fixtures(max_n: int = 7) -> dict[str, DependenceSpace]:
    """Matroid-generated (hence transitive) fixtures with at most ``max_n`` elements."""
    out = {"u23-abc": fixture_u23()}
    for n in range(2, max_n + 1):
        for k in range(1, n):
            out[f"uniform-{k}-{n}"] = gen_uniform(n, k)
    for n in range(1, min(max_n, 4) + 1):
        out[f"free-{n}"] = DependenceSpace(tuple(numbered("e", n)), ())
    out["graphic-triangle"] = gen_graphic(triangle_graph())
    out["graphic-parallel"] = gen_graphic(GraphSpec(2, ((0, 1, "p1"), (0, 1, "p2"))))
    out["graphic-square-chord"] = gen_graphic(square_chord_graph())
    out["graphic-k4"] = gen_graphic(k4_graph())
    out["binary-small"] = gen_binary([[1, 0, 1, 1], [0, 1, 1, 1]])
    out["binary-fano"] = gen_binary(fano_rows())
    return {k: v for k, v in out.items() if v.n <= max_n}


def nontransitive_fixtures() -> dict[str, DependenceSpace]:
    return {"nontransitive": fixture_nontransitive(), "star": fixture_star()}


# Rank oracles


class RankOracle:
    """Independent ground truth for independence: ``rank(A) == |A|``."""

    kind = "abstract"

    @property
    def ground(self) -> tuple:
        raise NotImplementedError

    def rank(self, a: Iterable[str]) -> int:
        raise NotImplementedError

    def _positions(self, a: Iterable[str]) -> list[int]:
        index = {lab: i for i, lab in enumerate(self.ground)}
        out = []
        for lab in a:
            if lab not in index:
                raise DomainError(f"unknown element {lab!r} for {self.kind} oracle")
            out.append(index[lab])
        return sorted(set(out))


@dataclass(frozen=True)
class UniformOracle(RankOracle):
    labels: tuple
    k: int
    kind = "uniform"

    @property
    def ground(self) -> tuple:
        return tuple(self.labels)

    def rank(self, a):
        return min(len(self._positions(a)), self.k)


@dataclass(frozen=True)
class GraphicOracle(RankOracle):
    graph: GraphSpec
    kind = "graphic"

    @property
    def ground(self) -> tuple:
        return self.graph.labels

    def rank(self, a):
        uf = UnionFind(self.graph.vertex_count)
        r = 0
        for i in self._positions(a):
            u, v, _ = self.graph.edges[i]
            r += uf.union(u, v)
        return r


@dataclass(frozen=True)
class BinaryOracle(RankOracle):
    rows: tuple
    labels: tuple | None = None
    kind = "binary"

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        object.__setattr__(self, "_cols", gf2.columns(self.rows))
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(numbered("c", len(self._cols))))

    @property
    def ground(self) -> tuple:
        return tuple(self.labels)

    def rank(self, a):
        return gf2.rank([self._cols[i] for i in self._positions(a)])


def uniform_oracle(n: int, k: int) -> UniformOracle:
    return UniformOracle(tuple(numbered("e", n)), k)


def oracle_independent(oracle: RankOracle, a: Iterable[str]) -> bool:
    a = list(a)
    return oracle.rank(a) == len(set(a))


def oracle_rank(oracle: RankOracle) -> int:
    return oracle.rank(oracle.ground)


def oracle_basis_count(oracle: RankOracle) -> int:
    """Number of independent sets of full rank, by brute force over the oracle."""
    ground = oracle.ground
    r = oracle_rank(oracle)
    return sum(1 for c in combinations(ground, r) if oracle_independent(oracle, c))


@dataclass(frozen=True)
class OracleComparison:
    verdict: Verdict
    witness: tuple | None
    scanned_count: int

    @property
    def agrees(self) -> bool:
        return self.verdict is Verdict.HOLDS

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "witness": None if self.witness is None else {"set": list(self.witness)},
            "scanned-count": self.scanned_count,
        }


def _compare_chunk(ctx, start, stop):
    space, oracle = ctx
    for m in range(start, stop):
        labels = space.members(m)
        if space.dependent_mask(m) == oracle_independent(oracle, labels):
            return m - start + 1, m
    return stop - start, None


def oracle_compare(space: DependenceSpace, oracle: RankOracle, workers: int = 1) -> OracleComparison:
    """Compare delta-based independence with the oracle on every subset."""
    if sorted(oracle.ground) != list(space.labels):
        raise DependenceError(
            f"ground-set mismatch: space {list(space.labels)} vs oracle {sorted(oracle.ground)}"
        )
    check_limit("oracle_compare", space.n, COMPARE_LIMIT)
    count, m = run_scan(_compare_chunk, (space, oracle), 1 << space.n, workers)
    if m is None:
        return OracleComparison(Verdict.HOLDS, None, count)
    return OracleComparison(Verdict.FAILS, space.members(m), count)


def rank_axioms_hold(oracle: RankOracle) -> bool:
    """Normalized, monotone, unit-increasing and submodular, checked on all subsets."""
    ground = oracle.ground
    n = len(ground)
    r = [oracle.rank([ground[i] for i in iter_bits(m)]) for m in range(1 << n)]
    if r[0] != 0:
        return False
    for m in range(1 << n):
        for i in range(n):
            if not m >> i & 1:
                grow = r[m | 1 << i] - r[m]
                if grow not in (0, 1):
                    return False
    for a in range(1 << n):
        for b in submasks_ascending((1 << n) - 1):
            if r[a | b] + r[a & b] > r[a] + r[b]:
                return False
    return True
