from itertools import combinations
from math import comb

import pytest

import brute
from depspace.axioms import check_transitivity_direct, check_well_formed
from depspace.core import DependenceError, DependenceSpace, DomainError, is_independent
from depspace.instances import (
    BinaryOracle,
    GeneratorError,
    GraphicOracle,
    GraphSpec,
    fano_rows,
    gen_binary,
    gen_graphic,
    gen_random,
    gen_uniform,
    k4_graph,
    oracle_basis_count,
    oracle_compare,
    oracle_independent,
    oracle_rank,
    rank_axioms_hold,
    square_chord_graph,
    transitive_fixtures,
    triangle_graph,
    uniform_oracle,
    with_dependent_sets,
)
from depspace.properties import enumerate_bases


def test_uniform():
    u = gen_uniform(3, 2)
    assert u.delta_sets() == [("e1", "e2", "e3")]
    assert len(gen_uniform(4, 2).delta) == comb(4, 3)
    assert check_transitivity_direct(u).holds
    for bad in [(3, 0), (3, 3), (2, 5), (21, 3)]:
        with pytest.raises(GeneratorError):
            gen_uniform(*bad)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 7) for k in range(1, n)])
def test_uniform_bases(n, k):
    rep = enumerate_bases(gen_uniform(n, k))
    assert len(rep.bases) == comb(n, k)
    assert rep.dimension == k


def test_graphic():
    tri = gen_graphic(triangle_graph())
    assert tri.delta_sets() == [("t1", "t2", "t3")]
    par = gen_graphic(GraphSpec(2, ((0, 1, "p1"), (0, 1, "p2"))))
    assert par.delta_sets() == [("p1", "p2")]
    sq = gen_graphic(square_chord_graph())
    assert sorted(sq.delta_sets()) == [("d", "s1", "s2"), ("d", "s3", "s4"), ("s1", "s2", "s3", "s4")]


def test_graphic_matches_cycle_brute_force():
    for g in (triangle_graph(), square_chord_graph(), k4_graph()):
        got = {frozenset(d) for d in gen_graphic(g).delta_sets()}
        assert got == set(brute.cycles_brute(g.vertex_count, list(g.edges)))


def test_graphic_rejects_loops_and_bad_specs():
    with pytest.raises(GeneratorError, match="loop edge x"):
        gen_graphic(GraphSpec(2, ((0, 1, "a"), (1, 1, "x"))))
    with pytest.raises(GeneratorError, match="duplicate"):
        GraphSpec(2, ((0, 1, "a"), (0, 1, "a")))
    with pytest.raises(GeneratorError, match="out of range"):
        GraphSpec(2, ((0, 2, "a"),))
    many = GraphSpec(2, tuple((0, 1, f"e{i:02d}") for i in range(13)))
    with pytest.raises(GeneratorError, match="limit 12"):
        gen_graphic(many)


def test_binary():
    assert gen_binary([[1, 0, 1], [0, 1, 1]]).delta_sets() == [("c1", "c2", "c3")]
    assert gen_binary([[1, 1], [0, 0]]).delta_sets() == [("c1", "c2")]
    fano = gen_binary(fano_rows())
    assert {len(d) for d in fano.delta_sets()} == {3, 4}
    assert len(fano.delta) == 14
    assert check_transitivity_direct(fano).holds
    with pytest.raises(GeneratorError, match="zero column c2"):
        gen_binary([[1, 0], [1, 0]])
    with pytest.raises(GeneratorError, match="limit 16"):
        gen_binary([[1] * 17])
    named = gen_binary([[1, 0, 1], [0, 1, 1]], labels=["x", "y", "z"])
    assert named.delta_sets() == [("x", "y", "z")]


def test_binary_matches_brute_force():
    rows = [[1, 0, 1, 1, 0], [0, 1, 1, 0, 1], [0, 0, 0, 1, 1]]
    cols = {f"c{j + 1}": [r[j] for r in rows] for j in range(5)}
    deps = brute.binary_dependent_sets(cols)
    minimal = {s for s in deps if not any(t < s for t in deps)}
    assert {frozenset(d) for d in gen_binary(rows).delta_sets()} == minimal


def test_generated_delta_is_minimal():
    for name, space in transitive_fixtures(7).items():
        for a, b in combinations(space.delta, 2):
            assert a & ~b and b & ~a, name


def test_random():
    assert gen_random(5, 0, 3, 99).delta == ()
    for seed in range(20):
        s = gen_random(6, 5, 3, seed)
        assert len(s.delta) == 5
        assert check_well_formed(s).holds
        assert all(2 <= d.bit_count() <= 3 for d in s.delta)
        assert s == gen_random(6, 5, 3, seed)
        assert f"seed={seed}" in s.provenance
    with pytest.raises(GeneratorError, match="only 3 subsets"):
        gen_random(3, 4, 2, 0)
    with pytest.raises(GeneratorError):
        gen_random(3, 1, 1, 0)
    with pytest.raises(GeneratorError):
        gen_random(17, 1, 2, 0)
    assert gen_random(3, 4, 9, 0).n == 3  # max-size above n is capped


def test_random_spaces_often_nontransitive():
    fails = sum(not check_transitivity_direct(gen_random(4, 2, 2, s)).holds for s in range(40))
    assert fails >= 10


def test_redundant_members():
    base = gen_uniform(4, 1)
    red = with_dependent_sets(base, 3)
    assert set(base.delta) < set(red.delta)
    assert all(is_independent(red, red.members(m)) == is_independent(base, base.members(m))
               for m in range(16))
    via_flag = gen_uniform(4, 1, redundant=3)
    assert via_flag == red


def test_oracle_independent():
    u = uniform_oracle(3, 2)
    assert oracle_independent(u, ["e1", "e2"])
    assert not oracle_independent(u, ["e1", "e2", "e3"])
    g = GraphicOracle(triangle_graph())
    for pair in combinations(["t1", "t2", "t3"], 2):
        assert oracle_independent(g, pair)
    assert not oracle_independent(g, ["t1", "t2", "t3"])
    b = BinaryOracle(tuple(map(tuple, fano_rows())))
    assert not oracle_independent(b, ["c1", "c2", "c3"])
    assert oracle_independent(b, ["c1", "c2", "c4"])
    with pytest.raises(DomainError):
        oracle_independent(b, ["c9"])


def test_graphic_oracle_loops():
    g = GraphicOracle(GraphSpec(2, ((0, 0, "loop"), (0, 1, "e"))))
    assert not oracle_independent(g, ["loop"])
    assert oracle_independent(g, ["e"])


def test_rank_axioms():
    oracles = [uniform_oracle(n, k) for n in range(2, 6) for k in range(1, n)]
    oracles += [GraphicOracle(triangle_graph()), GraphicOracle(square_chord_graph()),
                GraphicOracle(k4_graph()), BinaryOracle(tuple(map(tuple, fano_rows())))]
    for o in oracles:
        assert rank_axioms_hold(o), o


def test_rank_axioms_detect_breakage():
    class Broken(type(uniform_oracle(3, 2))):
        def rank(self, a):
            return 2 * len(list(a))

    assert not rank_axioms_hold(Broken(("a", "b"), 1))


def test_oracle_compare_agreement():
    assert oracle_compare(gen_uniform(4, 2), uniform_oracle(4, 2)).agrees
    assert oracle_compare(gen_uniform(4, 2), uniform_oracle(4, 2)).scanned_count == 16
    fano = oracle_compare(gen_binary(fano_rows()), BinaryOracle(tuple(map(tuple, fano_rows()))))
    assert fano.agrees and fano.scanned_count == 128
    assert oracle_compare(gen_graphic(triangle_graph()), GraphicOracle(triangle_graph())).agrees


def test_oracle_compare_corrupted_delta():
    space = gen_binary(fano_rows())
    oracle = BinaryOracle(tuple(map(tuple, fano_rows())))
    for removed in space.delta:
        broken = DependenceSpace(space.labels, tuple(d for d in space.delta if d != removed))
        res = oracle_compare(broken, oracle)
        assert not res.agrees
        assert removed & ~broken.mask(res.witness) == 0
        assert res == oracle_compare(broken, oracle, workers=2)


def test_oracle_compare_ground_mismatch():
    with pytest.raises(DependenceError, match="mismatch"):
        oracle_compare(gen_uniform(4, 2), uniform_oracle(5, 2))


def test_dimension_equals_oracle_rank():
    cases = [(gen_binary(fano_rows()), BinaryOracle(tuple(map(tuple, fano_rows())))),
             (gen_graphic(k4_graph()), GraphicOracle(k4_graph())),
             (gen_uniform(6, 4), uniform_oracle(6, 4))]
    for space, oracle in cases:
        rep = enumerate_bases(space)
        assert rep.dimension == oracle_rank(oracle)
        assert len(rep.bases) == oracle_basis_count(oracle)
