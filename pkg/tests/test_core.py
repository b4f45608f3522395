import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import brute
from depspace import core
from depspace.core import (
    DependenceSpace,
    DomainError,
    WellFormednessError,
    depends_on,
    is_basis,
    is_dependent,
    is_directly_dependent,
    is_independent,
    iterated_span,
    span,
)
from depspace.instances import fixture_nontransitive, fixture_star, fixture_u23, transitive_fixtures
from strategies import as_sets, spaces


@pytest.fixture
def u23():
    return fixture_u23()


@pytest.fixture
def chain():
    return fixture_nontransitive()


def test_directly_dependent(u23):
    assert is_directly_dependent(u23, ["a", "b", "c"])
    assert not is_directly_dependent(u23, ["a", "b"])
    assert not is_directly_dependent(u23, [])


def test_depends_on_examples(u23, chain):
    assert depends_on(u23, "c", ["a", "b"])
    assert depends_on(u23, "a", ["a"])
    assert depends_on(chain, "2", ["2"])
    # brute-force witness search: no delta member is {1} plus elements of {3}
    assert not depends_on(chain, "1", ["3"])


def test_span_examples(u23, chain):
    assert span(u23, []) == ()
    assert span(chain, []) == ()
    assert span(u23, ["a", "b"]) == ("a", "b", "c")
    assert span(chain, ["3"]) == ("2", "3")


def test_iterated_span(chain, u23):
    assert iterated_span(chain, ["3"]) == ("1", "2", "3")
    for space in (chain, u23):
        assert iterated_span(space, space.labels) == space.labels
    for name, space in transitive_fixtures(5).items():
        for m in range(1 << space.n):
            x = space.members(m)
            assert iterated_span(space, x) == span(space, x), name


def test_dependence_examples(u23):
    assert not is_dependent(u23, [])
    for x in u23.labels:
        assert not is_dependent(u23, [x])
        assert is_independent(u23, [x])
    assert is_dependent(u23, ["a", "b", "c"])
    assert not is_dependent(u23, ["a", "b"])
    assert is_independent(u23, ["a", "b"])
    assert not is_independent(u23, ["a", "b", "c"])
    assert is_independent(u23, [])


def test_basis_examples(u23):
    assert is_basis(u23, ["a", "b"])
    assert not is_basis(u23, ["a", "b", "c"])
    assert is_basis(fixture_star(), ["1"])


def test_unknown_element_is_domain_error(u23):
    with pytest.raises(DomainError):
        span(u23, ["z"])
    with pytest.raises(DomainError):
        depends_on(u23, "z", ["a", "b"])
    with pytest.raises(DomainError):
        is_dependent(u23, ["a", "q"])


def test_construction_rejects_ill_formed():
    with pytest.raises(WellFormednessError, match="size 1"):
        DependenceSpace.from_labels("ab", [("a",)])
    with pytest.raises(WellFormednessError, match="unknown element z"):
        DependenceSpace.from_labels("ab", [("a", "z")])
    with pytest.raises(WellFormednessError):
        DependenceSpace(("a", "b"), (0b01,))
    with pytest.raises(core.DependenceError):
        DependenceSpace.from_labels(["a b"], [])
    with pytest.raises(core.SizeLimitError):
        DependenceSpace(tuple(f"x{i:02d}" for i in range(65)), ())


def test_delta_deduplicated():
    s = DependenceSpace.from_labels("cba", [("b", "a"), ("a", "b"), ("a", "b", "b")])
    assert s.labels == ("a", "b", "c")
    assert s.delta_sets() == [("a", "b")]


def test_non_minimal_members_allowed():
    s = DependenceSpace.from_labels("abc", [("a", "b"), ("a", "b", "c")])
    assert len(s.delta) == 2


def test_independence_table_matches_definition():
    s = DependenceSpace.from_labels("abcde", [("a", "b"), ("c", "d", "e"), ("b", "e")])
    table = s.independence_table()
    for m in range(1 << s.n):
        assert table[m] == (not s.dependent_mask(m))


@settings(max_examples=150, deadline=None)
@given(spaces())
def test_against_brute_force(space):
    ground, delta = as_sets(space)
    for m in range(1 << space.n):
        a = frozenset(space.members(m))
        assert frozenset(span(space, a)) == brute.span(ground, delta, a)
        assert frozenset(space.members(space.span_mask(m))) == brute.span(ground, delta, a)
        assert is_dependent(space, a) == brute.dependent(delta, a)
        for x in ground:
            assert depends_on(space, x, a) == brute.depends(delta, x, a)


@settings(max_examples=150, deadline=None)
@given(spaces())
def test_closure_identities(space):
    spans = space.span_table()
    for x in range(1 << space.n):
        assert x & ~spans[x] == 0  # extensive
        it = space.mask(iterated_span(space, space.members(x)))
        assert spans[x] & ~it == 0
        for i in range(space.n):
            assert space.depends_mask(i, x) == bool(spans[x] >> i & 1)
        for y in core.submasks_ascending(x):
            assert spans[y] & ~spans[x] == 0  # monotone
            if not space.dependent_mask(x):
                assert not space.dependent_mask(y)  # hereditary
        if not space.dependent_mask(x):
            for i in core.iter_bits(x):
                assert not space.depends_mask(i, x & ~(1 << i))


@given(st.integers(0, 1 << 12))
def test_submasks_ascending(mask):
    subs = list(core.submasks_ascending(mask))
    assert subs == sorted(subs)
    assert subs == [s for s in range(mask + 1) if s & ~mask == 0]
