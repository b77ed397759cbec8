import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import C4, K3, P3, P4, graph
from oracles import adjacency, bfs_equivalent, bfs_is_identity
from raagflags.graph import GraphError
from raagflags.words import (
    Conjugator,
    NotWithinRadius,
    conjugacy_search,
    format_word,
    invert,
    is_identity,
    multiply,
    normal_form,
    parse_word,
    raag,
)


def nf(g, text):
    return format_word(normal_form(g, text))


def adj(g):
    return adjacency(g.vertices, [tuple(e) for e in g.sorted_edges()])


class TestNormalForm:
    def test_commuting_cancel(self):
        assert nf(P3, "a b a^-1") == "b"

    def test_non_commuting_kept(self):
        assert nf(P3, "a c a^-1 c^-1") == "a c a^-1 c^-1"

    def test_empty(self):
        assert normal_form(P3, "") == ()

    def test_exponent_notation(self):
        assert nf(P3, "a^3 a^-1") == "a a"
        assert nf(K3, "c b a") == "a b c"

    def test_canonical_order_is_input_order(self):
        g = graph("ba", "ba")
        assert nf(g, "a b") == "b a"

    def test_long_distance_cancel(self):
        # b commutes with both a and c in P3, so it can travel
        assert nf(P3, "b a c a^-1 c^-1 b^-1") == "a c a^-1 c^-1"
        assert nf(P4, "a c b^-1 c^-1 a^-1") == "b^-1"
        assert nf(P4, "a d c a^-1") == "a c d a^-1"

    def test_parse_errors(self):
        with pytest.raises(GraphError):
            parse_word(P3, "z")
        with pytest.raises(GraphError):
            parse_word(P3, "a^x")
        with pytest.raises(GraphError):
            parse_word(P3, "a^0")


class TestIdentity:
    def test_commutator_of_edge(self):
        assert is_identity(P3, "b a b^-1 a^-1")

    def test_commutator_of_non_edge(self):
        assert not is_identity(P3, "a c a^-1 c^-1")

    def test_abelian(self):
        assert is_identity(K3, "a b c a^-1 c^-1 b^-1")
        assert is_identity(K3, "a^2 b^-1 c a^-2 b c^-1")


class TestArithmetic:
    def test_multiply_inverse(self):
        assert multiply(P3, "a", "a^-1") == ()

    def test_invert(self):
        assert format_word(invert(P3, "a b")) == "a^-1 b^-1"
        assert bfs_equivalent(invert(P3, "a b"), parse_word(P3, "b^-1 a^-1"), adj(P3))

    def test_abelian_multiply(self):
        w = multiply(K3, "a b", "b a")
        assert format_word(w) == "a a b b"
        assert raag(K3).exponent_sums(raag(K3).encode(w)) == [2, 2, 0]


class TestConjugacy:
    def test_found(self):
        assert conjugacy_search(P3, "c", "a c a^-1", 1) == Conjugator(parse_word(P3, "a"))

    def test_equal_words(self):
        assert conjugacy_search(C4, "a b", "a b", 2) == Conjugator(())

    def test_not_within_radius(self):
        assert conjugacy_search(P3, "a", "c", 3) == NotWithinRadius(3)

    def test_bad_radius(self):
        with pytest.raises(ValueError):
            conjugacy_search(P3, "a", "a", -1)

    def test_ball_sizes(self):
        # free group on two generators: 1, 4, 12, 36 elements of length 0..3
        R = raag(graph("ab", "abc").induced(("a", "c")))
        assert [len([w for w in R.ball(3) if len(w) == k]) for k in range(4)] == [1, 4, 12, 36]
        # Z^2: 1, 4, 8, 12
        R = raag(graph("ab"))
        assert [len([w for w in R.ball(3) if len(w) == k]) for k in range(4)] == [1, 4, 8, 12]


# -- properties -------------------------------------------------------------

SMALL = [P3, P4, C4, K3, graph("ab ac ad"), graph("ab bc cd da ac"), graph("ab cd", "abcd")]


@st.composite
def graph_and_word(draw, max_len=10):
    g = draw(st.sampled_from(SMALL))
    letters = st.tuples(st.sampled_from(g.vertices), st.sampled_from([1, -1]))
    return g, tuple(draw(st.lists(letters, max_size=max_len)))


def swaps(g, w):
    for i in range(len(w) - 1):
        if w[i][0] != w[i + 1][0] and g.adjacent(w[i][0], w[i + 1][0]):
            yield w[:i] + (w[i + 1], w[i]) + w[i + 2:]


@settings(max_examples=300, deadline=None)
@given(graph_and_word())
def test_normal_form_idempotent_and_shuffle_invariant(gw):
    g, w = gw
    n = normal_form(g, w)
    assert normal_form(g, n) == n
    for w2 in swaps(g, w):
        assert normal_form(g, w2) == n


@settings(max_examples=300, deadline=None)
@given(graph_and_word())
def test_exponent_sums_and_inverse(gw):
    g, w = gw
    R = raag(g)
    e = R.encode(w)
    assert R.exponent_sums(R.normal_form(e)) == R.exponent_sums(e)
    assert R.exponent_sums(R.inverse(e)) == [-x for x in R.exponent_sums(e)]
    assert multiply(g, w, invert(g, w)) == ()


@settings(max_examples=300, deadline=None)
@given(graph_and_word(max_len=8))
def test_identity_matches_bfs(gw):
    g, w = gw
    assert is_identity(g, w) == bfs_is_identity(w, adj(g))


@settings(max_examples=200, deadline=None)
@given(graph_and_word(max_len=6))
def test_normal_form_is_equivalent_word(gw):
    g, w = gw
    n = normal_form(g, w)
    assert len(n) <= len(w)
    assert bfs_equivalent(w, n, adj(g))


@settings(max_examples=100, deadline=None)
@given(graph_and_word(max_len=5))
def test_normal_form_is_least_linearization(gw):
    """No shorter word and no lex-smaller word of equal length is equivalent."""
    g, w = gw
    n = normal_form(g, w)
    assume(len(n) <= 4)
    R = raag(g)
    enc = R.encode(n)
    for c in R.ball(len(enc)):
        if len(c) < len(enc) or (len(c) == len(enc) and c < enc):
            assert not bfs_equivalent(R.decode(c), n, adj(g))
