from string import ascii_lowercase

import numpy as np
import pytest
from hypothesis import given, strategies as st

from vmcalc.equivalence import local_orbit
from vmcalc.graph import Graph, is_bipartite, local_complement
from vmcalc.words import (
    DoubleOccurrenceWord,
    Multigraph,
    WordError,
    all_words,
    batch_contracted_edges,
    batch_interlacement,
    batch_word_local_complement,
    canonical_cycle_word,
    check_contraction_invariance,
    check_word_commutation,
    chord_diagram,
    contract_chords,
    interlacement_graph,
    multigraph_isomorphic,
    row_words,
    square_of_cycle,
    verify_odd_cycle_lemma,
    word_local_complement,
)


@st.composite
def words(draw, max_letters=8):
    k = draw(st.integers(1, max_letters))
    letters = list(ascii_lowercase[:k]) * 2
    return DoubleOccurrenceWord(draw(st.permutations(letters)))


def test_parse_and_validate():
    m = DoubleOccurrenceWord.parse("abab")
    assert str(m) == "abab" and m.positions("b") == (1, 3)
    for bad in ["aba", "", "ab1ab1", "ABAB"]:
        with pytest.raises(WordError):
            DoubleOccurrenceWord.parse(bad)


def test_interlacement_examples():
    A = interlacement_graph(DoubleOccurrenceWord.parse("abacbc"))
    assert A == Graph(range(3), [(0, 1), (1, 2)])
    assert interlacement_graph(DoubleOccurrenceWord.parse("aabb")) == Graph.empty(2)


def test_worked_local_complement():
    m = DoubleOccurrenceWord.parse("abcdabcd")
    assert str(word_local_complement(m, "b")) == "abadcbcd"


@given(words(), st.data())
def test_local_complement_commutes(m, data):
    v = data.draw(st.sampled_from(m.alphabet))
    mv = word_local_complement(m, v)
    assert word_local_complement(mv, v) == m
    assert interlacement_graph(mv) == local_complement(interlacement_graph(m), m.vertex_id()[v])


@given(words(), st.data())
def test_contraction_is_invariant(m, data):
    v = data.draw(st.sampled_from(m.alphabet))
    assert contract_chords(word_local_complement(m, v)) == contract_chords(m)


@given(words())
def test_diagram_degrees(m):
    assert set(chord_diagram(m).degrees().values()) == {3}
    assert set(contract_chords(m).degrees().values()) == {4}


def test_figure_five_multigraph():
    T = contract_chords(DoubleOccurrenceWord.parse("ababcc"))
    assert T.multiplicity() == {(0, 1): 3, (1, 2): 1, (2, 2): 1, (0, 2): 1}


@pytest.mark.parametrize("k", [4, 5, 6, 7, 8])
def test_canonical_cycle_word(k):
    m = canonical_cycle_word(k)
    assert interlacement_graph(m) == Graph.cycle(k)
    assert is_bipartite(interlacement_graph(m)) == (k % 2 == 0)


def test_figure_six_chords():
    m = canonical_cycle_word(7)
    chords = sorted(tuple(p + 1 for p in m.positions(c)) for c in m.alphabet)
    assert chords == [(1, 4), (2, 13), (3, 6), (5, 8), (7, 10), (9, 12), (11, 14)]


def test_square_of_cycle():
    assert square_of_cycle(5) == Graph.complete(5)
    C6 = square_of_cycle(6)
    assert all(C6.degree(v) == 4 for v in C6.vertices)


@pytest.mark.parametrize("k", [5, 6, 7, 8])
def test_contracted_cycle_word_is_square(k):
    T = contract_chords(canonical_cycle_word(k))
    assert multigraph_isomorphic(T, Multigraph.from_graph(square_of_cycle(k)))


def test_isomorphism_negative():
    a = Multigraph(range(3), [(0, 1), (1, 2)])
    b = Multigraph(range(3), [(0, 1), (0, 1)])
    assert not multigraph_isomorphic(a, b)
    assert multigraph_isomorphic(a, Multigraph(range(3), [(2, 0), (0, 1)]))


def test_odd_cycle_lemma():
    assert verify_odd_cycle_lemma(5)
    assert verify_odd_cycle_lemma(7)
    assert any(is_bipartite(g) for g in local_orbit(Graph.cycle(6)).members)
    with pytest.raises(WordError):
        verify_odd_cycle_lemma(6)


@pytest.mark.parametrize("k,count", [(1, 1), (2, 3), (3, 15), (4, 105), (5, 945)])
def test_all_words_counts(k, count):
    w = all_words(k)
    assert w.shape == (count, 2 * k)
    assert len({tuple(r) for r in w}) == count


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_batch_routes_match_scalar(k):
    w = all_words(k)
    ws = row_words(w)
    adj = batch_interlacement(w, k)
    counts = batch_contracted_edges(w, k)
    for i, m in enumerate(ws):
        A = interlacement_graph(m)
        assert [A.nbr_mask(v) for v in range(k)] == adj[i].tolist()
        mult = contract_chords(m).multiplicity()
        assert {(a, b): int(counts[i, a * k + b]) for a in range(k) for b in range(a, k) if counts[i, a * k + b]} == dict(mult)
    for v in range(k):
        lc = row_words(batch_word_local_complement(w, k, v))
        assert lc == [word_local_complement(m, ascii_lowercase[v]) for m in ws]


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
def test_exhaustive_word_identities(k):
    assert check_word_commutation(k) == []
    assert check_contraction_invariance(k) == []
