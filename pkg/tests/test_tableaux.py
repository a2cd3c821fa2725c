import pytest
from hypothesis import assume, given, settings

from errors import (AdmissibilityError, ConcatenationOrderError, NotDominoError, ParityError,
                    RangeError)
from partitions import FormKind, Partition, hook_length_count, is_admissible, partitions_of
from tableaux import (EMPTY_DOMINO, DominoTableau, StandardYoungTableau, concat,
                      construct_dxomega, construct_property_report, d_n0, d_nk, enumerate_domino,
                      enumerate_syt, is_admissible_domino, lemma1_applies, parse_rows,
                      predicted_component_count, refine_to_syt, render_ascii)
from strategies import domino_strategy, partition_strategy

O = FormKind.ORTHOGONAL
S = FormKind.SYMPLECTIC

D1 = DominoTableau.parse("11/22/3/3")
D2 = DominoTableau.parse("13/13/2/2")
D3 = DominoTableau.parse("12/12/3/3")


def test_parse_rows():
    assert parse_rows("03377/1448") == ((0, 3, 3, 7, 7), (1, 4, 4, 8))
    assert parse_rows("10,10/11,11") == ((10, 10), (11, 11))
    assert parse_rows("") == ()


def test_domino_tableau_init():
    d = DominoTableau.parse("03377/1448/1558/26/26")
    assert d.shape == Partition.of(5, 4, 4, 2, 2)
    assert d.n == 17
    assert d.m == 8
    assert str(d) == "03377/1448/1558/26/26"


def test_domino_tableau_rejects_bad_fillings():
    with pytest.raises(ValueError):
        DominoTableau.parse("11/2")      # odd size without a 0
    with pytest.raises(ValueError):
        DominoTableau.parse("12/21")     # entries not on dominoes
    with pytest.raises(ValueError):
        DominoTableau.parse("22/11")     # column decreases


def test_standard_tableau_init():
    t = StandardYoungTableau(((1, 3), (2, 4)))
    assert t.shape == Partition.of(2, 2)
    with pytest.raises(ValueError):
        StandardYoungTableau(((2, 1),))


def test_construct_orthogonal_example():
    d = construct_dxomega(Partition.of(5, 4, 4, 2, 2), O)
    assert d.rows == ((0, 3, 3, 7, 7), (1, 4, 4, 8), (1, 5, 5, 8), (2, 6), (2, 6))


def test_construct_symplectic_example():
    d = construct_dxomega(Partition.of(5, 5, 4, 1, 1), S)
    assert d.rows == ((1, 1, 5, 5, 8), (2, 2, 6, 6, 8), (3, 3, 7, 7), (4,), (4,))


def test_construct_empty_shape():
    assert construct_dxomega(Partition(()), O) == EMPTY_DOMINO
    assert construct_dxomega(Partition(()), S) == EMPTY_DOMINO


def test_construct_inadmissible():
    with pytest.raises(AdmissibilityError):
        construct_dxomega(Partition.of(2, 1), S)
    with pytest.raises(AdmissibilityError):
        construct_dxomega(Partition.of(2), O)


def test_concat_example():
    left = DominoTableau.parse("011/235/235/466/4")
    right = DominoTableau.parse("11/22/3/3")
    assert str(concat(left, right)) == "01177/23588/2359/4669/4"


def test_concat_edge_cases():
    assert concat(D1, EMPTY_DOMINO) == D1
    assert concat(EMPTY_DOMINO, D1) == D1
    with pytest.raises(ParityError):
        concat(D1, d_n0(3))
    with pytest.raises(ConcatenationOrderError):
        concat(d_nk(2, 0), d_nk(6, 0))


def test_building_blocks():
    assert d_nk(6, 2) == D1
    assert str(d_nk(4, 0)) == "1/1/2/2"
    assert str(d_n0(3)) == "0/1/1"
    assert d_n0(4) == d_nk(4, 0)
    with pytest.raises(ParityError):
        d_nk(5, 1)
    with pytest.raises(RangeError):
        d_nk(4, 3)


def test_enumerate_syt_counts():
    shape = Partition.of(2, 2, 1, 1)
    tableaux = enumerate_syt(shape)
    assert len(tableaux) == 9
    assert len(set(tableaux)) == 9
    assert all(t.shape == shape for t in tableaux)


def test_enumerate_syt_reading_word_order():
    assert [t.rows for t in enumerate_syt(Partition.of(2, 1))] == [((1, 2), (3,)), ((1, 3), (2,))]
    words = [t.reading_word for t in enumerate_syt(Partition.of(3, 2))]
    assert words == [(1, 2, 3, 4, 5), (1, 2, 4, 3, 5), (1, 2, 5, 3, 4), (1, 3, 4, 2, 5),
                     (1, 3, 5, 2, 4)]


def test_enumerate_domino_sp6_shape():
    shape = Partition.of(2, 2, 1, 1)
    assert set(enumerate_domino(shape)) == {D1, D2, D3}
    assert set(enumerate_domino(shape, S)) == {D1, D2, D3}


def test_admissible_domino():
    for d in (D1, D2, D3):
        assert is_admissible_domino(d, S)
    assert is_admissible_domino(d_n0(3), O)
    assert not is_admissible_domino(d_n0(3), S)


def test_refine_to_syt():
    assert refine_to_syt(D1) == StandardYoungTableau(((1, 2), (3, 4), (5,), (6,)))
    assert refine_to_syt(d_n0(3)) == StandardYoungTableau(((1,), (2,), (3,)))


def test_from_shape_chain():
    d = DominoTableau.parse("03377/1448/1558/26/26")
    assert DominoTableau.from_shape_chain(d.shape_chain()) == d
    t = refine_to_syt(d)
    assert StandardYoungTableau.from_shape_chain(t.shape_chain()) == t


def test_from_shape_chain_rejects_non_dominoes():
    with pytest.raises(NotDominoError):
        DominoTableau.from_shape_chain([Partition(()), Partition.of(1, 1, 1)])
    with pytest.raises(NotDominoError):
        DominoTableau.from_shape_chain([Partition.of(2)])
    with pytest.raises(NotDominoError):
        DominoTableau.from_shape_chain([Partition.of(1, 1), Partition.of(2, 1, 1)])


def test_lemma1_applies():
    assert lemma1_applies(d_n0(3), d_nk(2, 0), O)
    assert not lemma1_applies(d_n0(3), d_nk(2, 0), S)
    assert lemma1_applies(d_nk(4, 1), d_nk(2, 0), S)


def test_predicted_component_count():
    assert predicted_component_count(Partition.of(1, 1, 1, 1), O, 4).count == 2
    assert predicted_component_count(Partition.of(2, 2, 1, 1), S, 6).count == 1
    assert predicted_component_count(Partition.of(3), O, 3).count == 1
    with pytest.raises(RangeError):
        predicted_component_count(Partition.of(3), O, 4)


def test_render_ascii():
    picture = render_ascii(D1.rows)
    assert picture.splitlines()[0] == "+---+---+"
    assert "| 3 |" in picture
    assert render_ascii(()) == "(empty)"


def test_construct_property_report_up_to_twelve():
    report = construct_property_report(12)
    assert report['passed'], report['failures'][:3]


@given(partition_strategy(max_n=14))
def test_construct_is_admissible(p):
    for kind in FormKind:
        if not is_admissible(p, kind):
            continue
        d = construct_dxomega(p, kind)
        assert d.shape == p
        assert is_admissible_domino(d, kind)


@given(partition_strategy(max_n=10))
def test_syt_count_matches_hook_length(p):
    tableaux = enumerate_syt(p)
    assert len(tableaux) == hook_length_count(p)
    words = [t.reading_word for t in tableaux]
    assert words == sorted(words)
    assert len(set(words)) == len(words)


@given(partition_strategy(max_n=9))
def test_domino_chain_roundtrip(p):
    tableaux = enumerate_domino(p)
    assume(tableaux)
    for d in tableaux[:5]:
        assert DominoTableau.from_shape_chain(d.shape_chain()) == d
        assert refine_to_syt(d).shape == p


@pytest.mark.parametrize("n", range(1, 11))
def test_refined_chain_interleaves_domino_chain(n):
    for p in partitions_of(n):
        for d in enumerate_domino(p):
            syt_chain = refine_to_syt(d).shape_chain()
            domino_chain = d.shape_chain()
            for i in range(d.m + 1):
                assert syt_chain[n - 2 * i] == domino_chain[d.m - i]


@settings(max_examples=60)
@given(domino_strategy(max_n=7), domino_strategy(max_n=6, even=True))
def test_lemma1_on_random_pairs(d1, d2):
    for kind in FormKind:
        if not lemma1_applies(d1, d2, kind):
            continue
        try:
            d = concat(d1, d2)
        except ConcatenationOrderError:
            continue
        assert is_admissible_domino(d, kind)


@settings(max_examples=40)
@given(domino_strategy(max_n=5), domino_strategy(max_n=4, even=True),
       domino_strategy(max_n=4, even=True))
def test_concat_is_associative(a, b, c):
    try:
        left = concat(concat(a, b), c)
        right = concat(a, concat(b, c))
    except ConcatenationOrderError:
        assume(False)
    assert left == right
