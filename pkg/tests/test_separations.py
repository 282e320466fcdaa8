"""
Tests of separations, chains, minimum separations and path-decompositions.
"""

import itertools
import typing
import pytest
from shared import custom_exception
from dipw_engine.digraph import digraph as dg
from dipw_engine.digraph import generators
from dipw_engine.digraph import vertex_set as vs
from dipw_engine.digraph.digraph import Digraph
from dipw_engine.oracle import vertex_separation_dp
from dipw_engine.separations import decomposition as dec
from dipw_engine.separations import min_separation as ms
from dipw_engine.separations import separation as sep_mod
from dipw_engine.separations.separation import Separation, SeparationChain


def _brute_force_gamma(graph: Digraph, s: int, t: int) -> float:
    middle = vs.members(graph.vertices & ~(s | t))
    best = ms.GAMMA_INFINITE
    for chosen in range(1 << len(middle)):
        x = s | vs.from_iterable(v for index, v in enumerate(middle) if (chosen >> index) & 1)
        boundary = graph.closed_out_neighborhood(x) & ~x
        if boundary & t == 0:
            best = min(best, boundary.bit_count())
    return best


def test_separation_properties() -> None:
    sep = Separation(0b0011, 0b1110)
    assert sep.order == sep_mod.sep_order(sep) == 1
    assert sep.separator == 0b0010
    assert sep.a_only == 0b0001
    assert sep.b_only == 0b1100
    assert str(sep) == "({0 1}, {1 2 3})"


def test_is_separation_on_path() -> None:
    graph = dg.directed_path(4)
    assert sep_mod.is_separation(graph, 0b0011, 0b1110)
    assert not sep_mod.is_separation(graph, 0b0011, 0b1100)
    assert not sep_mod.is_separation(graph, 0b0011, 0b0110)
    # edges from B \ A to A \ B are allowed
    assert sep_mod.is_separation(graph.reverse(), 0b0011, 0b1100)


def test_trivial_separations() -> None:
    graph = dg.directed_path(4)
    assert sep_mod.leftmost_trivial(graph, 0b0001) == Separation(0b0011, 0b1110)
    assert sep_mod.rightmost_trivial(graph, 0b1000) == Separation(0b0111, 0b1100)
    with pytest.raises(custom_exception.DipwInputError):
        sep_mod.require_disjoint(0b0011, 0b0010)


def test_chain_concatenation() -> None:
    first = Separation(0b001, 0b111)
    second = Separation(0b111, 0b111)
    chain = SeparationChain((first,))
    assert (chain + second).seps == (first, second)
    assert (second + chain).seps == (second, first)
    assert (chain + chain).order == 1
    assert SeparationChain().order == 0


def test_ordering_chain_is_gapless_and_has_ordering_width() -> None:
    graph = dg.directed_cycle(4)
    chain = sep_mod.ordering_to_chain(graph, [0, 1, 2, 3])
    report = sep_mod.chain_predicates(graph, chain)
    assert report.is_chain and report.is_st_chain and report.is_gapless and report.is_tight
    assert report.order == vertex_separation_dp.ordering_width(graph, [0, 1, 2, 3]) == 1
    assert len(chain) == 5
    with pytest.raises(custom_exception.DipwInputError):
        sep_mod.ordering_to_chain(graph, [0, 1, 1, 3])


def test_chain_predicates_reject_broken_nesting() -> None:
    graph = dg.edgeless(2)
    chain = SeparationChain((Separation(0b11, 0b11), Separation(0b01, 0b11)))
    report = sep_mod.chain_predicates(graph, chain)
    assert not report.is_chain and not report.is_gapless and not report.is_nice
    assert not sep_mod.chain_predicates(graph, SeparationChain()).is_chain


def test_nice_versus_gapless() -> None:
    graph = dg.edgeless(3)
    chain = SeparationChain((Separation(0b000, 0b111), Separation(0b011, 0b110)))
    report = sep_mod.chain_predicates(graph, chain)
    assert report.is_gapless and not report.is_nice


def test_chain_text_round_trip_and_errors() -> None:
    chain = sep_mod.ordering_to_chain(dg.directed_path(3), [2, 1, 0])
    assert sep_mod.parse_chain(sep_mod.format_chain(chain), 3) == chain
    with pytest.raises(custom_exception.GraphFormatError, match="line 1"):
        sep_mod.parse_chain("0 1 2\n", 3)
    with pytest.raises(custom_exception.GraphFormatError, match="line 2"):
        sep_mod.parse_chain("# chain\n0 | 5\n", 3)


def test_min_separation_on_path() -> None:
    graph = dg.directed_path(4)
    assert ms.min_st_separation(graph, [0], [3]) == (Separation(0b0011, 0b1110), 1)
    assert ms.rightmost_min_st_separation(graph, [0], [3]) == (Separation(0b0111, 0b1100), 1)
    assert ms.gamma(graph, [0], [3]) == 1
    assert ms.gamma(graph, [0], [1]) == ms.GAMMA_INFINITE
    assert ms.min_st_separation(graph, [0], [1]) is None
    assert ms.gamma(graph.reverse(), [0], [3]) == 0


def test_min_separation_rejects_overlap() -> None:
    with pytest.raises(custom_exception.DipwInputError):
        ms.min_st_separation(dg.directed_path(3), [0, 1], [1])


def test_gamma_matches_brute_force() -> None:
    for seed in range(30):
        graph = generators.random_digraph(6, 0.35, seed)
        for s, t in [(0b000001, 0b100000), (0b000011, 0b110000), (vs.EMPTY, 0b001000)]:
            found = ms.min_st_separation(graph, s, t)
            expected = _brute_force_gamma(graph, s, t)
            if found is None:
                assert expected == ms.GAMMA_INFINITE
                continue
            separation, order = found
            assert order == expected
            assert sep_mod.is_st_separation(graph, separation, s, t)
            right, right_order = ms.rightmost_min_st_separation(graph, s, t)
            assert right_order == order
            assert vs.is_subset(separation.a, right.a)


def test_mu_values() -> None:
    graph = dg.directed_path(4)
    assert ms.mu(graph, [0], [3]) == 2
    assert ms.mu(graph, vs.EMPTY, vs.EMPTY) == 8
    assert ms.mu_prime(graph, [0], [3]) == 3
    assert ms.mu_prime(dg.edgeless(2), [0], [1]) == 0


def test_nontrivial_min_separation() -> None:
    short = dg.directed_path(4)
    assert ms.find_nontrivial_min_separation(short, [0], [3]) is None
    long = dg.directed_path(5)
    found = ms.find_nontrivial_min_separation(long, [0], [4])
    assert found is not None
    assert found.order == 1
    assert not ms.is_trivial(long, found, 0b00001, 0b10000)
    with pytest.raises(custom_exception.DipwInputError):
        ms.find_nontrivial_min_separation(long, [0], [1])


def test_nontrivial_search_agrees_with_pair_test() -> None:
    for seed in range(40):
        graph = generators.random_h_semicomplete(7, 2, seed)
        for s, t in [(0b0000001, 0b1000000), (vs.EMPTY, vs.EMPTY), (0b0000011, vs.EMPTY)]:
            if ms.min_st_separation(graph, s, t) is None:
                continue
            linear = ms.find_nontrivial_min_separation(graph, s, t)
            pairs = ms.find_nontrivial_min_separation_by_pairs(graph, s, t)
            assert (linear is None) == (pairs is None)
            if linear is not None:
                assert linear.order == ms.gamma(graph, s, t)
                assert linear.a_only != s and linear.b_only != t


def test_validate_decomposition_reports_first_violation() -> None:
    graph = dg.directed_path(3)
    assert dec.validate_decomposition(graph, dec.PathDecomposition((0b100, 0b110, 0b011))).valid
    missing = dec.validate_decomposition(graph, dec.PathDecomposition((0b110,)))
    assert not missing.valid and missing.violation.startswith("cover")
    wrong_direction = dec.validate_decomposition(graph, dec.PathDecomposition((0b001, 0b010, 0b100)))
    assert not wrong_direction.valid and wrong_direction.violation.startswith("edge 0->1")
    scattered = dec.validate_decomposition(dg.edgeless(2), dec.PathDecomposition((0b01, 0b10, 0b01)))
    assert not scattered.valid and scattered.violation.startswith("contiguity")


def test_chain_and_decomposition_conversions() -> None:
    graph = dg.directed_cycle(4)
    chain = sep_mod.ordering_to_chain(graph, [0, 1, 2, 3])
    decomposition = dec.chain_to_decomposition(graph, chain)
    report = dec.validate_decomposition(graph, decomposition)
    assert report.valid and report.width <= chain.order
    back = dec.decomposition_to_chain(graph, decomposition)
    assert sep_mod.chain_predicates(graph, back).is_st_chain
    assert dec.chain_to_decomposition(dg.edgeless(2), SeparationChain((Separation(0b11, 0b11),))).bags == (0b11,)
    with pytest.raises(custom_exception.DipwInputError, match="gapless"):
        dec.chain_to_decomposition(graph, SeparationChain((Separation(0b1111, 0b0000),)))


def test_decomposition_text_format() -> None:
    decomposition = dec.PathDecomposition((0b011, vs.EMPTY, 0b110))
    text = dec.format_decomposition(decomposition)
    assert text == "width 1\nbags 3\n0 1\n\n1 2\n"
    assert dec.parse_decomposition(text, 3) == decomposition
    with pytest.raises(custom_exception.GraphFormatError, match="declared width"):
        dec.parse_decomposition("width 0\nbags 1\n0 1\n", 3)
    with pytest.raises(custom_exception.GraphFormatError, match="line 1"):
        dec.parse_decomposition("bags 1\n0\n", 3)
    with pytest.raises(custom_exception.GraphFormatError, match="line 3"):
        dec.parse_decomposition("width 0\nbags 1\n7\n", 3)


def _all_separations(graph: Digraph) -> typing.List[Separation]:
    found = []
    for sides in itertools.product(range(3), repeat=graph.n):
        a = vs.from_iterable(v for v, side in enumerate(sides) if side != 1)
        b = vs.from_iterable(v for v, side in enumerate(sides) if side != 0)
        if sep_mod.is_separation(graph, a, b):
            found.append(Separation(a, b))
    return found


def _disjoint_pairs(n: int) -> typing.Iterator[typing.Tuple[int, int]]:
    for sides in itertools.product(range(3), repeat=n):
        yield (
            vs.from_iterable(v for v, side in enumerate(sides) if side == 1),
            vs.from_iterable(v for v, side in enumerate(sides) if side == 2),
        )


def _check_uncrossing(graph: Digraph) -> None:
    separations = _all_separations(graph)
    for s, t in _disjoint_pairs(graph.n):
        found = ms.min_st_separation(graph, s, t)
        if found is None:
            continue
        minimum, _ = found
        for sep in separations:
            if not sep_mod.is_st_separation(graph, sep, s, t):
                continue
            assert vs.is_subset(graph.closed_out_neighborhood(s), sep.a), f"{graph!r} S={s} {sep}"
            meet = Separation(sep.a & minimum.a, sep.b | minimum.b)
            join = Separation(sep.a | minimum.a, sep.b & minimum.b)
            for uncrossed in (meet, join):
                assert sep_mod.is_st_separation(graph, uncrossed, s, t), f"{graph!r} {sep} {minimum}"
                assert uncrossed.order <= sep.order


def test_uncrossing_with_a_minimum_separation() -> None:
    for seed in range(30):
        _check_uncrossing(generators.random_digraph(4, 0.2 + 0.1 * (seed % 6), seed))


@pytest.mark.slow
def test_uncrossing_with_a_minimum_separation_on_five_vertices() -> None:
    for seed in range(40):
        _check_uncrossing(generators.random_digraph(5, 0.2 + 0.1 * (seed % 6), seed))


def test_separator_sizes_exchange_between_crossing_separations() -> None:
    for seed in range(20):
        graph = generators.random_digraph(4, 0.3, seed)
        separations = _all_separations(graph)
        for first in separations:
            for second in separations:
                meet = (first.a & second.a) & (first.b | second.b)
                join = (first.a | second.a) & (first.b & second.b)
                assert first.order + second.order == meet.bit_count() + join.bit_count()
