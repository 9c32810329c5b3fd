import numpy as np
import pytest

from alexq import (
    CayleyMatrix,
    Contradiction,
    NotAnAutomorphism,
    PartialCayley,
    alexander_presentations,
    alexander_quandle,
    apply_lemma_constraints,
    automorphism_group,
    cyclic_group,
    dihedral_quandle,
    find_zero,
    is_abelian,
    is_left_distributive,
    propagate_group_axioms,
    quandle_violation,
    seed_partial,
    trivial_quandle,
    zero_fill,
)
from alexq.group import nonabelian_order6
from alexq.search import CONTRADICTION, NO_VALID_GROUP, NOT_ABELIAN, SUCCESS

import oracles


def test_seed_partial():
    assert seed_partial(trivial_quandle(1)).tolist() == [[1]]
    assert seed_partial(trivial_quandle(3)).tolist() == [[1, 2, 3], [2, 0, 0], [3, 0, 0]]
    s = seed_partial(trivial_quandle(4))
    assert s.unknowns() == 9
    assert s.tolist()[0] == [1, 2, 3, 4]


def test_forced_cells_on_klein_quandle(klein_quandle, klein):
    partial = apply_lemma_constraints(klein_quandle, seed_partial(klein_quandle))
    assert partial.unknowns() < 9
    known = partial.table > 0
    # every forced cell agrees with the Klein table
    assert np.array_equal(partial.table[known], klein.table[known])
    assert klein in zero_fill(partial)


def test_forced_cells_trivial_quandle_adds_nothing():
    q = trivial_quandle(4)
    seed = seed_partial(q)
    assert apply_lemma_constraints(q, seed) == propagate_group_axioms(seed)
    assert apply_lemma_constraints(q, seed) == seed


def test_forced_cells_non_alexander(non_alexander):
    with pytest.raises(Contradiction) as info:
        apply_lemma_constraints(non_alexander, seed_partial(non_alexander))
    assert info.value.cells


def test_propagate_examples(klein):
    full = PartialCayley(klein.table)
    assert propagate_group_axioms(full) == full
    assert propagate_group_axioms(PartialCayley([[1, 2], [2, 0]])).tolist() == [[1, 2], [2, 1]]
    got = propagate_group_axioms(PartialCayley([[1, 2, 3], [2, 3, 0], [3, 0, 0]]))
    assert got.tolist() == cyclic_group(3).tolist()


def test_propagate_detects_contradictions():
    with pytest.raises(Contradiction):
        propagate_group_axioms(PartialCayley([[1, 2, 3], [2, 2, 0], [3, 0, 0]]))
    with pytest.raises(Contradiction):
        # commutativity clash
        propagate_group_axioms(PartialCayley([[1, 2, 3], [2, 0, 1], [3, 2, 0]]))


def test_partial_cayley_rejects_bad_shapes():
    with pytest.raises(ValueError):
        PartialCayley([[1, 2]])
    with pytest.raises(ValueError):
        PartialCayley([[1, 3], [2, 0]])


def test_find_zero(klein):
    assert find_zero(PartialCayley(klein.table)) is None
    assert find_zero(seed_partial(trivial_quandle(3))) == (2, 2)
    assert find_zero(PartialCayley([[1, 2, 3], [2, 1, 0], [3, 0, 0]])) == (2, 3)


def test_zero_fill_small():
    assert zero_fill(seed_partial(trivial_quandle(1))) == [cyclic_group(1)]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_zero_fill_matches_exhaustive_tables(n):
    got = zero_fill(seed_partial(trivial_quandle(n)))
    assert len(got) == len(set(got))
    assert sorted(tuple(map(tuple, c.tolist())) for c in got) == oracles.brute_force_abelian_tables(n)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_zero_fill_matches_relabelings(n):
    got = zero_fill(seed_partial(trivial_quandle(n)))
    assert sorted(tuple(map(tuple, c.tolist())) for c in got) == list(oracles.all_abelian_tables(n))


def test_zero_fill_order_is_deterministic():
    a = zero_fill(seed_partial(trivial_quandle(6)))
    b = zero_fill(seed_partial(trivial_quandle(6)))
    assert a == b


def test_zero_fill_extends_input(klein_quandle):
    partial = apply_lemma_constraints(klein_quandle, seed_partial(klein_quandle))
    known = partial.table > 0
    for c in zero_fill(partial):
        assert np.array_equal(c.table[known], partial.table[known])


def test_alexander_quandle_examples(klein):
    assert alexander_quandle(klein, oracles.KLEIN_PHI).tolist() == oracles.KLEIN_QUANDLE
    for n in range(1, 7):
        assert alexander_quandle(cyclic_group(n), range(1, n + 1)) == trivial_quandle(n)
    assert alexander_quandle(cyclic_group(3), [1, 3, 2]) == dihedral_quandle(3)


def test_alexander_quandle_output_properties():
    for c in [cyclic_group(5), cyclic_group(6), CayleyMatrix(oracles.KLEIN)]:
        for phi in automorphism_group(c):
            q = alexander_quandle(c, phi)
            assert quandle_violation(q) is None
            assert is_abelian(q)
            assert is_left_distributive(q)
            assert q.tolist() == oracles.alexander_table(c.tolist(), phi)


def test_alexander_quandle_rejects_bad_phi():
    with pytest.raises(NotAnAutomorphism):
        alexander_quandle(cyclic_group(4), [1, 3, 2, 4])
    with pytest.raises(NotAnAutomorphism):
        alexander_quandle(nonabelian_order6(), range(1, 7))


def test_presentations_klein_quandle(klein_quandle, klein):
    out = alexander_presentations(klein_quandle)
    assert out.status == SUCCESS
    pairs = {(p.cayley, p.phi) for p in out.presentations}
    assert (klein, oracles.KLEIN_PHI) in pairs
    expected = oracles.brute_force_presentations(oracles.KLEIN_QUANDLE, oracles.brute_force_abelian_tables(4))
    assert {(tuple(map(tuple, c.tolist())), phi) for c, phi in pairs} == expected


def test_presentations_non_alexander(non_alexander):
    out = alexander_presentations(non_alexander)
    assert out.presentations == []
    assert out.status == CONTRADICTION
    assert not out.is_alexander


def test_presentations_trivial4():
    out = alexander_presentations(trivial_quandle(4))
    assert out.status == SUCCESS
    assert len(out.presentations) == 4
    assert all(p.phi == (1, 2, 3, 4) for p in out.presentations)
    tables = sorted(tuple(map(tuple, p.cayley.tolist())) for p in out.presentations)
    assert tables == oracles.brute_force_abelian_tables(4)


def test_presentations_not_abelian():
    from alexq import conj_quandle

    out = alexander_presentations(conj_quandle(nonabelian_order6()))
    assert out.status == NOT_ABELIAN
    assert out.diagnostics


def test_presentations_single_element():
    out = alexander_presentations([[1]])
    assert out.status == SUCCESS
    assert [(p.cayley.tolist(), p.phi) for p in out.presentations] == [([[1]], (1,))]


def test_no_valid_group_status(monkeypatch, klein_quandle):
    # no quandle of order <= 5 reaches this branch (the propagation phase rejects
    # them all first), so force the final automorphism check to fail
    import alexq.search

    monkeypatch.setattr(alexq.search, "is_group_automorphism", lambda phi, c: False)
    out = alexander_presentations(klein_quandle)
    assert out.status == NO_VALID_GROUP
    assert out.presentations == []
    assert out.completions >= 1


def test_status_census_small_orders():
    from collections import Counter

    from alexq import enumerate_quandles

    census = {n: Counter(alexander_presentations(q).status for q in enumerate_quandles(n)) for n in (3, 4)}
    assert census[3] == {CONTRADICTION: 3, SUCCESS: 2}
    assert census[4] == {CONTRADICTION: 26, SUCCESS: 6, NOT_ABELIAN: 4}
    for n in (3, 4):
        tables = oracles.brute_force_abelian_tables(n)
        everything = oracles.brute_force_quandles(n)
        assert census[n][SUCCESS] == sum(bool(oracles.brute_force_presentations(q, tables)) for q in everything)
        assert census[n][NOT_ABELIAN] == sum(not oracles.is_medial(q) for q in everything)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_pruned_and_plain_search_agree(n):
    from alexq import enumerate_quandles

    if n <= 4:
        quandles = list(enumerate_quandles(n))
    else:
        c = cyclic_group(n)
        quandles = [alexander_quandle(c, phi) for phi in automorphism_group(c)]
    for q in quandles:
        a = alexander_presentations(q)
        b = alexander_presentations(q, prune=False)
        assert a.status == b.status
        assert a.presentations == b.presentations


def _key(p):
    return tuple(map(tuple, p.cayley.tolist())), p.phi


@pytest.mark.parametrize("n", range(1, 7))
def test_round_trip_every_labeled_table(n):
    """Every (c, phi) of order <= 6 is recovered exactly from its quandle."""
    for table in oracles.all_abelian_tables(n):
        c = CayleyMatrix(table)
        for phi in automorphism_group(c):
            q = alexander_quandle(c, phi)
            out = alexander_presentations(q)
            assert out.status == SUCCESS
            keys = [_key(p) for p in out.presentations]
            assert (tuple(map(tuple, table)), tuple(phi)) in keys
            assert len(keys) == len(set(keys))
            for p in out.presentations:
                assert alexander_quandle(p.cayley, p.phi) == q
