"""Mildness certificates: rank and circuit criteria, partition search."""

import itertools
import random

import pytest

from mild2.linking import Presentation, QuadraticRelator, koch_presentation
from mild2.mildness import (
    MAX_ENUMERATION_D,
    MildnessReport,
    Partition,
    check_mild,
    circuit_criterion,
    find_mild_partition,
    parity_partition,
    rank_criterion,
)

EX1 = (41, 13, 5, 3, 19)
EX2 = (5, 29, 7, 11, 3)


def reduced_relators(primes):
    from mild2.linking import eliminate_generator

    return eliminate_generator(koch_presentation(primes)).relators


def cycle_relators(d, a=None):
    """Relators rho_i = a_i xi^2 + [xi, x(i+1 mod d)] on a d-cycle."""
    a = a if a is not None else tuple(1 - i % 2 for i in range(1, d + 1))  # a_i = 0 for odd i
    out = []
    for i in range(1, d + 1):
        squares = tuple(a[i - 1] if k == i else 0 for k in range(1, d + 1))
        j = i % d + 1
        out.append(QuadraticRelator(d, squares, {(min(i, j), max(i, j))}, owner=i))
    return out


def test_partition_validation():
    part = Partition((3, 1), (2, 4))
    assert part.S == (1, 3) and part.Sp == (2, 4)
    assert part.to_json_dict() == {"S": [1, 3], "Sp": [2, 4]}
    with pytest.raises(ValueError):
        Partition((1, 2), (2, 3))
    with pytest.raises(ValueError):
        Partition((1, 1), (2,))


def test_parity_partition():
    assert parity_partition(4) == Partition((1, 3), (2, 4))
    assert parity_partition(5) == Partition((1, 3, 5), (2, 4))


def test_rank_criterion_on_reduced_examples():
    rel1 = reduced_relators(EX1)
    assert rank_criterion(rel1, Partition((1, 3), (2, 4)))
    rel2 = reduced_relators(EX2)
    assert rank_criterion(rel2, Partition((1, 2), (3, 4)))
    # swapping the roles of S and Sp need not certify: x4^2 = [x4,.] terms
    assert not rank_criterion(rel2, Partition((3, 4), (1, 2)))


def test_rank_criterion_membership_requirement():
    # a relator with a commutator inside S x S fails membership
    rel = QuadraticRelator(4, (0, 0, 0, 0), {(1, 3)}, owner=1)
    assert not rank_criterion((rel,), Partition((1, 3), (2, 4)))
    # squares at S indices violate membership
    sq = QuadraticRelator(4, (1, 0, 0, 0), frozenset(), owner=1)
    assert not rank_criterion((sq,), Partition((1, 3), (2, 4)))
    # a square at an Sp index passes membership but projects to a zero row,
    # so a relator consisting only of it fails on rank instead
    sq_p = QuadraticRelator(4, (0, 1, 0, 0), frozenset(), owner=2)
    assert not rank_criterion((sq_p,), Partition((1, 3), (2, 4)))
    # ... and an Sp square accompanying an honest S-Sp bracket is harmless
    mixed_ok = QuadraticRelator(4, (0, 1, 0, 0), {(1, 2)}, owner=2)
    assert rank_criterion((mixed_ok,), Partition((1, 3), (2, 4)))


def test_rank_criterion_rank_requirement():
    # two copies of the same image are dependent
    r1 = QuadraticRelator(4, (0, 0, 0, 0), {(1, 2)}, owner=1)
    r2 = QuadraticRelator(4, (0, 0, 0, 0), {(1, 2), (1, 4)}, owner=2)
    r3 = QuadraticRelator(4, (0, 0, 0, 0), {(1, 4)}, owner=3)
    assert rank_criterion((r1, r2), Partition((1, 3), (2, 4)))
    assert not rank_criterion((r1, r2, r3), Partition((1, 3), (2, 4)))  # r3 = r1 + r2


def test_rank_criterion_row_operation_invariance():
    rng = random.Random(13)
    rels = list(reduced_relators(EX1))
    part = Partition((1, 3), (2, 4))
    assert rank_criterion(rels, part)
    for _ in range(20):
        i, j = rng.sample(range(len(rels)), 2)
        mixed = list(rels)
        mixed[i] = QuadraticRelator(
            4,
            tuple(a ^ b for a, b in zip(rels[i].squares, rels[j].squares)),
            rels[i].comms ^ rels[j].comms,
        )
        assert rank_criterion(mixed, part)


def test_rank_criterion_empty_cases():
    assert rank_criterion((), Partition((1,), (2,)))
    with pytest.raises(ValueError):
        rank_criterion(reduced_relators(EX1), Partition((1,), (2,)))  # does not cover 1..4


def test_circuit_criterion_on_examples():
    assert circuit_criterion(reduced_relators(EX1)) is True
    # Example 2's reduced relators are not a circuit (odd-odd links present)
    assert circuit_criterion(reduced_relators(EX2)) is not True
    for d in (4, 6):
        assert circuit_criterion(cycle_relators(d)) is True


def test_circuit_criterion_shape_preconditions():
    assert circuit_criterion(cycle_relators(3)) is None  # odd d
    assert circuit_criterion(cycle_relators(4)[:3]) is None  # m != d
    # non-Koch relator shape
    rel = QuadraticRelator(4, (0, 0, 0, 0), {(1, 2), (3, 4)}, owner=1)
    rels = cycle_relators(4)
    assert circuit_criterion((rel,) + tuple(rels[1:])) is None


def test_circuit_criterion_condition_violations():
    # (a) a square on an odd generator
    bad_a = cycle_relators(4, a=(1, 1, 0, 1))
    assert circuit_criterion(bad_a) is False
    # (b) an odd-odd link
    rels = cycle_relators(4)
    bad_b = list(rels)
    bad_b[0] = QuadraticRelator(4, rels[0].squares, rels[0].comms | {(1, 3)}, owner=1)
    assert circuit_criterion(bad_b) is False
    # (c) a missing cycle edge
    bad_c = list(rels)
    bad_c[1] = QuadraticRelator(4, rels[1].squares, {(2, 4)}, owner=2)
    assert circuit_criterion(bad_c) is False
    # (d) the reverse product must vanish: make every reverse edge present
    full = []
    for i in range(1, 5):
        comms = {(min(i, i % 4 + 1), max(i, i % 4 + 1)), (min(i, (i - 2) % 4 + 1), max(i, (i - 2) % 4 + 1))}
        squares = tuple(1 if (k == i and i % 2 == 0) else 0 for k in range(1, 5))
        full.append(QuadraticRelator(4, squares, comms, owner=i))
    assert circuit_criterion(full) is False


def test_find_mild_partition_prefers_parity():
    part = find_mild_partition(reduced_relators(EX1))
    assert part == Partition((1, 3), (2, 4))
    part2 = find_mild_partition(reduced_relators(EX2))
    assert part2 == Partition((1, 2), (3, 4))


def test_find_mild_partition_search_order():
    # relators on 3 generators where {2} works as Sp and is found first
    r1 = QuadraticRelator(3, (0, 0, 0), {(1, 2)}, owner=1)
    r2 = QuadraticRelator(3, (0, 0, 0), {(2, 3)}, owner=3)
    part = find_mild_partition((r1, r2))
    assert part == Partition((1, 3), (2,))


def test_find_mild_partition_none_and_empty():
    control = (
        QuadraticRelator(2, (1, 0), frozenset()),
        QuadraticRelator(2, (0, 0), {(1, 2)}),
    )
    assert find_mild_partition(control) is None
    assert find_mild_partition(()) == Partition((), ())


def test_find_mild_partition_guard():
    rels = cycle_relators(MAX_ENUMERATION_D + 2)
    with pytest.raises(ValueError, match="limited to d"):
        find_mild_partition(rels)


def test_check_mild_verdicts():
    rep1 = check_mild(koch_presentation(EX1))
    assert rep1.verdict == "mild" and rep1.criterion == "circuit"
    assert rep1.witness == Partition((1, 3), (2, 4))
    assert rep1.oracle_depth is None
    rep2 = check_mild(koch_presentation(EX2))
    assert rep2.verdict == "mild" and rep2.criterion == "rank"
    assert rep2.witness == Partition((1, 2), (3, 4))
    trivial = check_mild(koch_presentation((17, 13)))
    assert trivial.verdict == "inapplicable" and trivial.criterion == "none"


def test_check_mild_not_shown():
    control = Presentation(
        2,
        (
            QuadraticRelator(2, (1, 0), frozenset(), owner=1),
            QuadraticRelator(2, (0, 0), {(1, 2)}, owner=2),
        ),
    )
    rep = check_mild(control)
    assert rep.verdict == "not_shown" and rep.criterion == "none" and rep.witness is None


def test_check_mild_with_oracle_note():
    rep = check_mild(koch_presentation(EX1), oracle_depth=4)
    assert rep.oracle_depth == 4
    assert any("oracle" in note and "match" in note for note in rep.notes)
    rep_pi = check_mild(koch_presentation(EX1), oracle_depth=4, oracle_ring="F2pi")
    assert any("F2pi" in note for note in rep_pi.notes)


def test_check_mild_eliminates_first():
    rep = check_mild(koch_presentation(EX1))
    assert any("eliminated x5" in note for note in rep.notes)


def test_mildness_report_serialization():
    rep = check_mild(koch_presentation(EX1))
    blob = rep.to_json_dict()
    assert blob["verdict"] == "mild" and blob["criterion"] == "circuit"
    assert blob["witness"] == {"S": [1, 3], "Sp": [2, 4]}
    text = rep.text()
    assert "verdict = mild" in text and "criterion = circuit" in text


def test_circuit_implies_rank_at_parity():
    rng = random.Random(29)
    for _ in range(40):
        d = rng.choice((4, 6))
        # random Koch-shaped relators satisfying the circuit conditions
        ell = [[0] * (d + 1) for _ in range(d + 1)]
        for i in range(1, d + 1):
            ell[i][i % d + 1] = 1
        # optional extra even-odd links beyond the cycle
        for i in range(1, d + 1, 2):
            for j in range(2, d + 1, 2):
                if abs(i - j) != 1 and (i, j) != (1, d) and rng.random() < 0.3:
                    ell[i][j] = 1
        rels = []
        for i in range(1, d + 1):
            squares = tuple(1 if (k == i and i % 2 == 0 and rng.random() < 0.5) else 0 for k in range(1, d + 1))
            comms = {(min(i, j), max(i, j)) for j in range(1, d + 1) if ell[i][j]}
            rels.append(QuadraticRelator(d, squares, comms, owner=i))
        if circuit_criterion(rels) is True:
            assert rank_criterion(rels, parity_partition(d)), rels
