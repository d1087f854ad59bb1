import itertools

import pytest

from planepoem.diffset import DifferenceSet, develop
from planepoem.plane import (
    IncidenceStructure,
    IdenticalArguments,
    MalformedStructure,
    NotAPlane,
    build_field_plane,
    check_axioms,
    from_doc,
    line_through,
    meet,
    regularity_stats,
    to_doc,
)


def _oracle_point_count(q):
    # independent enumeration: count triples over [0,q)^3 whose leftmost
    # nonzero coordinate is 1, using plain integers (prime q only)
    count = 0
    for coords in itertools.product(range(q), repeat=3):
        nz = [c for c in coords if c != 0]
        if nz and nz[0] == 1:
            count += 1
    return count


def test_fano_counts():
    s = build_field_plane(2)
    assert s.point_count == 7
    assert len(s.lines) == 7
    assert all(len(line) == 3 for line in s.lines)


@pytest.mark.parametrize("q", [3, 5])
def test_counts_against_enumeration_oracle(q):
    s = build_field_plane(q)
    assert s.point_count == _oracle_point_count(q)
    assert len(s.lines) == s.point_count
    assert all(len(line) == q + 1 for line in s.lines)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_field_planes_satisfy_axioms(q):
    s = build_field_plane(q)
    report = check_axioms(s)
    assert report.all_ok
    stats = regularity_stats(s)
    assert stats["points"] == stats["lines"] == q * q + q + 1
    assert stats["points_per_line"] == {q + 1}
    assert stats["lines_per_point"] == {q + 1}
    assert stats["order"] == q


@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_odd_order_lines_have_even_size(q):
    s = build_field_plane(q)
    assert all(len(line) % 2 == 0 for line in s.lines)


def test_duality_spot_check():
    for q in (2, 3, 4):
        s = build_field_plane(q)
        line_sizes = sorted(len(line) for line in s.lines)
        point_degrees = sorted(len(s.lines_through(p)) for p in range(s.point_count))
        assert line_sizes == point_degrees


def test_axioms_fail_with_witness_when_line_deleted():
    fano = build_field_plane(2)
    broken = IncidenceStructure(point_count=7, lines=fano.lines[1:])
    report = check_axioms(broken)
    assert not report.axiom1_ok
    kinds = {w[0] for w in report.witnesses}
    assert "axiom1" in kinds
    # the witness pair comes from the deleted line
    witness = next(w for w in report.witnesses if w[0] == "axiom1")
    assert set(witness[1:3]) <= set(fano.lines[0])


def test_duplicate_lines_rejected_at_construction():
    with pytest.raises(MalformedStructure):
        IncidenceStructure(point_count=3, lines=((0, 1), (0, 1)))


def test_unsorted_line_rejected():
    with pytest.raises(MalformedStructure):
        IncidenceStructure(point_count=3, lines=((1, 0),))


def test_out_of_range_point_rejected():
    with pytest.raises(MalformedStructure):
        IncidenceStructure(point_count=3, lines=((0, 5),))


def test_degenerate_structure_has_undefined_order():
    s = IncidenceStructure(point_count=3, lines=((0, 1, 2),))
    assert regularity_stats(s)["order"] is None


def test_line_through_and_meet_on_fano():
    s = develop(DifferenceSet(7, (0, 1, 3)))
    li = line_through(s, 0, 1)
    assert s.lines[li] == (0, 1, 3)
    l1 = s.lines.index((0, 1, 3))
    l2 = s.lines.index((0, 4, 5))
    assert meet(s, l1, l2) == 0
    l3 = s.lines.index((1, 5, 6))
    l4 = s.lines.index((3, 4, 6))
    assert meet(s, l3, l4) == 6


def test_line_through_identical_points():
    s = build_field_plane(2)
    with pytest.raises(IdenticalArguments):
        line_through(s, 2, 2)


def test_queries_require_a_plane():
    s = IncidenceStructure(point_count=3, lines=((0, 1, 2),))
    with pytest.raises(NotAPlane):
        line_through(s, 0, 1)


def test_developed_fano_isomorphic_to_field_plane():
    dev = develop(DifferenceSet(7, (0, 1, 3)))
    pg = build_field_plane(2)
    pg_lines = {frozenset(line) for line in pg.lines}
    found = False
    for perm in itertools.permutations(range(7)):
        mapped = {frozenset(perm[p] for p in line) for line in dev.lines}
        if mapped == pg_lines:
            found = True
            break
    assert found


def test_doc_round_trip():
    s = build_field_plane(3)
    doc = to_doc(s)
    assert list(doc.keys()) == ["origin", "point_count", "point_labels", "lines"]
    assert from_doc(doc) == s


def test_from_doc_rejects_garbage():
    with pytest.raises(MalformedStructure):
        from_doc({"lines": [[0, 1]]})
