from __future__ import annotations

import pytest

from conftest import GREEN_LEAVES, RED_LEAVES, STUDENT_NODES, TEACHER_NODES
from roughmap.conceptmap import (
    ConceptMap,
    MapNode,
    NodeColor,
    compute_levels,
    integrate,
    validate_map,
)
from roughmap.errors import (
    CycleError,
    DuplicateNodeError,
    OrphanNodeError,
    RootCountError,
    RootMismatchError,
    UnknownParentError,
)


class TestValidateMap:
    def test_minimal_chain(self):
        cmap = validate_map([("S1", None), ("U1", "S1"), ("C1", "U1")])
        assert [n.id for n in cmap.nodes] == ["S1", "U1", "C1"]
        assert cmap.root.id == "S1"

    def test_two_cycle(self):
        with pytest.raises(CycleError):
            validate_map([("A", "B"), ("B", "A")])

    def test_multiple_roots(self):
        with pytest.raises(RootCountError, match="multiple"):
            validate_map([("S1", None), ("U1", None)])

    def test_duplicate_id_named(self):
        with pytest.raises(DuplicateNodeError, match="U1"):
            validate_map([("S1", None), ("U1", "S1"), ("U1", "S1")])

    def test_dangling_parent(self):
        with pytest.raises(UnknownParentError, match="GHOST"):
            validate_map([("S1", None), ("U1", "GHOST")])

    def test_cycle_disjoint_from_root(self):
        with pytest.raises(CycleError):
            validate_map([("R", None), ("A", "B"), ("B", "A")])

    def test_empty_input(self):
        with pytest.raises(RootCountError):
            validate_map([])

    def test_accepts_phrases_and_map_nodes(self):
        cmap = validate_map([("S1", None, None), ("U1", "S1", "part of"),
                             MapNode("C1", "U1")])
        assert cmap.by_id["U1"].phrase == "part of"
        assert cmap.by_id["C1"].phrase is None


class TestComputeLevels:
    def test_sample_fixture(self, teacher_map):
        levels = compute_levels(teacher_map)
        assert levels["S1"] == 0
        assert all(levels[u] == 1 for u in ("U1", "U2", "U3", "U4", "U5"))
        assert all(levels[f"C{i}"] == 2 for i in range(1, 15))
        assert max(levels.values()) == 2

    def test_single_node(self):
        assert compute_levels(validate_map([("S1", None)])) == {"S1": 0}

    def test_chain(self):
        cmap = validate_map([("a", None), ("b", "a"), ("c", "b"), ("d", "c")])
        assert compute_levels(cmap) == {"a": 0, "b": 1, "c": 2, "d": 3}


class TestIntegrate:
    def test_identical_maps_all_green(self, teacher_map):
        imap = integrate(teacher_map, teacher_map)
        assert imap.by_id["S1"].color is None
        assert all(n.color is NodeColor.GREEN for n in imap.nodes if n.parent is not None)

    def test_sample_fixture_colors(self, sample_integrated):
        colors = {n.id: n.color for n in sample_integrated.nodes}
        assert colors["S1"] is None
        for u in ("U1", "U3", "U4", "U5"):
            assert colors[u] is NodeColor.GREEN
        assert colors["U2"] is NodeColor.RED
        for leaf in GREEN_LEAVES:
            assert colors[leaf] is NodeColor.GREEN
        for leaf in RED_LEAVES:
            assert colors[leaf] is NodeColor.RED

    def test_node_set_is_union(self, teacher_map, student_map, sample_integrated):
        union = {n.id for n in teacher_map.nodes} | {n.id for n in student_map.nodes}
        assert {n.id for n in sample_integrated.nodes} == union
        assert len(sample_integrated.nodes) == 20

    def test_teacher_structure_wins_for_shared_nodes(self, sample_integrated):
        # the student misfiled U2 under U1; the merged tree keeps S1 as parent
        assert sample_integrated.by_id["U2"].parent == "S1"
        assert sample_integrated.max_level == 2

    def test_student_only_nodes_attach_green(self, teacher_map):
        extra = list(TEACHER_NODES) + [("Z1", "U1")]
        student = validate_map(extra, subject=teacher_map.subject)
        imap = integrate(teacher_map, student)
        assert imap.by_id["Z1"].color is NodeColor.GREEN
        assert imap.by_id["Z1"].level == 2
        others = [n for n in imap.nodes if n.parent is not None and n.id != "Z1"]
        assert all(n.color is NodeColor.GREEN for n in others)

    def test_student_only_chain_levels(self):
        teacher = validate_map([("S1", None), ("A", "S1")])
        student = validate_map([("S1", None), ("A", "S1"), ("X", "A"), ("Y", "X")])
        imap = integrate(teacher, student)
        assert imap.by_id["X"].level == 2
        assert imap.by_id["Y"].level == 3
        assert imap.by_id["Y"].color is NodeColor.GREEN

    def test_root_mismatch(self):
        a = validate_map([("S1", None), ("U1", "S1")])
        b = validate_map([("S2", None), ("U1", "S2")])
        with pytest.raises(RootMismatchError):
            integrate(a, b)

    def test_orphan_student_node(self):
        teacher = validate_map([("S1", None), ("U1", "S1")])
        # hand-built invalid map bypassing validate_map
        student = ConceptMap(
            subject="x",
            nodes=(MapNode("S1", None), MapNode("W", "GHOST")),
        )
        with pytest.raises(OrphanNodeError, match="GHOST"):
            integrate(teacher, student)

    def test_phrases_do_not_affect_colors(self, teacher_map):
        relabeled = validate_map(
            [(n.id, n.parent, "re-worded") for n in teacher_map.nodes],
            subject=teacher_map.subject,
        )
        imap = integrate(teacher_map, relabeled)
        assert all(n.color is NodeColor.GREEN for n in imap.nodes if n.parent is not None)


def test_fixture_files_match_inline_constants(teacher_map, student_map):
    # guards drift between data/ and the constants used by unit tests
    assert [(n.id, n.parent) for n in teacher_map.nodes] == TEACHER_NODES
    assert [(n.id, n.parent) for n in student_map.nodes] == STUDENT_NODES
