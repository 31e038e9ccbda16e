"""
Unit tests for semicubical sets.

Tests cover:
- Q(S,E,I) construction: grades, faces, max_dim cutoff
- Face operator errors
- Cubical-identity validation, including a corrupted face table
- Restriction, union, intersection, subcomplex test, components
- Structured dump
"""

import pytest

from src.cubical.builder import CubeBuilder, build_q
from src.cubical.dump import dump, render_dump
from src.cubical.semicubical_set import SemicubicalSet, face
from src.cubical.subcomplexes import (
    connected_components,
    intersection,
    is_subcomplex,
    one_skeleton,
    restrict_to_events,
    union,
)
from src.cubical.validator import validate
from src.models.cube import Cube
from src.models.elementary_net import Marking
from src.models.state_space import StateSpace
from src.net.explorer import explore
from src.pipelines.generator import pipeline
from src.utils.errors import (
    FaceIndexError,
    IncompatibleComplexError,
    StateSpaceError,
    UnknownEventError,
)


def cube(base: str, *events: str) -> Cube:
    return Cube(base=Marking.from_string(base), events=events)


@pytest.fixture
def q3() -> SemicubicalSet:
    """Q(P_3) over its reachable states."""
    return build_q(explore(pipeline(3)))


# =============================================================================
# Builder Tests
# =============================================================================

class TestBuilder:
    """Tests for the Q(S,E,I) builder."""

    def test_p3_grades(self, q3):
        """P_3 has 4 states, 5 edges and one square."""
        assert q3.grade_sizes() == (4, 5, 1)
        assert q3.dimension == 2
        assert q3.grade(2) == (cube("01", "t1", "t3"),)
        assert q3.euler_characteristic() == 0

    def test_canonical_order(self, q3):
        """Cubes are ordered by base index, then event positions."""
        assert [str(c) for c in q3.grade(1)] == [
            "(00, t1)", "(01, t1)", "(01, t3)", "(10, t2)", "(11, t3)",
        ]
        assert q3.position(cube("10", "t2")) == 3

    def test_square_faces(self, q3):
        """∂^0 keeps the base, ∂^1 fires the removed event."""
        square = cube("01", "t1", "t3")
        assert q3.faces_of(square) == {
            (1, 0): cube("01", "t3"),
            (1, 1): cube("11", "t3"),
            (2, 0): cube("01", "t1"),
            (2, 1): cube("00", "t1"),
        }
        assert face(q3, 2, 2, 1, square) == cube("00", "t1")

    def test_events_follow_net_order(self):
        """Reordering the net's events reorders the events inside cubes."""
        net = pipeline(3).with_event_order(["t3", "t2", "t1"])
        X = build_q(explore(net))
        assert X.grade(2) == (cube("01", "t3", "t1"),)
        assert validate(X) == []

    def test_max_dim(self):
        """Grades above max_dim are not built."""
        space = explore(pipeline(3))
        assert build_q(space, max_dim=1).grade_sizes() == (4, 5)
        assert build_q(space, max_dim=0).grade_sizes() == (4,)

    def test_negative_max_dim(self):
        """max_dim must be non-negative."""
        with pytest.raises(ValueError):
            CubeBuilder(max_dim=-1)

    def test_rejects_open_state_set(self):
        """Building over a non-closed state set raises StateSpaceError."""
        net = pipeline(3)
        space = StateSpace(
            net=net, states=frozenset({Marking.from_string("00"), Marking.from_string("10")}),
        )
        with pytest.raises(StateSpaceError):
            build_q(space)

    def test_net_without_events(self):
        """A net with no events gives a discrete set of vertices."""
        X = build_q(explore(pipeline(3).without_events(["t1", "t2", "t3"]), "all-states"))
        assert X.grade_sizes() == (4,)

    def test_top_grade_of_p5(self):
        """t1, t3, t5 are pairwise independent, so Q(P_5) has 3-cubes."""
        X = build_q(explore(pipeline(5)))
        assert X.dimension == 3
        assert all(c.events == ("t1", "t3", "t5") for c in X.grade(3))


# =============================================================================
# Face Operator Tests
# =============================================================================

class TestFaceErrors:
    """Tests for out-of-range face requests."""

    def test_index_out_of_range(self, q3):
        """i outside 1..n raises FaceIndexError."""
        with pytest.raises(FaceIndexError):
            q3.face(2, 3, 0, cube("01", "t1", "t3"))
        with pytest.raises(FaceIndexError):
            q3.face(0, 1, 0, cube("01"))

    def test_bad_epsilon(self, q3):
        """ε must be 0 or 1."""
        with pytest.raises(FaceIndexError):
            q3.face(1, 1, 2, cube("00", "t1"))

    def test_wrong_grade(self, q3):
        """The cube must be an n-cube of the set."""
        with pytest.raises(FaceIndexError):
            q3.face(2, 1, 0, cube("00", "t1"))
        with pytest.raises(FaceIndexError):
            q3.face(1, 1, 0, cube("11", "t1"))


# =============================================================================
# Validator Tests
# =============================================================================

class TestValidator:
    """Tests for cubical-identity validation."""

    def test_built_sets_validate(self):
        """Every constructed Q satisfies the cubical identities."""
        for n in range(2, 7):
            assert validate(build_q(explore(pipeline(n)))) == []

    def test_corrupted_face_is_reported(self, q3):
        """Redirecting ∂_1^1 of (01, t3) breaks exactly one identity."""
        corrupted = q3.with_face(cube("01", "t3"), 1, 1, cube("11"))
        violations = validate(corrupted)
        assert len(violations) == 1
        v = violations[0]
        assert (v.kind, v.n, v.i, v.j, v.alpha, v.beta) == ("identity", 2, 1, 2, 0, 1)
        assert v.cube == "(01, t1, t3)"

    def test_face_outside_set(self, q3):
        """A face that is not a cube of the grade below is a membership violation."""
        corrupted = q3.with_face(cube("01", "t1", "t3"), 1, 0, cube("00", "t3"))
        violations = validate(corrupted)
        assert [v.kind for v in violations] == ["membership"]
        assert violations[0].i == 1 and violations[0].alpha == 0


# =============================================================================
# Subcomplex Tests
# =============================================================================

class TestSubcomplexes:
    """Tests for restriction, union and intersection."""

    def test_restrict(self, q3):
        """Restriction keeps cubes whose events all survive."""
        X = restrict_to_events(q3, ["t2", "t3"])
        assert X.grade_sizes() == (4, 3)
        assert X.event_order == ("t2", "t3")
        assert is_subcomplex(X, q3)
        assert validate(X) == []

    def test_restrict_unknown_event(self, q3):
        """Restricting to an unknown event raises UnknownEventError."""
        with pytest.raises(UnknownEventError):
            restrict_to_events(q3, ["t1", "t7"])

    def test_union_and_intersection(self, q3):
        """Q(N_3) ∪ Q(N'_3) = Q(P_3); their intersection uses t3 only."""
        x1 = restrict_to_events(q3, ["t2", "t3"])
        x2 = restrict_to_events(q3, ["t1", "t3"])
        assert union(x1, x2) == q3
        meet = intersection(x1, x2)
        assert meet.grade_sizes() == (4, 2)
        assert meet.event_order == ("t3",)

    def test_union_merges_event_orders(self):
        """Union over complementary events keeps a consistent event order."""
        X = build_q(explore(pipeline(4), "all-states"))
        a = restrict_to_events(X, ["t1", "t2"])
        b = restrict_to_events(X, ["t3", "t4"])
        assert union(a, b).event_order == ("t1", "t2", "t3", "t4")

    def test_incompatible_places(self, q3):
        """Sets over different places have no common ambient."""
        other = build_q(explore(pipeline(4)))
        with pytest.raises(IncompatibleComplexError):
            union(q3, other)

    def test_incompatible_orders(self):
        """Opposite event orders cannot be merged."""
        forward = build_q(explore(pipeline(3)))
        backward = build_q(explore(pipeline(3).with_event_order(["t3", "t2", "t1"])))
        with pytest.raises(IncompatibleComplexError):
            intersection(forward, backward)

    def test_is_subcomplex_detects_changed_faces(self, q3):
        """Same cubes with different faces are not a subcomplex."""
        corrupted = q3.with_face(cube("01", "t3"), 1, 1, cube("11"))
        assert not is_subcomplex(corrupted, q3)

    def test_components(self, q3):
        """The t3-only intersection splits by p1."""
        meet = restrict_to_events(q3, ["t3"])
        components = connected_components(meet)
        assert [[str(v) for v in c.grade(0)] for c in components] == [["(00)", "(01)"], ["(10)", "(11)"]]
        assert all(c.grade_sizes() == (2, 1) for c in components)

    def test_one_skeleton(self, q3):
        """The 1-skeleton of Q(P_3) is connected."""
        graph = one_skeleton(q3)
        assert graph.number_of_nodes() == 4
        assert len(connected_components(q3)) == 1

    def test_empty_set(self):
        """The empty set has dimension -1 and no grades."""
        X = SemicubicalSet.empty(("p1",), ("t1",))
        assert X.dimension == -1
        assert X.grade_sizes() == ()
        assert len(X) == 0


# =============================================================================
# Dump Tests
# =============================================================================

class TestDump:
    """Tests for the structured dump."""

    def test_dump_structure(self, q3):
        """Each grade lists its cubes and their faces."""
        record = dump(q3)
        assert record["places"] == ["p1", "p2"]
        assert record["events"] == ["t1", "t2", "t3"]
        assert [g["size"] for g in record["grades"]] == [4, 5, 1]
        square = record["grades"][2]["cubes"][0]
        assert square["cube"] == "(01, t1, t3)"
        assert {"i": 2, "epsilon": 1, "face": "(00, t1)"} in square["faces"]

    def test_render_dump(self, q3):
        """Text dump lists one cube per line."""
        text = render_dump(q3)
        assert "grade 2: 1 cubes" in text
        assert "(01, t1, t3)  d1^0=(01, t3)" in text
