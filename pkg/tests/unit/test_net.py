"""
Unit tests for net-core.

Tests cover:
- Firing rule and its triple characterization
- Independence relation and commutation of independent events
- State-space exploration and the state cap
- Transitions, transition graph, forward closure
- Deadlock and sender detection
"""

import itertools
import random

import networkx as nx
import pytest

from src.models.elementary_net import ElementaryNet, EventDef, Marking
from src.models.state_space import StateSpace
from src.net.detectors import deadlocks, senders, state_index
from src.net.explorer import (
    StateSpaceExplorer,
    ensure_forward_closed,
    explore,
    transition_graph,
    transitions,
)
from src.net.firing import fire, fire_trace, independence_relation, independent, is_transition
from src.pipelines.generator import pipeline
from src.utils.errors import StateSpaceError, StateSpaceLimitError, UnknownEventError
from tests.conftest import random_net


def m(text: str) -> Marking:
    return Marking.from_string(text)


# =============================================================================
# Firing Tests
# =============================================================================

class TestFiring:
    """Tests for the firing rule on P_3 (t1: -> p1, t2: p1 -> p2, t3: p2 -> )."""

    def test_enabled_events_fire(self):
        """s·a = (s minus pre) union post."""
        net = pipeline(3)
        assert fire(net, m("00"), "t1") == m("10")
        assert fire(net, m("10"), "t2") == m("01")
        assert fire(net, m("01"), "t3") == m("00")
        assert fire(net, m("01"), "t1") == m("11")

    def test_disabled_events_return_none(self):
        """Missing pre-places or occupied post-places leave s·a undefined."""
        net = pipeline(3)
        assert fire(net, m("10"), "t1") is None   # p1 already occupied
        assert fire(net, m("00"), "t2") is None   # p1 empty
        assert fire(net, m("11"), "t2") is None   # p2 occupied
        assert fire(net, m("00"), "t3") is None

    def test_self_loop_place(self):
        """A place in pre and post is emptied before it is refilled."""
        net = ElementaryNet(
            places=("a",), events=(EventDef(name="keep", pre=frozenset({"a"}), post=frozenset({"a"})),),
            initial=["a"],
        )
        assert fire(net, m("1"), "keep") == m("1")
        assert fire(net, m("0"), "keep") is None

    def test_unknown_event(self):
        """Firing an undeclared event raises UnknownEventError."""
        with pytest.raises(UnknownEventError):
            fire(pipeline(3), m("00"), "t9")

    def test_fire_trace(self):
        """Traces fold fire left to right; the empty word is the identity."""
        net = pipeline(3)
        assert fire_trace(net, m("00"), []) == m("00")
        assert fire_trace(net, m("00"), ["t1", "t2", "t3"]) == m("00")
        assert fire_trace(net, m("00"), ["t2", "t1"]) is None

    def test_fire_trace_checks_every_event(self):
        """An unknown event raises even after the trace became undefined."""
        with pytest.raises(UnknownEventError):
            fire_trace(pipeline(3), m("00"), ["t2", "zz"])

    def test_is_transition_agrees_with_fire(self):
        """The triple characterization matches fire on every (s, a, s')."""
        for net in (pipeline(3), pipeline(4, "Nprime")):
            states = net.all_markings()
            for s, a, t in itertools.product(states, net.event_names, states):
                assert is_transition(net, s, a, t) == (fire(net, s, a) == t)


# =============================================================================
# Independence Tests
# =============================================================================

class TestIndependence:
    """Tests for the independence relation."""

    def test_disjoint_neighborhoods(self):
        """Events with disjoint pre/post sets are independent."""
        net = pipeline(3)
        assert independent(net, "t1", "t3")
        assert not independent(net, "t1", "t2")
        assert not independent(net, "t2", "t3")

    def test_irreflexive(self):
        """No event is independent of itself."""
        net = pipeline(3)
        assert not any(independent(net, a, a) for a in net.event_names)

    def test_relation(self):
        """The relation is symmetric."""
        relation = independence_relation(pipeline(4))
        assert relation == frozenset({("t1", "t3"), ("t3", "t1"), ("t1", "t4"), ("t4", "t1"), ("t2", "t4"), ("t4", "t2")})

    def test_commutation_on_random_nets(self):
        """For independent a, b: s·a·b defined implies s·b·a defined and equal."""
        rng = random.Random(7)
        for net in [random_net(rng) for _ in range(10)] + [pipeline(5)]:
            for a, b in independence_relation(net):
                for s in net.all_markings():
                    ab = fire_trace(net, s, [a, b])
                    if ab is not None:
                        assert fire_trace(net, s, [b, a]) == ab


# =============================================================================
# Exploration Tests
# =============================================================================

class TestExploration:
    """Tests for state-space exploration."""

    def test_reachable_pipeline_is_saturated(self):
        """Every marking of P_n is reachable from the empty marking."""
        for n in range(2, 6):
            space = explore(pipeline(n))
            assert len(space) == 2 ** (n - 1)

    def test_reachable_cycle(self):
        """A single shuttling token reaches exactly two states."""
        net = ElementaryNet(
            places=("a", "b"),
            events=(
                EventDef(name="go", pre=frozenset({"a"}), post=frozenset({"b"})),
                EventDef(name="back", pre=frozenset({"b"}), post=frozenset({"a"})),
            ),
            initial=["a"],
        )
        space = explore(net)
        assert {s.to_string() for s in space.states} == {"10", "01"}

    def test_all_states(self):
        """all-states mode is the full power set."""
        space = explore(pipeline(4, "N"), "all-states")
        assert len(space) == 8
        assert [s.to_string() for s in space.ordered_states][:3] == ["000", "001", "010"]

    def test_unknown_mode(self):
        """Unknown exploration modes are rejected."""
        with pytest.raises(ValueError, match="mode"):
            explore(pipeline(3), "sideways")

    def test_all_states_cap(self):
        """2^|P| above the cap raises before enumerating."""
        with pytest.raises(StateSpaceLimitError) as exc:
            explore(pipeline(5), "all-states", state_cap=8)
        assert exc.value.cap == 8
        assert exc.value.reached == 16

    def test_reachable_cap(self):
        """The reachable search stops once the cap is crossed."""
        with pytest.raises(StateSpaceLimitError):
            StateSpaceExplorer(state_cap=3).explore(pipeline(3))

    def test_cap_from_settings(self, monkeypatch):
        """The default cap comes from PETRI_STATE_CAP."""
        monkeypatch.setenv("PETRI_STATE_CAP", "2")
        with pytest.raises(StateSpaceLimitError):
            explore(pipeline(3))


# =============================================================================
# Transition Tests
# =============================================================================

class TestTransitions:
    """Tests for transitions, graphs and forward closure."""

    def test_transitions_of_p3(self):
        """Five firings inside S, ordered by source index then event order."""
        found = [(s.to_string(), a, t.to_string()) for s, a, t in transitions(explore(pipeline(3)))]
        assert found == [
            ("00", "t1", "10"),
            ("01", "t1", "11"),
            ("01", "t3", "00"),
            ("10", "t2", "01"),
            ("11", "t3", "10"),
        ]

    def test_transition_graph(self):
        """Edges are keyed by event name."""
        graph = transition_graph(explore(pipeline(3)))
        assert isinstance(graph, nx.MultiDiGraph)
        assert graph.number_of_nodes() == 4
        assert graph.has_edge(m("01"), m("00"), key="t3")
        assert graph.nodes[m("10")]["label"] == "10"

    def test_forward_closure_violation(self):
        """A state set that firing can leave is reported."""
        net = pipeline(3)
        space = StateSpace(net=net, states=frozenset({m("00"), m("10")}), mode="reachable")
        with pytest.raises(StateSpaceError, match="forward closed"):
            ensure_forward_closed(space)

    def test_explored_spaces_are_forward_closed(self):
        """explore never returns a space firing can leave."""
        ensure_forward_closed(explore(pipeline(4)))
        ensure_forward_closed(explore(pipeline(4, "Nprime"), "all-states"))

    def test_state_space_validation(self):
        """Reachable spaces contain the initial marking; all-states spaces are complete."""
        net = pipeline(3)
        with pytest.raises(ValueError):
            StateSpace(net=net, states=frozenset({m("11")}), mode="reachable")
        with pytest.raises(ValueError):
            StateSpace(net=net, states=frozenset({m("00")}), mode="all-states")

    def test_reachable_space_rejects_unreachable_states(self):
        """Every state of a reachable space is reached from the initial marking."""
        net = pipeline(3, "N")
        with pytest.raises(ValueError, match="not reachable"):
            StateSpace(net=net, states=frozenset({m("00"), m("01")}), mode="reachable")


# =============================================================================
# Detector Tests
# =============================================================================

class TestDetectors:
    """Tests for deadlock and sender detection."""

    def test_full_pipeline_has_neither(self):
        """P_n has no deadlocks and no senders."""
        for n in range(2, 6):
            space = explore(pipeline(n), "all-states")
            assert deadlocks(space) == frozenset()
            assert senders(space) == frozenset()

    def test_n4(self):
        """N_4: deadlocks {000}, senders {111}."""
        space = explore(pipeline(4, "N"), "all-states")
        assert deadlocks(space) == frozenset({m("000")})
        assert senders(space) == frozenset({m("111")})

    def test_nprime4(self):
        """N'_4: the deadlock keeps p1, the sender lacks it."""
        space = explore(pipeline(4, "Nprime"), "all-states")
        assert deadlocks(space) == frozenset({m("100")})
        assert senders(space) == frozenset({m("011")})

    def test_state_index(self):
        """state_index is the binary value of the state string."""
        assert state_index(m("101")) == 5
        assert state_index(m("0001")) == 1

    def test_index_decreases_along_n(self):
        """Every transition of N_n strictly decreases the state index."""
        for n in range(2, 7):
            for s, _, t in transitions(explore(pipeline(n, "N"), "all-states")):
                assert state_index(t) < state_index(s)
