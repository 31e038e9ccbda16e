"""
State-space exploration for elementary nets.

Builds the reachable closure of the initial marking (breadth first, events
tried in declaration order) or the full power set {0,1}^P. Both are bounded
by a state-count cap; crossing it raises StateSpaceLimitError instead of
truncating.
"""

import logging
from collections import deque
from typing import List, Optional, Set, Tuple

import networkx as nx

from src.models.elementary_net import ElementaryNet, Marking
from src.models.state_space import StateSpace
from src.utils.constants import MODE_ALL_STATES, MODE_REACHABLE, VALID_MODES
from src.utils.errors import StateSpaceError, StateSpaceLimitError
from src.utils.settings import get_settings
from .firing import fire


logger = logging.getLogger(__name__)


class StateSpaceExplorer:
    """
    Explores the state space of a net under a fixed state-count cap.

    The cap defaults to PETRI_STATE_CAP.
    """

    def __init__(self, state_cap: Optional[int] = None) -> None:
        self.state_cap = state_cap if state_cap is not None else get_settings().state_cap

    def explore(self, net: ElementaryNet, mode: str = MODE_REACHABLE) -> StateSpace:
        """
        Build the state space of `net`.

        Args:
            net: Net to explore
            mode: "reachable" or "all-states"

        Returns:
            StateSpace satisfying its invariants, forward closure included

        Raises:
            ValueError: If mode is unknown
            StateSpaceLimitError: If the space has more than state_cap states
        """
        if mode not in VALID_MODES:
            raise ValueError(f"Unknown exploration mode {mode!r}; expected one of {VALID_MODES}")

        if mode == MODE_ALL_STATES:
            size = 2 ** len(net.places)
            if size > self.state_cap:
                raise StateSpaceLimitError(self.state_cap, size)
            states = frozenset(net.all_markings())
        else:
            states = frozenset(self._reachable(net))

        logger.debug(
            "Explored %d states (%s) over %d places, %d events",
            len(states), mode, len(net.places), len(net.events),
        )
        return StateSpace(net=net, states=states, mode=mode)

    def _reachable(self, net: ElementaryNet) -> Set[Marking]:
        visited = {net.initial}
        queue = deque([net.initial])
        while queue:
            state = queue.popleft()
            for name in net.event_names:
                successor = fire(net, state, name)
                if successor is None or successor in visited:
                    continue
                visited.add(successor)
                if len(visited) > self.state_cap:
                    raise StateSpaceLimitError(self.state_cap, len(visited))
                queue.append(successor)
        return visited


def explore(net: ElementaryNet, mode: str = MODE_REACHABLE, state_cap: Optional[int] = None) -> StateSpace:
    """
    Convenience function to explore a net.

    Args:
        net: Net to explore
        mode: "reachable" (default) or "all-states"
        state_cap: Overrides the configured cap

    Returns:
        StateSpace of the net
    """
    return StateSpaceExplorer(state_cap).explore(net, mode)


def transitions(space: StateSpace) -> List[Tuple[Marking, str, Marking]]:
    """Every firing s →^a s·a with both ends in S, ordered by (index of s, event order)."""
    net = space.net
    result = []
    for state in space.ordered_states:
        for name in net.event_names:
            successor = fire(net, state, name)
            if successor is not None and successor in space.states:
                result.append((state, name, successor))
    return result


def transition_graph(space: StateSpace) -> nx.MultiDiGraph:
    """
    Transition graph of a state space.

    Nodes are markings (attribute `label` holds the 0/1 string), edges are
    keyed by event name.
    """
    graph = nx.MultiDiGraph()
    for state in space.ordered_states:
        graph.add_node(state, label=state.to_string())
    for source, name, target in transitions(space):
        graph.add_edge(source, target, key=name)
    return graph


def ensure_forward_closed(space: StateSpace) -> None:
    """
    Check that every firing from a state of S lands in S.

    Raises:
        StateSpaceError: Naming the first firing that leaves S
    """
    net = space.net
    for state in space.ordered_states:
        for name in net.event_names:
            successor = fire(net, state, name)
            if successor is not None and successor not in space.states:
                raise StateSpaceError(
                    f"State set is not forward closed: {state} -{name}-> {successor} leaves S"
                )
