"""
StateSpace model - A finite set of markings carrying the partial firing action.

Uses Pydantic v2 for validation. Reachable spaces are checked for accessibility
from the initial marking. Forward closure is not checked here; it is checked by
the explorer that builds a space and by the cube builder that consumes one.
"""

from collections import deque
from typing import FrozenSet, List, Literal, Set

from pydantic import BaseModel, model_validator

from .elementary_net import ElementaryNet, Marking


class StateSpace(BaseModel):
    """
    States of a net under one exploration mode.
    """
    net: ElementaryNet
    states: FrozenSet[Marking]
    mode: Literal["reachable", "all-states"] = "reachable"

    model_config = {"frozen": True}

    @model_validator(mode='after')
    def check_states(self) -> 'StateSpace':
        """Markings fit the net; mode-specific invariants hold."""
        width = len(self.net.places)
        for state in self.states:
            if state.width != width:
                raise ValueError(f"Marking {state} does not fit a net with {width} places")
        if self.mode == "reachable":
            if self.net.initial not in self.states:
                raise ValueError("Reachable state space must contain the initial marking")
            unreachable = self.states - self._accessible()
            if unreachable:
                names = sorted(s.to_string() for s in unreachable)
                raise ValueError(f"States not reachable from the initial marking: {names}")
        if self.mode == "all-states" and len(self.states) != 2 ** width:
            raise ValueError(
                f"All-states space must hold {2 ** width} markings, got {len(self.states)}"
            )
        return self

    def _accessible(self) -> Set[Marking]:
        """States of the space reached from the initial marking by firings inside it."""
        from src.net.firing import fire

        visited = {self.net.initial}
        queue = deque(visited)
        while queue:
            state = queue.popleft()
            for name in self.net.event_names:
                successor = fire(self.net, state, name)
                if successor is not None and successor in self.states and successor not in visited:
                    visited.add(successor)
                    queue.append(successor)
        return visited

    @property
    def ordered_states(self) -> List[Marking]:
        """States sorted by state index."""
        return sorted(self.states, key=lambda s: s.index)

    def __contains__(self, state: object) -> bool:
        return state in self.states

    def __len__(self) -> int:
        return len(self.states)
