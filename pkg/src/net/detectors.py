"""
Deadlock and sender detection by direct graph search.

A deadlock has no firing that stays in S; a sender is not the target of any
firing from S. These generate H_0^0 and H_0^1 respectively.
"""

from typing import FrozenSet

from src.models.elementary_net import Marking
from src.models.state_space import StateSpace
from .explorer import transitions
from .firing import fire


def deadlocks(space: StateSpace) -> FrozenSet[Marking]:
    """States with no event a satisfying s·a ∈ S."""
    net = space.net
    return frozenset(
        state for state in space.states
        if not any(
            (successor := fire(net, state, name)) is not None and successor in space.states
            for name in net.event_names
        )
    )


def senders(space: StateSpace) -> FrozenSet[Marking]:
    """States s with no s' ∈ S and event a such that s'·a = s."""
    targets = {target for _, _, target in transitions(space)}
    return frozenset(state for state in space.states if state not in targets)


def state_index(s: Marking) -> int:
    """
    Binary value of the state string, most significant bit first.

    For a pipeline marking ε_1⋯ε_{n−1} this is ε_1·2^{n−2} + ⋯ + ε_{n−1}.
    """
    return s.index
