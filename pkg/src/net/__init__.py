"""net-core: firing rule, independence, state-space exploration, detectors."""

from .firing import fire, fire_trace, independence_relation, independent, is_transition
from .explorer import (
    StateSpaceExplorer,
    ensure_forward_closed,
    explore,
    transition_graph,
    transitions,
)
from .detectors import deadlocks, senders, state_index

__all__ = [
    'fire',
    'fire_trace',
    'independence_relation',
    'independent',
    'is_transition',
    'StateSpaceExplorer',
    'ensure_forward_closed',
    'explore',
    'transition_graph',
    'transitions',
    'deadlocks',
    'senders',
    'state_index',
]
