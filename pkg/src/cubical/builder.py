"""
Builder for Q(S,E,I).

The n-cubes are the tuples (s, a_1 < ⋯ < a_n) of pairwise independent events
with s·a_1⋯a_n defined and in S. Cubes of grade n+1 are grown from grade n
by appending a later event independent of every event already present.
"""

import logging
from typing import Dict, List, Optional

from src.models.cube import Cube
from src.models.elementary_net import Marking
from src.models.state_space import StateSpace
from src.net.explorer import ensure_forward_closed
from src.net.firing import fire, independent
from .semicubical_set import FaceKey, SemicubicalSet


logger = logging.getLogger(__name__)


class CubeBuilder:
    """Builds the semicubical set of a state space."""

    def __init__(self, max_dim: Optional[int] = None) -> None:
        if max_dim is not None and max_dim < 0:
            raise ValueError(f"max_dim must be >= 0, got {max_dim}")
        self.max_dim = max_dim

    def build(self, space: StateSpace) -> SemicubicalSet:
        """
        Enumerate Q(S,E,I) with its face maps.

        Raises:
            StateSpaceError: If S is not forward closed
        """
        ensure_forward_closed(space)
        net = space.net
        names = net.event_names
        independent_after: Dict[str, List[str]] = {
            a: [b for b in names[k + 1:] if independent(net, a, b)]
            for k, a in enumerate(names)
        }

        # end state s·a_1⋯a_n of every cube
        ends: Dict[Cube, Marking] = {Cube(base=s): s for s in space.ordered_states}
        frontier = list(ends)
        all_cubes: List[Cube] = list(frontier)

        n = 0
        while frontier and (self.max_dim is None or n < self.max_dim):
            grown: List[Cube] = []
            for cube in frontier:
                candidates = names if not cube.events else independent_after[cube.events[-1]]
                for b in candidates:
                    if any(not independent(net, a, b) for a in cube.events):
                        continue
                    end = fire(net, ends[cube], b)
                    if end is None or end not in space.states:
                        continue
                    extended = Cube(base=cube.base, events=cube.events + (b,))
                    ends[extended] = end
                    grown.append(extended)
            all_cubes.extend(grown)
            frontier = grown
            n += 1

        faces: Dict[FaceKey, Cube] = {}
        for cube in all_cubes:
            for i, a in enumerate(cube.events, start=1):
                rest = cube.events[:i - 1] + cube.events[i:]
                faces[(cube, i, 0)] = Cube(base=cube.base, events=rest)
                shifted = fire(net, cube.base, a)
                if shifted is None:
                    raise ValueError(f"Event {a} of cube {cube} is not enabled at its base")
                faces[(cube, i, 1)] = Cube(base=shifted, events=rest)

        result = SemicubicalSet(net.places, names, all_cubes, faces)
        logger.debug("Built Q with grade sizes %s", result.grade_sizes())
        return result


def build_q(space: StateSpace, max_dim: Optional[int] = None) -> SemicubicalSet:
    """
    Convenience function to build Q(S,E,I).

    Args:
        space: Forward-closed state space
        max_dim: Optional grade cutoff; grades above it are not built

    Returns:
        SemicubicalSet with X_0 = S
    """
    return CubeBuilder(max_dim).build(space)
