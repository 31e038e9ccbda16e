"""cubical: Q(S,E,I) construction, face maps, validation, subcomplex operations."""

from .semicubical_set import SemicubicalSet, face
from .builder import CubeBuilder, build_q
from .validator import CubicalValidator, validate
from .subcomplexes import (
    connected_components,
    intersection,
    is_subcomplex,
    one_skeleton,
    restrict_to_events,
    union,
)
from .dump import dump, render_dump

__all__ = [
    'SemicubicalSet',
    'face',
    'CubeBuilder',
    'build_q',
    'CubicalValidator',
    'validate',
    'connected_components',
    'intersection',
    'is_subcomplex',
    'one_skeleton',
    'restrict_to_events',
    'union',
    'dump',
    'render_dump',
]
