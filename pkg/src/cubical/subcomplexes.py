"""
Subcomplex operations on semicubical sets sharing an ambient.

Union and intersection are grade-wise set operations on cube identities.
Operands must agree on places, on the relative order of their shared
events, and on the faces of every shared cube.
"""

from typing import Dict, Iterable, List, Tuple

import networkx as nx

from src.models.cube import Cube
from src.utils.errors import IncompatibleComplexError, UnknownEventError
from .semicubical_set import FaceKey, SemicubicalSet


def restrict_to_events(X: SemicubicalSet, keep: Iterable[str]) -> SemicubicalSet:
    """
    Cubes of X whose events all lie in `keep`; grade 0 is unchanged.

    Raises:
        UnknownEventError: If `keep` names an event outside X's event order
    """
    keep = set(keep)
    for name in sorted(keep):
        if name not in X.event_order:
            raise UnknownEventError(name)
    cubes = [cube for cube in X.cubes() if keep.issuperset(cube.events)]
    order = [e for e in X.event_order if e in keep]
    return SemicubicalSet(X.places, order, cubes, X.face_table())


def _merged_event_order(X1: SemicubicalSet, X2: SemicubicalSet) -> Tuple[str, ...]:
    """A linear order extending both event orders."""
    if X1.event_order == X2.event_order:
        return X1.event_order
    graph = nx.DiGraph()
    for order in (X1.event_order, X2.event_order):
        graph.add_nodes_from(order)
        graph.add_edges_from(zip(order, order[1:]))
    if not nx.is_directed_acyclic_graph(graph):
        raise IncompatibleComplexError("Event orders of the two sets disagree on shared events")
    rank = {e: k for k, e in enumerate(X1.event_order)}
    offset = len(rank)
    for k, e in enumerate(X2.event_order):
        rank.setdefault(e, offset + k)
    return tuple(nx.lexicographical_topological_sort(graph, key=lambda e: rank[e]))


def _check_compatible(X1: SemicubicalSet, X2: SemicubicalSet) -> Tuple[str, ...]:
    if X1.places != X2.places:
        raise IncompatibleComplexError(
            f"Sets live over different places: {X1.places} vs {X2.places}"
        )
    order = _merged_event_order(X1, X2)
    for cube in X1.cubes():
        if cube in X2 and X1.faces_of(cube) != X2.faces_of(cube):
            raise IncompatibleComplexError(f"Shared cube {cube} has different faces")
    return order


def union(X1: SemicubicalSet, X2: SemicubicalSet) -> SemicubicalSet:
    """
    Grade-wise union X1 ∪ X2.

    Raises:
        IncompatibleComplexError: If X1 and X2 have no common ambient
    """
    order = _check_compatible(X1, X2)
    faces: Dict[FaceKey, Cube] = X2.face_table()
    faces.update(X1.face_table())
    return SemicubicalSet(X1.places, order, list(X1.cubes()) + list(X2.cubes()), faces)


def intersection(X1: SemicubicalSet, X2: SemicubicalSet) -> SemicubicalSet:
    """
    Grade-wise intersection X1 ∩ X2.

    Raises:
        IncompatibleComplexError: If X1 and X2 have no common ambient
    """
    order = _check_compatible(X1, X2)
    cubes = [cube for cube in X1.cubes() if cube in X2]
    order = tuple(e for e in order if e in X1.event_order and e in X2.event_order)
    return SemicubicalSet(X1.places, order, cubes, X1.face_table())


def is_subcomplex(X: SemicubicalSet, ambient: SemicubicalSet) -> bool:
    """Every cube of X is in the ambient, with the same faces."""
    if X.places != ambient.places:
        return False
    return all(
        cube in ambient and X.faces_of(cube) == ambient.faces_of(cube)
        for cube in X.cubes()
    )


def one_skeleton(X: SemicubicalSet) -> nx.Graph:
    """Undirected graph on X_0 with an edge per 1-cube."""
    graph = nx.Graph()
    graph.add_nodes_from(X.grade(0))
    for edge in X.grade(1):
        graph.add_edge(X.face(1, 1, 0, edge), X.face(1, 1, 1, edge))
    return graph


def connected_components(X: SemicubicalSet) -> List[SemicubicalSet]:
    """
    Connected components of the 1-skeleton, each lifted to a subcomplex.

    A cube belongs to the component of its base vertex. Components are
    ordered by the smallest state index they contain.
    """
    vertex_sets = sorted(
        nx.connected_components(one_skeleton(X)),
        key=lambda component: min(v.base.index for v in component),
    )
    component_of = {
        vertex.base: k for k, component in enumerate(vertex_sets) for vertex in component
    }
    members: List[List[Cube]] = [[] for _ in vertex_sets]
    for cube in X.cubes():
        members[component_of[cube.base]].append(cube)
    faces = X.face_table()
    return [SemicubicalSet(X.places, X.event_order, cubes, faces) for cubes in members]
