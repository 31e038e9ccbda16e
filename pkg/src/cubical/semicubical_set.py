"""
SemicubicalSet - Graded cubes with face maps ∂_i^{n,ε}.

Cubes are identified by (base marking, event tuple), so two sets built over
the same places and a compatible event order can be compared cube by cube.
Within a grade, cubes are ordered by (state index of the base, positions of
the events in the event order); boundary matrices use this order for rows
and columns.
"""

from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from src.models.cube import Cube
from src.utils.errors import FaceIndexError


FaceKey = Tuple[Cube, int, int]


class SemicubicalSet:
    """
    Finite semicubical set X = (X_n, ∂_i^{n,ε}).

    The face table maps (cube, i, ε) to the face cube for 1 ≤ i ≤ n. The
    constructor does not check the cubical identities; `validate` does.
    """

    def __init__(
        self,
        places: Sequence[str],
        event_order: Sequence[str],
        cubes: Iterable[Cube],
        faces: Mapping[FaceKey, Cube],
    ) -> None:
        self.places: Tuple[str, ...] = tuple(places)
        self.event_order: Tuple[str, ...] = tuple(event_order)
        self._positions: Dict[str, int] = {e: k for k, e in enumerate(self.event_order)}

        by_grade: Dict[int, List[Cube]] = {}
        for cube in set(cubes):
            unknown = [e for e in cube.events if e not in self._positions]
            if unknown:
                raise ValueError(f"Cube {cube} uses events outside the event order: {unknown}")
            by_grade.setdefault(cube.dimension, []).append(cube)

        top = max(by_grade, default=-1)
        self._grades: Tuple[Tuple[Cube, ...], ...] = tuple(
            tuple(sorted(by_grade.get(n, ()), key=self.sort_key)) for n in range(top + 1)
        )
        self._members = {cube for grade in self._grades for cube in grade}
        self._faces: Dict[FaceKey, Cube] = {
            key: face for key, face in faces.items() if key[0] in self._members
        }
        self._column: Dict[Cube, int] = {
            cube: k for grade in self._grades for k, cube in enumerate(grade)
        }

    @classmethod
    def empty(cls, places: Sequence[str] = (), event_order: Sequence[str] = ()) -> 'SemicubicalSet':
        return cls(places, event_order, (), {})

    def sort_key(self, cube: Cube) -> Tuple[int, Tuple[int, ...]]:
        """(state index of base, event positions) ordering within a grade."""
        return cube.base.index, tuple(self._positions[e] for e in cube.events)

    @property
    def dimension(self) -> int:
        """Highest nonempty grade, or -1 for the empty set."""
        return len(self._grades) - 1

    def grade(self, n: int) -> Tuple[Cube, ...]:
        """X_n in canonical order; empty for n outside 0..dimension."""
        if 0 <= n < len(self._grades):
            return self._grades[n]
        return ()

    def grades(self) -> Iterator[Tuple[int, Tuple[Cube, ...]]]:
        return iter(enumerate(self._grades))

    def grade_sizes(self) -> Tuple[int, ...]:
        return tuple(len(g) for g in self._grades)

    def euler_characteristic(self) -> int:
        """Σ (−1)^n |X_n|."""
        return sum((-1) ** n * len(g) for n, g in enumerate(self._grades))

    def position(self, cube: Cube) -> int:
        """Index of a cube inside its grade."""
        return self._column[cube]

    def face(self, n: int, i: int, epsilon: int, cube: Cube) -> Cube:
        """
        ∂_i^{n,ε}(cube).

        Raises:
            FaceIndexError: If n < 1, i outside 1..n, ε not 0/1, or the cube
                            is not an n-cube of this set
        """
        if n < 1 or not 1 <= i <= n or epsilon not in (0, 1):
            raise FaceIndexError(f"Face ∂_{i}^{{{n},{epsilon}}} is out of range")
        if cube.dimension != n or cube not in self._members:
            raise FaceIndexError(f"{cube} is not a {n}-cube of this set")
        try:
            return self._faces[(cube, i, epsilon)]
        except KeyError:
            raise FaceIndexError(f"No face ∂_{i}^{epsilon} recorded for {cube}") from None

    def faces_of(self, cube: Cube) -> Dict[Tuple[int, int], Optional[Cube]]:
        """All faces of a cube keyed by (i, ε); None where the table has no entry."""
        return {
            (i, eps): self._faces.get((cube, i, eps))
            for i in range(1, cube.dimension + 1)
            for eps in (0, 1)
        }

    def face_table(self) -> Dict[FaceKey, Cube]:
        return dict(self._faces)

    def with_face(self, cube: Cube, i: int, epsilon: int, target: Cube) -> 'SemicubicalSet':
        """Copy of this set with one face entry redirected to `target`."""
        faces = dict(self._faces)
        faces[(cube, i, epsilon)] = target
        return SemicubicalSet(self.places, self.event_order, self._members, faces)

    def cubes(self) -> Iterator[Cube]:
        for grade in self._grades:
            yield from grade

    def __contains__(self, cube: object) -> bool:
        return cube in self._members

    def __len__(self) -> int:
        return len(self._members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SemicubicalSet):
            return NotImplemented
        return (
            self.places == other.places
            and self._members == other._members
            and self._faces == other._faces
        )

    def __repr__(self) -> str:
        return f"SemicubicalSet(grade_sizes={self.grade_sizes()})"


def face(X: SemicubicalSet, n: int, i: int, epsilon: int, cube: Cube) -> Cube:
    """Convenience function for X.face(n, i, epsilon, cube)."""
    return X.face(n, i, epsilon, cube)
