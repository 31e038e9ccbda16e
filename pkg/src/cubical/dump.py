"""Structured dump of a semicubical set: each grade's cubes and face tables."""

from typing import Any, Dict, List

from .semicubical_set import SemicubicalSet


def dump(X: SemicubicalSet) -> Dict[str, Any]:
    """
    JSON-ready record of X.

    Faces of an n-cube are listed as {"i": .., "epsilon": .., "face": ..}
    for i = 1..n, ε = 0, 1.
    """
    grades: List[Dict[str, Any]] = []
    for n, grade in X.grades():
        cubes = []
        for cube in grade:
            faces = [
                {"i": i, "epsilon": eps, "face": str(face) if face is not None else None}
                for (i, eps), face in X.faces_of(cube).items()
            ]
            cubes.append({"cube": str(cube), "faces": faces})
        grades.append({"n": n, "size": len(grade), "cubes": cubes})
    return {
        "places": list(X.places),
        "events": list(X.event_order),
        "grades": grades,
    }


def render_dump(X: SemicubicalSet) -> str:
    """Text form of `dump`, one cube per line."""
    lines = [
        f"places: {' '.join(X.places)}",
        f"events: {' '.join(X.event_order)}",
    ]
    for n, grade in X.grades():
        lines.append(f"grade {n}: {len(grade)} cubes")
        for cube in grade:
            faces = " ".join(
                f"d{i}^{eps}={face}" for (i, eps), face in X.faces_of(cube).items()
            )
            lines.append(f"  {cube}" + (f"  {faces}" if faces else ""))
    return "\n".join(lines)
