"""
HomologyGroup model - A finitely generated abelian group Z^b ⊕ Z/d_1 ⊕ ⋯.

Uses Pydantic v2 for validation. Torsion is kept in canonical form: no 0s,
no 1s, each coefficient dividing the next.
"""

import re
from typing import Callable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field, field_validator

from src.utils.constants import DIRECT_SUM_SYMBOL, INTEGERS, TRIVIAL_GROUP


_TORSION_PATTERN = re.compile(r'^Z/(\d+)$')
_FREE_PATTERN = re.compile(r'^Z(?:\^(\d+))?$')


class HomologyGroup(BaseModel):
    """
    Homology group in one degree.
    """
    degree: int = Field(ge=0)
    betti: int = Field(ge=0)
    torsion: Tuple[int, ...] = ()

    model_config = {"frozen": True}

    @field_validator('torsion', mode='after')
    @classmethod
    def canonical_torsion(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        """Torsion coefficients are ≥ 2 and form a divisibility chain"""
        for d in v:
            if d < 2:
                raise ValueError(f"Torsion coefficients must be >= 2, got {d}")
        for a, b in zip(v, v[1:]):
            if b % a != 0:
                raise ValueError(f"Torsion {v} violates divisibility: {a} does not divide {b}")
        return v

    @classmethod
    def trivial(cls, degree: int) -> 'HomologyGroup':
        return cls(degree=degree, betti=0)

    @classmethod
    def free(cls, degree: int, rank: int = 1) -> 'HomologyGroup':
        return cls(degree=degree, betti=rank)

    @classmethod
    def parse(cls, degree: int, text: str) -> 'HomologyGroup':
        """
        Parse the rendering produced by `render`.

        Examples:
            >>> HomologyGroup.parse(2, "Z^2 ⊕ Z/2 ⊕ Z/6").torsion
            (2, 6)
        """
        text = text.strip()
        if text == TRIVIAL_GROUP:
            return cls.trivial(degree)
        betti = 0
        torsion: List[int] = []
        for summand in text.split(DIRECT_SUM_SYMBOL):
            summand = summand.strip()
            free = _FREE_PATTERN.match(summand)
            tors = _TORSION_PATTERN.match(summand)
            if free:
                betti += int(free.group(1) or 1)
            elif tors:
                torsion.append(int(tors.group(1)))
            else:
                raise ValueError(f"Cannot parse group summand {summand!r}")
        return cls(degree=degree, betti=betti, torsion=tuple(torsion))

    @property
    def is_trivial(self) -> bool:
        return self.betti == 0 and not self.torsion

    def render(self) -> str:
        """
        Group in text form.

        `Z^b` omits `^1`, the trivial group renders `0`, torsion renders as
        `Z/d` factors in divisibility order.
        """
        if self.is_trivial:
            return TRIVIAL_GROUP
        summands = []
        if self.betti == 1:
            summands.append(INTEGERS)
        elif self.betti > 1:
            summands.append(f"{INTEGERS}^{self.betti}")
        summands.extend(f"{INTEGERS}/{d}" for d in self.torsion)
        return f" {DIRECT_SUM_SYMBOL} ".join(summands)

    def record(self) -> dict:
        """Machine-readable record {degree, betti, torsion}."""
        return {"degree": self.degree, "betti": self.betti, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        return f"H_{self.degree} = {self.render()}"


def _default_label(degree) -> str:
    return f"H_{degree}"


def render_groups(
    groups: Sequence[HomologyGroup],
    label: Optional[Callable[[object], str]] = None,
) -> str:
    """
    Render a homology series, collapsing the vanishing tail.

    Example:
        H_0 = Z, H_1 = Z, H_2 = 0 renders as
        'H_0 = Z, H_1 = Z, H_k = 0 (k ≥ 2)'
    """
    label = label or _default_label
    last_nontrivial = max((g.degree for g in groups if not g.is_trivial), default=-1)
    parts = [
        f"{label(g.degree)} = {g.render()}"
        for g in sorted(groups, key=lambda g: g.degree)
        if g.degree <= last_nontrivial
    ]
    parts.append(f"{label('k')} = {TRIVIAL_GROUP} (k ≥ {last_nontrivial + 1})")
    return ", ".join(parts)
