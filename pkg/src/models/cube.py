"""
Cube model - One cell (s, a_1, ..., a_n) of a semicubical set.

Uses Pydantic v2 for validation. A cube is identified by its base marking and
its event tuple, which is what makes subcomplexes of one ambient comparable.
"""

from typing import Tuple

from pydantic import BaseModel, field_validator

from .elementary_net import Marking


class Cube(BaseModel):
    """An n-cube: a base state and n pairwise independent events in net order."""
    base: Marking
    events: Tuple[str, ...] = ()

    model_config = {"frozen": True}

    @field_validator('events', mode='after')
    @classmethod
    def distinct_events(cls, v: Tuple[str, ...]) -> Tuple[str, ...]:
        """An event appears at most once in a cube"""
        if len(set(v)) != len(v):
            raise ValueError(f"Cube repeats an event: {v}")
        return v

    @property
    def dimension(self) -> int:
        return len(self.events)

    def __str__(self) -> str:
        return "(" + ", ".join((self.base.to_string(),) + self.events) + ")"
