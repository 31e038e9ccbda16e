"""
Generators for the pipeline net family.

P_n is the chain t_1 → p_1 → t_2 → ⋯ → p_{n−1} → t_n with the empty initial
marking; N_n deletes t_1 and N'_n deletes t_2.
"""

from typing import List

from src.models.elementary_net import ElementaryNet, EventDef
from src.models.pipeline_spec import PipelineSpec
from src.utils.constants import (
    PIPELINE_EVENT_PREFIX,
    PIPELINE_PLACE_PREFIX,
    VARIANT_N,
    VARIANT_NPRIME,
    VARIANT_P,
)


def place_name(i: int) -> str:
    return f"{PIPELINE_PLACE_PREFIX}{i}"


def event_name(i: int) -> str:
    return f"{PIPELINE_EVENT_PREFIX}{i}"


def make_pipeline(spec: PipelineSpec) -> ElementaryNet:
    """
    Build the pipeline net described by `spec`.

    Args:
        spec: Length n ≥ 2 and variant P, N or Nprime

    Returns:
        ElementaryNet with places p1..p_{n−1} and initial marking 0⋯0

    Examples:
        >>> make_pipeline(PipelineSpec(n=4, variant="N")).event_names
        ('t2', 't3', 't4')
    """
    n = spec.n
    places = tuple(place_name(i) for i in range(1, n))
    events: List[EventDef] = []
    for i in range(1, n + 1):
        pre = frozenset() if i == 1 else frozenset({place_name(i - 1)})
        post = frozenset() if i == n else frozenset({place_name(i)})
        events.append(EventDef(name=event_name(i), pre=pre, post=post))

    dropped = {VARIANT_P: None, VARIANT_N: event_name(1), VARIANT_NPRIME: event_name(2)}[spec.variant]
    return ElementaryNet(
        places=places,
        events=tuple(e for e in events if e.name != dropped),
        initial=(),
    )


def pipeline(n: int, variant: str = VARIANT_P) -> ElementaryNet:
    """
    Shorthand for make_pipeline(PipelineSpec(n=n, variant=variant)).

    Raises:
        ValueError: If n < 2 or the variant is unknown
    """
    return make_pipeline(PipelineSpec(n=n, variant=variant))
