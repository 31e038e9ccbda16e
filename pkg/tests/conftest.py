"""
Shared fixtures: settings isolation, fixture paths and random elementary nets.
"""

import random
from pathlib import Path
from typing import List

import pytest

from src.models.elementary_net import ElementaryNet, EventDef
from src.utils.settings import reset_settings


FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(autouse=True)
def fresh_settings():
    """Every test starts from settings re-read from the environment."""
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def fixtures_path() -> Path:
    """Get path to test fixtures."""
    return FIXTURES


def random_net(rng: random.Random, max_places: int = 6, max_events: int = 5) -> ElementaryNet:
    """
    A random elementary net with 2..max_places places and 2..max_events events.

    Every event touches at least one place; the initial marking is random.
    """
    n_places = rng.randint(2, max_places)
    places = tuple(f"q{k}" for k in range(n_places))
    events = []
    for k in range(rng.randint(2, max_events)):
        pre = frozenset(p for p in places if rng.random() < 0.3)
        post = frozenset(p for p in places if rng.random() < 0.3)
        if not pre and not post:
            post = frozenset({rng.choice(places)})
        events.append(EventDef(name=f"e{k}", pre=pre, post=post))
    initial = [p for p in places if rng.random() < 0.5]
    return ElementaryNet(places=places, events=tuple(events), initial=initial)


@pytest.fixture
def random_nets() -> List[ElementaryNet]:
    """Eight seeded random nets with at most 6 places."""
    rng = random.Random(20240917)
    return [random_net(rng) for _ in range(8)]
