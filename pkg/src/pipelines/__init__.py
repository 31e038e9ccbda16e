"""pipelines: pipeline net generators and the theorem verifier."""

from .generator import event_name, make_pipeline, pipeline, place_name
from .theorem_verifier import TheoremVerifier, verify_theorems

__all__ = [
    'event_name',
    'make_pipeline',
    'pipeline',
    'place_name',
    'TheoremVerifier',
    'verify_theorems',
]
