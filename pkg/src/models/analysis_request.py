"""
AnalysisRequest model - One invocation of the analysis runner.

Uses Pydantic v2 for validation. The CLI flags and the HTTP query parameters
both map one-to-one onto these fields.
"""

from typing import Literal, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator

from src.utils.constants import VALID_ANALYSES
from .pipeline_spec import PipelineSpec


class AnalysisRequest(BaseModel):
    """
    Input net, exploration mode, requested analyses and output format.

    Exactly one of net_path, net_document and pipeline names the input.
    """
    net_path: Optional[str] = None
    net_document: Optional[str] = None
    net_name: Optional[str] = None
    pipeline: Optional[PipelineSpec] = None
    mode: Literal["reachable", "all-states"] = "reachable"
    analyses: Tuple[str, ...] = ("homology",)
    max_dim: Optional[int] = Field(default=None, ge=0)
    output: Literal["text", "structured"] = "text"
    dump_complex: bool = False

    model_config = {"frozen": True}

    @field_validator('analyses', mode='after')
    @classmethod
    def known_analyses(cls, v: Tuple[str, ...]) -> Tuple[str, ...]:
        """At least one analysis, each one known; duplicates dropped, order kept"""
        if not v:
            raise ValueError("At least one analysis must be requested")
        unknown = [a for a in v if a not in VALID_ANALYSES]
        if unknown:
            raise ValueError(f"Unknown analyses {unknown}; expected from {VALID_ANALYSES}")
        return tuple(dict.fromkeys(v))

    @model_validator(mode='after')
    def single_input(self) -> 'AnalysisRequest':
        """Exactly one input source"""
        sources = [s for s in (self.net_path, self.net_document, self.pipeline) if s is not None]
        if len(sources) != 1:
            raise ValueError("Exactly one of net_path, net_document or pipeline is required")
        return self
