"""Data models for the Petri net homology engine."""

from .elementary_net import ElementaryNet, EventDef, Marking
from .state_space import StateSpace
from .cube import Cube
from .homology_group import HomologyGroup, render_groups
from .pipeline_spec import PipelineSpec
from .analysis_request import AnalysisRequest
from .reports import (
    AnalysisReport,
    CheckResult,
    GradeExactness,
    MayerVietorisReport,
    RunResult,
    VerificationReport,
    Violation,
)

__all__ = [
    'ElementaryNet',
    'EventDef',
    'Marking',
    'StateSpace',
    'Cube',
    'HomologyGroup',
    'render_groups',
    'PipelineSpec',
    'AnalysisRequest',
    'AnalysisReport',
    'CheckResult',
    'GradeExactness',
    'MayerVietorisReport',
    'RunResult',
    'VerificationReport',
    'Violation',
]
