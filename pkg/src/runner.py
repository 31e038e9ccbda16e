"""
Analysis runner shared by the command line and the HTTP service.

Loads the input net, explores its state space, runs the requested analyses
in request order and renders the result as text or as a single JSON record.
Errors are mapped onto exit codes here so both front ends agree on them.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from src.cubical.builder import build_q
from src.cubical.dump import dump, render_dump
from src.cubical.semicubical_set import SemicubicalSet
from src.cubical.subcomplexes import restrict_to_events
from src.cubical.validator import validate
from src.homology.chain_complex import chain_complex
from src.homology.groups import homology
from src.homology.mayer_vietoris import mv_check
from src.models.analysis_request import AnalysisRequest
from src.models.elementary_net import ElementaryNet
from src.models.homology_group import HomologyGroup, render_groups
from src.models.reports import (
    AnalysisReport,
    CheckResult,
    MayerVietorisReport,
    RunResult,
    VerificationReport,
)
from src.net.detectors import deadlocks, senders
from src.net.explorer import StateSpaceExplorer
from src.parsers.net_parser import load_net, parse_net
from src.pipelines.generator import make_pipeline
from src.pipelines.theorem_verifier import TheoremVerifier
from src.utils.constants import (
    ANALYSIS_DEADLOCKS,
    ANALYSIS_HOMOLOGY,
    ANALYSIS_MV_CHECK,
    ANALYSIS_SENDERS,
    ANALYSIS_VALIDATE,
    DIRECTED_ANALYSIS_EPSILON,
    EXIT_CHECK_FAILED,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_RESOURCE_CAP,
    EXIT_USAGE,
    OUTPUT_STRUCTURED,
)
from src.utils.errors import NetParseError, StateSpaceLimitError


logger = logging.getLogger(__name__)


def to_json(record: Dict[str, Any]) -> str:
    """Byte-stable JSON: sorted keys, fixed indentation."""
    return json.dumps(record, sort_keys=True, indent=2, ensure_ascii=False)


def _state_list(states) -> List[str]:
    return [s.to_string() for s in sorted(states, key=lambda s: s.index)]


def _records(groups: List[HomologyGroup]) -> List[Dict[str, Any]]:
    return [g.record() for g in groups]


def _directed_label(epsilon: int):
    return lambda degree: f"H^{epsilon}_{degree}"


class AnalysisRunner:
    """Executes AnalysisRequests and verification runs."""

    def __init__(self, state_cap: Optional[int] = None) -> None:
        self.explorer = StateSpaceExplorer(state_cap)

    # =========================================================================
    # INPUT
    # =========================================================================

    def load(self, request: AnalysisRequest) -> Tuple[str, ElementaryNet]:
        """
        Resolve the request's input into a named net.

        Raises:
            FileNotFoundError: If net_path does not exist
            NetParseError: If the document is malformed
        """
        if request.pipeline is not None:
            return request.pipeline.label, make_pipeline(request.pipeline)
        if request.net_path is not None:
            net = load_net(request.net_path)
            return request.net_name or Path(request.net_path).stem, net
        return request.net_name or "net", parse_net(request.net_document or "")

    # =========================================================================
    # ANALYSES
    # =========================================================================

    def analyze(self, request: AnalysisRequest) -> AnalysisReport:
        """
        Run every requested analysis.

        Raises:
            FileNotFoundError, NetParseError: From loading the input
            StateSpaceLimitError: If exploration exceeds the state cap
            ValueError: If mv-check is requested on a net with fewer than 2 events
        """
        return self._execute(request)[0]

    def _execute(self, request: AnalysisRequest) -> Tuple[AnalysisReport, Optional[SemicubicalSet]]:
        name, net = self.load(request)
        space = self.explorer.explore(net, request.mode)
        logger.info("Analyzing %s: %d states (%s)", name, len(space), request.mode)

        fields: Dict[str, Any] = {"net": name, "mode": request.mode, "states": len(space)}
        cubes: Optional[SemicubicalSet] = None

        def q() -> SemicubicalSet:
            nonlocal cubes
            if cubes is None:
                cubes = build_q(space, request.max_dim)
            return cubes

        checks: List[CheckResult] = []
        directed: Dict[str, List[Dict[str, Any]]] = {}
        for analysis in request.analyses:
            if analysis == ANALYSIS_HOMOLOGY:
                fields["homology"] = _records(homology(chain_complex(q())))
            elif analysis in DIRECTED_ANALYSIS_EPSILON:
                epsilon = DIRECTED_ANALYSIS_EPSILON[analysis]
                directed[str(epsilon)] = _records(homology(chain_complex(q(), epsilon)))
            elif analysis == ANALYSIS_DEADLOCKS:
                fields["deadlocks"] = _state_list(deadlocks(space))
            elif analysis == ANALYSIS_SENDERS:
                fields["senders"] = _state_list(senders(space))
            elif analysis == ANALYSIS_VALIDATE:
                checks.extend(self._validation_checks(q()))
            elif analysis == ANALYSIS_MV_CHECK:
                reports = self._mayer_vietoris(net, q())
                fields["mv"] = reports
                checks.extend(
                    CheckResult(
                        name=f"mv-check {key}", passed=report.exact,
                        expected="exact in every grade", actual=f"exact={report.exact}",
                    )
                    for key, report in reports.items()
                )

        if directed:
            fields["directed"] = directed
        if request.dump_complex:
            fields["complex"] = dump(q())
        return AnalysisReport(checks=checks, **fields), cubes

    @staticmethod
    def _validation_checks(X: SemicubicalSet) -> List[CheckResult]:
        violations = validate(X)
        checks = [CheckResult(
            name="cubical-identities", passed=not violations,
            expected="0 violations",
            actual=f"{len(violations)} violations" + (f", first: {violations[0]}" if violations else ""),
        )]
        if violations:
            return checks
        for epsilon in (None, 0, 1):
            broken = chain_complex(X, epsilon).boundary_squared_violations()
            label = "d∘d" if epsilon is None else f"d^{epsilon}∘d^{epsilon}"
            checks.append(CheckResult(
                name=f"{label} = 0", passed=not broken,
                expected="zero in every degree", actual=f"nonzero in degrees {broken}" if broken else "zero",
            ))
        return checks

    @staticmethod
    def _mayer_vietoris(net: ElementaryNet, X: SemicubicalSet) -> Dict[str, MayerVietorisReport]:
        """
        Check the decomposition X = X1 ∪ X2 where X1 drops the first declared
        event and X2 the second. On P_n this is Q(N_n) ∪ Q(N'_n).
        """
        names = net.event_names
        if len(names) < 2:
            raise ValueError("mv-check needs a net with at least 2 events")
        first = restrict_to_events(X, [e for e in names if e != names[0]])
        second = restrict_to_events(X, [e for e in names if e != names[1]])
        return {
            "integral": mv_check(first, second),
            "directed-0": mv_check(first, second, 0),
            "directed-1": mv_check(first, second, 1),
        }

    # =========================================================================
    # RENDERING
    # =========================================================================

    @staticmethod
    def render_text(report: AnalysisReport, request: AnalysisRequest, X: Optional[SemicubicalSet] = None) -> str:
        lines = [f"net: {report.net} ({report.mode}, {report.states} states)"]
        for analysis in request.analyses:
            if analysis == ANALYSIS_HOMOLOGY:
                groups = [HomologyGroup(**r) for r in report.homology]
                lines.append(f"homology: {render_groups(groups)}")
            elif analysis in DIRECTED_ANALYSIS_EPSILON:
                epsilon = DIRECTED_ANALYSIS_EPSILON[analysis]
                groups = [HomologyGroup(**r) for r in report.directed[str(epsilon)]]
                lines.append(f"{analysis}: {render_groups(groups, _directed_label(epsilon))}")
            elif analysis == ANALYSIS_DEADLOCKS:
                lines.append("deadlocks: {" + ", ".join(report.deadlocks) + "}")
            elif analysis == ANALYSIS_SENDERS:
                lines.append("senders: {" + ", ".join(report.senders) + "}")
            elif analysis == ANALYSIS_MV_CHECK and report.mv:
                for key, mv in report.mv.items():
                    lines.append(f"mv-check {key}: exact={mv.exact} H_0(theta)={mv.h0_theta}")
        lines.extend(str(check) for check in report.checks)
        if X is not None:
            lines.append(render_dump(X))
        return "\n".join(lines)

    # =========================================================================
    # ENTRY POINTS
    # =========================================================================

    def run(self, request: AnalysisRequest) -> RunResult:
        """
        Analyze and render; map failures onto exit codes.

        Returns:
            RunResult with exit code 0 (ok), 1 (a check failed), 2 (usage or
            missing file), 3 (parse error) or 4 (state cap exceeded)
        """
        try:
            report, X = self._execute(request)
        except Exception as e:
            return self._failure(e)

        if request.output == OUTPUT_STRUCTURED:
            stdout = to_json(report.model_dump(mode="json", exclude_none=True))
        else:
            stdout = self.render_text(report, request, X if request.dump_complex else None)
        exit_code = EXIT_OK if report.passed else EXIT_CHECK_FAILED
        return RunResult(exit_code=exit_code, stdout=stdout, report=report)

    def run_verify(self, n_max: int, output: str = "text") -> RunResult:
        """Run the pipeline theorem verifier; exit code 1 if any check fails."""
        try:
            verification = TheoremVerifier(self.explorer.state_cap).verify(n_max)
        except Exception as e:
            return self._failure(e)

        if output == OUTPUT_STRUCTURED:
            stdout = to_json(verification.model_dump(mode="json"))
        else:
            stdout = self.render_verification(verification)
        exit_code = EXIT_OK if verification.passed else EXIT_CHECK_FAILED
        return RunResult(exit_code=exit_code, stdout=stdout, verification=verification)

    @staticmethod
    def render_verification(verification: VerificationReport) -> str:
        lines = [str(check) for check in verification.checks]
        failed = len(verification.failures)
        lines.append(
            f"{len(verification.checks) - failed} passed, {failed} failed (n = 2..{verification.n_max})"
        )
        return "\n".join(lines)

    @staticmethod
    def _failure(error: Exception) -> RunResult:
        if isinstance(error, FileNotFoundError):
            code = EXIT_USAGE
        elif isinstance(error, NetParseError):
            code = EXIT_PARSE
        elif isinstance(error, StateSpaceLimitError):
            code = EXIT_RESOURCE_CAP
        elif isinstance(error, ValueError):
            code = EXIT_USAGE
        else:
            raise error
        logger.error("Run failed: %s", error)
        return RunResult(exit_code=code, stderr=f"error: {error}")


def run(request: AnalysisRequest, state_cap: Optional[int] = None) -> RunResult:
    """Convenience function: run one analysis request."""
    return AnalysisRunner(state_cap).run(request)
