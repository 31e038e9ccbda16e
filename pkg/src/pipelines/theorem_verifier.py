"""
Theorem verifier for pipeline nets.

For each n in 2..n_max, recomputes the homology, directed homology,
deadlock/sender structure, state-graph order properties and the
Mayer–Vietoris decomposition Q(P_n) = Q(N_n) ∪ Q(N'_n), and compares each
against its expected value.
"""

import logging
from typing import Callable, Dict, List, Optional

import networkx as nx

from src.cubical.builder import build_q
from src.cubical.semicubical_set import SemicubicalSet
from src.cubical.subcomplexes import (
    connected_components,
    intersection,
    restrict_to_events,
    union,
)
from src.cubical.validator import validate
from src.homology.chain_complex import chain_complex
from src.homology.groups import homology
from src.homology.mayer_vietoris import mv_check
from src.models.elementary_net import Marking
from src.models.homology_group import HomologyGroup, render_groups
from src.models.reports import CheckResult, VerificationReport
from src.models.state_space import StateSpace
from src.net.detectors import deadlocks, senders
from src.net.explorer import StateSpaceExplorer, transition_graph
from src.utils.constants import (
    MIN_PIPELINE_LENGTH,
    MODE_ALL_STATES,
    MODE_REACHABLE,
    VARIANT_N,
    VARIANT_NPRIME,
    VARIANT_P,
)
from src.utils.settings import get_settings
from .generator import event_name, pipeline


logger = logging.getLogger(__name__)


# =============================================================================
# EXPECTED VALUES
# =============================================================================

PIPELINE_HOMOLOGY = "H_0 = Z, H_1 = Z, H_k = 0 (k ≥ 2)"
CONTRACTIBLE_HOMOLOGY = "H_0 = Z, H_k = 0 (k ≥ 1)"
VANISHING_HOMOLOGY = "H_k = 0 (k ≥ 0)"
ALL_ONES_2X2 = [[1, 1], [1, 1]]


def _states(states) -> str:
    return "{" + ", ".join(sorted(s.to_string() for s in states)) + "}"


def _is_permutation(matrix: List[List[int]]) -> bool:
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        return False
    return (
        all(sorted(row) == [0] * (size - 1) + [1] for row in matrix)
        and all(sorted(col) == [0] * (size - 1) + [1] for col in zip(*matrix))
    )


class _PipelineCase:
    """Spaces and complexes for one n, computed once and shared by every check."""

    def __init__(self, n: int, explorer: StateSpaceExplorer) -> None:
        self.n = n
        self.width = n - 1
        self.nets = {v: pipeline(n, v) for v in (VARIANT_P, VARIANT_N, VARIANT_NPRIME)}
        self.reachable = explorer.explore(self.nets[VARIANT_P], MODE_REACHABLE)
        self.spaces: Dict[str, StateSpace] = {
            v: explorer.explore(net, MODE_ALL_STATES) for v, net in self.nets.items()
        }
        self.q_full = build_q(self.spaces[VARIANT_P])
        events = self.nets[VARIANT_P].event_names
        self.complexes: Dict[str, SemicubicalSet] = {
            VARIANT_P: self.q_full,
            VARIANT_N: restrict_to_events(self.q_full, [e for e in events if e != event_name(1)]),
            VARIANT_NPRIME: restrict_to_events(self.q_full, [e for e in events if e != event_name(2)]),
        }
        self._groups: Dict[tuple, List[HomologyGroup]] = {}

    def groups(self, variant: str, epsilon: Optional[int] = None) -> List[HomologyGroup]:
        key = (variant, epsilon)
        if key not in self._groups:
            self._groups[key] = homology(chain_complex(self.complexes[variant], epsilon))
        return self._groups[key]

    def full_marking(self) -> Marking:
        return Marking(bits=(True,) * self.width)

    def empty_marking(self) -> Marking:
        return Marking(bits=(False,) * self.width)

    def leading_marking(self) -> Marking:
        """10⋯0: only p1 occupied."""
        return Marking(bits=(True,) + (False,) * (self.width - 1))

    def trailing_marking(self) -> Marking:
        """01⋯1: every place but p1 occupied."""
        return Marking(bits=(False,) + (True,) * (self.width - 1))


class TheoremVerifier:
    """
    Runs every pipeline check for n = 2..n_max.

    Each failed check is logged at WARNING and recorded in the report;
    verification never stops at the first failure.
    """

    def __init__(self, state_cap: Optional[int] = None, n_limit: Optional[int] = None) -> None:
        settings = get_settings()
        self.explorer = StateSpaceExplorer(state_cap)
        self.n_limit = n_limit if n_limit is not None else settings.verify_n_max

    def verify(self, n_max: int) -> VerificationReport:
        """
        Verify the pipeline theorems for every n from 2 to n_max.

        Raises:
            ValueError: If n_max is outside 2..n_limit
            StateSpaceLimitError: If a pipeline exceeds the state cap
        """
        if not MIN_PIPELINE_LENGTH <= n_max <= self.n_limit:
            raise ValueError(
                f"n_max must lie in {MIN_PIPELINE_LENGTH}..{self.n_limit}, got {n_max}"
            )
        checks: List[CheckResult] = []
        for n in range(MIN_PIPELINE_LENGTH, n_max + 1):
            case = _PipelineCase(n, self.explorer)
            for check in self._checks():
                result = check(case)
                if not result.passed:
                    logger.warning("Check failed: %s", result)
                checks.append(result)
        return VerificationReport(n_max=n_max, checks=checks)

    def _checks(self) -> List[Callable[[_PipelineCase], CheckResult]]:
        return [
            self._saturation,
            self._validation,
            self._pipeline_homology,
            self._pipeline_directed_homology,
            self._subnet_homology,
            self._deadlocks_senders,
            self._rank_law,
            self._monotone_descent,
            self._initial_terminal,
            self._product_structure,
            self._restriction,
            self._union_decomposition,
            self._intersection_components,
            self._mayer_vietoris,
            self._directed_mayer_vietoris,
        ]

    # -------------------------------------------------------------------------
    # state spaces

    def _saturation(self, case: _PipelineCase) -> CheckResult:
        expected = 2 ** case.width
        actual = len(case.reachable)
        return CheckResult(
            name="saturation", n=case.n,
            passed=case.reachable.states == case.spaces[VARIANT_P].states,
            expected=f"{expected} reachable states", actual=f"{actual} reachable states",
        )

    def _deadlocks_senders(self, case: _PipelineCase) -> CheckResult:
        full, empty = case.full_marking(), case.empty_marking()
        expected = {
            VARIANT_P: (frozenset(), frozenset()),
            VARIANT_N: (frozenset({empty}), frozenset({full})),
            VARIANT_NPRIME: (frozenset({case.leading_marking()}), frozenset({case.trailing_marking()})),
        }
        actual = {v: (deadlocks(case.spaces[v]), senders(case.spaces[v])) for v in expected}

        def describe(found) -> str:
            return "; ".join(
                f"{v}: deadlocks {_states(pair[0])} senders {_states(pair[1])}" for v, pair in found.items()
            )

        return CheckResult(
            name="deadlocks-senders", n=case.n, passed=actual == expected,
            expected=describe(expected), actual=describe(actual),
        )

    def _monotone_descent(self, case: _PipelineCase) -> CheckResult:
        graph = transition_graph(case.spaces[VARIANT_N])
        rising = [(u, v, k) for u, v, k in graph.edges(keys=True) if not u.index > v.index]
        acyclic = nx.is_directed_acyclic_graph(graph)
        return CheckResult(
            name="monotone-descent", n=case.n, passed=not rising and acyclic,
            expected="every transition of N strictly decreases the state index; acyclic",
            actual=f"{len(rising)} non-decreasing transitions; acyclic={acyclic}",
        )

    def _initial_terminal(self, case: _PipelineCase) -> CheckResult:
        graph = transition_graph(case.spaces[VARIANT_N])
        full, empty = case.full_marking(), case.empty_marking()
        from_full = nx.descendants(graph, full) | {full}
        to_empty = nx.ancestors(graph, empty) | {empty}
        total = graph.number_of_nodes()
        return CheckResult(
            name="initial-terminal", n=case.n,
            passed=len(from_full) == total and len(to_empty) == total,
            expected=f"all {total} states reachable from {full} and reaching {empty}",
            actual=f"{len(from_full)} reachable from {full}, {len(to_empty)} reaching {empty}",
        )

    def _product_structure(self, case: _PipelineCase) -> CheckResult:
        graph = transition_graph(case.spaces[VARIANT_NPRIME])
        first = event_name(1)
        cut = nx.MultiDiGraph()
        cut.add_nodes_from(graph.nodes)
        cut.add_edges_from((u, v, k) for u, v, k in graph.edges(keys=True) if k != first)
        parts = [cut.subgraph(c).copy() for c in nx.weakly_connected_components(cut)]

        passed = len(parts) == 2 and nx.is_isomorphic(parts[0], parts[1])
        if passed and case.n > MIN_PIPELINE_LENGTH:
            smaller = transition_graph(
                self.explorer.explore(pipeline(case.n - 1, VARIANT_N), MODE_ALL_STATES)
            )
            passed = all(nx.is_isomorphic(part, smaller) for part in parts)
        return CheckResult(
            name="product-structure", n=case.n, passed=passed,
            expected="two isomorphic components matching N_{n-1} after removing t1-edges",
            actual=f"{len(parts)} components",
        )

    # -------------------------------------------------------------------------
    # semicubical sets and homology

    def _validation(self, case: _PipelineCase) -> CheckResult:
        violations = {v: len(validate(X)) for v, X in case.complexes.items()}
        squares = {
            f"{v}/{eps}": chain_complex(X, eps).boundary_squared_violations()
            for v, X in case.complexes.items()
            for eps in (None, 0, 1)
        }
        broken = {k: v for k, v in squares.items() if v}
        return CheckResult(
            name="validation", n=case.n,
            passed=not any(violations.values()) and not broken,
            expected="no cubical-identity violations; d∘d = 0",
            actual=f"violations {violations}; d∘d nonzero in {broken or 'none'}",
        )

    def _pipeline_homology(self, case: _PipelineCase) -> CheckResult:
        actual = render_groups(case.groups(VARIANT_P))
        return CheckResult(
            name="homology-P", n=case.n, passed=actual == PIPELINE_HOMOLOGY,
            expected=PIPELINE_HOMOLOGY, actual=actual,
        )

    def _pipeline_directed_homology(self, case: _PipelineCase) -> CheckResult:
        actual = {eps: render_groups(case.groups(VARIANT_P, eps)) for eps in (0, 1)}
        return CheckResult(
            name="directed-homology-P", n=case.n,
            passed=all(a == VANISHING_HOMOLOGY for a in actual.values()),
            expected=f"both epsilon: {VANISHING_HOMOLOGY}",
            actual="; ".join(f"epsilon={eps}: {a}" for eps, a in actual.items()),
        )

    def _subnet_homology(self, case: _PipelineCase) -> CheckResult:
        actual = {
            (v, eps): render_groups(case.groups(v, eps))
            for v in (VARIANT_N, VARIANT_NPRIME)
            for eps in (None, 0, 1)
        }
        return CheckResult(
            name="homology-subnets", n=case.n,
            passed=all(a == CONTRACTIBLE_HOMOLOGY for a in actual.values()),
            expected=f"N and Nprime, integral and both epsilon: {CONTRACTIBLE_HOMOLOGY}",
            actual="; ".join(f"{v}/{eps}: {a}" for (v, eps), a in actual.items()),
        )

    def _rank_law(self, case: _PipelineCase) -> CheckResult:
        mismatches = []
        for variant, space in case.spaces.items():
            for eps, detector in ((0, deadlocks), (1, senders)):
                h0 = case.groups(variant, eps)[0]
                count = len(detector(space))
                if h0.betti != count or h0.torsion:
                    mismatches.append(f"{variant}/epsilon={eps}: H_0 = {h0.render()}, count {count}")
        return CheckResult(
            name="rank-law", n=case.n, passed=not mismatches,
            expected="betti(H_0^0) = #deadlocks, betti(H_0^1) = #senders, no torsion",
            actual="; ".join(mismatches) or "all match",
        )

    def _restriction(self, case: _PipelineCase) -> CheckResult:
        mismatched = [
            v for v in (VARIANT_N, VARIANT_NPRIME)
            if build_q(case.spaces[v]) != case.complexes[v]
        ]
        return CheckResult(
            name="restriction", n=case.n, passed=not mismatched,
            expected="restrictions of Q(P) equal Q(N) and Q(N') built directly",
            actual=f"mismatched: {mismatched or 'none'}",
        )

    def _union_decomposition(self, case: _PipelineCase) -> CheckResult:
        joined = union(case.complexes[VARIANT_N], case.complexes[VARIANT_NPRIME])
        return CheckResult(
            name="union-decomposition", n=case.n, passed=joined == case.q_full,
            expected=f"Q(N) ∪ Q(N') = Q(P) with grade sizes {case.q_full.grade_sizes()}",
            actual=f"union grade sizes {joined.grade_sizes()}",
        )

    def _intersection_components(self, case: _PipelineCase) -> CheckResult:
        meet = intersection(case.complexes[VARIANT_N], case.complexes[VARIANT_NPRIME])
        components = connected_components(meet)
        if case.n > MIN_PIPELINE_LENGTH:
            smaller = build_q(self.explorer.explore(pipeline(case.n - 1, VARIANT_N), MODE_ALL_STATES))
            expected_sizes = smaller.grade_sizes()
        else:
            expected_sizes = (1,)
        sizes = [c.grade_sizes() for c in components]
        return CheckResult(
            name="intersection-components", n=case.n,
            passed=len(components) == 2 and all(s == expected_sizes for s in sizes),
            expected=f"2 components with grade sizes {expected_sizes}",
            actual=f"{len(components)} components with grade sizes {sizes}",
        )

    def _mayer_vietoris(self, case: _PipelineCase) -> CheckResult:
        report = mv_check(case.complexes[VARIANT_N], case.complexes[VARIANT_NPRIME])
        return CheckResult(
            name="mayer-vietoris", n=case.n,
            passed=report.exact and report.h0_theta == ALL_ONES_2X2,
            expected=f"exact in every grade; H_0(theta) = {ALL_ONES_2X2}",
            actual=f"exact={report.exact}; H_0(theta) = {report.h0_theta}",
        )

    def _directed_mayer_vietoris(self, case: _PipelineCase) -> CheckResult:
        reports = {
            eps: mv_check(case.complexes[VARIANT_N], case.complexes[VARIANT_NPRIME], eps)
            for eps in (0, 1)
        }
        passed = all(r.exact and len(r.h0_theta) == 2 and _is_permutation(r.h0_theta) for r in reports.values())
        return CheckResult(
            name="directed-mayer-vietoris", n=case.n, passed=passed,
            expected="exact in every grade; H_0^epsilon(theta) a 2x2 permutation matrix",
            actual="; ".join(
                f"epsilon={eps}: exact={r.exact}, H_0(theta) = {r.h0_theta}" for eps, r in reports.items()
            ),
        )


def verify_theorems(n_max: int, state_cap: Optional[int] = None) -> VerificationReport:
    """
    Convenience function to verify the pipeline theorems up to n_max.

    Args:
        n_max: Largest pipeline length, 2 ≤ n_max ≤ PETRI_VERIFY_N_MAX
        state_cap: Overrides the configured state cap

    Returns:
        VerificationReport with one CheckResult per check and n
    """
    return TheoremVerifier(state_cap).verify(n_max)
