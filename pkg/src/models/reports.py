"""
Report models - Results of validation, verification and analysis runs.

Uses Pydantic v2 so every report serializes with model_dump(mode="json").
"""

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, computed_field


class Violation(BaseModel):
    """
    One failure found by the semicubical validator.

    kind "identity": ∂_i^α ∂_j^β x ≠ ∂_{j−1}^β ∂_i^α x for the n-cube x, i < j.
    kind "membership": the face ∂_i^α x is missing or not a cube of grade n−1;
    j and beta are unset.
    """
    kind: Literal["identity", "membership"] = "identity"
    n: int
    i: int
    j: Optional[int] = None
    alpha: int
    beta: Optional[int] = None
    cube: str
    detail: str = ""

    model_config = {"frozen": True}

    def __str__(self) -> str:
        if self.kind == "membership":
            return f"n={self.n} i={self.i} alpha={self.alpha} on {self.cube}: {self.detail}"
        return (
            f"n={self.n} i={self.i} j={self.j} alpha={self.alpha} beta={self.beta} "
            f"on {self.cube}: {self.detail}"
        )


class CheckResult(BaseModel):
    """A single named check with expected and actual values."""
    name: str
    n: Optional[int] = None
    passed: bool
    expected: str = ""
    actual: str = ""

    model_config = {"frozen": True}

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        where = f" n={self.n}" if self.n is not None else ""
        detail = "" if self.passed else f" (expected {self.expected}, got {self.actual})"
        return f"[{status}] {self.name}{where}{detail}"


class VerificationReport(BaseModel):
    """Per-n, per-check outcome of the pipeline theorem verifier."""
    n_max: int
    checks: List[CheckResult] = Field(default_factory=list)

    model_config = {"frozen": True}

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def for_n(self, n: int) -> List[CheckResult]:
        return [c for c in self.checks if c.n == n]

    def check(self, name: str, n: int) -> CheckResult:
        """
        Look up one check by name and n.

        Raises:
            KeyError: If no such check was run
        """
        for c in self.checks:
            if c.name == name and c.n == n:
                return c
        raise KeyError(f"No check {name!r} for n={n}")


class GradeExactness(BaseModel):
    """Exactness data for 0 → C(X1∩X2) → C(X1)⊕C(X2) → C(X1∪X2) → 0 in one grade."""
    grade: int
    intersection: int
    direct_sum: int
    union: int
    theta_rank: int
    delta_rank: int
    theta_injective: bool
    delta_surjective: bool
    composite_zero: bool
    middle_exact: bool
    image_saturated: bool
    chain_maps: bool = True

    model_config = {"frozen": True}

    @computed_field  # type: ignore[prop-decorator]
    @property
    def exact(self) -> bool:
        return (
            self.chain_maps
            and self.theta_injective
            and self.delta_surjective
            and self.composite_zero
            and self.middle_exact
            and self.image_saturated
        )


class MayerVietorisReport(BaseModel):
    """
    Outcome of mv_check.

    epsilon is None for the integral complexes, 0 or 1 for the Goubault ones.
    h0_theta is the matrix of H_0(θ): H_0(X1∩X2) → H_0(X1) ⊕ H_0(X2) in the
    generator bases listed alongside it.
    """
    epsilon: Optional[int] = None
    grades: List[GradeExactness] = Field(default_factory=list)
    euler_identity: bool
    h0_theta: List[List[int]] = Field(default_factory=list)
    h0_source: List[str] = Field(default_factory=list)
    h0_target: List[str] = Field(default_factory=list)

    model_config = {"frozen": True}

    @computed_field  # type: ignore[prop-decorator]
    @property
    def exact(self) -> bool:
        return self.euler_identity and all(g.exact for g in self.grades)


class AnalysisReport(BaseModel):
    """
    Single structured record produced by one analysis run.

    Only the requested analyses are filled in; the rest keep their defaults.
    """
    net: str
    mode: str
    states: int
    homology: List[Dict[str, Any]] = Field(default_factory=list)
    directed: Dict[str, List[Dict[str, Any]]] = Field(default_factory=dict)
    deadlocks: List[str] = Field(default_factory=list)
    senders: List[str] = Field(default_factory=list)
    checks: List[CheckResult] = Field(default_factory=list)
    mv: Optional[Dict[str, MayerVietorisReport]] = None
    complex: Optional[Dict[str, Any]] = None

    model_config = {"frozen": True}

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


class RunResult(BaseModel):
    """Exit code and rendered output of one CLI or HTTP invocation."""
    exit_code: int
    stdout: str = ""
    stderr: str = ""
    report: Optional[AnalysisReport] = None
    verification: Optional[VerificationReport] = None

    model_config = {"frozen": True}
