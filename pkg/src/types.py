"""Type definitions for the exact Zernike library."""

from dataclasses import dataclass, field
from typing import Any, List, Literal, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from .exact.surd import ComplexSurd, SurdSum
from .utils.errors import InvalidIndexError

Kind = Literal["cos", "sin", "radial"]


# ============= 2D INDEX TYPES =============


@dataclass(frozen=True, order=True)
class Index2D:
    """Circle polynomial index (n, m) with 0 <= m <= n and even n - m."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 0 or self.m < 0 or self.m > self.n or (self.n - self.m) % 2:
            raise InvalidIndexError(
                "R_n^m needs 0 <= m <= n with n - m even", {"n": self.n, "m": self.m}
            )

    @property
    def half(self) -> int:
        """(n - m) / 2, the number of radial steps below r^n."""
        return (self.n - self.m) // 2

    @property
    def a(self) -> int:
        return -(self.n - self.m) // 2

    @property
    def b(self) -> int:
        return -(self.n + self.m) // 2


@dataclass(frozen=True)
class NollIndex:
    """Single-integer enumeration of circle functions, j >= 1."""

    j: int

    def __post_init__(self):
        if self.j < 1:
            raise InvalidIndexError("Noll index must be >= 1", {"j": self.j})


@dataclass(frozen=True, order=True)
class AngularKind:
    """cos(m phi), sin(m phi) or the rotationally symmetric (radial) factor."""

    kind: Kind
    m: int = 0

    def __post_init__(self):
        if self.kind == "radial" and self.m != 0:
            raise InvalidIndexError("radial kind carries m = 0", {"m": self.m})
        if self.kind in ("cos", "sin") and self.m < 1:
            raise InvalidIndexError(f"{self.kind} kind needs m >= 1", {"m": self.m})
        if self.kind not in ("cos", "sin", "radial"):
            raise InvalidIndexError(f"unknown angular kind {self.kind!r}")

    @classmethod
    def cos(cls, m: int) -> "AngularKind":
        return cls("radial") if m == 0 else cls("cos", m)

    @classmethod
    def sin(cls, m: int) -> "AngularKind":
        return cls("sin", m)

    @classmethod
    def radial(cls) -> "AngularKind":
        return cls("radial")

    def __str__(self) -> str:
        if self.kind == "radial":
            return "1"
        arg = "phi" if self.m == 1 else f"{self.m}*phi"
        return f"{self.kind}({arg})"


# ============= 3D INDEX TYPES =============


@dataclass(frozen=True, order=True)
class Index3D:
    """Sphere radial index (n, l) with 0 <= l <= n and even n - l."""

    n: int
    l: int

    def __post_init__(self):
        if self.n < 0 or self.l < 0 or self.l > self.n or (self.n - self.l) % 2:
            raise InvalidIndexError(
                "R_n^(l) needs 0 <= l <= n with n - l even", {"n": self.n, "l": self.l}
            )

    @property
    def alpha(self) -> int:
        return (self.n - self.l) // 2

    @property
    def two_q(self) -> int:
        """2q = 2l + 3, kept integral."""
        return 2 * self.l + 3


@dataclass(frozen=True, order=True)
class SphIndex:
    """Spherical harmonic index (l, m) with -l <= m <= l."""

    l: int
    m: int

    def __post_init__(self):
        if self.l < 0 or abs(self.m) > self.l:
            raise InvalidIndexError("Y_l^(m) needs |m| <= l", {"l": self.l, "m": self.m})


@dataclass(frozen=True)
class Wigner3jArgs:
    """Arguments of a 3j symbol (j1 j2 j3 / m1 m2 m3)."""

    j1: int
    j2: int
    j3: int
    m1: int
    m2: int
    m3: int

    def __post_init__(self):
        for j, m in ((self.j1, self.m1), (self.j2, self.m2), (self.j3, self.m3)):
            if j < 0 or abs(m) > j:
                raise InvalidIndexError("3j symbol needs |m_i| <= j_i", {"j": j, "m": m})

    def columns(self) -> List[Tuple[int, int]]:
        return [(self.j1, self.m1), (self.j2, self.m2), (self.j3, self.m3)]


# ============= NUMERIC TYPES =============


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Legendre nodes and weights on (-1, 1)."""

    nodes: np.ndarray
    weights: np.ndarray
    order: int

    def mapped_to_unit(self) -> Tuple[np.ndarray, np.ndarray]:
        """Nodes and weights for the interval (0, 1)."""
        return (self.nodes + 1.0) / 2.0, self.weights / 2.0


# ============= REPORT TYPES =============


@dataclass
class CheckResult:
    """Outcome of one verification check."""

    name: str
    key: Tuple[Any, ...]
    passed: bool
    residual: Optional[float] = None  # None for exact-equality checks
    detail: str = ""

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        measure = "exact" if self.residual is None else f"residual={self.residual:.3e}"
        key = ",".join(str(k) for k in self.key)
        line = f"{status} {self.name} [{key}] {measure}"
        return f"{line} {self.detail}" if self.detail else line


@dataclass
class SuiteReport:
    """All checks of a verification suite."""

    suite: str
    results: List[CheckResult] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    @property
    def first_failure(self) -> Optional[CheckResult]:
        failures = self.failures
        return failures[0] if failures else None

    def extend(self, other: "SuiteReport") -> None:
        self.results.extend(other.results)
        self.notes.extend(other.notes)


# ============= FIXTURE TYPES =============

FIXTURE_FAMILIES = (
    "radial2d",
    "h",
    "noll",
    "trig",
    "rjcart",
    "cart2z2d",
    "z2cart2d",
    "g",
    "radial3d",
    "f",
    "fhat",
    "ylmcart",
    "z3dcart",
    "u",
    "yprod",
    "k",
)


class FixtureEntry(BaseModel):
    """One transcribed table row: family, index key and parsed exact value."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    family: str
    key: Tuple[Union[int, str], ...]
    text: str
    value: Any = None  # parsed: SurdSum, ComplexSurd, poly or expansion map
    source_line: int = 0

    @field_validator("family")
    @classmethod
    def _known_family(cls, family: str) -> str:
        if family not in FIXTURE_FAMILIES:
            raise ValueError(f"unknown fixture family {family!r}")
        return family


Scalar = Union[SurdSum, ComplexSurd]
