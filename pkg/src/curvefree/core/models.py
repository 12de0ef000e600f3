"""Core data models for curve arrangement analysis."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import PreconditionError

# Singularity families
FAMILY_ORDINARY = "ordinary"
FAMILY_A = "A"
FAMILY_UNCLASSIFIED = "unclassified"

# Tacnode-type singularities handled by the conic formulas
SUPPORTED_A_TYPES = (3, 5, 7)


def _clean_counts(
    counts: Optional[Mapping[Any, Any]], what: str, minimum_key: int
) -> Dict[int, int]:
    result = {}
    for key, value in (counts or {}).items():
        key, value = int(key), int(value)
        if key < minimum_key:
            raise PreconditionError(f"{what} index must be >= {minimum_key}, got {key}")
        if value < 0:
            raise PreconditionError(f"{what} count for {key} must be non-negative, got {value}")
        if value:
            result[key] = value
    return dict(sorted(result.items()))


def _format_counts(counts: Mapping[int, int], start: int) -> str:
    if not counts:
        return "0"
    return ",".join(str(counts.get(i, 0)) for i in range(start, max(counts) + 1))


def _parse_counts(text: str, start: int) -> Dict[int, int]:
    text = text.strip()
    if not text:
        return {}
    return {start + i: int(value) for i, value in enumerate(text.split(","))}


@dataclass(frozen=True)
class WeakCombinatorics:
    """Component-degree counts k_i, ordinary point counts n_r and A_k counts.

    Zero counts are dropped on construction, so two instances describing the
    same data compare equal.
    """

    k_by_degree: Dict[int, int] = field(default_factory=dict)
    n_by_mult: Dict[int, int] = field(default_factory=dict)
    t3: int = 0
    t5: int = 0
    t7: int = 0

    def __post_init__(self):
        k_by_degree = _clean_counts(self.k_by_degree, "Component degree", 1)
        n_by_mult = _clean_counts(self.n_by_mult, "Point multiplicity", 2)
        object.__setattr__(self, "k_by_degree", k_by_degree)
        object.__setattr__(self, "n_by_mult", n_by_mult)
        for name in ("t3", "t5", "t7"):
            value = int(getattr(self, name))
            if value < 0:
                raise PreconditionError(f"{name} must be non-negative, got {value}")
            object.__setattr__(self, name, value)

    def __hash__(self) -> int:
        counts = (tuple(self.k_by_degree.items()), tuple(self.n_by_mult.items()))
        return hash((counts, self.t3, self.t5, self.t7))

    @classmethod
    def of(
        cls,
        k: Sequence[int] = (),
        n: Sequence[int] = (),
        t3: int = 0,
        t5: int = 0,
        t7: int = 0,
    ) -> "WeakCombinatorics":
        """Build from vectors (k1, k2, ...) and (n2, n3, ...)."""
        return cls(
            {i + 1: count for i, count in enumerate(k)},
            {i + 2: count for i, count in enumerate(n)},
            t3,
            t5,
            t7,
        )

    @property
    def d(self) -> int:
        """Number of lines."""
        return self.k_by_degree.get(1, 0)

    @property
    def k(self) -> int:
        """Number of conics."""
        return self.k_by_degree.get(2, 0)

    @property
    def total_degree(self) -> int:
        return sum(degree * count for degree, count in self.k_by_degree.items())

    @property
    def component_count(self) -> int:
        return sum(self.k_by_degree.values())

    @property
    def tacnode_count(self) -> int:
        return self.t3 + self.t5 + self.t7

    def has_tacnodes(self) -> bool:
        return self.tacnode_count > 0

    def degrees(self) -> Tuple[int, ...]:
        return tuple(self.k_by_degree)

    def is_lines_only(self) -> bool:
        return set(self.k_by_degree) <= {1}

    def is_conic_line(self) -> bool:
        return set(self.k_by_degree) <= {1, 2}

    def is_conics_only(self) -> bool:
        return set(self.k_by_degree) <= {2}

    def multiplicity_sum(self) -> int:
        """Sum of (r-1)·n_r."""
        return sum((r - 1) * count for r, count in self.n_by_mult.items())

    def max_multiplicity(self) -> int:
        return max(self.n_by_mult, default=0)

    def vector_text(self) -> str:
        """``k1,k2,...; n2,n3,...`` with a ``; t3,t5,t7`` suffix when tacnodes occur."""
        text = f"{_format_counts(self.k_by_degree, 1)}; {_format_counts(self.n_by_mult, 2)}"
        if self.has_tacnodes():
            text += f"; {self.t3},{self.t5},{self.t7}"
        return text

    @classmethod
    def from_vector_text(cls, text: str) -> "WeakCombinatorics":
        parts = [part.strip() for part in text.strip().strip("()").split(";")]
        if len(parts) not in (2, 3):
            raise ValueError(f"Expected 'k1,k2,...; n2,n3,...[; t3,t5,t7]', got '{text}'")
        tacnodes = (0, 0, 0)
        if len(parts) == 3:
            values = [int(v) for v in parts[2].split(",")]
            if len(values) != 3:
                raise ValueError(f"Expected three tacnode counts t3,t5,t7, got '{parts[2]}'")
            tacnodes = tuple(values)
        return cls(_parse_counts(parts[0], 1), _parse_counts(parts[1], 2), *tacnodes)

    def __str__(self) -> str:
        return f"({self.vector_text()})"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "k": {str(i): c for i, c in self.k_by_degree.items()},
            "n": {str(r): c for r, c in self.n_by_mult.items()},
            "t3": self.t3,
            "t5": self.t5,
            "t7": self.t7,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "WeakCombinatorics":
        return cls(
            data.get("k") or {},
            data.get("n") or {},
            data.get("t3", 0),
            data.get("t5", 0),
            data.get("t7", 0),
        )


@dataclass(frozen=True)
class QuadraticPolynomial:
    """c0 + c1·t + c2·t² with integer coefficients."""

    c0: int
    c1: int
    c2: int

    def evaluate(self, t: int) -> int:
        return self.c0 + self.c1 * t + self.c2 * t * t

    def coefficients(self) -> Tuple[int, int, int]:
        return (self.c0, self.c1, self.c2)

    def __add__(self, other: "QuadraticPolynomial") -> "QuadraticPolynomial":
        return QuadraticPolynomial(self.c0 + other.c0, self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other: "QuadraticPolynomial") -> "QuadraticPolynomial":
        return QuadraticPolynomial(self.c0 - other.c0, self.c1 - other.c1, self.c2 - other.c2)

    def __str__(self) -> str:
        pieces = []
        for coeff, power in ((self.c0, ""), (self.c1, "t"), (self.c2, "t^2")):
            if not coeff:
                continue
            magnitude = abs(coeff)
            body = power if power and magnitude == 1 else f"{magnitude}{power}"
            if not pieces:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(pieces) if pieces else "0"

    def factored(self, roots: Tuple[int, int]) -> str:
        """Render as (1+d1*t)(1+d2*t); a zero root contributes the factor 1 and is left out."""
        factors = [f"(1+{root}*t)" for root in roots if root]
        return "".join(factors) if factors else "1"

    def to_dict(self) -> Dict[str, Any]:
        return {"coefficients": [self.c0, self.c1, self.c2], "text": str(self)}


@dataclass(frozen=True)
class SplitResult:
    """Outcome of factoring 1 + c1·t + c2·t² as (1+d1·t)(1+d2·t)."""

    splits: bool
    roots: Optional[Tuple[int, int]] = None  # (d1, d2) with d1 <= d2

    def to_dict(self) -> Dict[str, Any]:
        return {"splits": self.splits, "roots": list(self.roots) if self.roots else None}


@dataclass(frozen=True)
class Moments:
    """f_i = sum of r^i·n_r."""

    f0: int
    f1: int
    f2: int


@dataclass(frozen=True)
class DdInequality:
    lhs: int
    rhs: int
    holds: bool


@dataclass(frozen=True)
class CurveInvariants:
    """Syzygy-side invariants of a reduced plane curve."""

    degree: int
    mdr: int
    tau: int
    is_free: bool
    exponents: Optional[Tuple[int, int]] = None
    hilbert_window: Tuple[int, ...] = ()  # Hilbert function values the Tjurina number was read from

    def to_dict(self) -> Dict[str, Any]:
        return {
            "degree": self.degree,
            "mdr": self.mdr,
            "tau": self.tau,
            "is_free": self.is_free,
            "exponents": list(self.exponents) if self.exponents else None,
        }


def _format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True, order=True)
class ProjectivePoint:
    """Point of P² over Q, normalized so the last nonzero coordinate is 1."""

    coordinates: Tuple[Fraction, Fraction, Fraction]

    def __post_init__(self):
        values = tuple(Fraction(c) for c in self.coordinates)
        if len(values) != 3:
            raise PreconditionError("A projective point needs three coordinates")
        nonzero = [c for c in values if c]
        if not nonzero:
            raise PreconditionError("(0:0:0) is not a projective point")
        scale = nonzero[-1]
        object.__setattr__(self, "coordinates", tuple(c / scale for c in values))

    @classmethod
    def of(cls, x, y, z) -> "ProjectivePoint":
        return cls((Fraction(x), Fraction(y), Fraction(z)))

    def chart(self) -> int:
        """Index of the normalized (unit) coordinate."""
        return max(i for i, c in enumerate(self.coordinates) if c)

    def __str__(self) -> str:
        return "(" + ":".join(_format_fraction(c) for c in self.coordinates) + ")"

    def to_list(self) -> List[str]:
        return [_format_fraction(c) for c in self.coordinates]


@dataclass(frozen=True)
class SingularityKind:
    family: str
    order: int = 0  # r for ordinary points, k for A_k

    @classmethod
    def ordinary(cls, r: int) -> "SingularityKind":
        return cls(FAMILY_ORDINARY, r)

    @classmethod
    def a_type(cls, k: int) -> "SingularityKind":
        if k not in SUPPORTED_A_TYPES:
            raise PreconditionError(f"Unsupported singularity type A{k}")
        return cls(FAMILY_A, k)

    @classmethod
    def unclassified(cls) -> "SingularityKind":
        return cls(FAMILY_UNCLASSIFIED, 0)

    @property
    def milnor(self) -> int:
        """Milnor number from the dictionary; Unclassified points contribute 0."""
        if self.family == FAMILY_ORDINARY:
            return (self.order - 1) ** 2
        if self.family == FAMILY_A:
            return self.order
        return 0

    def __str__(self) -> str:
        if self.family == FAMILY_ORDINARY:
            return f"Ordinary({self.order})"
        if self.family == FAMILY_A:
            return f"A{self.order}"
        return "Unclassified"


@dataclass(frozen=True)
class ClassifiedPoint:
    point: ProjectivePoint
    multiplicity: int
    kind: SingularityKind
    local_milnor: int
    incident_components: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "point": self.point.to_list(),
            "multiplicity": self.multiplicity,
            "kind": str(self.kind),
            "local_milnor": self.local_milnor,
            "incident_components": list(self.incident_components),
        }


@dataclass(frozen=True)
class ConjugatePointGroup:
    """Singular points with irrational coordinates sharing one incidence pattern.

    Counted with their type but never given coordinates.
    """

    count: int
    multiplicity: int
    kind: SingularityKind
    local_milnor: int  # per point
    incident_components: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "count": self.count,
            "multiplicity": self.multiplicity,
            "kind": str(self.kind),
            "local_milnor": self.local_milnor,
            "incident_components": list(self.incident_components),
        }


@dataclass(frozen=True)
class SingularLocusReport:
    points: Tuple[ClassifiedPoint, ...]
    derived_combinatorics: WeakCombinatorics
    total_tjurina: int
    residual_tjurina: int
    quasi_homogeneous_certified: bool
    conjugate_groups: Tuple[ConjugatePointGroup, ...] = ()
    seed: int = 0
    attempts: int = 1

    @property
    def milnor_sum(self) -> int:
        return sum(p.local_milnor for p in self.points) + sum(
            g.count * g.local_milnor for g in self.conjugate_groups
        )

    @property
    def unclassified_count(self) -> int:
        return sum(1 for p in self.points if p.kind.family == FAMILY_UNCLASSIFIED) + sum(
            g.count for g in self.conjugate_groups if g.kind.family == FAMILY_UNCLASSIFIED
        )

    @property
    def point_count(self) -> int:
        return len(self.points) + sum(g.count for g in self.conjugate_groups)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "points": [p.to_dict() for p in self.points],
            "conjugate_groups": [g.to_dict() for g in self.conjugate_groups],
            "derived_combinatorics": self.derived_combinatorics.to_dict(),
            "total_tjurina": self.total_tjurina,
            "residual_tjurina": self.residual_tjurina,
            "quasi_homogeneous_certified": self.quasi_homogeneous_certified,
            "seed": self.seed,
            "attempts": self.attempts,
        }


class Verdict(Enum):
    FREE_CONSISTENT = "FREE_CONSISTENT"
    NOT_FREE = "NOT_FREE"
    INCONSISTENT_INPUT = "INCONSISTENT_INPUT"
    UNCERTIFIED = "UNCERTIFIED"

    @property
    def exit_code(self) -> int:
        return {"INCONSISTENT_INPUT": 2, "UNCERTIFIED": 3}.get(self.value, 0)


@dataclass
class ExpectedBlock:
    """Expected results carried by a fixture file."""

    tau: Optional[int] = None
    free: Optional[bool] = None  # False when the file says "expect_exponents: none"
    exponents: Optional[Tuple[int, int]] = None
    combinatorics: Optional[WeakCombinatorics] = None
    mdr: Optional[int] = None
    verdict: Optional[Verdict] = None

    def is_empty(self) -> bool:
        return all(
            value is None
            for value in (self.tau, self.free, self.combinatorics, self.mdr, self.verdict)
        )


@dataclass
class ArrangementFile:
    name: str
    components: List[str]  # normalized polynomial text
    expected: Optional[ExpectedBlock] = None
    path: Optional[str] = None


@dataclass
class AnalysisReport:
    """Result of running the full pipeline on one arrangement."""

    name: str
    degree: int
    components: List[str]
    invariants: CurveInvariants
    combinatorics: Optional[WeakCombinatorics]
    singular_locus: Optional[SingularLocusReport]
    variant: Optional[str]
    poincare: Optional[QuadraticPolynomial]
    split: Optional[SplitResult]
    identity_checks: Dict[str, bool]
    verdict: Verdict
    reason: str = ""
    expectation_mismatches: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "degree": self.degree,
            "components": list(self.components),
            "invariants": self.invariants.to_dict(),
            "combinatorics": self.combinatorics.to_dict() if self.combinatorics else None,
            "singular_locus": self.singular_locus.to_dict() if self.singular_locus else None,
            "variant": self.variant,
            "poincare": self.poincare.to_dict() if self.poincare else None,
            "split": self.split.to_dict() if self.split else None,
            "identity_checks": dict(sorted(self.identity_checks.items())),
            "verdict": self.verdict.value,
            "reason": self.reason,
            "expectation_mismatches": list(self.expectation_mismatches),
        }
