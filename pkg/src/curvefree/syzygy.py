"""Jacobian syzygies, Tjurina numbers and the freeness test."""

from typing import List, Sequence, Tuple

from .core.errors import (
    DegenerateCurveError,
    NonHomogeneousError,
    NonStabilizedError,
    PreconditionError,
    ProductMismatchError,
)
from .core.exactla import RationalMatrix, kernel_basis, kernel_dim, rank
from .core.models import CurveInvariants
from .core.polyring import Polynomial, monomial_basis, product


def _require_homogeneous(f: Polynomial) -> int:
    if f.is_zero() or not f.is_homogeneous():
        raise NonHomogeneousError(f"Expected a nonzero homogeneous polynomial, got {f}")
    degree = f.degree()
    if degree < 1:
        raise PreconditionError(f"Expected a polynomial of degree >= 1, got {f}")
    return degree


def jacobian_generators(f: Polynomial) -> Tuple[Polynomial, Polynomial, Polynomial]:
    """(∂x f, ∂y f, ∂z f)."""
    _require_homogeneous(f)
    return (f.partial(0), f.partial(1), f.partial(2))


def _multiplication_matrix(
    generators: Sequence[Polynomial], source_degree: int, target_degree: int
) -> RationalMatrix:
    """Matrix of (a, b, c) -> a·g0 + b·g1 + c·g2 from (S_source)³ to S_target.

    Rows index target monomials, columns index (generator, source monomial)
    pairs, both in graded-lex order.
    """
    source = monomial_basis(source_degree)
    target = monomial_basis(target_degree)
    position = {m: i for i, m in enumerate(target)}
    cols = len(generators) * len(source)
    entries = [0] * (len(target) * cols)
    column = 0
    for generator in generators:
        for a0, a1, a2 in source:
            for (b0, b1, b2), coeff in generator.terms.items():
                row = position[(a0 + b0, a1 + b1, a2 + b2)]
                entries[row * cols + column] += coeff
            column += 1
    return RationalMatrix(len(target), cols, tuple(entries))


def ar_dim(f: Polynomial, r: int) -> int:
    """Dimension of the degree-r part of the module of Jacobian syzygies AR(f)."""
    degree = _require_homogeneous(f)
    if r < 0:
        raise PreconditionError(f"Syzygy degree must be non-negative, got {r}")
    return kernel_dim(_multiplication_matrix(jacobian_generators(f), r, r + degree - 1))


def syzygies_of_degree(f: Polynomial, r: int) -> List[Tuple[Polynomial, Polynomial, Polynomial]]:
    """Basis of AR(f)_r as explicit triples (a, b, c) with a·fx + b·fy + c·fz = 0."""
    degree = _require_homogeneous(f)
    source = monomial_basis(r)
    matrix = _multiplication_matrix(jacobian_generators(f), r, r + degree - 1)
    triples = []
    for vector in kernel_basis(matrix):
        parts = []
        for slot in range(3):
            chunk = vector[slot * len(source) : (slot + 1) * len(source)]
            parts.append(Polynomial(dict(zip(source, chunk))))
        triples.append(tuple(parts))
    return triples


def mdr(f: Polynomial) -> int:
    """Minimal degree of a nonzero Jacobian syzygy.

    The Koszul relations bound the search by d-1.
    """
    degree = _require_homogeneous(f)
    for r in range(degree):
        if ar_dim(f, r) > 0:
            return r
    raise PreconditionError(f"No Jacobian syzygy of degree <= {degree - 1}; is the input reduced?")


def hilbert_dim(f: Polynomial, k: int) -> int:
    """dim (S/J_f)_k."""
    degree = _require_homogeneous(f)
    if k < 0:
        raise PreconditionError(f"Hilbert function degree must be non-negative, got {k}")
    ambient = (k + 1) * (k + 2) // 2
    if k < degree - 1:
        return ambient
    return ambient - rank(_multiplication_matrix(jacobian_generators(f), k - degree + 1, k))


def tjurina_window(f: Polynomial) -> Tuple[int, ...]:
    """Degrees at which the Hilbert function is sampled for the Tjurina number."""
    degree = _require_homogeneous(f)
    return tuple(max(k, 0) for k in (3 * degree - 5, 3 * degree - 4, 3 * degree - 3))


def tjurina_window_values(f: Polynomial) -> Tuple[int, ...]:
    if f.degree() == 1:
        return (0, 0, 0)
    return tuple(hilbert_dim(f, k) for k in tjurina_window(f))


def total_tjurina(f: Polynomial) -> int:
    """Total Tjurina number deg(J_f), read off the stabilized Hilbert function.

    Raises:
        NonStabilizedError: the window values differ (non-reduced input)
    """
    values = tjurina_window_values(f)
    if len(set(values)) != 1:
        raise NonStabilizedError(values)
    return values[0]


def is_free(f: Polynomial) -> CurveInvariants:
    """Decide freeness with the du Plessis-Wall equality (d-1)² - d1(d-d1-1) = τ."""
    degree = _require_homogeneous(f)
    if degree < 2:
        raise DegenerateCurveError(f"Freeness needs a curve of degree >= 2, got degree {degree}")
    d1 = mdr(f)
    values = tjurina_window_values(f)
    if len(set(values)) != 1:
        raise NonStabilizedError(values)
    tau = values[0]
    free = 2 * d1 <= degree - 1 and (degree - 1) ** 2 - d1 * (degree - d1 - 1) == tau
    return CurveInvariants(
        degree=degree,
        mdr=d1,
        tau=tau,
        is_free=free,
        exponents=(d1, degree - 1 - d1) if free else None,
        hilbert_window=values,
    )


def proportional(f: Polynomial, g: Polynomial) -> bool:
    """True iff f = λ·g for some nonzero rational λ."""
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()
    if set(f.terms) != set(g.terms):
        return False
    monomial = next(iter(f.terms))
    ratio = f.coefficient(monomial) / g.coefficient(monomial)
    return f == g.scalar_mul(ratio)


def reducedness_check(f: Polynomial, components: Sequence[Polynomial]) -> bool:
    """True iff the components are pairwise non-proportional and each is squarefree.

    Raises:
        ProductMismatchError: the components do not multiply to f up to a scalar
    """
    if not components or not proportional(f, product(components)):
        raise ProductMismatchError(
            "The product of the components differs from f by more than a scalar"
        )
    for i, ci in enumerate(components):
        for cj in components[i + 1 :]:
            if proportional(ci, cj):
                return False
    for component in components:
        if _require_homogeneous(component) == 1:
            continue
        try:
            total_tjurina(component)
        except NonStabilizedError:
            return False
    return True


def smoothness_check(component: Polynomial) -> bool:
    if _require_homogeneous(component) == 1:
        return True
    return total_tjurina(component) == 0
