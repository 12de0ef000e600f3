"""Singular points of an arrangement and its weak combinatorics.

All components are smooth, so the singular points of the product are exactly
the points where two or more components meet. The search works in one generic
coordinate system for the whole arrangement:

1. Draw a random invertible integer matrix M and pass to g_i(X) = c_i(M·X).
2. For every pair of components, take Res_y of the affine equations. Its
   roots are the x-coordinates of the pair's intersection points and the
   vanishing order at a root is the intersection multiplicity there.
3. Split the resultants by root multiplicity and refine all pieces into a
   gcd-free basis. Every basis element collects the points sharing one
   incidence pattern (which pairs meet there, and how tangentially).
4. Rational roots become explicit points, mapped back through M. Other roots
   are counted in conjugate groups with the same classification.

Genericity of M is checked rather than assumed; a failed check moves on to
the next matrix drawn from the seeded generator.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .core.errors import (
    PointNotOnCurveError,
    PreconditionError,
    ShearExhaustedError,
    UnsupportedContactOrderError,
)
from .core.models import (
    FAMILY_A,
    FAMILY_ORDINARY,
    FAMILY_UNCLASSIFIED,
    ClassifiedPoint,
    ConjugatePointGroup,
    ProjectivePoint,
    SingularityKind,
    SingularLocusReport,
    WeakCombinatorics,
)
from .core.polyring import (
    Polynomial,
    UniPolynomial,
    linear_substitution,
    product,
    rational_roots,
    resultant,
    squarefree_check,
    squarefree_decomposition,
    subresultant,
    uni_gcd,
    y_coefficients,
)
from .syzygy import total_tjurina

DEFAULT_MAX_RETRIES = 16

# Largest contact order between two smooth branches that has a name (A7)
MAX_CONTACT_ORDER = 4

Matrix = Tuple[Tuple[int, int, int], Tuple[int, int, int], Tuple[int, int, int]]
Pair = Tuple[int, int]


class _NotGeneric(Exception):
    """The current coordinate change hides or merges intersection points."""


def _determinant3(m: Sequence[Sequence]) -> Fraction:
    return Fraction(
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _inverse3(m: Sequence[Sequence]) -> List[List[Fraction]]:
    det = _determinant3(m)
    if not det:
        raise PreconditionError("Coordinate change matrix is singular")
    inverse = [[Fraction(0)] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            rows = [r for r in range(3) if r != j]
            cols = [c for c in range(3) if c != i]
            (r0, r1), (c0, c1) = rows, cols
            minor = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]
            inverse[i][j] = Fraction((-1) ** (i + j) * minor) / det
    return inverse


def _apply(m: Sequence[Sequence], vector: Sequence) -> Tuple[Fraction, ...]:
    return tuple(sum(Fraction(m[i][k]) * vector[k] for k in range(3)) for i in range(3))


def _random_matrix(rng: random.Random, attempt: int) -> Matrix:
    """Random invertible integer matrix; the entry range widens with each attempt."""
    spread = 3 + 2 * attempt
    while True:
        matrix = tuple(tuple(rng.randint(-spread, spread) for _ in range(3)) for _ in range(3))
        if _determinant3(matrix):
            return matrix


@dataclass
class _PairIntersection:
    pair: Pair
    factors: List[Tuple[UniPolynomial, int]]  # square-free pieces of Res_y with multiplicity
    root_numerator: UniPolynomial  # y = numerator(x) / denominator(x) at every intersection
    root_denominator: UniPolynomial

    def multiplicity_on(self, element: UniPolynomial) -> int:
        for factor, multiplicity in self.factors:
            if not factor.divmod(element)[1]:
                return multiplicity
        return 0


@dataclass
class _PointGroup:
    """Roots of one gcd-free basis element: points sharing an incidence pattern."""

    element: UniPolynomial
    pair_multiplicities: Dict[Pair, int]

    @property
    def incident(self) -> Tuple[int, ...]:
        return tuple(sorted({i for pair in self.pair_multiplicities for i in pair}))


@dataclass
class _Locus:
    matrix: Matrix
    pairs: Dict[Pair, _PairIntersection]
    groups: List[_PointGroup]
    attempts: int


def _product(polys) -> UniPolynomial:
    result = UniPolynomial.constant(1)
    for poly in polys:
        result = result * poly
    return result


def _common_root(
    gi: List[UniPolynomial], gj: List[UniPolynomial]
) -> Tuple[UniPolynomial, UniPolynomial]:
    """The shared y-root of a pair as a rational function of x.

    A line a·y + b(x) gives y = -b/a directly. For two curves of degree >= 2
    the first subresultant S1 = s1(x)·y + s0(x) is, at each intersection
    abscissa, proportional to the gcd of the specialised equations.
    """
    for line in (gi, gj):
        if len(line) == 2:
            return -line[0], line[1]
    s0, s1 = subresultant(gi, gj, 1)
    return -s0, s1


def _intersect(pair: Pair, gi: List[UniPolynomial], gj: List[UniPolynomial]) -> _PairIntersection:
    di, dj = len(gi) - 1, len(gj) - 1
    res = resultant(gi, gj)
    if res.degree() != di * dj:
        raise _NotGeneric(f"pair {pair}: an intersection point lies on the line at infinity")
    factors = squarefree_decomposition(res)
    numerator, denominator = _common_root(gi, gj)
    if min(di, dj) >= 2:
        reduced = _product(factor for factor, _ in factors)
        if uni_gcd(reduced, denominator).degree() > 0:
            raise _NotGeneric(f"pair {pair}: two intersection points share an x-coordinate")
    return _PairIntersection(pair, factors, numerator, denominator)


def _gcd_free_basis(polys: Sequence[UniPolynomial]) -> List[UniPolynomial]:
    """Pairwise coprime monic square-free polynomials whose products give every input."""
    basis: List[UniPolynomial] = []
    for poly in polys:
        current = poly.monic()
        refined = []
        for element in basis:
            common = uni_gcd(current, element)
            if common.degree() <= 0:
                refined.append(element)
                continue
            rest = element / common
            if rest.degree() > 0:
                refined.append(rest.monic())
            refined.append(common)
            current = current / common
        if current.degree() > 0:
            refined.append(current.monic())
        basis = refined
    return basis


def _check_group(group: _PointGroup, pairs: Dict[Pair, _PairIntersection]) -> None:
    incident = group.incident
    for a, i in enumerate(incident):
        for j in incident[a + 1 :]:
            if (i, j) not in group.pair_multiplicities:
                raise _NotGeneric(f"components {incident} do not all meet at one point")
    meeting = [pairs[p] for p in sorted(group.pair_multiplicities)]
    first = meeting[0]
    for other in meeting[1:]:
        cross = (
            first.root_numerator * other.root_denominator
            - other.root_numerator * first.root_denominator
        )
        if cross.divmod(group.element)[1]:
            raise _NotGeneric(
                f"pairs {first.pair} and {other.pair} meet on one vertical line at different points"
            )


def _locate_in(components: Sequence[Polynomial], matrix: Matrix, attempt: int) -> _Locus:
    transformed = []
    for index, component in enumerate(components):
        g = linear_substitution(component, matrix)
        degree = component.degree()
        if not g.coefficient((0, degree, 0)):
            raise _NotGeneric(f"component {index} passes through the projection centre")
        transformed.append(y_coefficients(g.dehomogenize(2)))

    pairs: Dict[Pair, _PairIntersection] = {}
    for i in range(len(components)):
        for j in range(i + 1, len(components)):
            pairs[(i, j)] = _intersect((i, j), transformed[i], transformed[j])

    pieces = [factor for data in pairs.values() for factor, _ in data.factors]
    groups = []
    for element in _gcd_free_basis(pieces):
        multiplicities = {}
        for pair, data in pairs.items():
            multiplicity = data.multiplicity_on(element)
            if multiplicity:
                multiplicities[pair] = multiplicity
        group = _PointGroup(element, multiplicities)
        _check_group(group, pairs)
        groups.append(group)
    return _Locus(matrix, pairs, groups, attempt + 1)


def _locate(components: Sequence[Polynomial], seed: int, max_retries: int) -> _Locus:
    rng = random.Random(seed)
    for attempt in range(max_retries):
        matrix = _random_matrix(rng, attempt)
        try:
            return _locate_in(components, matrix, attempt)
        except _NotGeneric:
            continue
    raise ShearExhaustedError(max_retries)


def _classify_signature(group: _PointGroup) -> SingularityKind:
    incident = group.incident
    contacts = set(group.pair_multiplicities.values())
    if contacts == {1}:
        return SingularityKind.ordinary(len(incident))
    if len(incident) == 2:
        (contact,) = contacts
        if contact <= MAX_CONTACT_ORDER:
            return SingularityKind.a_type(2 * contact - 1)
    return SingularityKind.unclassified()


def _rational_point(locus: _Locus, group: _PointGroup, x0: Fraction) -> ProjectivePoint:
    data = locus.pairs[min(group.pair_multiplicities)]
    y0 = data.root_numerator.evaluate(x0) / data.root_denominator.evaluate(x0)
    return ProjectivePoint(_apply(locus.matrix, (x0, y0, Fraction(1))))


def _validate_components(components: Sequence[Polynomial]) -> None:
    for index, component in enumerate(components):
        if component.is_zero() or not component.is_homogeneous() or component.degree() < 1:
            raise PreconditionError(
                f"Component {index} is not a homogeneous polynomial of degree >= 1"
            )


# Local analysis -----------------------------------------------------------------


def local_expansion(f: Polynomial, p: ProjectivePoint) -> Polynomial:
    """f in the affine chart of p, translated so that p is the origin.

    The two remaining coordinates become x and y of the result, in their
    original order.
    """
    chart = p.chart()
    others = [i for i in range(3) if i != chart]
    images = [Polynomial.constant(1)] * 3
    for variable, index in enumerate(others):
        images[index] = Polynomial.variable(variable) + p.coordinates[index]
    return f.substitute(images)


def multiplicity_at(f: Polynomial, p: ProjectivePoint) -> int:
    """Lowest total degree in the local expansion of f at p.

    Raises:
        PointNotOnCurveError: f(p) != 0
    """
    if f.evaluate(p.coordinates):
        raise PointNotOnCurveError(f"{p} does not lie on {f}")
    degree, _ = local_expansion(f, p).lowest_degree_part()
    return degree


def is_ordinary_at(f: Polynomial, p: ProjectivePoint) -> bool:
    """True iff the tangent cone of f at p has no repeated factor."""
    r = multiplicity_at(f, p)
    if r < 2:
        raise PreconditionError(f"{p} is a smooth point of the curve")
    _, cone = local_expansion(f, p).lowest_degree_part()
    # cone is a binary form in x, y: split off the power of y, then dehomogenize
    y_power = min(monomial[1] for monomial in cone.terms)
    if y_power >= 2:
        return False
    residual: Dict[int, Fraction] = {}
    for (a, b, _), coeff in cone.terms.items():
        residual[a] = coeff
    factor = UniPolynomial([residual.get(i, 0) for i in range(r - y_power + 1)])
    return squarefree_check(factor)


def classify_tangential_double_point(
    ci: Polynomial,
    cj: Polynomial,
    p: ProjectivePoint,
    seed: int = 0,
    max_retries: int = DEFAULT_MAX_RETRIES,
) -> SingularityKind:
    """Type A(2m-1) of a point where two smooth curves meet with contact order m.

    Raises:
        PointNotOnCurveError: p is not on both curves
        PreconditionError: the curves meet transversally at p
        UnsupportedContactOrderError: contact order 5 or more
    """
    _validate_components([ci, cj])
    if ci.evaluate(p.coordinates) or cj.evaluate(p.coordinates):
        raise PointNotOnCurveError(f"{p} is not an intersection point of both curves")
    locus = _locate([ci, cj], seed, max_retries)
    local = _apply(_inverse3(locus.matrix), p.coordinates)
    x0 = local[0] / local[2]
    contact = 0
    for factor, multiplicity in locus.pairs[(0, 1)].factors:
        if not factor.evaluate(x0):
            contact = multiplicity
    if contact == 1:
        raise PreconditionError(f"The curves meet transversally at {p}")
    if contact > MAX_CONTACT_ORDER:
        raise UnsupportedContactOrderError(contact)
    return SingularityKind.a_type(2 * contact - 1)


# Global analysis ------------------------------------------------------------------


def _classified(
    components: Sequence[Polynomial], seed: int, max_retries: int
) -> Tuple[List[ClassifiedPoint], List[ConjugatePointGroup], int]:
    """Run the search, auditing every rational point; a failed audit re-draws the coordinates."""
    _validate_components(components)
    f = product(components)
    rng = random.Random(seed)
    for attempt in range(max_retries):
        matrix = _random_matrix(rng, attempt)
        try:
            locus = _locate_in(components, matrix, attempt)
            points, groups = [], []
            for group in locus.groups:
                kind = _classify_signature(group)
                incident = group.incident
                roots = rational_roots(group.element)
                for x0 in roots:
                    point = _rational_point(locus, group, x0)
                    _audit(f, components, point, incident, kind)
                    points.append(
                        ClassifiedPoint(point, len(incident), kind, kind.milnor, incident)
                    )
                remaining = group.element.degree() - len(roots)
                if remaining:
                    groups.append(
                        ConjugatePointGroup(remaining, len(incident), kind, kind.milnor, incident)
                    )
            points.sort(key=lambda item: item.point)
            groups.sort(key=lambda item: (item.incident_components, str(item.kind), item.count))
            return points, groups, locus.attempts
        except _NotGeneric:
            continue
    raise ShearExhaustedError(max_retries)


def _audit(
    f: Polynomial,
    components: Sequence[Polynomial],
    point: ProjectivePoint,
    incident: Tuple[int, ...],
    kind: SingularityKind,
) -> None:
    for index, component in enumerate(components):
        if bool(component.evaluate(point.coordinates)) == (index in incident):
            raise _NotGeneric(f"incidence of component {index} at {point} is inconsistent")
    if multiplicity_at(f, point) != len(incident):
        raise _NotGeneric(f"multiplicity at {point} is inconsistent")
    if kind.family in (FAMILY_ORDINARY, FAMILY_A):
        if is_ordinary_at(f, point) != (kind.family == FAMILY_ORDINARY):
            raise _NotGeneric(f"tangent cone at {point} is inconsistent with {kind}")


def find_rational_singular_points(
    components: Sequence[Polynomial], seed: int = 0, max_retries: int = DEFAULT_MAX_RETRIES
) -> List[ProjectivePoint]:
    """Singular points of the product curve with rational coordinates, sorted."""
    points, _, _ = _classified(components, seed, max_retries)
    return [item.point for item in points]


def derive_weak_combinatorics(
    components: Sequence[Polynomial],
    seed: int = 0,
    max_retries: int = DEFAULT_MAX_RETRIES,
    tau: Optional[int] = None,
) -> SingularLocusReport:
    """Classify every singular point and aggregate the weak combinatorics.

    Args:
        components: Smooth, pairwise non-proportional homogeneous components
        seed: Seed for the random coordinate changes
        max_retries: Coordinate changes to try before giving up
        tau: Total Tjurina number of the product, if already known

    Returns:
        SingularLocusReport with the points, the derived combinatorics and the
        quasi-homogeneity certificate (residual Tjurina number zero and every
        point classified)
    """
    points, groups, attempts = _classified(components, seed, max_retries)
    if tau is None:
        tau = total_tjurina(product(components))

    k_by_degree: Dict[int, int] = {}
    for component in components:
        k_by_degree[component.degree()] = k_by_degree.get(component.degree(), 0) + 1
    n_by_mult: Dict[int, int] = {}
    tacnodes = {3: 0, 5: 0, 7: 0}
    weighted = [(item.kind, 1) for item in points] + [(group.kind, group.count) for group in groups]
    for kind, count in weighted:
        if kind.family == FAMILY_ORDINARY:
            n_by_mult[kind.order] = n_by_mult.get(kind.order, 0) + count
        elif kind.family == FAMILY_A:
            tacnodes[kind.order] += count

    milnor = sum(kind.milnor * count for kind, count in weighted)
    unclassified = any(kind.family == FAMILY_UNCLASSIFIED for kind, _ in weighted)
    residual = tau - milnor
    return SingularLocusReport(
        points=tuple(points),
        derived_combinatorics=WeakCombinatorics(
            k_by_degree, n_by_mult, tacnodes[3], tacnodes[5], tacnodes[7]
        ),
        total_tjurina=tau,
        residual_tjurina=residual,
        quasi_homogeneous_certified=residual == 0 and not unclassified,
        conjugate_groups=tuple(groups),
        seed=seed,
        attempts=attempts,
    )
