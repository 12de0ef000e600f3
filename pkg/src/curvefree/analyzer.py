"""Arrangement analyzer: runs the syzygy and combinatorial routes and compares them."""

from pathlib import Path
from typing import Any, Dict, List, Optional

from .combin import (
    dd_count_check,
    dd_inequality,
    poincare_general,
    split_over_rationals,
    tau_from_combinatorics,
)
from .core.errors import CurveFreeError, PreconditionError
from .core.models import (
    AnalysisReport,
    ArrangementFile,
    CurveInvariants,
    SingularLocusReport,
    Verdict,
    WeakCombinatorics,
)
from .core.polyring import Polynomial, parse, product
from .singlocus import DEFAULT_MAX_RETRIES, derive_weak_combinatorics
from .syzygy import is_free, reducedness_check, smoothness_check
from .validator import load_arrangement
from .variants import PoincareInput, select_variant

DEFAULT_FIXTURES_DIR = Path(__file__).parent / "fixtures"

REASON_NO_SPLIT = "Poincaré polynomial does not split"
REASON_DPW_FAILS = "du Plessis–Wall equality fails"


class ArrangementAnalyzer:
    """Analyzes arrangement files end to end."""

    def __init__(self, config: Optional[Dict[str, Any]] = None, verbose: bool = True):
        """Initialize arrangement analyzer.

        Args:
            config: Configuration dictionary (seed, max_degree, skip_singlocus, max_shear_retries)
            verbose: Print progress messages
        """
        self.config = config or {}
        self.verbose = verbose

    def _log(self, message: str) -> None:
        if self.verbose:
            print(message)

    @property
    def max_degree(self) -> int:
        return self.config.get("max_degree", 16)

    def _components(self, arrangement: ArrangementFile) -> List[Polynomial]:
        max_degree = self.max_degree
        components = [parse(text, max_degree) for text in arrangement.components]
        degree = sum(c.degree() for c in components)
        if degree > max_degree:
            raise PreconditionError(
                f"Arrangement '{arrangement.name}' has degree {degree} > max degree {max_degree}"
            )
        return components

    def _check_components(self, f: Polynomial, components: List[Polynomial]) -> None:
        if not reducedness_check(f, components):
            raise PreconditionError("Components must be squarefree and pairwise non-proportional")
        self._log("  ✓ reduced")
        for index, component in enumerate(components):
            if not smoothness_check(component):
                raise PreconditionError(f"Component C{index} = {component} is not smooth")
        self._log(f"  ✓ {len(components)} smooth components")

    def _singular_locus(self, components: List[Polynomial], tau: int) -> SingularLocusReport:
        seed = self.config.get("seed", 0)
        retries = self.config.get("max_shear_retries", DEFAULT_MAX_RETRIES)
        self._log(f"  Searching singular points (seed {seed})...")
        locus = derive_weak_combinatorics(components, seed=seed, max_retries=retries, tau=tau)
        mark = "✓" if locus.quasi_homogeneous_certified else "✗"
        self._log(
            f"  {mark} {locus.point_count} singular points after {locus.attempts} attempt(s), "
            f"Milnor sum {locus.milnor_sum}, residual {locus.residual_tjurina}"
        )
        return locus

    def _dd_checks(
        self,
        components: List[Polynomial],
        w: WeakCombinatorics,
        invariants: CurveInvariants,
    ) -> Dict[str, bool]:
        degrees = {c.degree() for c in components}
        if len(degrees) != 1 or len(components) < 2 or w.has_tacnodes():
            return {}
        (delta,) = degrees
        checks = {"dd_count": dd_count_check(w, delta, len(components))}
        if delta >= 2 and invariants.is_free:
            checks["dd_inequality"] = dd_inequality(w, delta, len(components)).holds
        return checks

    def _expectation_mismatches(
        self, arrangement: ArrangementFile, report: AnalysisReport
    ) -> List[str]:
        expected = arrangement.expected
        if expected is None:
            return []
        mismatches = []
        invariants = report.invariants
        if expected.tau is not None and expected.tau != invariants.tau:
            mismatches.append(f"tau: expected {expected.tau}, got {invariants.tau}")
        if expected.mdr is not None and expected.mdr != invariants.mdr:
            mismatches.append(f"mdr: expected {expected.mdr}, got {invariants.mdr}")
        if expected.free is not None:
            got = invariants.exponents if invariants.is_free else None
            want = expected.exponents if expected.free else None
            if got != want:
                mismatches.append(
                    f"exponents: expected {_exponents_text(want)}, got {_exponents_text(got)}"
                )
        if expected.combinatorics is not None and report.combinatorics is not None:
            if expected.combinatorics != report.combinatorics:
                mismatches.append(
                    f"W: expected {expected.combinatorics}, got {report.combinatorics}"
                )
        if expected.verdict is not None and expected.verdict != report.verdict:
            mismatches.append(
                f"verdict: expected {expected.verdict.value}, got {report.verdict.value}"
            )
        return mismatches

    def analyze(
        self,
        arrangement: ArrangementFile,
        combinatorics: Optional[WeakCombinatorics] = None,
    ) -> AnalysisReport:
        """Run the full pipeline on one arrangement.

        Args:
            arrangement: Parsed arrangement file
            combinatorics: Weak combinatorics to use instead of the singular
                point search (only consulted when singlocus is skipped)

        Returns:
            AnalysisReport with invariants, combinatorics, checks and verdict
        """
        self._log(f"Analyzing {arrangement.name}...")
        components = self._components(arrangement)
        f = product(components)
        degree = f.degree()
        self._check_components(f, components)

        invariants = is_free(f)
        window = ", ".join(str(v) for v in invariants.hilbert_window)
        self._log(f"  ✓ mdr = {invariants.mdr}, tau = {invariants.tau} (Hilbert window {window})")
        if invariants.is_free:
            d1, d2 = invariants.exponents
            self._log(f"  ✓ free with exponents ({d1}, {d2})")
        else:
            self._log("  ✗ not free")

        locus = None
        w = combinatorics
        if self.config.get("skip_singlocus", False):
            if w is not None and w.k_by_degree and w.total_degree != degree:
                raise PreconditionError(
                    f"Combinatorics {w} describe degree {w.total_degree}, "
                    f"arrangement has degree {degree}"
                )
        else:
            locus = self._singular_locus(components, invariants.tau)
            w = locus.derived_combinatorics
        if w is not None:
            self._log(f"  Weak combinatorics: {w}")

        source = PoincareInput(w, degree, invariants.tau)
        variant = select_variant(source)
        poincare = variant.polynomial(source)
        split = split_over_rationals(poincare)
        self._log(f"  Poincaré polynomial ({variant.name}): {poincare}")

        checks = variant.identity_checks(source, invariants.exponents)
        if w is not None:
            checks["tau_conservation"] = tau_from_combinatorics(w) == invariants.tau
            if variant.name != "general" and invariants.tau <= (degree - 1) ** 2:
                checks["general_matches_combinatorial"] = (
                    poincare_general(degree, invariants.tau) == poincare
                )
            checks.update(self._dd_checks(components, w, invariants))
        for name, ok in sorted(checks.items()):
            self._log(f"  {'✓' if ok else '✗'} {name}")

        verdict, reason = self._verdict(invariants, locus, split, checks)
        report = AnalysisReport(
            name=arrangement.name,
            degree=degree,
            components=list(arrangement.components),
            invariants=invariants,
            combinatorics=w,
            singular_locus=locus,
            variant=variant.name,
            poincare=poincare,
            split=split,
            identity_checks=checks,
            verdict=verdict,
            reason=reason,
        )
        report.expectation_mismatches = self._expectation_mismatches(arrangement, report)
        if report.expectation_mismatches and verdict is not Verdict.UNCERTIFIED:
            report.verdict = Verdict.INCONSISTENT_INPUT
            report.reason = "expectation mismatch"
        self._log(f"  Verdict: {report.verdict.value}")
        return report

    @staticmethod
    def _verdict(invariants, locus, split, checks):
        if locus is not None and not locus.quasi_homogeneous_certified:
            return Verdict.UNCERTIFIED, (
                f"singular locus not certified (residual {locus.residual_tjurina}, "
                f"{locus.unclassified_count} unclassified)"
            )
        failed = sorted(name for name, ok in checks.items() if not ok)
        if failed:
            return Verdict.INCONSISTENT_INPUT, "failed checks: " + ", ".join(failed)
        if invariants.is_free:
            if not split.splits:
                return Verdict.INCONSISTENT_INPUT, "free curve but P(t) does not split"
            if split.roots != invariants.exponents:
                return Verdict.INCONSISTENT_INPUT, "splitting roots differ from the exponents"
            return Verdict.FREE_CONSISTENT, ""
        if not split.splits:
            return Verdict.NOT_FREE, REASON_NO_SPLIT
        return Verdict.NOT_FREE, REASON_DPW_FAILS

    def analyze_file(
        self, path: Path, combinatorics: Optional[WeakCombinatorics] = None
    ) -> AnalysisReport:
        return self.analyze(load_arrangement(path, self.max_degree), combinatorics)


def _exponents_text(exponents) -> str:
    return "none" if exponents is None else f"({exponents[0]}, {exponents[1]})"


def fixture_paths(fixtures_dir: Optional[Path] = None) -> List[Path]:
    return sorted(Path(fixtures_dir or DEFAULT_FIXTURES_DIR).glob("*.arr"))


def run_self_test(analyzer: ArrangementAnalyzer, paths: List[Path]) -> List[Dict[str, Any]]:
    """Analyze every fixture and compare against its expectations.

    Returns:
        One row per fixture, sorted by fixture name, with keys name, verdict,
        passed and problems
    """
    rows = []
    for path in paths:
        try:
            arrangement = load_arrangement(path, analyzer.max_degree)
            name = arrangement.name
            report = analyzer.analyze(arrangement)
            problems = list(report.expectation_mismatches)
            verdict = report.verdict.value
        except CurveFreeError as e:
            name = path.stem
            problems = [f"{type(e).__name__}: {e}"]
            verdict = "ERROR"
        rows.append(
            {"name": name, "verdict": verdict, "passed": not problems, "problems": problems}
        )
    return sorted(rows, key=lambda row: row["name"])
