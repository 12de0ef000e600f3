"""Report rendering using Jinja2 templates."""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional

from jinja2 import Environment, FileSystemLoader, select_autoescape

from .models import AnalysisReport


def to_json(data: Dict[str, Any]) -> str:
    """Serialize a report dictionary deterministically."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)


class ReportRenderer:
    """Renders text reports for the command-line front end."""

    def __init__(self, template_dir: Optional[Path] = None):
        """Initialize report renderer.

        Args:
            template_dir: Path to templates directory (defaults to the packaged templates)
        """
        if template_dir is None:
            # Go up to the package directory, then into templates/
            template_dir = Path(__file__).parent.parent / "templates"

        self.env = Environment(
            loader=FileSystemLoader(str(template_dir)),
            autoescape=select_autoescape(["html", "xml"]),
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )

    def render(self, template_name: str, **context: Any) -> str:
        return self.env.get_template(template_name).render(**context)

    def analysis(self, report: AnalysisReport) -> str:
        """Render a full analysis report.

        Args:
            report: Analysis report from ArrangementAnalyzer

        Returns:
            Rendered text report
        """
        factored = None
        if report.poincare is not None and report.split is not None and report.split.splits:
            factored = report.poincare.factored(report.split.roots)
        return self.render("analysis.txt.j2", report=report, factored=factored)

    def poincare(self, variant: str, polynomial, split) -> str:
        factored = polynomial.factored(split.roots) if split.splits else None
        return self.render(
            "poincare.txt.j2",
            variant=variant,
            polynomial=polynomial,
            split=split,
            factored=factored,
        )

    def ddcheck(self, d: int, k: int, inequality, count_consistent: bool) -> str:
        return self.render(
            "ddcheck.txt.j2", d=d, k=k, inequality=inequality, count_consistent=count_consistent
        )

    def euler(self, combinatorics, betti, poincare, value: int) -> str:
        return self.render(
            "euler.txt.j2",
            combinatorics=combinatorics,
            betti=betti,
            poincare=poincare,
            value=value,
        )

    def selftest(self, rows: List[Dict[str, Any]]) -> str:
        """Render the fixture self-test table (rows already sorted by name)."""
        width = max([len(row["name"]) for row in rows] + [7])
        passed = sum(1 for row in rows if row["passed"])
        return self.render("selftest.txt.j2", rows=rows, width=width, passed=passed)
