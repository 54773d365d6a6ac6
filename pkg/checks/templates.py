"""
Text templates for reports printed with --format text.
"""
from checks.reports import CheckReport, SuiteReport

# One line per check.
REPORT_LINE = "{status} {check:<13} n={n}  {pass_count}/{total}"

# Indented under a failing check.
FAILURE_LINE = "    {subject}: {detail}"

FAILURE_SIDES = """      lhs: {lhs}
      rhs: {rhs}"""

SUITE_FOOTER = "{verdict} ({passed}/{total} checks passed at n={n})"


def render_report(report: CheckReport) -> str:
    lines = [
        REPORT_LINE.format(
            status="PASS" if report.passed else "FAIL",
            check=report.check,
            n=report.n,
            pass_count=report.pass_count,
            total=report.total,
        )
    ]
    for record in report.failures():
        lines.append(FAILURE_LINE.format(subject=record.subject, detail=record.detail or "mismatch"))
        if record.lhs is not None or record.rhs is not None:
            lines.append(FAILURE_SIDES.format(lhs=record.lhs, rhs=record.rhs))
    return "\n".join(lines)


def render_suite(suite: SuiteReport) -> str:
    body = [render_report(report) for report in suite.reports]
    body.append(
        SUITE_FOOTER.format(
            verdict="OK" if suite.passed else "FAILED",
            passed=sum(1 for r in suite.reports if r.passed),
            total=len(suite.reports),
            n=suite.n,
        )
    )
    return "\n".join(body)
