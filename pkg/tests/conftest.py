"""Shared fixtures and the acceptance summary.

The expensive cross-oracle tables are built once per session and reused by
the acceptance tests (agreement, residuals, homogeneity); each fixture
records how long the build took so the runtime bounds can be asserted
against the actual work, not a warm cache.
"""

import re
import time

import pytest

from zastava import (
    build_cartan,
    z_series_affine_toda,
    z_series_affine_whittaker,
    z_series_toda,
    z_series_whittaker,
)


@pytest.fixture(scope="session")
def sl2_tables():
    """(whittaker table, toda table, elapsed) for A1 at cap 12."""
    start = time.monotonic()
    datum = build_cartan("A1")
    w = z_series_whittaker(datum, 12)
    t = z_series_toda(datum, 12)
    return w, t, time.monotonic() - start


@pytest.fixture(scope="session")
def finite_oracle_tables():
    """{label: (whittaker, toda)} for the A2/B2/G2 runs, plus elapsed."""
    start = time.monotonic()
    out = {}
    for label, cap in (("A2", 8), ("B2", 6), ("G2", 6)):
        datum = build_cartan(label)
        out[label] = (z_series_whittaker(datum, cap), z_series_toda(datum, cap))
    return out, time.monotonic() - start


@pytest.fixture(scope="session")
def affine_oracle_tables():
    """(whittaker, toda, elapsed) for A1~ with total content <= 5."""
    start = time.monotonic()
    datum = build_cartan("A1~")
    w = z_series_affine_whittaker(datum, 5)
    t = z_series_affine_toda(datum, 5)
    return w, t, time.monotonic() - start


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = {}
    for status, ok in (("passed", True), ("failed", False), ("error", False)):
        for report in terminalreporter.stats.get(status, []):
            m = re.search(r"test_criterion_(\d+)_(\w+)", getattr(report, "nodeid", ""))
            if m:
                results[int(m.group(1))] = (ok, m.group(2))
    if not results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for n in sorted(results):
        ok, desc = results[n]
        terminalreporter.write_line(
            f"ACCEPTANCE {n}: {'PASS' if ok else 'FAIL'} ({desc})"
        )
