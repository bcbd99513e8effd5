import time
from types import SimpleNamespace

import pytest

from ncgspectra import ALL_KINDS, default_grid, verify_grid

GRID_ORDER_CAP = 150
GRID_JOBS = 2


@pytest.fixture(scope="session")
def grid_results():
    """One full verification sweep over the default grid, shared by all tests."""
    specs = default_grid()
    start = time.time()
    reports = verify_grid(specs, ALL_KINDS, order_cap=GRID_ORDER_CAP, jobs=GRID_JOBS)
    elapsed = time.time() - start
    by_key = {(r.group, r.kind): r for r in reports}
    return SimpleNamespace(
        specs=specs, reports=reports, elapsed=elapsed, by_key=by_key
    )
