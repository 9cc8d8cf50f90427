"""Shared fixtures; the expensive exact objects are built once per session."""
import pytest

from dispersion import explore, flat_clusteron, scaled_row


@pytest.fixture(scope="session")
def rows():
    """Exact scaled rows for sizes 3..10, keyed by size."""
    return {n: scaled_row(n) for n in range(3, 11)}


@pytest.fixture(scope="session")
def flat_graphs():
    """Reachability graphs of flat clusterons for sizes 1..7."""
    return {n: explore(flat_clusteron(n)) for n in range(1, 8)}
