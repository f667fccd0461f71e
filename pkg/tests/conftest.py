import sys
from pathlib import Path

import pytest

# Make the sibling oracles module importable regardless of rootdir layout.
sys.path.insert(0, str(Path(__file__).parent))

from convexblockers import verify_theorems


@pytest.fixture(scope="session")
def theorem_reports():
    """verify_theorems for m = 2..6, computed once per session.

    The m = 6 run enumerates 6144 paths and solves two hitting-set
    instances; caching keeps the suite under a minute.
    """
    return {m: verify_theorems(m) for m in range(2, 7)}
