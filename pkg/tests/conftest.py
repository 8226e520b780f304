import sys
from pathlib import Path

import pytest

# make oracles.py importable regardless of how pytest was invoked
sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def warm_kernels():
    """Compile the numba kernels once so timed tests measure math, not jit."""
    from atpqrm import _kernels

    _kernels.warmup()
    return True
