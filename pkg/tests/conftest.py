import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from homleibniz import catalog  # noqa: E402


@pytest.fixture(scope="session")
def catalog_algebras():
    return [(e.ref, e.build()) for e in catalog.entries()]
