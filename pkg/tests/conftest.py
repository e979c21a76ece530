import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from strongctrl import catalog  # noqa: E402


@pytest.fixture
def chain():
    return catalog.chain_pair()


@pytest.fixture
def nilpotent():
    return catalog.nilpotent_pair()


@pytest.fixture
def diagonal():
    return catalog.diagonal_pair()
