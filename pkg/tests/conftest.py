import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from xispec.config import ShootingConfig


@pytest.fixture(scope="session")
def shoot_cfg():
    """Pinned seed point: scans and ratio tests share one normalisation."""
    return ShootingConfig(x0=5.5)
