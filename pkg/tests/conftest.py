from pathlib import Path
from random import Random

import pytest

from lienil.core.config import current_settings

SAMPLES = Path(__file__).parent.parent / "samples"


@pytest.fixture(autouse=True)
def settings():
    # Need to do this in a sync fixture so context var is properly copied:
    # See: https://github.com/pytest-dev/pytest-asyncio/issues/127
    with current_settings() as s:
        yield s


@pytest.fixture()
def samples() -> Path:
    return SAMPLES


@pytest.fixture()
def rng() -> Random:
    return Random(20231101)
