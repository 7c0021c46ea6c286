from __future__ import annotations

import pytest

from qblocks.weights import Weight, block_class


@pytest.fixture
def block():
    """Factory: ``block("sq", "0,0,0")``."""

    def make(algebra: str, weight: str):
        return block_class(Weight.parse(weight), algebra)

    return make
