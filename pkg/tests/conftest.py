from __future__ import annotations

from pathlib import Path

import pytest

from qlaurent.seed import load_seed

REPO = Path(__file__).resolve().parent.parent
SEEDS = REPO / "seeds"
GOLDEN = Path(__file__).resolve().parent / "golden"

G2_PATH = SEEDS / "g2.json"
A2_PATH = SEEDS / "qa2.json"
M3_PATH = SEEDS / "m3n2_frozen.json"


def golden_text(name: str) -> str:
    return (GOLDEN / name).read_text(encoding="utf-8").strip()


@pytest.fixture
def g2():
    return load_seed(str(G2_PATH))


@pytest.fixture
def a2():
    return load_seed(str(A2_PATH))


@pytest.fixture
def m3():
    return load_seed(str(M3_PATH))
