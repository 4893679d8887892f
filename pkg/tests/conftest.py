from __future__ import annotations

from collections.abc import AsyncIterator, Iterator, Sequence
from itertools import combinations

import pytest
import pytest_asyncio
from httpx import ASGITransport, AsyncClient

from app.core.settings import settings
from app.dependencies import get_settings
from app.main import app
from app.models.poset import Poset, iter_bits


def labeled_posets(p: int) -> Iterator[Poset]:
    """Every naturally labeled poset on ``p`` elements, labeled copies included."""
    pairs = [(i, j) for j in range(p) for i in range(j)]
    for size in range(len(pairs) + 1):
        for chosen in combinations(pairs, size):
            down = [0] * p
            for i, j in chosen:
                down[j] |= 1 << i
            if all(down[i] & ~down[j] == 0 for j in range(p) for i in range(j) if down[j] >> i & 1):
                yield Poset(down=tuple(down))


def relabel(poset: Poset, order: Sequence[int]) -> Poset:
    """Relabel by the linear extension ``order``: element ``order[a]`` becomes ``a``."""
    position = {v: a for a, v in enumerate(order)}
    down = [0] * poset.p
    for v in range(poset.p):
        for u in iter_bits(poset.down[v]):
            down[position[v]] |= 1 << position[u]
    return Poset(down=tuple(down))


@pytest.fixture
def v_poset() -> Poset:
    """Two minimal elements below a common top."""
    return Poset(down=(0, 0, 0b011))


@pytest.fixture(autouse=True)
def restore_settings() -> Iterator[None]:
    snapshot = settings.model_dump()
    try:
        yield
    finally:
        for name, value in snapshot.items():
            setattr(settings, name, value)


@pytest_asyncio.fixture
async def api_client() -> AsyncIterator[AsyncClient]:
    app.dependency_overrides[get_settings] = lambda: settings

    async with AsyncClient(transport=ASGITransport(app=app), base_url="http://test") as client:
        yield client

    app.dependency_overrides.clear()
