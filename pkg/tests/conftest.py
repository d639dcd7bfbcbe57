from __future__ import annotations

import pytest

from colorings.constructions import plane_representation, theorem3_coloring, theorem5_coloring
from geometry.galois_field import make_field
from geometry.projective_plane import build_plane


@pytest.fixture(scope="session")
def fano():
    return build_plane(make_field(2))


@pytest.fixture(scope="session")
def rep2():
    return plane_representation(2)


@pytest.fixture(scope="session")
def rep3():
    return plane_representation(3)


@pytest.fixture(scope="session")
def rep4():
    return plane_representation(4)


@pytest.fixture(scope="session")
def t3_q2():
    return theorem3_coloring(2)


@pytest.fixture(scope="session")
def t3_q3():
    return theorem3_coloring(3)


@pytest.fixture(scope="session")
def t5_q2():
    return theorem5_coloring(2)


@pytest.fixture(scope="session")
def t5_q4():
    return theorem5_coloring(4)
