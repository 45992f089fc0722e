import pytest
from hypothesis import HealthCheck, settings

from fitting_forge.models.poly import VarSet
from fitting_forge.models.presentation import parse_matrix

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("default")

GAMMA = "[[y, z, 0], [-x, 0, z]]"
POINT_IN_PLANE = "[[-y], [x]]"


@pytest.fixture
def xyz():
    return VarSet(("x", "y", "z"))


@pytest.fixture
def gamma(xyz):
    return parse_matrix(GAMMA, xyz)


@pytest.fixture
def plane():
    return VarSet(("x", "y"))


@pytest.fixture
def point_in_plane(plane):
    return parse_matrix(POINT_IN_PLANE, plane)
