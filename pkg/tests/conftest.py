import pytest

from hopfinv.scalar import CycScalar
from hopfinv.hopf import builtin_algebras, builtin_group, group_algebra, taft, dual


@pytest.fixture(scope="session")
def builtins():
    """The registered dim <= 16 sweep set, instances shared across tests."""
    return builtin_algebras()


@pytest.fixture(scope="session")
def algebra(builtins):
    table = dict(builtins)

    def get(name):
        return table[name]

    return get


@pytest.fixture(scope="session")
def taft4(algebra):
    return algebra("taft:4")


@pytest.fixture(scope="session")
def sweedler(algebra):
    return algebra("taft:2")


@pytest.fixture(scope="session")
def klein_dual():
    return dual(group_algebra(builtin_group("z2xz2"), field_order=4))
