import pytest

from lieideals.algebra import (
    direct_sum,
    field_algebra,
    matrix_algebra,
    tensor_product,
    triangular_algebra,
)


@pytest.fixture(scope="session")
def m2f2():
    return matrix_algebra(2, 2)


@pytest.fixture(scope="session")
def m2f3():
    return matrix_algebra(2, 3)


@pytest.fixture(scope="session")
def m3f2():
    return matrix_algebra(3, 2)


@pytest.fixture(scope="session")
def gf4():
    return field_algebra(2, 2)


@pytest.fixture(scope="session")
def m2f2_gf4(m2f2, gf4):
    return tensor_product(m2f2, gf4)


@pytest.fixture(scope="session")
def tri22():
    return triangular_algebra(2, 2)


@pytest.fixture(scope="session")
def tri32():
    return triangular_algebra(3, 2)


@pytest.fixture(scope="session")
def m2_plus_m3(m2f2, m3f2):
    return direct_sum(m2f2, m3f2)
