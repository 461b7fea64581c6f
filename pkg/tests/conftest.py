"""Shared field fixtures.

The quartic fields come with frozen coordinates for their familiar
subfield elements; each identity is asserted once here so every test
that uses them starts from verified ground.
"""

import pytest

from foliation import NumberField, Poly


@pytest.fixture(scope="session")
def golden_field():
    """Q(phi) with phi the larger root of x^2 - x - 1."""
    return NumberField(Poly((-1, -1, 1)), 1)


@pytest.fixture(scope="session")
def sqrt2_field():
    """Q(sqrt2) with the positive root of x^2 - 2."""
    return NumberField(Poly((-2, 0, 1)), 1)


@pytest.fixture(scope="session")
def quartic_23():
    """Q(sqrt2 + sqrt3): largest root of x^4 - 10x^2 + 1, plus named parts."""
    field = NumberField(Poly((1, 0, -10, 0, 1)), 3)
    theta = field.generator()
    sqrt2 = (theta**3 - 9 * theta) / 2
    sqrt3 = (11 * theta - theta**3) / 2
    assert sqrt2 * sqrt2 == 2
    assert sqrt3 * sqrt3 == 3
    assert sqrt2 + sqrt3 == theta
    return {"field": field, "sqrt2": sqrt2, "sqrt3": sqrt3}


@pytest.fixture(scope="session")
def quartic_25():
    """Q(sqrt2 + sqrt5): largest root of x^4 - 14x^2 + 9, plus named parts."""
    field = NumberField(Poly((9, 0, -14, 0, 1)), 3)
    theta = field.generator()
    sqrt2 = (theta**3 - 11 * theta) / 6
    sqrt5 = (17 * theta - theta**3) / 6
    phi = (1 + sqrt5) / 2
    assert sqrt2 * sqrt2 == 2
    assert sqrt5 * sqrt5 == 5
    assert phi * phi == phi + 1
    return {"field": field, "sqrt2": sqrt2, "sqrt5": sqrt5, "phi": phi}
