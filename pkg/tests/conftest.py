import pytest

from flagcalc.rootdata import cartan_type
from flagcalc.schubert import calculus_for


@pytest.fixture(scope="session")
def calc_g2():
    return calculus_for(cartan_type("G2"))


@pytest.fixture(scope="session")
def calc_f4():
    return calculus_for(cartan_type("F4"))


@pytest.fixture(scope="session")
def calc_b2():
    return calculus_for(cartan_type("B", 2))


@pytest.fixture(scope="session")
def calc_b3():
    return calculus_for(cartan_type("B", 3))


@pytest.fixture(scope="session")
def calc_b4():
    return calculus_for(cartan_type("B", 4))


@pytest.fixture(scope="session")
def calc_d4():
    return calculus_for(cartan_type("D", 4))


@pytest.fixture(scope="session")
def calc_d5():
    return calculus_for(cartan_type("D", 5))


def word(calc, text):
    """Resolve a digit-string word to a group element."""
    if not text:
        return calc.group.identity
    return calc.group.element_from_word([int(ch) for ch in text])
