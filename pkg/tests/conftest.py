import pytest

from binomid import Sequence, euler_phi


@pytest.fixture
def two_pow_a():
    """Eventually constant 2**a_n with a = (0, 2, 4, 1, 3, 1, 4, 4, 4, ...)."""
    exponents = [0, 2, 4, 1, 3, 1]
    return Sequence("two_pow_a",
                    lambda n: 2 ** (exponents[n - 1] if n <= 6 else 4))


@pytest.fixture
def h_divisible():
    """1 at indices 1, 5, 7 and 2 elsewhere: divisible but not binomid."""
    return Sequence("h_div", lambda n: 1 if n in (1, 5, 7) else 2)


@pytest.fixture
def w_ones_then_twos():
    """(1, 2, 2, 2, ...): a divisor-chain and dual-gcd, not a divisor-product."""
    return Sequence("w", lambda n: 1 if n == 1 else 2)


@pytest.fixture
def phi_seq():
    return Sequence("phi", euler_phi)
