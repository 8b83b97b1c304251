import math

import pytest

from leeperfect import nt


def test_is_prime_examples():
    assert nt.is_prime(21013)
    assert not nt.is_prime(1)
    assert not nt.is_prime(85)
    assert nt.is_prime(2) and nt.is_prime(3)
    assert not nt.is_prime(0) and not nt.is_prime(-7)


def test_is_prime_certified_flags():
    ok, det = nt.is_prime_certified(2**61 - 1)
    assert ok and det  # below the deterministic bound
    big = 2**127 - 1  # Mersenne prime above the bound
    ok, det = nt.is_prime_certified(big)
    assert ok and not det


def test_factorize_examples():
    assert nt.factorize(85).as_dict() == {5: 1, 17: 1}
    assert nt.factorize(13).as_dict() == {13: 1}
    assert nt.factorize(4901).as_dict() == {13: 2, 29: 1}
    assert nt.factorize(1).factors == ()


def test_factorize_recomposes_and_reports_primes():
    rng = nt.seeded_rng(1, "test-factorize")
    for _ in range(400):
        n = rng.randrange(1, 10**6)
        fac = nt.factorize(n)
        prod = 1
        for p, e in fac.factors:
            assert nt.is_prime(p)
            prod *= p**e
        assert prod == n


def test_factorize_larger_semiprimes():
    p, q = 1_000_003, 1_000_033
    fac = nt.factorize(p * q)
    assert fac.as_dict() == {p: 1, q: 1}


def test_factor_budget_exceeded():
    with pytest.raises(nt.BudgetExceeded):
        nt.factorize(1_000_003 * 1_000_033 * 1_000_037 * 1_000_039, budget=1)


def test_perfect_squares():
    assert nt.is_perfect_square(25) == 5
    assert nt.is_perfect_square(65) is None
    assert nt.is_perfect_square(0) == 0
    for k in range(1, 10**5, 97):
        assert nt.is_perfect_square(k * k) == k
        assert nt.is_perfect_square(k * k + 1) is None


def test_mult_order_examples():
    assert nt.mult_order(2, 5) == 4
    assert nt.mult_order(4, 13) == 6
    assert nt.mult_order(7, 421) == 70
    with pytest.raises(ValueError):
        nt.mult_order(5, 25)


def test_mult_order_properties():
    rng = nt.seeded_rng(2, "test-order")
    for _ in range(60):
        m = rng.randrange(3, 3000)
        a = rng.randrange(2, m)
        if math.gcd(a, m) != 1:
            continue
        k = nt.mult_order(a, m)
        assert pow(a, k, m) == 1
        for q in nt.factorize(k).primes():
            assert pow(a, k // q, m) != 1


def test_discrete_log_examples():
    assert nt.discrete_log(2, 1, 13, 12) == 0
    assert nt.discrete_log(2, 5, 13, 12) == 9
    assert nt.discrete_log(4, 7, 13, 6) is None


def test_discrete_log_exhaustive_small_moduli():
    for m in (11, 101, 997):
        fac = nt.factorize(m - 1)
        for base in (2, 3, 5):
            if base % m == 0:
                continue
            order = nt.mult_order(base, m, fac)
            powers = {}
            x = 1
            for j in range(order):
                powers.setdefault(x, j)
                x = x * base % m
            for target in range(1, m):
                assert nt.discrete_log(base, target, m, order) == powers.get(target)


def test_solvable_shifted_examples():
    assert nt.solvable_shifted(3, 10, 4) is False  # the n=4, v=41 exclusion shift
    assert nt.solvable_shifted(2, 6, 2) is True  # x = y = 0
    assert nt.solvable_shifted(nt.INFINITY, 5, 100) is False
    assert nt.solvable_shifted(5, 3, -1) is False


def test_solvable_shifted_against_double_loop():
    def brute(a, b, t):
        if t < 0:
            return False
        for x in range(t // a + 1):
            if (t - a * (x + 1)) >= 0 and (t - a * (x + 1)) % b == 0:
                return True
        return False

    for a in range(1, 26):
        for b in range(1, 26):
            for t in range(0, 120):
                assert nt.solvable_shifted(a, b, t) == brute(a, b, t), (a, b, t)
    rng = nt.seeded_rng(3, "test-solvable")
    for _ in range(2000):
        a = rng.randrange(1, 201)
        b = rng.randrange(1, 201)
        t = rng.randrange(0, 201)
        assert nt.solvable_shifted(a, b, t) == brute(a, b, t), (a, b, t)


def test_seeded_rng_stable():
    assert nt.seeded_rng(1, "x").random() == nt.seeded_rng(1, "x").random()
    assert nt.seeded_rng(1, "x").random() != nt.seeded_rng(2, "x").random()
