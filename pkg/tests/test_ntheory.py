from cyclores.ntheory import (
    factorize,
    iroot,
    is_prime,
    kth_root_exact,
    multiplicative_order,
    primes_upto,
    primitive_root,
    valuation,
)


def _naive_prime(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, n)) if n > 2 else True


def test_is_prime_matches_naive_below_2000():
    for n in range(2000):
        assert is_prime(n) == _naive_prime(n), n


def test_is_prime_large_strong_pseudoprime_inputs():
    assert is_prime(2**61 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2,3,5,7
    assert not is_prime((2**31 - 1) * (2**61 - 1))


def test_primes_upto():
    assert primes_upto(30) == (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)
    assert primes_upto(1) == ()


def test_factorize():
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert factorize(97) == {97: 1}
    assert factorize(1) == {}


def test_multiplicative_order_brute():
    for p in (5, 7, 11, 13):
        for a in range(1, p):
            k = 1
            x = a % p
            while x != 1:
                x = x * a % p
                k += 1
            assert multiplicative_order(a, p) == k


def test_primitive_root_is_smallest():
    for p in (5, 7, 11, 13, 23, 37):
        g = primitive_root(p)
        assert multiplicative_order(g, p) == p - 1
        assert all(multiplicative_order(h, p) < p - 1 for h in range(2, g))


def test_iroot_and_exact_roots():
    for n in range(200):
        for k in (2, 3, 5):
            r = iroot(n, k)
            assert r**k <= n < (r + 1) ** k
    assert kth_root_exact(32, 5) == 2
    assert kth_root_exact(-32, 5) == -2
    assert kth_root_exact(-4, 2) is None
    assert kth_root_exact(33, 5) is None
    big = 12345678901234567890
    assert kth_root_exact(big**7, 7) == big


def test_valuation():
    assert valuation(625, 5) == (4, 1)
    assert valuation(-50, 5) == (2, -2)
    assert valuation(7, 5) == (0, 7)
