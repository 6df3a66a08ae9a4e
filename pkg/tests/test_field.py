import pytest
from sympy import isprime, primerange

from ffhg.errors import MissingRoot, NotPrime, OrderNotDividing, ZeroArgument
from ffhg.field import (
    admissible_orders,
    derived_root,
    dlog,
    make_prime_context,
    primitive_root,
    quadratic_character,
)


def test_small_contexts():
    ctx = make_prime_context(5, {4})
    assert ctx.g == 2
    assert ctx.roots[4] == 2
    assert make_prime_context(13, {4}).roots[4] == 5


def test_order_must_divide():
    with pytest.raises(OrderNotDividing):
        make_prime_context(7, {4})


@pytest.mark.parametrize("p", [1, 2, 9, 91, -7])
def test_rejects_non_odd_primes(p):
    with pytest.raises(NotPrime):
        make_prime_context(p)


@pytest.mark.parametrize("p", list(primerange(3, 400)))
def test_generator_and_dlog_table(p):
    ctx = make_prime_context(p)
    g = ctx.g
    seen = set()
    for k in range(p - 1):
        x = pow(g, k, p)
        assert dlog(ctx, x) == k
        seen.add(x)
    assert len(seen) == p - 1
    # smallest primitive root
    assert all(len({pow(h, k, p) for k in range(p - 1)}) < p - 1 for h in range(2, g))


def test_dlog_examples():
    ctx = make_prime_context(5)
    assert dlog(ctx, 1) == 0
    assert dlog(ctx, 4) == 2
    ctx13 = make_prime_context(13)
    assert dlog(ctx13, ctx13.g) == 1
    with pytest.raises(ZeroArgument):
        dlog(ctx13, 0)


@pytest.mark.parametrize("p", [13, 37, 73, 97, 241, 433])
def test_roots_are_smallest_of_exact_order(p):
    ctx = make_prime_context(p, admissible_orders(p))
    for N, r in ctx.roots.items():
        exact = [x for x in range(1, p) if pow(x, N, p) == 1
                 and all(pow(x, N // q, p) != 1 for q in (2, 3) if N % q == 0)]
        assert r == min(exact)


def test_admissible_orders():
    assert admissible_orders(13) == {1, 2, 3, 4, 6, 12}
    assert admissible_orders(73) == {1, 2, 3, 4, 6, 8, 12, 24}
    assert admissible_orders(7) == {1, 2, 3, 6}


def test_quadratic_character():
    ctx = make_prime_context(13)
    assert quadratic_character(ctx, 0) == 0
    assert quadratic_character(ctx, 4) == 1
    assert quadratic_character(ctx, 2) == -1
    for p in (11, 17, 101):
        c = make_prime_context(p)
        for x in range(1, p):
            euler = pow(x, (p - 1) // 2, p)
            assert quadratic_character(c, x) == (1 if euler == 1 else -1)


def test_derived_roots():
    ctx = make_prime_context(73, admissible_orders(73))
    s = derived_root(ctx, "sqrt-2")
    assert s * s % 73 == 71
    i = derived_root(ctx, "i")
    assert i * i % 73 == 72
    t = derived_root(ctx, "sqrt-3")
    assert t * t % 73 == 70
    with pytest.raises(MissingRoot):
        derived_root(make_prime_context(13, admissible_orders(13)), "sqrt-2")


@pytest.mark.parametrize("p", [p for p in primerange(3, 300) if p % 8 == 1])
def test_sqrt_minus_two_from_r8(p):
    ctx = make_prime_context(p, {8})
    s = derived_root(ctx, "sqrt-2")
    assert s * s % p == p - 2


def test_with_root_override():
    ctx = make_prime_context(13, {4})
    other = ctx.with_root(4, 8)
    assert other.roots[4] == 8 and ctx.roots[4] == 5
    with pytest.raises(OrderNotDividing):
        ctx.with_root(4, 3)
    assert primitive_root(13) == 2 and isprime(13)
