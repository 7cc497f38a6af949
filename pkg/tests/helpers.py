"""Shared generators for randomized tests."""

from __future__ import annotations

import random

from tgrs.field import FieldCtx, field_of_order, prime_factors
from tgrs.code import TgrsCode

ODD_PRIME_POWERS_200 = [q for q in range(3, 201, 2) if len(prime_factors(q)) == 1]
SMALL_PRIMES = [5, 7, 11, 13, 17, 19, 23]


def random_distinct_elements(ctx: FieldCtx, n: int, rng: random.Random):
    seen = set()
    out = []
    while len(out) < n:
        e = ctx.random_element(rng)
        if e.coeffs not in seen:
            seen.add(e.coeffs)
            out.append(e)
    return out


def random_code(rng: random.Random, q_max: int = 200, n_max: int = 16,
                force_tag: str | None = None, force_even_n: bool = False) -> TgrsCode:
    """A random valid TGRS code; force_tag in {None, 'ZERO_SUM', 'SINGULAR'}
    steers the check-matrix case, force_even_n makes n = 2k."""
    powers = [q for q in ODD_PRIME_POWERS_200 if q <= q_max]
    while True:
        q = rng.choice(powers)
        ctx = field_of_order(q)
        hi = min(n_max, q)
        if hi < 2:
            continue
        n = rng.randrange(2, hi + 1)
        if force_even_n:
            n -= n % 2
            if n < 2:
                continue
        k = n // 2 if force_even_n else rng.randrange(1, n // 2 + 1)
        alpha = random_distinct_elements(ctx, n, rng)
        total = ctx.zero()
        for x in alpha:
            total = total + x
        if force_tag == "ZERO_SUM":
            cand = alpha[-1] - total
            if cand.coeffs in {x.coeffs for x in alpha[:-1]}:
                continue
            alpha[-1] = cand
            total = ctx.zero()
        v = [ctx.random_element(rng) for _ in range(n)]
        if any(x.is_zero() for x in v):
            continue
        if force_tag == "SINGULAR":
            if total.is_zero():
                continue
            eta = -total.inverse()
        else:
            eta = ctx.random_element(rng)
            if eta.is_zero():
                continue
        try:
            return TgrsCode(ctx, alpha, v, k, eta)
        except ValueError:
            continue
