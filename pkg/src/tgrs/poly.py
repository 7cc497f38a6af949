"""Dense univariate polynomials over a finite field.

Coefficients are stored constant term first with no trailing zeros (the zero
polynomial is the empty tuple).  Provides evaluation, formal derivative, gcd,
squarefreeness, distinct-degree splitting degrees, and root finding in a
chosen extension field.
"""

from __future__ import annotations

import random
from math import lcm
from typing import Iterable, Sequence

from .field import FieldCtx, FieldElement, FieldError, embed

# Exhaustive root scan up to this extension size; equal-degree splitting above.
ROOT_SCAN_CEILING = 2**16

# Fixed default seed for the randomized equal-degree splitting step.
DEFAULT_SEED = 0x7065


class Poly:
    """Immutable dense polynomial over a :class:`FieldCtx`."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable[FieldElement] = ()):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        for c in cs:
            if c.ctx != ctx:
                raise FieldError("coefficient from a different field")
        self.ctx = ctx
        self.coeffs = tuple(cs)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_ints(cls, ctx: FieldCtx, ints: Sequence[int]) -> "Poly":
        return cls(ctx, [ctx.element(v) for v in ints])

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, ())

    @classmethod
    def one(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, [ctx.one()])

    @classmethod
    def x(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, [ctx.zero(), ctx.one()])

    @classmethod
    def monomial(cls, ctx: FieldCtx, degree: int, coeff: FieldElement | None = None) -> "Poly":
        c = ctx.one() if coeff is None else coeff
        return cls(ctx, [ctx.zero()] * degree + [c])

    # -- basic queries ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Poly) and self.ctx == other.ctx
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.ctx, self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def _check(self, other: "Poly") -> None:
        if self.ctx != other.ctx:
            raise FieldError("polynomials over different fields")

    # -- ring operations --------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.ctx, out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(self.ctx, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return self.scale(other)
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.ctx)
        out = [self.ctx.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.ctx, out)

    __rmul__ = __mul__

    def scale(self, c: FieldElement) -> "Poly":
        return Poly(self.ctx, [a * c for a in self.coeffs])

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = other.coeffs[-1].inverse()
        quot = [self.ctx.zero()] * max(len(rem) - db, 0)
        while rem and len(rem) - 1 >= db:
            shift = len(rem) - 1 - db
            f = rem[-1] * inv_lead
            quot[shift] = f
            for i, bc in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - f * bc
            while rem and rem[-1].is_zero():
                rem.pop()
        return Poly(self.ctx, quot), Poly(self.ctx, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    # -- calculus / normal forms -------------------------------------------------

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.coeffs[-1].inverse())

    def derivative(self) -> "Poly":
        """Formal derivative; i*c_i collapses mod the field characteristic."""
        ctx = self.ctx
        out = []
        for i, c in enumerate(self.coeffs[1:], start=1):
            out.append(ctx.element(i) * c)
        return Poly(ctx, out)

    def eval(self, x: FieldElement) -> FieldElement:
        """Horner evaluation; x may live in an extension of the coefficient
        field (the coefficients are embedded)."""
        if x.ctx == self.ctx:
            coeffs = self.coeffs
            target = self.ctx
        else:
            target = x.ctx
            coeffs = tuple(embed(self.ctx, target, c) for c in self.coeffs)
        acc = target.zero()
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    def map_to(self, ext: FieldCtx) -> "Poly":
        """The same polynomial with coefficients embedded into ext."""
        if ext == self.ctx:
            return self
        return Poly(ext, [embed(self.ctx, ext, c) for c in self.coeffs])


# ---------------------------------------------------------------------------
# Module-level algebra
# ---------------------------------------------------------------------------

def gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor via Euclid."""
    f._check(g)
    if f.is_zero() and g.is_zero():
        raise ZeroDivisionError("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def is_squarefree(f: Poly) -> bool:
    if f.is_zero():
        raise ZeroDivisionError("squarefreeness of the zero polynomial")
    if f.degree == 0:
        return True
    d = f.derivative()
    if d.is_zero():
        return False  # p-th power in characteristic p
    return gcd(f, d).degree == 0


def pow_mod(base: Poly, e: int, mod: Poly) -> Poly:
    """base^e mod `mod` by square-and-multiply."""
    result = Poly.one(base.ctx)
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def splitting_degree(f: Poly) -> int:
    """Least s such that f splits into linear factors over F_{q^s}, computed
    as the lcm of the degrees of f's irreducible factors (distinct-degree
    decomposition; no full factorization)."""
    if f.is_zero() or f.degree == 0:
        raise FieldError("splitting degree needs a nonconstant polynomial")
    if not is_squarefree(f):
        raise FieldError("splitting degree requires a squarefree polynomial")
    q = f.ctx.order
    g = f.monic()
    degrees = []
    h = Poly.x(f.ctx) % g
    x = Poly.x(f.ctx)
    i = 0
    while g.degree > 0:
        i += 1
        if 2 * i > g.degree:
            degrees.append(g.degree)
            break
        h = pow_mod(h, q, g)
        d = gcd(h - x, g)
        if d.degree > 0:
            degrees.append(i)
            g = g // d
            h = h % g if g.degree > 0 else h
    return lcm(*degrees)


def _equal_degree_roots(g: Poly, ext: FieldCtx, rng: random.Random) -> list[FieldElement]:
    """All roots of g, a product of distinct linear factors over ext."""
    if g.degree == 0:
        return []
    if g.degree == 1:
        c0, c1 = g.coeffs
        return [-c0 / c1]
    q = ext.order
    x = Poly.x(ext)
    work = [g.monic()]
    roots: list[FieldElement] = []
    while work:
        h = work.pop()
        if h.degree == 1:
            roots.append(-h.coeffs[0] / h.coeffs[1])
            continue
        # 0 may be a root; strip it so the residue split only sees units
        if h.coeffs[0].is_zero():
            roots.append(ext.zero())
            h = h // x
            if h.degree >= 1:
                work.append(h)
            continue
        while True:
            a = ext.random_element(rng)
            probe = pow_mod(x + Poly(ext, [a]), (q - 1) // 2, h) - Poly.one(ext)
            d = gcd(probe, h)
            if 0 < d.degree < h.degree:
                work.append(d)
                work.append(h // d)
                break
    return roots


def roots_in(f: Poly, ext: FieldCtx, seed: int = DEFAULT_SEED) -> list[FieldElement]:
    """All distinct roots of f in ext, sorted by canonical representation.

    Exhaustively scans extensions of order <= 2^16; larger fields use
    gcd with x^q - x followed by seeded equal-degree splitting.
    """
    if f.is_zero():
        raise ZeroDivisionError("roots of the zero polynomial")
    if ext.p != f.ctx.p or ext.s % f.ctx.s != 0:
        raise FieldError("target field is not an extension of the coefficient field")
    F = f.map_to(ext)
    if F.degree == 0:
        return []
    if ext.order <= ROOT_SCAN_CEILING:
        found = [e for e in ext.elements() if F.eval(e).is_zero()]
        return sorted(found, key=lambda e: e.coeffs)
    x = Poly.x(ext)
    kernel = pow_mod(x, ext.order, F) - x
    g = gcd(kernel, F)
    roots = _equal_degree_roots(g, ext, random.Random(seed))
    return sorted(set(roots), key=lambda e: e.coeffs)


def poly_to_strings(f: Poly) -> list[str]:
    from .field import format_element
    return [format_element(c) for c in f.coeffs]
