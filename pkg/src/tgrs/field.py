"""Exact arithmetic in prime fields F_p and extensions F_{p^s}, odd characteristic.

Elements are canonical coefficient vectors over Z_p relative to a fixed monic
irreducible modulus.  Contexts are immutable after construction and every
operation is a pure function of its inputs, so fields and elements can be
shared freely across threads.
"""

from __future__ import annotations

import functools
from itertools import product as _cartesian
from typing import Iterator, Optional, Sequence

# Whole-field enumeration refuses orders above this unless explicitly allowed.
ENUM_CEILING = 2**24


class FieldError(ValueError):
    """Invalid field construction or cross-field operand mix."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors, ascending (trial division; desk scale)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def prime_power_split(q: int) -> tuple[int, int]:
    """Write q = p^s for prime p, or raise FieldError."""
    ps = prime_factors(q)
    if len(ps) != 1:
        raise FieldError(f"{q} is not a prime power")
    p = ps[0]
    s = 0
    while q > 1:
        q //= p
        s += 1
    return p, s


# ---------------------------------------------------------------------------
# Raw polynomial arithmetic over Z_p on plain int lists (constant term first).
# Only used to bootstrap modulus search/validation and element inversion.
# ---------------------------------------------------------------------------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while a and len(a) - 1 >= dm:
        shift = len(a) - 1 - dm
        f = (a[-1] * inv_lead) % p
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - f * mi) % p
        _trim(a)
    return a


def _polymulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _polymod(out, m, p)


def _polygcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = [x % p for x in a], [x % p for x in b]
    _trim(a)
    _trim(b)
    while b:
        a = _polymod(a, b, p)
        a, b = b, a
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(x * inv) % p for x in a]
    return a


def _frobenius_pow(h: list[int], m: list[int], p: int) -> list[int]:
    """h^p mod m by square-and-multiply on the exponent p."""
    result = [1]
    base = list(h)
    e = p
    while e:
        if e & 1:
            result = _polymulmod(result, base, m, p)
        base = _polymulmod(base, base, m, p)
        e >>= 1
    return result


def is_irreducible_modulus(coeffs: Sequence[int], p: int) -> bool:
    """Monic degree-s polynomial over F_p with no factor of degree <= s/2."""
    m = [c % p for c in coeffs]
    s = len(m) - 1
    if s < 1 or m[-1] != 1:
        return False
    h = [0, 1]  # x
    for _ in range(s // 2):
        h = _frobenius_pow(h, m, p)  # x^(p^i) mod m
        g = _polygcd(_polysub_int(h, [0, 1], p), m, p)
        if len(g) - 1 > 0:
            return False
    return True


def _find_modulus(p: int, s: int) -> tuple[int, ...]:
    """First monic irreducible of degree s over F_p in lexicographic
    coefficient order (constant term is the most significant position).
    Constant term 0 (divisible by x) is skipped structurally."""
    for c0 in range(1, p):
        for rest in _cartesian(range(p), repeat=s - 1):
            coeffs = (c0,) + rest + (1,)
            if is_irreducible_modulus(coeffs, p):
                return coeffs
    raise FieldError(f"no irreducible modulus of degree {s} over F_{p}")


# ---------------------------------------------------------------------------
# Field context and elements
# ---------------------------------------------------------------------------

class FieldCtx:
    """A finite field F_{p^s} given by odd prime p, degree s, and modulus.

    Two contexts interoperate only when (p, s, modulus) coincide.  Use
    :func:`make_field` rather than constructing directly.
    """

    __slots__ = ("p", "s", "order", "modulus", "_key", "_hash",
                 "_generator", "_nonresidue")

    def __init__(self, p: int, s: int, modulus: Optional[tuple[int, ...]]):
        self.p = p
        self.s = s
        self.order = p**s
        self.modulus = modulus
        self._key = (p, s, modulus)
        self._hash = hash(self._key)
        self._generator: Optional["FieldElement"] = None
        self._nonresidue: Optional["FieldElement"] = None

    @property
    def is_prime_field(self) -> bool:
        return self.s == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldCtx) and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"FieldCtx({field_spec(self)})"

    # -- element constructors ------------------------------------------------

    def element(self, value) -> "FieldElement":
        """Coerce an int (constant), coefficient sequence, string form, or
        element of this same field."""
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, int):
            coeffs = (value % self.p,) + (0,) * (self.s - 1)
            return FieldElement(self, coeffs)
        if isinstance(value, str):
            return parse_element(self, value)
        coeffs = tuple(int(v) % self.p for v in value)
        if len(coeffs) > self.s:
            raise FieldError(f"coefficient vector longer than degree {self.s}")
        coeffs = coeffs + (0,) * (self.s - len(coeffs))
        return FieldElement(self, coeffs)

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.s)

    def one(self) -> "FieldElement":
        return FieldElement(self, (1,) + (0,) * (self.s - 1))

    def elements(self, allow_large: bool = False) -> Iterator["FieldElement"]:
        """All field elements in lexicographic coefficient order."""
        if self.order > ENUM_CEILING and not allow_large:
            raise FieldError(
                f"refusing to enumerate field of order {self.order} "
                f"(> {ENUM_CEILING}); pass allow_large=True to override")
        for coeffs in _cartesian(range(self.p), repeat=self.s):
            yield FieldElement(self, coeffs)

    def random_element(self, rng) -> "FieldElement":
        return FieldElement(self, tuple(rng.randrange(self.p)
                                        for _ in range(self.s)))


class FieldElement:
    """Canonical element of a :class:`FieldCtx` (coefficient vector mod p)."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: tuple[int, ...]):
        self.ctx = ctx
        self.coeffs = coeffs

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def _check(self, other: "FieldElement") -> None:
        if self.ctx._key != other.ctx._key:
            raise FieldError("operands belong to different fields")

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.ctx.p
        if self.ctx.s == 1:
            return FieldElement(self.ctx, ((self.coeffs[0] + other.coeffs[0]) % p,))
        return FieldElement(self.ctx, tuple((a + b) % p for a, b in
                                            zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.ctx.p
        if self.ctx.s == 1:
            return FieldElement(self.ctx, ((self.coeffs[0] - other.coeffs[0]) % p,))
        return FieldElement(self.ctx, tuple((a - b) % p for a, b in
                                            zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FieldElement":
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        ctx = self.ctx
        p = ctx.p
        if ctx.s == 1:
            return FieldElement(ctx, ((self.coeffs[0] * other.coeffs[0]) % p,))
        s = ctx.s
        conv = [0] * (2 * s - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    conv[i + j] += a * b
        mod = ctx.modulus
        for i in range(2 * s - 2, s - 1, -1):
            c = conv[i] % p
            if c:
                for j in range(s):
                    conv[i - s + j] -= c * mod[j]
            conv[i] = 0
        return FieldElement(ctx, tuple(c % p for c in conv[:s]))

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        ctx = self.ctx
        p = ctx.p
        if ctx.s == 1:
            return FieldElement(ctx, (pow(self.coeffs[0], p - 2, p),))
        # extended Euclid against the modulus
        a, b = list(ctx.modulus), _trim(list(self.coeffs))
        t0: list[int] = []
        t1: list[int] = [1]
        while b:
            q, r = _polydivmod_int(a, b, p)
            a, b = b, r
            t0, t1 = t1, _polysub_int(t0, _polymul_int(q, t1, p), p)
        # a is now gcd (a nonzero constant since the modulus is irreducible)
        inv_const = pow(a[0], p - 2, p)
        t0 = [(c * inv_const) % p for c in t0]
        t0 = t0[:ctx.s] + [0] * (ctx.s - len(t0))
        return FieldElement(ctx, tuple(t0))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def __pow__(self, e: int) -> "FieldElement":
        base = self
        if e < 0:
            base = self.inverse()
            e = -e
        result = self.ctx.one()
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparisons / hashing ------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldElement)
                and self.ctx._key == other.ctx._key
                and self.coeffs == other.coeffs)

    def __lt__(self, other: "FieldElement") -> bool:
        self._check(other)
        return self.coeffs < other.coeffs

    def __hash__(self) -> int:
        return hash((self.ctx.p, self.coeffs))

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"<{format_element(self)} in {field_spec(self.ctx)}>"

    def lift(self) -> int:
        """Integer representative for prime-field elements."""
        if self.ctx.s != 1:
            raise FieldError("lift() only applies to prime-field elements")
        return self.coeffs[0]


def _polydivmod_int(a: list[int], b: list[int], p: int):
    a = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        f = (a[-1] * inv_lead) % p
        q[shift] = f
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - f * bi) % p
        _trim(a)
    return _trim(q), a


def _polymul_int(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _polysub_int(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


# ---------------------------------------------------------------------------
# Field construction
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _make_field_cached(p: int, s: int, modulus: Optional[tuple[int, ...]]) -> FieldCtx:
    return FieldCtx(p, s, modulus)


def make_field(p: int, s: int = 1, modulus: Optional[Sequence[int]] = None) -> FieldCtx:
    """Construct F_{p^s} for odd prime p.

    When s > 1 and no modulus is supplied, the first monic irreducible of
    degree s in lexicographic coefficient order is used, so repeated calls
    return the identical field.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if p == 2:
        raise FieldError("characteristic 2 is not supported (odd p required)")
    if s < 1:
        raise FieldError(f"extension degree must be >= 1, got {s}")
    if s == 1:
        if modulus is not None:
            raise FieldError("prime fields take no modulus")
        return _make_field_cached(p, 1, None)
    if modulus is None:
        mod = _find_modulus(p, s)
    else:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != s + 1 or mod[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {s}")
        if not is_irreducible_modulus(mod, p):
            raise FieldError("modulus is reducible over F_p")
    return _make_field_cached(p, s, mod)


def field_of_order(q: int) -> FieldCtx:
    """F_q for an odd prime power q, with the deterministic modulus."""
    p, s = prime_power_split(q)
    return make_field(p, s)


# ---------------------------------------------------------------------------
# Multiplicative structure
# ---------------------------------------------------------------------------

def find_generator(ctx: FieldCtx) -> FieldElement:
    """Smallest multiplicative generator of F_q* in lexicographic order."""
    if ctx._generator is None:
        q1 = ctx.order - 1
        factors = prime_factors(q1)
        one = ctx.one()
        for cand in ctx.elements(allow_large=True):
            if cand.is_zero():
                continue
            if all(cand ** (q1 // r) != one for r in factors):
                ctx._generator = cand
                break
    return ctx._generator


def element_of_order(ctx: FieldCtx, m: int) -> FieldElement:
    """An element of multiplicative order exactly m (m must divide q-1)."""
    q1 = ctx.order - 1
    if m < 1 or q1 % m != 0:
        raise FieldError(f"{m} does not divide q-1 = {q1}")
    g = find_generator(ctx)
    gamma = g ** (q1 // m)
    one = ctx.one()
    if gamma ** m != one:
        raise FieldError(f"order verification failed for m={m}")
    for r in prime_factors(m):
        if gamma ** (m // r) == one:
            raise FieldError(f"order verification failed for m={m}")
    return gamma


def is_square(e: FieldElement) -> bool:
    """Euler criterion; zero counts as a square."""
    if e.is_zero():
        return True
    return e ** ((e.ctx.order - 1) // 2) == e.ctx.one()


def _find_nonresidue(ctx: FieldCtx) -> FieldElement:
    if ctx._nonresidue is None:
        exp = (ctx.order - 1) // 2
        one = ctx.one()
        for cand in ctx.elements(allow_large=True):
            if cand.is_zero():
                continue
            if cand ** exp != one:
                ctx._nonresidue = cand
                break
    return ctx._nonresidue


def sqrt_in_field(ctx: FieldCtx, e: FieldElement) -> Optional[FieldElement]:
    """Canonical square root (lexicographically smaller of the pair), or
    None when e is a non-residue.  Tonelli-Shanks on the field's
    multiplicative group; works for any odd prime power order."""
    if e.ctx != ctx:
        raise FieldError("element belongs to a different field")
    if e.is_zero():
        return ctx.zero()
    q = ctx.order
    one = ctx.one()
    if e ** ((q - 1) // 2) != one:
        return None
    m = q - 1
    twos = 0
    while m % 2 == 0:
        m //= 2
        twos += 1
    if twos == 1:
        r = e ** ((q + 1) // 4)
    else:
        z = _find_nonresidue(ctx)
        c = z ** m
        t = e ** m
        r = e ** ((m + 1) // 2)
        while t != one:
            t2 = t * t
            i = 1
            while t2 != one:
                t2 = t2 * t2
                i += 1
            b = c ** (1 << (twos - i - 1))
            r = r * b
            c = b * b
            t = t * c
            twos = i
    neg = -r
    return r if r.coeffs <= neg.coeffs else neg


# ---------------------------------------------------------------------------
# Subfield embedding
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _embedding_root(sub: FieldCtx, ext: FieldCtx) -> FieldElement:
    # image of the subfield's generator-of-representation: the lexicographically
    # smallest root of the subfield modulus inside ext
    from . import poly as _poly  # local import to break the module cycle

    mod_poly = _poly.Poly.from_ints(make_field(sub.p, 1), sub.modulus)
    roots = _poly.roots_in(mod_poly, ext)
    if not roots:
        raise FieldError("subfield modulus has no root in the extension")
    return roots[0]


def embed(sub: FieldCtx, ext: FieldCtx, e: FieldElement) -> FieldElement:
    """Image of e under the fixed field homomorphism F_{p^s} -> F_{p^S}."""
    if e.ctx != sub:
        raise FieldError("element does not belong to the stated subfield")
    if sub == ext:
        return e
    if sub.p != ext.p:
        raise FieldError("incompatible characteristics")
    if ext.s % sub.s != 0:
        raise FieldError(f"degree {sub.s} does not divide {ext.s}")
    if sub.s == 1:
        return ext.element(e.coeffs[0])
    root = _embedding_root(sub, ext)
    acc = ext.zero()
    power = ext.one()
    for c in e.coeffs:
        acc = acc + ext.element(c) * power
        power = power * root
    return acc


# ---------------------------------------------------------------------------
# Textual forms
# ---------------------------------------------------------------------------

def field_spec(ctx: FieldCtx) -> str:
    """`p` for prime fields, `p^s:[c0,...,1]` for extensions."""
    if ctx.s == 1:
        return str(ctx.p)
    mods = ",".join(str(c) for c in ctx.modulus)
    return f"{ctx.p}^{ctx.s}:[{mods}]"


def parse_field_spec(spec: str) -> FieldCtx:
    spec = spec.strip()
    if ":" in spec:
        head, mods = spec.split(":", 1)
        mods = mods.strip()
        if not (mods.startswith("[") and mods.endswith("]")):
            raise FieldError(f"bad modulus syntax in field spec {spec!r}")
        modulus = [int(t) for t in mods[1:-1].split(",")] if mods != "[]" else []
    else:
        head, modulus = spec, None
    if "^" in head:
        p_str, s_str = head.split("^", 1)
        p, s = int(p_str), int(s_str)
    else:
        p, s = int(head), 1
    return make_field(p, s, modulus)


def format_element(e: FieldElement) -> str:
    """`44` in prime fields, `(a0,a1,...)` in extensions."""
    if e.ctx.s == 1:
        return str(e.coeffs[0])
    return "(" + ",".join(str(c) for c in e.coeffs) + ")"


def parse_element(ctx: FieldCtx, text) -> FieldElement:
    if isinstance(text, int):
        return ctx.element(text)
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        coeffs = [int(t) for t in text[1:-1].split(",")]
        return ctx.element(coeffs)
    return ctx.element(int(text))
