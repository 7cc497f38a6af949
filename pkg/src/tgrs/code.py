"""Twisted generalized Reed-Solomon codes.

A code is determined by distinct evaluation points alpha, nonzero column
multipliers v, a dimension k <= n-k, and a nonzero twist scalar eta.  Message
polynomials are f(x) = a_0 + ... + a_{k-1} x^{k-1} + eta a_{k-1} x^k; the
codeword is (v_1 f(alpha_1), ..., v_n f(alpha_n)).

The parity-check matrix is built from the closed-form rows (three cases,
dispatched on a = sum(alpha) and eta); its contract G H^T = 0 with
rank(H) = n - k is verified in the test suite against an independent
nullspace computation.
"""

from __future__ import annotations

import enum
from typing import Sequence

from .field import (FieldCtx, FieldElement, FieldError, field_spec,
                    format_element, parse_element, parse_field_spec)
from .matrix import Matrix

SCHEMA_VERSION = 1


class CaseTag(str, enum.Enum):
    """Which closed-form last row the check matrix uses."""
    GENERIC = "GENERIC"      # a != 0 and eta != -1/a
    ZERO_SUM = "ZERO_SUM"    # a == 0
    SINGULAR = "SINGULAR"    # a != 0 and eta == -1/a


def lagrange_weights(alpha: Sequence[FieldElement]) -> list[FieldElement]:
    """u_i = prod_{j != i} (alpha_i - alpha_j)^(-1); needs >= 2 distinct points."""
    n = len(alpha)
    if n < 2:
        raise ValueError("need at least two evaluation points")
    if len({a.coeffs for a in alpha}) != n:
        raise ValueError("evaluation points not distinct")
    out = []
    for i, ai in enumerate(alpha):
        prod = ai.ctx.one()
        for j, aj in enumerate(alpha):
            if j != i:
                prod = prod * (ai - aj)
        out.append(prod.inverse())
    return out


class TgrsCode:
    """Immutable TGRS code; generator/check matrices and weights are cached
    eagerly so instances are freely shareable."""

    __slots__ = ("ctx", "alpha", "v", "k", "eta", "n", "a", "u",
                 "case_tag", "_G", "_H")

    def __init__(self, ctx: FieldCtx, alpha: Sequence[FieldElement],
                 v: Sequence[FieldElement], k: int, eta: FieldElement):
        alpha = tuple(alpha)
        v = tuple(v)
        n = len(alpha)
        for e in alpha + v + (eta,):
            if e.ctx != ctx:
                raise FieldError("parameter from a different field")
        if len({a.coeffs for a in alpha}) != n:
            raise ValueError("evaluation points not distinct")
        if len(v) != n:
            raise ValueError("alpha and v lengths differ")
        if any(m.is_zero() for m in v):
            raise ValueError("multiplier must be nonzero")
        if eta.is_zero():
            raise ValueError("twist scalar eta must be nonzero")
        if not 1 <= k <= n - k:
            raise ValueError(f"dimension must satisfy 1 <= k <= n-k, got k={k}, n={n}")
        self.ctx = ctx
        self.alpha = alpha
        self.v = v
        self.k = k
        self.eta = eta
        self.n = n
        a = ctx.zero()
        for ai in alpha:
            a = a + ai
        self.a = a
        self.u = tuple(lagrange_weights(alpha))
        if a.is_zero():
            self.case_tag = CaseTag.ZERO_SUM
        elif (ctx.one() + a * eta).is_zero():
            self.case_tag = CaseTag.SINGULAR
        else:
            self.case_tag = CaseTag.GENERIC
        self._G = self._build_generator()
        self._H = self._build_check()

    # -- matrices -----------------------------------------------------------------

    def _build_generator(self) -> Matrix:
        ctx, k, eta = self.ctx, self.k, self.eta
        rows = []
        powers = [ctx.one() for _ in self.alpha]
        for i in range(k - 1):
            rows.append([vj * pw for vj, pw in zip(self.v, powers)])
            powers = [pw * aj for pw, aj in zip(powers, self.alpha)]
        # powers now hold alpha^(k-1); twisted row is alpha^(k-1) + eta alpha^k
        rows.append([vj * (pw + eta * pw * aj)
                     for vj, pw, aj in zip(self.v, powers, self.alpha)])
        return Matrix(ctx, rows)

    def _build_check(self) -> Matrix:
        ctx = self.ctx
        r = self.n - self.k
        w = [ui / vi for ui, vi in zip(self.u, self.v)]
        rows = []
        powers = [ctx.one() for _ in self.alpha]
        for i in range(r - 1):
            rows.append([wj * pw for wj, pw in zip(w, powers)])
            powers = [pw * aj for pw, aj in zip(powers, self.alpha)]
        # powers hold alpha^(r-1)
        if self.case_tag is CaseTag.GENERIC:
            coef = self.eta / (ctx.one() + self.a * self.eta)
            rows.append([wj * (pw - coef * pw * aj)
                         for wj, pw, aj in zip(w, powers, self.alpha)])
        elif self.case_tag is CaseTag.ZERO_SUM:
            rows.append([wj * (pw - self.eta * pw * aj)
                         for wj, pw, aj in zip(w, powers, self.alpha)])
        else:
            rows.append([wj * pw * aj
                         for wj, pw, aj in zip(w, powers, self.alpha)])
        return Matrix(ctx, rows)

    def generator_matrix(self) -> Matrix:
        """G: k x n, rows 1..k-1 classical, last row twisted (eq-shape rank k)."""
        return self._G

    def check_matrix(self) -> Matrix:
        """H: (n-k) x n closed-form check matrix for the code's case tag."""
        return self._H

    # -- encoding / membership ------------------------------------------------------

    def twisted_eval(self, f_coeffs: Sequence[FieldElement]) -> list[FieldElement]:
        """Codeword for message coefficients (a_0 .. a_{k-1}); the twist
        coefficient eta*a_{k-1} is implicit."""
        if len(f_coeffs) != self.k:
            raise ValueError(f"expected exactly {self.k} coefficients")
        for c in f_coeffs:
            if c.ctx != self.ctx:
                raise FieldError("coefficient from a different field")
        out = []
        twist = self.eta * f_coeffs[-1]
        for vi, ai in zip(self.v, self.alpha):
            acc = twist
            for c in reversed(f_coeffs):
                acc = acc * ai + c
            out.append(vi * acc)
        return out

    def syndrome(self, word: Sequence[FieldElement]) -> list[FieldElement]:
        """H * word^T; zero exactly on codewords."""
        if len(word) != self.n:
            raise ValueError(f"expected a length-{self.n} word")
        out = []
        for row in self._H.rows:
            acc = self.ctx.zero()
            for h, wd in zip(row, word):
                acc = acc + h * wd
            out.append(acc)
        return out

    # -- serialization ----------------------------------------------------------------

    def to_spec(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "field": field_spec(self.ctx),
            "n": self.n,
            "k": self.k,
            "eta": format_element(self.eta),
            "alpha": [format_element(a) for a in self.alpha],
            "v": [format_element(m) for m in self.v],
        }

    def __repr__(self) -> str:
        return (f"TgrsCode(n={self.n}, k={self.k}, field={field_spec(self.ctx)}, "
                f"case={self.case_tag.value})")


class CodeSpecError(ValueError):
    """Malformed code spec document (field name included in the message)."""


def code_from_spec(doc: dict) -> TgrsCode:
    """Build a code from the JSON code-spec document shape."""
    if not isinstance(doc, dict):
        raise CodeSpecError("code spec must be a JSON object")
    for key in ("field", "n", "k", "eta", "alpha", "v"):
        if key not in doc:
            raise CodeSpecError(f"code spec missing field {key!r}")
    schema = doc.get("schema", SCHEMA_VERSION)
    if schema != SCHEMA_VERSION:
        raise CodeSpecError(f"unsupported schema version {schema!r}")
    try:
        ctx = parse_field_spec(str(doc["field"]))
    except (FieldError, ValueError) as exc:
        raise CodeSpecError(f"bad field spec: {exc}") from exc
    def parse_list(key):
        raw = doc[key]
        if not isinstance(raw, list):
            raise CodeSpecError(f"field {key!r} must be a list")
        try:
            return [parse_element(ctx, item) for item in raw]
        except (FieldError, ValueError) as exc:
            raise CodeSpecError(f"bad element in {key!r}: {exc}") from exc
    alpha = parse_list("alpha")
    v = parse_list("v")
    try:
        eta = parse_element(ctx, doc["eta"])
        n = int(doc["n"])
        k = int(doc["k"])
    except (FieldError, ValueError) as exc:
        raise CodeSpecError(f"bad scalar field: {exc}") from exc
    if n != len(alpha):
        raise CodeSpecError(f"n={n} disagrees with len(alpha)={len(alpha)}")
    try:
        return TgrsCode(ctx, alpha, v, k, eta)
    except (FieldError, ValueError) as exc:
        raise CodeSpecError(str(exc)) from exc
