"""Parameterized builders for the four self-dual TGRS code families.

Each builder validates its hypotheses, refuses with a structured error naming
the violated hypothesis when they fail, and otherwise returns a ready code
together with the predicted weight-proportionality scalar lambda and the list
of side conditions that were checked.

Families (the JSON `family` tags used throughout the CLI and reports):

* T31 -- roots of x^(2lp) + b x^(2lp-1) + c over the splitting field of
  F_{p^t}, with v_i = alpha_i^(1-lp) and eta = 2/b; lambda = -b.
* T33 -- roots of x^(2p) - x^(2p-1) + 2 x^(p+1) + x^3/3 + 1 over the
  splitting field of F_p, v_i = (alpha_i^(p-1) + alpha_i)^(-1), eta = -2;
  lambda = 1.  Requires gcd(m', x^4 - (3 - 1/3) x^3 + 1) = 1.
* T35 -- roots of x^n + b x^(n-1) + 1 over the splitting field F_q of
  F_{q'}, moved into F_{q^2} where v_i^2 = alpha_i/(alpha_i^n - n + 1);
  eta = 2/b; lambda = 1.
* T36 -- the n+1-st roots scaled by beta with one anchor removed, over
  F_{q^2} where v_i^2 = alpha_i (alpha_i - anchor); eta = 2/anchor;
  lambda = (n+1) beta^(n+1).  j > 0 rotates the removed anchor.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional, Union

from .field import (ENUM_CEILING, FieldCtx, FieldElement, FieldError,
                    embed, element_of_order, field_of_order, field_spec,
                    format_element, is_prime, make_field, parse_element,
                    parse_field_spec, sqrt_in_field)
from .poly import DEFAULT_SEED, Poly, gcd, is_squarefree, roots_in, splitting_degree
from .code import SCHEMA_VERSION, TgrsCode

# T31 refuses splitting fields beyond this total extension degree.
T31_DEGREE_CAP = 20

FAMILIES = ("T31", "T33", "T35", "T36")


class ConstructionError(Exception):
    """A construction hypothesis failed; `hypothesis` is a machine-readable
    name of the violated condition."""

    def __init__(self, hypothesis: str, detail: str):
        super().__init__(f"{hypothesis}: {detail}")
        self.hypothesis = hypothesis
        self.detail = detail


@dataclass
class BuildResult:
    family: str
    params: dict
    code: TgrsCode
    base_field: FieldCtx
    predicted_lambda: FieldElement
    conditions: tuple[str, ...] = dc_field(default_factory=tuple)

    def spec_dict(self) -> dict:
        return {"schema": SCHEMA_VERSION, "family": self.family, **self.params}

    def provenance(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "base_field": field_spec(self.base_field),
            "code_field": field_spec(self.code.ctx),
            "predicted_lambda": format_element(self.predicted_lambda),
            "conditions_checked": list(self.conditions),
        }


def _require_internal(cond: bool, what: str) -> None:
    if not cond:
        raise RuntimeError(f"internal invariant violated: {what}")


def _resolve_field(q: Union[int, str, FieldCtx]) -> FieldCtx:
    if isinstance(q, FieldCtx):
        return q
    if isinstance(q, str):
        return parse_field_spec(q)
    return field_of_order(q)


def _coerce(ctx: FieldCtx, value) -> FieldElement:
    if isinstance(value, FieldElement):
        return ctx.element(value)
    if isinstance(value, str):
        return parse_element(ctx, value)
    return ctx.element(int(value))


# ---------------------------------------------------------------------------
# T31: x^(2lp) + b x^(2lp-1) + c
# ---------------------------------------------------------------------------

def build_t31(p: int, t: int = 1, l: int = 1, b=1, c=1,
              seed: int = DEFAULT_SEED) -> BuildResult:
    if not (is_prime(p) and p % 2):
        raise ConstructionError("p_odd_prime", f"p={p} is not an odd prime")
    if t < 1 or l < 1:
        raise ConstructionError("t_l_positive", f"t={t}, l={l} must be >= 1")
    base = make_field(p, t)
    b_el = _coerce(base, b)
    c_el = _coerce(base, c)
    if b_el.is_zero():
        raise ConstructionError("b_nonzero", "b must be a unit of the base field")
    if c_el.is_zero():
        raise ConstructionError("c_nonzero", "c must be a unit of the base field")
    n = 2 * l * p
    k = l * p
    coeffs = [base.zero()] * (n + 1)
    coeffs[0] = c_el
    coeffs[n - 1] = b_el
    coeffs[n] = base.one()
    m = Poly(base, coeffs)
    if not is_squarefree(m):
        raise ConstructionError("m_squarefree",
                                "x^(2lp) + b x^(2lp-1) + c has repeated roots")
    rel_degree = splitting_degree(m)
    total_degree = t * rel_degree
    if total_degree > T31_DEGREE_CAP:
        raise ConstructionError(
            "splitting_degree_cap",
            f"splitting field needs extension degree {total_degree} over "
            f"F_{p} (cap {T31_DEGREE_CAP})")
    ext = make_field(p, total_degree)
    alpha = roots_in(m, ext, seed=seed)
    _require_internal(len(alpha) == n, "root count != degree for squarefree m")
    v = [ai ** (1 - k) for ai in alpha]
    eta = embed(base, ext, base.element(2) / b_el)
    code = TgrsCode(ext, alpha, v, k, eta)
    lam = embed(base, ext, -b_el)
    _require_internal(code.a == embed(base, ext, -b_el), "sum of roots != -b")
    _require_internal((ext.element(2) + code.a * eta).is_zero(), "2 + a*eta != 0")
    return BuildResult(
        family="T31",
        params={"p": p, "t": t, "l": l, "b": format_element(b_el),
                "c": format_element(c_el)},
        code=code, base_field=base, predicted_lambda=lam,
        conditions=("b_nonzero", "c_nonzero", "m_squarefree",
                    f"splitting_degree={total_degree}",
                    "sum_alpha=-b", "2+a*eta=0"),
    )


# ---------------------------------------------------------------------------
# T33: x^(2p) - x^(2p-1) + 2 x^(p+1) + x^3/3 + 1
# ---------------------------------------------------------------------------

def build_t33(p: int, s: Optional[int] = None,
              seed: int = DEFAULT_SEED) -> BuildResult:
    if not (is_prime(p) and p > 3):
        raise ConstructionError("p_prime_gt_3", f"p={p} must be a prime > 3")
    base = make_field(p, 1)
    inv3 = base.element(3).inverse()
    n = 2 * p
    k = p
    coeffs = [base.zero()] * (n + 1)
    coeffs[0] = base.one()
    coeffs[3] = inv3
    coeffs[p + 1] = base.element(2)
    coeffs[n - 1] = -base.one()
    coeffs[n] = base.one()
    m = Poly(base, coeffs)
    m_prime = m.derivative()
    # the square shape of m' is what makes v_i^2 = u_i work
    half = Poly(base, [base.zero()] + [base.one()] + [base.zero()] * (p - 3)
                + [base.one()])  # x + x^(p-1)
    _require_internal(m_prime == half * half, "m' != (x^(p-1) + x)^2")
    hyp = Poly(base, [base.one(), base.zero(), base.zero(),
                      -(base.element(3) - inv3), base.one()])
    if gcd(m_prime, hyp).degree != 0:
        raise ConstructionError(
            "gcd_m_prime_side_poly",
            "gcd(m'(x), x^4 - (3 - 3^(-1)) x^3 + 1) != 1")
    if not is_squarefree(m):
        raise ConstructionError("m_squarefree", "m has repeated roots")
    rel_degree = splitting_degree(m)
    if s is not None and s != rel_degree:
        raise ConstructionError(
            "splitting_degree_mismatch",
            f"supplied s={s} but the splitting field has degree {rel_degree}")
    if p**rel_degree > ENUM_CEILING:
        raise ConstructionError(
            "field_size_ceiling",
            f"splitting field F_{p}^{rel_degree} has order {p**rel_degree} "
            f"> {ENUM_CEILING}")
    ext = make_field(p, rel_degree)
    alpha = roots_in(m, ext, seed=seed)
    _require_internal(len(alpha) == n, "root count != degree for squarefree m")
    v = []
    for ai in alpha:
        w = ai ** (p - 1) + ai
        if w.is_zero():
            raise ConstructionError(
                "v_defined", f"alpha^(p-1) + alpha = 0 at root "
                f"{format_element(ai)}; the gcd hypothesis cannot hold")
        v.append(w.inverse())
    eta = ext.element(-2)
    code = TgrsCode(ext, alpha, v, k, eta)
    _require_internal(code.a == ext.one(), "sum of roots != 1")
    _require_internal((ext.element(2) + code.a * eta).is_zero(), "2 + a*eta != 0")
    return BuildResult(
        family="T33",
        params={"p": p, "s": rel_degree},
        code=code, base_field=base, predicted_lambda=ext.one(),
        conditions=("p_prime_gt_3", "gcd_m_prime_side_poly", "m_squarefree",
                    f"splitting_degree={rel_degree}",
                    "m_prime_is_square", "sum_alpha=1", "2+a*eta=0"),
    )


# ---------------------------------------------------------------------------
# T35: x^n + b x^(n-1) + 1 over F_{q'}, code over F_{q^2}
# ---------------------------------------------------------------------------

def build_t35(q_prime: Union[int, str, FieldCtx], b, n: int,
              seed: int = DEFAULT_SEED) -> BuildResult:
    base = _resolve_field(q_prime)
    b_el = _coerce(base, b)
    if b_el.is_zero():
        raise ConstructionError("b_nonzero", "b must be a unit of the base field")
    if n < 2 or n % 2:
        raise ConstructionError("n_even", f"n={n} must be a positive even integer")
    p = base.p
    if n % p == 0:
        raise ConstructionError(
            "gcd_q_n", f"characteristic {p} divides n={n}, so gcd(q, n) != 1")
    coeffs = [base.zero()] * (n + 1)
    coeffs[0] = base.one()
    coeffs[n - 1] = b_el
    coeffs[n] = base.one()
    m = Poly(base, coeffs)
    n_el = base.element(n)
    critical = b_el * (base.one() - n_el) / n_el
    if not is_squarefree(m):
        raise ConstructionError(
            "alpha_avoids_critical_root",
            f"m has a repeated root (equal to b(1-n)/n = "
            f"{format_element(critical)})")
    rel_degree = splitting_degree(m)
    total_degree = base.s * rel_degree
    if p**total_degree > ENUM_CEILING:
        raise ConstructionError(
            "field_size_ceiling",
            f"splitting field F_{p}^{total_degree} has order "
            f"{p**total_degree} > {ENUM_CEILING}")
    fq = make_field(p, total_degree)
    alpha_q = roots_in(m, fq, seed=seed)
    _require_internal(len(alpha_q) == n, "root count != degree for squarefree m")
    critical_q = embed(base, fq, critical)
    n_minus_1 = fq.element(n - 1)
    for ai in alpha_q:
        if ai == critical_q:
            raise ConstructionError(
                "alpha_avoids_critical_root",
                f"root {format_element(ai)} equals b(1-n)/n")
        if ai ** n == n_minus_1:
            raise ConstructionError(
                "alpha_pow_n_avoids_n_minus_1",
                f"root {format_element(ai)} has alpha^n = n-1 (v_i would vanish)")
    ext = make_field(p, 2 * total_degree)
    alpha = [embed(fq, ext, ai) for ai in alpha_q]
    v = []
    for ai in alpha_q:
        radicand = ai / (ai ** n - n_minus_1)
        root = sqrt_in_field(ext, embed(fq, ext, radicand))
        _require_internal(root is not None,
                          "base-field radicand has no square root in F_{q^2}")
        v.append(root)
    eta = embed(base, ext, base.element(2) / b_el)
    code = TgrsCode(ext, alpha, v, n // 2, eta)
    _require_internal(code.a == embed(base, ext, -b_el), "sum of roots != -b")
    _require_internal((ext.element(2) + code.a * eta).is_zero(), "2 + a*eta != 0")
    return BuildResult(
        family="T35",
        params={"q_prime": field_spec(base), "b": format_element(b_el), "n": n},
        code=code, base_field=base, predicted_lambda=ext.one(),
        conditions=("b_nonzero", "n_even", "gcd_q_n",
                    "alpha_avoids_critical_root",
                    "alpha_pow_n_avoids_n_minus_1",
                    f"splitting_degree={total_degree}",
                    "sum_alpha=-b", "2+a*eta=0"),
    )


# ---------------------------------------------------------------------------
# T36: scaled (n+1)-st roots with one anchor removed, code over F_{q^2}
# ---------------------------------------------------------------------------

def build_t36(q: Union[int, str, FieldCtx], beta=1, n: int = 0,
              j: int = 0) -> BuildResult:
    base = _resolve_field(q)
    if base.order > ENUM_CEILING:
        raise ConstructionError(
            "field_size_ceiling",
            f"base field order {base.order} > {ENUM_CEILING}")
    beta_el = _coerce(base, beta)
    if beta_el.is_zero():
        raise ConstructionError("beta_nonzero", "beta must be a unit")
    if n < 2 or n % 2:
        raise ConstructionError("n_even", f"n={n} must be a positive even integer")
    if (base.order - 1) % (n + 1) != 0:
        raise ConstructionError(
            "n_plus_1_divides_q_minus_1",
            f"(n+1) = {n + 1} does not divide q-1 = {base.order - 1}")
    if not 0 <= j <= n:
        raise ConstructionError("j_range", f"j={j} must lie in [0, n]")
    gamma = element_of_order(base, n + 1)
    anchor = beta_el * gamma ** j
    alpha_q = [beta_el * gamma ** i for i in range(n + 1) if i != j]
    ext = make_field(base.p, 2 * base.s)
    alpha = [embed(base, ext, ai) for ai in alpha_q]
    v = []
    for ai in alpha_q:
        radicand = ai * (ai - anchor)
        root = sqrt_in_field(ext, embed(base, ext, radicand))
        _require_internal(root is not None,
                          "base-field radicand has no square root in F_{q^2}")
        v.append(root)
    eta = embed(base, ext, base.element(2) / anchor)
    code = TgrsCode(ext, alpha, v, n // 2, eta)
    lam = embed(base, ext, base.element(n + 1) * beta_el ** (n + 1))
    _require_internal(code.a == embed(base, ext, -anchor), "sum of roots != -anchor")
    _require_internal((ext.element(2) + code.a * eta).is_zero(), "2 + a*eta != 0")
    return BuildResult(
        family="T36",
        params={"q": base.order if base.s == 1 else field_spec(base),
                "beta": format_element(beta_el), "n": n, "j": j},
        code=code, base_field=base, predicted_lambda=lam,
        conditions=("beta_nonzero", "n_even", "n_plus_1_divides_q_minus_1",
                    f"gamma_order={n + 1}", "sum_alpha=-anchor", "2+a*eta=0"),
    )


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------

_BUILDERS = {
    "T31": build_t31,
    "T33": build_t33,
    "T35": build_t35,
    "T36": build_t36,
}


def build(family: str, **params) -> BuildResult:
    try:
        builder = _BUILDERS[family]
    except KeyError:
        raise ConstructionError(
            "unknown_family",
            f"family {family!r} is not one of {', '.join(FAMILIES)}") from None
    return builder(**params)


def build_from_spec(doc: dict) -> BuildResult:
    if "family" not in doc:
        raise ConstructionError("unknown_family", "spec has no 'family' key")
    params = {key: value for key, value in doc.items()
              if key not in ("family", "schema")}
    return build(doc["family"], **params)
