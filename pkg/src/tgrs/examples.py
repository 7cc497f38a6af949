"""Bundled reference codes with known verdicts, used as end-to-end fixtures.

Two instances over quadratic extensions of prime fields, each built from a
full set of (m+1)-st roots of unity with the anchor 1 removed and multipliers
chosen as canonical square roots of the Lagrange weights (so that the weight
proportionality constant is exactly 1):

* id "3.10": length 10, dimension 5 over F_{89^2} -- self-dual and MDS.
* id "3.11": length 14, dimension 7 over F_{61^2} -- self-dual and NMDS,
  with the recorded witness subset {2,5,9,11,12,13,14} summing to 30.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .field import element_of_order, embed, make_field, sqrt_in_field
from .code import TgrsCode, lagrange_weights
from .analysis import (CodeReport, build_report, classify, self_dual_matrix,
                       self_dual_structural, subset_sum_witness)

EXAMPLE_IDS = ("3.10", "3.11")

_FIXTURES = {
    "3.10": {
        "q": 89,
        "root_order": 11,
        "length": 10,
        "k": 5,
        "eta": 2,
        "minus_eta_inv": 44,
        "classification": "MDS",
        "pinned_witness": None,
        "lambda": 1,
        "min_distance": 6,
        "dual_min_distance": 6,
    },
    "3.11": {
        "q": 61,
        "root_order": 15,
        "length": 14,
        "k": 7,
        "eta": 2,
        "minus_eta_inv": 30,
        "classification": "NMDS",
        "pinned_witness": (2, 5, 9, 11, 12, 13, 14),
        "lambda": 1,
        "min_distance": 7,
        "dual_min_distance": 7,
    },
}


class UnknownExampleError(ValueError):
    pass


def fixture(example_id: str) -> dict:
    try:
        return dict(_FIXTURES[example_id])
    except KeyError:
        raise UnknownExampleError(
            f"unknown example id {example_id!r}; known: {', '.join(EXAMPLE_IDS)}"
        ) from None


def example_code(example_id: str) -> TgrsCode:
    """Construct the reference code for the given id."""
    fx = fixture(example_id)
    base = make_field(fx["q"])
    gamma = element_of_order(base, fx["root_order"])
    alpha_base = [gamma**i for i in range(1, fx["length"] + 1)]
    ext = make_field(fx["q"], 2)
    u = lagrange_weights(alpha_base)
    v = []
    for ui in u:
        root = sqrt_in_field(ext, embed(base, ext, ui))
        if root is None:
            raise RuntimeError("internal invariant violated: base-field weight "
                               "has no square root in the quadratic extension")
        v.append(root)
    alpha = [embed(base, ext, ai) for ai in alpha_base]
    eta = ext.element(fx["eta"])
    return TgrsCode(ext, alpha, v, fx["k"], eta)


@dataclass
class ExampleCheck:
    label: str
    expected: str
    got: str

    @property
    def ok(self) -> bool:
        return self.expected == self.got


@dataclass
class ExampleRun:
    example_id: str
    report: CodeReport
    checks: list[ExampleCheck]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)


def run_example(example_id: str, budget: Optional[int] = None) -> ExampleRun:
    """Rebuild the reference code, re-derive every recorded verdict, and
    compare against the fixture."""
    fx = fixture(example_id)
    code = example_code(example_id)
    base = make_field(fx["q"])
    checks: list[ExampleCheck] = []

    def check(label, expected, got):
        checks.append(ExampleCheck(label, str(expected), str(got)))

    check("length n", fx["length"], code.n)
    check("dimension k", fx["k"], code.k)

    minus_eta_inv = (-base.element(fx["eta"]).inverse()).lift()
    check("-1/eta in the base field", fx["minus_eta_inv"], minus_eta_inv)

    target = -code.eta.inverse()
    cls = classify(code)
    check("classification", fx["classification"], cls.verdict)

    if fx["pinned_witness"] is None:
        hit = subset_sum_witness(code.alpha, code.k, target)
        check(f"no {code.k}-subset sums to -1/eta", "none",
              "none" if hit is None else ",".join(map(str, hit)))
    else:
        pinned = fx["pinned_witness"]
        total = code.ctx.zero()
        for pos in pinned:
            total = total + code.alpha[pos - 1]
        check(f"recorded witness {{{','.join(map(str, pinned))}}} sums to -1/eta",
              "true", str(total == target).lower())
        check("classifier returns a witness", "true",
              str(cls.witness is not None).lower())

    structural = self_dual_structural(code)
    check("structural self-duality", "true", str(structural.self_dual).lower())
    expected_lam = code.ctx.element(fx["lambda"])
    lam_str = "-" if structural.lam is None else str(structural.lam)
    check("lambda", str(expected_lam), lam_str)
    check("matrix self-duality (G G^T = 0)", "true",
          str(self_dual_matrix(code)).lower())

    report = build_report(code, budget=budget)
    check("minimum distance", fx["min_distance"], report.min_distance)
    check("dual minimum distance", fx["dual_min_distance"],
          report.dual_min_distance)
    return ExampleRun(example_id, report, checks)
