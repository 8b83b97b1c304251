"""Nonexistence criteria for linear perfect Lee codes of radius 3.

The group order is 1 + 6n^2 + 4n(n-1)(n-2)/3.  Three pieces:

* trivial_solution_gate - the constant projections that satisfy the cubic
  identity whenever v | 2n+1, or when 24n+1 is a square c^2 with 12v
  dividing c^2 +- 6c + 29; no projection argument can apply there.
* square24_check - the arithmetic corollary for v = 7: dimensions n = 1, 5
  (mod 7) are excluded when 24n+1 is not a square, or is a square c^2 with
  84 dividing neither c^2 + 6c + 29 nor c^2 - 6c + 29.
* orbit_check_r3 - the 125-candidate search over chi(T) mod 5 reproducing
  the published machine verification behind square24: Frobenius-consistent
  solutions of the projected cubic system, the reconstruction filters, and
  classification against the trivial factor tau(tau^2 + 3tau - 6n + 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
import numpy as np

from . import nt
from .orbitfield import CosineField
from .outcomes import Caps, CriterionOutcome, DEFAULT_CAPS, Status, Tier


def order_r3(n: int) -> int:
    return 1 + 6 * n * n + 4 * n * (n - 1) * (n - 2) // 3


# ---------------------------------------------------------------------------
# trivial-solution gate and the v = 7 corollary
# ---------------------------------------------------------------------------


@dataclass
class GateResult:
    kind: str  # "pass" | "divides_2n_plus_1" | "square_branch"
    detail: dict

    @property
    def passed(self) -> bool:
        return self.kind == "pass"


def trivial_solution_gate(n: int, v: int) -> GateResult:
    """Does a constant projection already satisfy the cubic identity?

    If v | 2n+1 the uniform multiple of the quotient group works; if 24n+1
    is a square c^2 and 12v divides c^2 + 6c + 29 or c^2 - 6c + 29, the
    affine constant solution works.  Either way no exclusion can come from
    the projection, so the criteria report NotApplicable.
    """
    if order_r3(n) % v != 0:
        raise ValueError(f"{v} does not divide the radius-3 order")
    if (2 * n + 1) % v == 0:
        return GateResult("divides_2n_plus_1", {"v": v})
    c = nt.is_perfect_square(24 * n + 1)
    if c is not None:
        plus, minus = c * c + 6 * c + 29, c * c - 6 * c + 29
        if plus % (12 * v) == 0 or minus % (12 * v) == 0:
            return GateResult(
                "square_branch",
                {"c": c, "plus": plus, "minus": minus, "divisor": 12 * v},
            )
    return GateResult("pass", {"sqrt_24n_plus_1": c})


def square24_check(n: int) -> CriterionOutcome:
    """The v = 7 arithmetic test on 24n+1 for n = 1, 5 (mod 7)."""
    if n < 3:
        raise ValueError("square24_check requires n >= 3")
    params = {"n": n, "order": order_r3(n)}
    if n % 7 not in (1, 5):
        return CriterionOutcome(
            "square24", Status.NOT_APPLICABLE,
            reason="needs n = 1 or 5 (mod 7), where 7 divides the order but not 2n+1",
            params=params,
        )
    c = nt.is_perfect_square(24 * n + 1)
    if c is None:
        return CriterionOutcome(
            "square24", Status.EXCLUDED, tier=Tier.UNCONDITIONAL,
            reason=f"24n+1 = {24 * n + 1} is not a perfect square",
            params=params, certificate={"square": False},
        )
    plus, minus = c * c + 6 * c + 29, c * c - 6 * c + 29
    cert = {"square": True, "c": c, "plus": plus, "minus": minus}
    if plus % 84 != 0 and minus % 84 != 0:
        return CriterionOutcome(
            "square24", Status.EXCLUDED, tier=Tier.UNCONDITIONAL,
            reason=f"84 divides neither {plus} nor {minus}",
            params=params, certificate=cert,
        )
    return CriterionOutcome(
        "square24", Status.UNDECIDED,
        reason="24n+1 is a square and a constant solution remains possible",
        params=params, certificate=cert,
    )


# ---------------------------------------------------------------------------
# the 125-candidate search over chi(T) mod 5
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _orbit_r3_class(v: int, p: int, n_mod_p: int) -> dict:
    """Class-level search; the projected system depends on n only mod p."""
    F = CosineField(p, v)
    n_ = n_mod_p % p
    six_n = 6 * n_ % p
    two_n1 = (2 * n_ + 1) % p
    half = (v - 1) // 2
    # Frobenius exponents sending class 1 to each class: class(p^e) = c
    exp_of_class = {1: 0}
    c, e = 1, 0
    while len(exp_of_class) < half:
        c = F.pm_class(c * p)
        e += 1
        exp_of_class.setdefault(c, e)
    tau = F.enumerate(0, F.size)
    values = {cls: F.frob(tau, e) for cls, e in exp_of_class.items()}
    # projected cubic at the generator class; its Frobenius images at the
    # other classes hold automatically and are re-asserted on survivors
    t1, t2, t3 = values[1], values[2], values[3]

    def cubic(a, b, c3):
        out = (F.mul(F.square(a), a) + 3 * F.mul(b, a) + 2 * c3 - six_n * a) % p
        return out

    ok = ~cubic(t1, t2, t3).any(axis=1)
    survivors = tau[ok]
    records = []
    inv_v = pow(v, -1, p)
    for row in survivors:
        one = row[None, :]
        vals = {cls: F.frob(one, e) for cls, e in exp_of_class.items()}
        for a, b, c3 in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
            assert not cubic(vals[a], vals[b], vals[c3]).any(), "cubic system broke cyclicity"
        a_coeffs = np.zeros((v, F.deg), dtype=np.int64)
        for g in range(v):
            acc = F.scalar_vec(two_n1)[None, :].copy()
            for j in range(1, half + 1):
                acc = (acc + F.mul(vals[j], F.cosines[j * g % v][None, :])) % p
            a_coeffs[g] = acc[0] * inv_v % p
        assert not a_coeffs[:, 1:].any(), "reconstructed coefficient left the prime subfield"
        assert a_coeffs[:, 0].sum() % p == two_n1, "coefficient sum mismatch"
        # trivial factor tau (tau^2 + 3 tau - 6n + 2)
        sq = F.square(one)[0]
        triv_quad = (sq + 3 * row) % p
        triv_quad[0] = (triv_quad[0] - (six_n - 2)) % p
        is_trivial = (not row.any()) or (not triv_quad.any())
        point_value = int(a_coeffs[0, 0])
        records.append({
            "tau": [int(x) for x in row],
            "class": "trivial_factor" if is_trivial else "other",
            "principal_point_value": point_value,
            "principal_point_ok": point_value == two_n1,
        })
    unexplained = [
        r for r in records if r["class"] == "other" and r["principal_point_ok"]
    ]
    nontrivial = [r for r in records if r["class"] == "other"]
    return {
        "v": v, "p": p, "n_mod_p": n_mod_p,
        "candidates_scanned": F.size,
        "survivors": records,
        "survivor_count": len(records),
        "nontrivial_count": len(nontrivial),
        "nontrivial_point_values": sorted({r["principal_point_value"] for r in nontrivial}),
        "unexplained": unexplained,
        "expected_coefficient_sum": two_n1,
    }


def orbit_check_r3(
    n: int, caps: Caps = DEFAULT_CAPS, v: int = 7, p: int = 5, allow_generic: bool = False,
) -> CriterionOutcome:
    """Reproduction of the published mod-5 verification for the v = 7 quotient."""
    params = {"n": n, "v": v, "p": p}
    if (v, p) != (7, 5) and not allow_generic:
        raise ValueError(f"instance (v={v}, p={p}) is experimental; pass allow_generic=True")
    if not nt.is_prime(v) or not nt.is_prime(p):
        raise ValueError("v and p must be prime")
    order = order_r3(n)
    if order % v != 0:
        return CriterionOutcome(
            "orbit_r3", Status.NOT_APPLICABLE, reason=f"{v} does not divide the order",
            params=params,
        )
    gate = trivial_solution_gate(n, v)
    if not gate.passed:
        return CriterionOutcome(
            "orbit_r3", Status.NOT_APPLICABLE,
            reason=f"trivial constant solution exists ({gate.kind})",
            params=params, certificate={"gate": gate.detail, "gate_kind": gate.kind},
        )
    if p ** ((v - 1) // 2) > caps.search_node_budget:
        return CriterionOutcome(
            "orbit_r3", Status.SKIPPED,
            reason=f"candidate space {p}^{(v - 1) // 2} exceeds the search budget",
            params=params,
        )
    analysis = _orbit_r3_class(v, p, n % p)
    cert = {"gate": gate.detail, **analysis}
    if analysis["survivor_count"] == 0:
        return CriterionOutcome(
            "orbit_r3", Status.EXCLUDED, tier=Tier.UNCONDITIONAL,
            reason="no Frobenius-consistent solution of the projected cubic system",
            params=params, certificate=cert,
        )
    if not analysis["unexplained"]:
        return CriterionOutcome(
            "orbit_r3", Status.EXCLUDED, tier=Tier.CITED,
            reason="all survivors carried by the trivial factor or the published "
                   "principal-point computation",
            params=params, certificate=cert,
        )
    return CriterionOutcome(
        "orbit_r3", Status.UNDECIDED,
        reason=f"{len(analysis['unexplained'])} survivor(s) not explained by any factor",
        params=params, certificate=cert,
    )
