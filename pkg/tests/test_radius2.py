import dataclasses

import pytest

from leeperfect import nt, radius2
from leeperfect.outcomes import Caps, Status, Tier


def test_kim_examples():
    out = radius2.kim_check(4)
    assert out.status is Status.EXCLUDED and out.tier is Tier.UNCONDITIONAL
    entry = out.certificate["evaluated"][0]
    assert (entry["v"], entry["a"], entry["b"], entry["m"]) == (41, 3, 10, 1)

    out = radius2.kim_check(6)
    assert out.status is Status.EXCLUDED
    fired = [e for e in out.certificate["evaluated"] if e["solvable_l"] is None]
    assert fired and fired[0]["v"] == 17 and fired[0]["a"] == "infinity"

    out = radius2.kim_check(2)
    assert out.status is Status.UNDECIDED
    entry = out.certificate["evaluated"][0]
    assert (entry["v"], entry["a"], entry["b"], entry["solvable_l"]) == (13, 2, 6, 0)


def test_kim_not_applicable():
    # order 841 = 29^2 has no prime divisor above 2n+1 = 41
    out = radius2.kim_check(20)
    assert out.status is Status.NOT_APPLICABLE


def test_quadratic_preconditions():
    assert radius2.quadratic_preconditions(8, 5) == (None, False)
    assert radius2.quadratic_preconditions(3, 5)[0] == 5  # 25 = 5^2
    assert radius2.quadratic_preconditions(1, 5) == (3, True)  # 9 = 3^2 and 5 = 5*1
    assert radius2.quadratic_preconditions(2, 13) == (None, True)  # 13 = 13*1


def test_small_v_examples():
    for n, v in ((8, 5), (49, 13), (299, 17)):
        out = radius2.small_v_check(n)
        assert out.status is Status.EXCLUDED
        assert v in out.certificate["fired"]
    assert radius2.small_v_check(3).status is Status.NOT_APPLICABLE  # 25 square
    assert radius2.small_v_check(2).status is Status.UNDECIDED  # 13 = 13*1^2 blocks
    assert radius2.small_v_check(4).status is Status.NOT_APPLICABLE  # 41 has no small divisor


def test_lambda_worked_examples():
    cert = radius2.lambda_value(102, 21013, 3)
    assert cert.lam == 1 and cert.l == 5253 and cert.hypotheses_ok
    cert = radius2.lambda_value(14, 421, 7)
    assert cert.lam == 3 and cert.l == 35 and cert.f == 70 and cert.d == 6

    assert radius2.lambda_check(102, 21013, 3).status is Status.EXCLUDED
    out = radius2.lambda_check(14, 421, 7)
    assert out.status is Status.UNDECIDED and out.params["lambda"] == 3


def test_lambda_hypothesis_gates():
    # p = 2 always fails the m2 coefficient bound (2m = 0 mod 2)
    out = radius2.lambda_check(2, 13, 2)
    assert out.status is Status.NOT_APPLICABLE
    assert "coefficient_bound_m2" in out.reason
    # n=15, v=13, p=3: 2n+1 = 31 > 13 = m1 * v
    out = radius2.lambda_check(15, 13, 3)
    assert out.status is Status.NOT_APPLICABLE


def test_lambda_formula_matches_bruteforce_sample():
    import math

    checked = 0
    for v in (13, 17, 29, 37, 41, 53, 61, 73, 89, 97):
        vfac = nt.factorize(v - 1)
        for p in (3, 5, 7, 11, 13):
            if p == v or not radius2._generates_full_unit_group([2, p % v], v, vfac):
                continue
            h2 = nt.mult_order(2, v, vfac)
            hp = nt.mult_order(p, v, vfac)
            f = hp
            l = f // 2 if (f % 2 == 0 and pow(p, f // 2, v) == v - 1) else f
            M = p**l - 1
            if M > 1:
                M = math.gcd(M, pow(2, h2, M) - 1)
            if M > 1:
                M = math.gcd(M, pow(p, hp, M) - 1)
            i0 = (v - 1) // hp
            j0 = nt.discrete_log(p, pow(2, i0, v), v, hp)
            if j0 is not None and M > 1:
                M = math.gcd(M, (pow(2, i0, M) - pow(p, j0, M)) % M)
            assert M == radius2.lambda_bruteforce(v, p), (v, p)
            checked += 1
    assert checked >= 20


def test_theta_trivial_values():
    from leeperfect.fields import build_field

    ctx = build_field(3, 16)  # ord_17(3) = 16
    one = ctx.one()
    # power-sum mode at x = y = 1 sums v-1 copies of 1
    assert radius2.theta(one, one, 17, 1, "power_sum") == (17 - 1) % 3
    # trace mode sums d traces of 1, each f mod p
    d = 1
    assert radius2.theta(one, one, 17, d, "trace") == d * 16 % 3


def test_field_check_n14_excludes():
    out = radius2.field_check(14, 421, 7)
    assert out.status is Status.EXCLUDED and out.tier is Tier.UNCONDITIONAL
    cands = out.certificate["candidates"]
    assert len(cands) == 3  # lambda = 3 unity candidates
    assert all(c["admissible"] for c in cands)
    assert all(not c["passes"] for c in cands)
    # the exact-count form applies because v equals the whole order
    assert out.certificate["m"] == 1


def test_field_check_open_cases_stay_undecided():
    # dimensions the published table leaves open must not be excluded here
    assert radius2.field_check(55, 61, 11).status is Status.UNDECIDED
    assert radius2.field_check(66, 29, 11).status is Status.UNDECIDED
    # externally-settled n=10 is not excluded by the field conditions either
    assert radius2.field_check(10, 13, 5).status is Status.UNDECIDED


def test_field_check_caps():
    caps = dataclasses.replace(Caps(), max_field_degree=10)
    out = radius2.field_check(14, 421, 7, caps)
    assert out.status is Status.SKIPPED
    with pytest.raises(ValueError):
        radius2.field_check(102, 21013, 3)  # lambda = 1 is degenerate


def test_orbit_not_applicable_on_witness_dimension():
    # n=2: 8n-3 = 13 is 13 * 1^2, so the quadratic preconditions fail and the
    # orbit reproduction never runs where a code actually exists
    out = radius2.orbit_check(2, 13)
    assert out.status is Status.NOT_APPLICABLE
    out = radius2.orbit_check(3, 13)  # 13 does not divide 25
    assert out.status is Status.NOT_APPLICABLE
    out = radius2.orbit_check(6, 17)  # 8n+1 = 49 square
    assert out.status is Status.NOT_APPLICABLE


def test_orbit_17_3_all_classes_excluded():
    def first_qualifying(cls):
        n = 3
        while True:
            if (2 * n * n + 2 * n + 1) % 17 == 0 and n % 3 == cls:
                if nt.is_perfect_square(8 * n + 1) is None:
                    return n
            n += 1

    for cls in range(3):
        n = first_qualifying(cls)
        out = radius2.orbit_check(n, 17)
        assert out.status is Status.EXCLUDED, (cls, n)
        assert not out.certificate["unexplained"]


def test_orbit_13_11_quadratic_survivors_never_unconditional():
    # class 8 mod 11 keeps two quadratic-factor survivors: exclusion must be
    # the cited tier, never unconditional
    out = radius2.orbit_check(140, 13)
    assert out.status is Status.EXCLUDED and out.tier is Tier.CITED
    kinds = {s["class"] for s in out.certificate["survivors"]}
    assert kinds == {"quadratic_factor_1"}


def test_orbit_13_11_empty_classes_unconditional():
    out = radius2.orbit_check(62, 13)  # class 7 mod 11: no survivors at all
    assert out.status is Status.EXCLUDED and out.tier is Tier.UNCONDITIONAL
    assert out.certificate["survivor_count"] == 0


def test_orbit_generic_instances_gated():
    with pytest.raises(ValueError):
        radius2.orbit_check(23, 13, p=7)  # non-default companion needs the flag
