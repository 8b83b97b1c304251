"""Property suites wired behind the `selftest` command.

Each suite re-derives a piece of the engine with an independent method
(brute-force gcd over exponent pairs, Fourier inversion, direct sphere
enumeration, exhaustive witness search) and checks agreement.  A failure of
the criterion-vs-oracle coupling raises InternalInconsistencyError, which
the command line maps to its dedicated exit code.
"""

from __future__ import annotations

import time
from typing import Callable

from . import nt, radius2, survey
from .geometry import enumerate_sphere, sphere_size
from .groupring import (
    AbelianGroup,
    GroupRingElement,
    char_context,
    char_eval,
    inversion_roundtrip,
    power_map,
)
from .oracle import oracle_verdict
from .outcomes import Caps, DEFAULT_CAPS, InternalInconsistencyError


def _lambda_suite(log: Callable[[str], None]) -> bool:
    """Generator-chain lambda equals the brute-force pair gcd for every prime
    v < 500 and prime p < 50 for which 2 and p generate the units mod v."""
    checked = 0
    for v in range(5, 500):
        if not nt.is_prime(v):
            continue
        vfac = nt.factorize(v - 1)
        for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
            if p == v or not radius2._generates_full_unit_group([2 % v, p % v], v, vfac):
                continue
            h2 = nt.mult_order(2, v, vfac)
            hp = nt.mult_order(p, v, vfac)
            f = hp
            l = f // 2 if (f % 2 == 0 and pow(p, f // 2, v) == v - 1) else f
            import math

            M = p**l - 1
            if M > 1:
                M = math.gcd(M, pow(2, h2, M) - 1)
            if M > 1:
                M = math.gcd(M, pow(p, hp, M) - 1)
            i0 = (v - 1) // hp
            j0 = nt.discrete_log(p, pow(2, i0, v), v, hp)
            if j0 is not None and M > 1:
                M = math.gcd(M, (pow(2, i0, M) - pow(p, j0, M)) % M)
            brute = radius2.lambda_bruteforce(v, p)
            if M != brute:
                log(f"  mismatch at (v={v}, p={p}): chain {M} vs brute {brute}")
                return False
            checked += 1
    log(f"  {checked} (v, p) pairs agree with the brute-force gcd")
    return True


def _inversion_suite(log) -> bool:
    rng = nt.seeded_rng(7, "selftest-inversion")
    for m in (13, 25):
        G = AbelianGroup.cyclic(m)
        ctx = char_context(G)
        for trial in range(5):
            a = GroupRingElement(G, [rng.randrange(-9, 10) for _ in range(m)])
            if not inversion_roundtrip(a, ctx):
                log(f"  inversion roundtrip failed over C{m}")
                return False
        # all-ones element: principal character |G|, others 0
        ones = GroupRingElement(G, [1] * m)
        if char_eval(ones, 0, ctx) != m % ctx.q:
            return False
        if any(char_eval(ones, j, ctx) != 0 for j in range(1, m)):
            log(f"  nonprincipal character of the all-ones element nonzero over C{m}")
            return False
    log("  Fourier inversion and all-ones character values agree over C13, C25")
    return True


def _power_map_suite(log) -> bool:
    rng = nt.seeded_rng(11, "selftest-powermap")
    import math

    for G in (AbelianGroup.cyclic(13), AbelianGroup.cyclic(25), AbelianGroup.of([5, 5])):
        for t in range(1, G.exponent):
            if math.gcd(t, G.exponent) != 1:
                continue
            for _ in range(3):
                a = GroupRingElement(G, [rng.randrange(-3, 4) for _ in range(G.order)])
                b = GroupRingElement(G, [rng.randrange(-3, 4) for _ in range(G.order)])
                if power_map(a * b, t) != power_map(a, t) * power_map(b, t):
                    log(f"  power map not multiplicative for t={t} over {G.describe()}")
                    return False
    log("  power maps are ring homomorphisms for t coprime to the exponent")
    return True


def _sphere_suite(log) -> bool:
    for n in range(7):
        for r in range(7):
            if len(enumerate_sphere(n, r)) != sphere_size(n, r):
                log(f"  sphere count mismatch at (n={n}, r={r})")
                return False
    for n in range(10_001):
        if sphere_size(n, 2) != 2 * n * n + 2 * n + 1:
            return False
        if n >= 1 and sphere_size(n, 3) != 1 + 6 * n * n + 4 * n * (n - 1) * (n - 2) // 3:
            return False
    log("  sphere sizes match enumeration (n, r <= 6) and the order polynomials (n <= 10^4)")
    return True


def _coupling_suite(log, caps: Caps) -> bool:
    """Known-witness dimensions must never be excluded by any criterion."""
    for n, r in ((1, 2), (2, 2), (2, 3)):
        res = oracle_verdict(n, r, caps)
        if not res.exists:
            log(f"  expected a witness at (n={n}, r={r})")
            return False
        if r == 2 and n >= 2:
            verdict = survey.check(n, r, caps, early_exit=False)
            survey.assert_oracle_coupling(verdict, res.exists)
    exhausted = oracle_verdict(3, 2, caps)
    if exhausted.kind != "not_exists":
        log("  exhaustive (3, 2) search did not report nonexistence")
        return False
    log("  witnesses found at (1,2), (2,2), (2,3); no criterion excludes them; (3,2) exhausts")
    return True


SUITES = ("lambda", "inversion", "power_map", "sphere", "coupling")


def run_selftest(caps: Caps = DEFAULT_CAPS, log: Callable[[str], None] = print) -> bool:
    """Run every property suite; prints one pass/fail line per suite."""
    ok_all = True
    for name in SUITES:
        t0 = time.perf_counter()
        if name == "lambda":
            ok = _lambda_suite(log)
        elif name == "inversion":
            ok = _inversion_suite(log)
        elif name == "power_map":
            ok = _power_map_suite(log)
        elif name == "sphere":
            ok = _sphere_suite(log)
        else:
            ok = _coupling_suite(log, caps)
        dt = time.perf_counter() - t0
        log(f"{'PASS' if ok else 'FAIL'} selftest:{name} ({dt:.1f}s)")
        ok_all = ok_all and ok
    return ok_all
