"""Explicit finite field extensions F_{p^f}.

A FieldCtx owns a monic irreducible modulus over F_p (found by seeded search
and certified by Rabin's test).  Elements are coefficient tuples of length f.
Frobenius and the trace to F_p are precomputed as F_p-linear maps (numpy
integer matrices), which keeps the per-element cost of the character-orbit
evaluations low even at degree 70.

Elements never migrate between contexts: mixing owners raises immediately,
since a silently coerced operand is the classic way to get a wrong character
sum.
"""

from __future__ import annotations

from typing import Iterable, Optional

import numpy as np

from . import nt
from .nt import BudgetExceeded, seeded_rng

DEFAULT_MAX_DEGREE = 80
DEFAULT_MAX_UNITY = 65536


class FieldCtx:
    """F_{p^f} = F_p[x] / (modulus), modulus monic irreducible of degree f."""

    def __init__(self, p: int, modulus: Iterable[int]):
        modulus = tuple(int(c) % p for c in modulus)
        if modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        self.p = p
        self.f = len(modulus) - 1
        self.modulus = modulus
        self.order = p**self.f
        self._red = _reduction_rows(p, modulus)
        self._frob_pows: dict[int, np.ndarray] = {0: np.eye(self.f, dtype=np.int64)}
        if not self._is_irreducible():
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        tr = np.zeros((self.f, self.f), dtype=np.int64)
        for k in range(self.f):
            tr = (tr + self._frob_matrix(k)) % p
        self._trace_mat = tr

    # -- low-level vector arithmetic (rows of length f) ------------------------

    def _mul_vec(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        c = np.convolve(a, b)
        return _reduce(c[None, :], self._red, self.p, self.f)[0]

    def _pow_vec(self, a: np.ndarray, e: int) -> np.ndarray:
        result = np.zeros(self.f, dtype=np.int64)
        result[0] = 1
        base = a % self.p
        while e:
            if e & 1:
                result = self._mul_vec(result, base)
            base = self._mul_vec(base, base)
            e >>= 1
        return result

    def _frob1(self) -> np.ndarray:
        """Matrix of x -> x^p on coefficient rows (row i holds (x^i)^p)."""
        if 1 not in self._frob_pows:
            xp = self._pow_vec(_x_vec(self.f), self.p)
            m = np.zeros((self.f, self.f), dtype=np.int64)
            m[0, 0] = 1
            cur = np.zeros(self.f, dtype=np.int64)
            cur[0] = 1
            for i in range(1, self.f):
                cur = self._mul_vec(cur, xp)
                m[i] = cur
            self._frob_pows[1] = m
        return self._frob_pows[1]

    def _frob_matrix(self, k: int) -> np.ndarray:
        k %= self.f
        if k not in self._frob_pows:
            m = self._frob_matrix(k - 1) @ self._frob1() % self.p
            self._frob_pows[k] = m
        return self._frob_pows[k]

    def _is_irreducible(self) -> bool:
        """Rabin: x^(p^f) = x and gcd(x^(p^(f/q)) - x, modulus) = 1, q | f prime."""
        f, p = self.f, self.p
        if f == 1:
            return True
        frob1 = self._frob1()
        x = _x_vec(f)
        powers = {}
        cur = x
        for k in range(1, f + 1):
            cur = cur @ frob1 % p
            powers[k] = cur
        if not np.array_equal(powers[f], x):
            return False
        qs = _prime_divisors(f)
        for q in qs:
            diff = (powers[f // q] - x) % p
            if not diff.any():
                return False
            if _poly_gcd_degree(list(diff), list(self.modulus), p) > 0:
                return False
        return True

    # -- elements --------------------------------------------------------------

    def element(self, coeffs) -> "FieldElement":
        arr = tuple(int(c) % self.p for c in coeffs)
        if len(arr) > self.f:
            raise ValueError("too many coefficients")
        return FieldElement(self, arr + (0,) * (self.f - len(arr)))

    def zero(self) -> "FieldElement":
        return self.element(())

    def one(self) -> "FieldElement":
        return self.element((1,))

    def scalar(self, c: int) -> "FieldElement":
        return self.element((c,))

    def gen(self) -> "FieldElement":
        return self.element((0, 1)) if self.f > 1 else self.one()

    def random_element(self, rng) -> "FieldElement":
        return self.element(tuple(rng.randrange(self.p) for _ in range(self.f)))

    def trace_matrix(self) -> np.ndarray:
        """Matrix of the trace-to-F_p map acting on coefficient rows."""
        return self._trace_mat

    def __repr__(self):
        return f"FieldCtx(p={self.p}, f={self.f})"


class FieldElement:
    """Immutable element of a FieldCtx, in reduced coefficient form."""

    __slots__ = ("owner", "coeffs")

    def __init__(self, owner: FieldCtx, coeffs: tuple[int, ...]):
        self.owner = owner
        self.coeffs = coeffs

    def _check(self, other: "FieldElement"):
        if not isinstance(other, FieldElement):
            raise TypeError("field elements only combine with field elements")
        if self.owner is not other.owner:
            raise ValueError("operands belong to different field contexts")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.owner.p
        return FieldElement(self.owner, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        p = self.owner.p
        return FieldElement(self.owner, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FieldElement":
        p = self.owner.p
        return FieldElement(self.owner, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        ctx = self.owner
        c = ctx._mul_vec(np.array(self.coeffs, dtype=np.int64), np.array(other.coeffs, dtype=np.int64))
        return FieldElement(ctx, tuple(int(v) for v in c))

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inv() ** (-e)
        result = self.owner.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inv(self) -> "FieldElement":
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        return self ** (self.owner.order - 2)

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.owner is other.owner
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.owner), self.coeffs))

    def __repr__(self):
        return f"Fe{list(self.coeffs)}"


def build_field(p: int, f: int, seed: int = 0, max_degree: int = DEFAULT_MAX_DEGREE) -> FieldCtx:
    """Seeded search for an irreducible degree-f modulus; same seed, same field."""
    if not nt.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if f < 1:
        raise ValueError("degree must be >= 1")
    if f > max_degree:
        raise BudgetExceeded(f"extension degree {f} exceeds the cap {max_degree}")
    if f == 1:
        return FieldCtx(p, (0, 1))
    rng = seeded_rng(seed, "field-modulus", p, f)
    while True:
        coeffs = [rng.randrange(p) for _ in range(f)] + [1]
        if coeffs[0] == 0:
            continue
        try:
            return FieldCtx(p, coeffs)
        except ValueError:
            continue


def frobenius(e: FieldElement, k: int) -> FieldElement:
    """e^(p^k) via the precomputed p-th-power linear maps."""
    if k < 0:
        raise ValueError("negative Frobenius power")
    ctx = e.owner
    m = ctx._frob_matrix(k)
    out = np.array(e.coeffs, dtype=np.int64) @ m % ctx.p
    return FieldElement(ctx, tuple(int(v) for v in out))


def trace_to_prime(e: FieldElement) -> int:
    """Sum of e^(p^k) over k < f, asserted to land in the prime subfield."""
    ctx = e.owner
    out = np.array(e.coeffs, dtype=np.int64) @ ctx._trace_mat % ctx.p
    if out[1:].any():
        raise AssertionError("trace did not land in the prime subfield")
    return int(out[0])


def in_prime_subfield(e: FieldElement) -> Optional[int]:
    if any(e.coeffs[1:]):
        return None
    return e.coeffs[0]


def roots_of_unity(
    ctx: FieldCtx, k: int, seed: int = 0, cap: int = DEFAULT_MAX_UNITY
) -> list[FieldElement]:
    """All k-th roots of unity, as powers of one exact-order-k element."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if (ctx.order - 1) % k != 0:
        raise ValueError(f"{k} does not divide the multiplicative group order")
    if k > cap:
        raise BudgetExceeded(f"unity group size {k} exceeds the cap {cap}")
    if k == 1:
        return [ctx.one()]
    prime_divs = [q for q, _ in nt.factorize(k, seed=seed).factors]
    cofactor = (ctx.order - 1) // k
    rng = seeded_rng(seed, "unity", ctx.p, ctx.f, k)
    while True:
        g = ctx.random_element(rng)
        if not g:
            continue
        z = g**cofactor
        if all((z ** (k // q)) != ctx.one() for q in prime_divs):
            break
    roots = [ctx.one()]
    cur = z
    for _ in range(k - 1):
        roots.append(cur)
        cur = cur * z
    return roots


# -- internal helpers -----------------------------------------------------------


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _x_vec(f: int) -> np.ndarray:
    v = np.zeros(f, dtype=np.int64)
    if f > 1:
        v[1] = 1
    return v


def _reduction_rows(p: int, modulus: tuple[int, ...]) -> np.ndarray:
    """Rows k = coefficients of x^(f+k) mod modulus, for k = 0..f-2."""
    f = len(modulus) - 1
    if f == 1:
        return np.zeros((0, 1), dtype=np.int64)
    neg = np.array([(-c) % p for c in modulus[:-1]], dtype=np.int64)
    rows = np.zeros((f - 1, f), dtype=np.int64)
    cur = neg.copy()
    rows[0] = cur
    for k in range(1, f - 1):
        nxt = np.zeros(f, dtype=np.int64)
        nxt[1:] = cur[:-1]
        nxt = (nxt + cur[-1] * neg) % p
        rows[k] = nxt
        cur = nxt
    return rows


def _reduce(conv: np.ndarray, red: np.ndarray, p: int, f: int) -> np.ndarray:
    """Reduce convolution output rows (width <= 2f-1) mod the field modulus."""
    width = conv.shape[1]
    if width < 2 * f - 1:
        conv = np.pad(conv, ((0, 0), (0, 2 * f - 1 - width)))
    lo = conv[:, :f]
    if f == 1:
        return lo % p
    hi = conv[:, f:]
    return (lo + hi @ red) % p


def _poly_gcd_degree(a: list[int], b: list[int], p: int) -> int:
    """Degree of gcd(a, b) over F_p; 0 means coprime up to units."""

    def norm(v):
        v = [int(c) % p for c in v]
        while v and v[-1] == 0:
            v.pop()
        return v

    a, b = norm(a), norm(b)
    while b:
        # a mod b
        inv = pow(b[-1], -1, p)
        r = list(a)
        while len(r) >= len(b) and r:
            lead = r[-1] * inv % p
            shift = len(r) - len(b)
            for i, c in enumerate(b):
                r[shift + i] = (r[shift + i] - lead * c) % p
            r = norm(r)
        a, b = b, r
    return max(len(a) - 1, 0)
