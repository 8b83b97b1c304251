"""Vectorized arithmetic for the character-orbit searches.

The orbit searches quantify over x = chi(T) mod p, where chi has odd prime
order v and the symmetry x(-j) = x(j) confines candidates to the subfield
F_{p^((v-1)/2)}.  That subfield has a canonical model: F_p[y] / Psi_v(y),
where Psi_v is the minimal polynomial of zeta_v + zeta_v^{-1}.  Whenever p is
primitive mod v (true for every instance run here, and checked), Psi_v stays
irreducible mod p, the whole constructed field *is* the candidate domain, and
the paired powers zeta^k + zeta^-k needed by the inversion formula are plain
polynomial expressions in the generator y.  No embedding into F_{p^(v-1)} is
ever required.

All candidate-level operations act on (N, deg) integer arrays so a full
enumeration of F_{11^6} (about 1.8M candidates) runs in seconds.
"""

from __future__ import annotations

import numpy as np

from . import nt


def cosine_min_poly(v: int) -> list[int]:
    """Monic minimal polynomial of zeta_v + zeta_v^{-1} over Z (low to high).

    Built from the recursion for the paired powers D_k = zeta^k + zeta^-k:
    D_0 = 2, D_1 = y, D_{k+1} = y*D_k - D_{k-1}; the vanishing sum of all
    v-th roots of unity gives 1 + sum_{k=1..(v-1)/2} D_k = 0.
    """
    if v < 3 or v % 2 == 0:
        raise ValueError("v must be an odd prime >= 3")
    half = (v - 1) // 2

    def padd(a, b):
        m = max(len(a), len(b))
        return [
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(m)
        ]

    d_prev, d_cur = [2], [0, 1]
    acc = padd([1], d_cur)
    for _ in range(half - 1):
        d_prev, d_cur = d_cur, padd([0] + d_cur, [-c for c in d_prev])
        acc = padd(acc, d_cur)
    assert len(acc) == half + 1 and acc[-1] == 1
    return acc


class CosineField:
    """F_p[y]/Psi_v(y) with batched (N, deg) operations; y = zeta_v + zeta_v^-1."""

    def __init__(self, p: int, v: int):
        if nt.mult_order(p % v, v) != v - 1:
            raise ValueError(f"{p} is not primitive mod {v}: cosine model is reducible")
        self.p = p
        self.v = v
        self.deg = (v - 1) // 2
        psi = [c % p for c in cosine_min_poly(v)]
        self.modulus = tuple(psi)
        self._red = self._reduction_rows(psi)
        self._frob = {0: np.eye(self.deg, dtype=np.int64)}
        # paired powers c_k = zeta^k + zeta^-k as field elements, k = 0..v-1
        cos = [self.scalar_vec(2), self._y_vec()]
        for k in range(2, v):
            cos.append((self.mul(cos[k - 1][None, :], self._y_vec()[None, :])[0] - cos[k - 2]) % p)
        self.cosines = np.stack(cos)
        # sanity: c_v = c_0 closes the cycle
        nxt = (self.mul(cos[v - 1][None, :], self._y_vec()[None, :])[0] - cos[v - 2]) % p
        assert np.array_equal(nxt, cos[0]), "cosine recursion failed to close"

    # -- construction ----------------------------------------------------------

    def _reduction_rows(self, psi: list[int]) -> np.ndarray:
        d = self.deg
        p = self.p
        if d == 1:
            return np.zeros((0, 1), dtype=np.int64)
        neg = np.array([(-c) % p for c in psi[:-1]], dtype=np.int64)
        rows = np.zeros((d - 1, d), dtype=np.int64)
        cur = neg.copy()
        rows[0] = cur
        for k in range(1, d - 1):
            nxt = np.zeros(d, dtype=np.int64)
            nxt[1:] = cur[:-1]
            nxt = (nxt + cur[-1] * neg) % p
            rows[k] = nxt
            cur = nxt
        return rows

    def _y_vec(self) -> np.ndarray:
        y = np.zeros(self.deg, dtype=np.int64)
        if self.deg > 1:
            y[1] = 1
        else:
            # deg 1 means v = 3: y = zeta + zeta^-1 = -1
            y[0] = (-1) % self.p
        return y

    def scalar_vec(self, c: int) -> np.ndarray:
        z = np.zeros(self.deg, dtype=np.int64)
        z[0] = c % self.p
        return z

    def frob_matrix(self, e: int) -> np.ndarray:
        e %= self.deg if self.deg > 0 else 1
        if e not in self._frob:
            if 1 not in self._frob:
                yp = self.pow_scalar(self._y_vec(), self.p)
                m = np.zeros((self.deg, self.deg), dtype=np.int64)
                m[0, 0] = 1
                cur = self.scalar_vec(1)
                for i in range(1, self.deg):
                    cur = self.mul(cur[None, :], yp[None, :])[0]
                    m[i] = cur
                self._frob[1] = m
            self._frob[e] = self.frob_matrix(e - 1) @ self._frob[1] % self.p
        return self._frob[e]

    # -- batched operations on (N, deg) int arrays -------------------------------

    def mul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        d = self.deg
        if d == 1:
            return A * B % self.p
        N = A.shape[0]
        conv = np.zeros((N, 2 * d - 1), dtype=np.int64)
        for i in range(d):
            conv[:, i : i + d] += A[:, i : i + 1] * B
        lo = conv[:, :d]
        hi = conv[:, d:]
        return (lo + hi @ self._red) % self.p

    def square(self, A: np.ndarray) -> np.ndarray:
        return self.mul(A, A)

    def frob(self, A: np.ndarray, e: int = 1) -> np.ndarray:
        return A @ self.frob_matrix(e) % self.p

    def mul_scalar_elt(self, A: np.ndarray, c: np.ndarray) -> np.ndarray:
        """Rows of A times the single field element c (1-D vector)."""
        return self.mul(A, np.broadcast_to(c, A.shape))

    def pow_scalar(self, a: np.ndarray, e: int) -> np.ndarray:
        """Single-element power (1-D in, 1-D out)."""
        r = self.scalar_vec(1)
        base = a % self.p
        while e:
            if e & 1:
                r = self.mul(r[None, :], base[None, :])[0]
            base = self.mul(base[None, :], base[None, :])[0]
            e >>= 1
        return r

    def enumerate(self, start: int, stop: int) -> np.ndarray:
        """Candidates start..stop-1 as base-p digit rows."""
        idx = np.arange(start, stop, dtype=np.int64)
        out = np.empty((stop - start, self.deg), dtype=np.int64)
        for i in range(self.deg):
            out[:, i] = idx % self.p
            idx = idx // self.p
        return out

    @property
    def size(self) -> int:
        return self.p**self.deg

    def pm_class(self, j: int) -> int:
        """Representative of {j, -j} mod v in 1..(v-1)/2 (0 for the identity)."""
        j %= self.v
        return min(j, self.v - j)
