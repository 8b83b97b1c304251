#!/usr/bin/env python3
"""Tiny-scale ground truth: find, verify, and draw perfect Lee codes.

The sphere S(2, 2) has 13 points, so a linear PL(2,2)-code is a pair of
generators in an abelian group of order 13 whose signed sphere sums are a
bijection.  The exhaustive search finds the classical witness {1, 5} in
C13; for dimension 3 the same search exhausts both groups of order 25 and
proves nonexistence.
"""
from leeperfect import (
    build_T,
    enumerate_abelian_groups,
    oracle_verdict,
    render_tiling,
    sphere_size,
    verify_r2_identity,
    verify_r3_identity,
    verify_witness,
)

print("Lee sphere sizes |S(n, r)|:")
for n in range(1, 6):
    print(f"  n={n}: ", [sphere_size(n, r) for r in range(1, 4)])

print("\n(n, r) = (2, 2): order", sphere_size(2, 2))
res = oracle_verdict(2, 2)
w = res.witness
print("witness found:", w.group.describe(), "generators", w.generators)
print("verify_witness:", verify_witness(w).ok)
print("group-ring identity T^2 = 2G - T^(2) + 2n:",
      verify_r2_identity(build_T(w.group, w.generators), 2).holds)
print("\nthe induced plane tiling (codewords marked *):\n")
print(render_tiling(w, width=26, height=13))

print("\n(n, r) = (3, 2): order", sphere_size(3, 2))
print("groups of order 25:",
      [g.describe() for g in enumerate_abelian_groups(25).groups])
res = oracle_verdict(3, 2)
print("exhaustive search:", res.kind, "(no linear PL(3,2)-code exists)")

print("\n(n, r) = (2, 3): order", sphere_size(2, 3))
res = oracle_verdict(2, 3)
w = res.witness
print("witness found:", w.group.describe(), "generators", w.generators)
print("cubic group-ring identity:",
      verify_r3_identity(build_T(w.group, w.generators), 2).holds)
