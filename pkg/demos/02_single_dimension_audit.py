#!/usr/bin/env python3
"""Audit single dimensions: which criterion excludes a linear PL(n,2)-code?

check() runs the whole criterion chain and keeps every outcome with its
certificate.  Three instructive dimensions:

  n = 57  - everything fires (power-sum, small divisors, lambda, orbit)
  n = 20  - order 841 = 29^2 has no large prime divisor and no small one;
            only the lambda invariant of (v, p) = (29, 5) excludes
  n = 16  - nothing applies: one of the eight dimensions <= 100 still open
"""
from leeperfect import check

for n in (57, 20, 16):
    v = check(n, 2)
    print(f"n={n}: order={v.order} -> {v.overall.upper()}"
          + (f" (by {v.excluded_by}, tier {v.tier.value})" if v.excluded else ""))
    for o in v.outcomes:
        line = f"    {o.criterion:8s} {o.status.value:15s} {o.reason}"
        if o.params.get("v"):
            line += f"  [v={o.params['v']}" + (
                f", p={o.params['p']}]" if o.params.get("p") else "]")
        print(line)
    print()

# the n=102 and n=14 worked examples: big-field lambda and theta machinery
print("n=102: order 21013 is prime; lambda for (v, p) = (21013, 3):")
v = check(102, 2)
lam = [o for o in v.outcomes if o.criterion == "lambda" and o.excluded][0]
print(f"    lambda = {lam.params['lambda']} -> excluded")

print("n=14: order 421 prime, lambda = 3 is nondegenerate, so the")
print("finite-field conditions over F_{7^70} decide:")
v = check(14, 2)
fld = [o for o in v.outcomes if o.criterion == "field"][0]
print(f"    {fld.status.value}: {fld.reason}")
for cand in fld.certificate["candidates"]:
    print(f"    x candidate {cand['x_index']}: theta value counts "
          f"(1s: {cand['count_theta_1']}, 0s: {cand['count_theta_0']}) "
          f"vs required (392, 29)")
