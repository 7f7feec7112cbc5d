"""The six permutation-trinomial families and their parameter arithmetic.

Run: python demos/02_families.py
"""

from permtri import (
    ConditionViolatedError,
    FamilyId,
    check_gcd_identities,
    enumerate_params,
    evaluate,
    instantiate,
)

print("the six families:")
for family in FamilyId:
    print(f"  {family.value}: {family.formula}")
    print(f"      valid when {family.constraint}")

# Instantiation computes the exact exponent triple from the parameters
inst = instantiate("F6", m=2, k=3)
print(f"\nF6 with m=2, k=3 lives in F_2^{inst.n}")
print(f"  exponents: {inst.exponents}   (d = 1+8+64+512+4096 = 4681)")
print(f"  reduced mod 2^8-1: {inst.reduced_exponents()}")
print(f"  JSON: {inst.to_json()}")

# Hypotheses are enforced with the violated condition named
try:
    instantiate("F1", k=2)
except ConditionViolatedError as exc:
    print(f"\nF1 with k=2 is rejected: {exc}")

# Enumerate every valid parameterization up to a degree bound
print("\nall parameterizations with n <= 12:")
for family in FamilyId:
    rows = enumerate_params(family, 12)
    pretty = ", ".join(
        f"n={n} k={p.k}" + ("" if p.m is None else f" m={p.m}") for n, p in rows)
    print(f"  {family.value}: {pretty}")

# Each family's bijectivity argument leans on integer gcd identities;
# they are checkable with exact arithmetic
print("\ngcd identities for F1 k=3 and F6 m=2 k=3:")
for family, params in (("F1", enumerate_params("F1", 9)[-1][1]),
                       ("F6", instantiate("F6", m=2, k=3).params)):
    for name, holds in check_gcd_identities(family, params):
        print(f"  {family} {name}: {holds}")

# Trinomial evaluation: f(0) = 0 and f(1) = 1 for every instance
inst1 = instantiate("F1", k=1)
print(f"\nF1 k=1 over F_8: f(0) = {evaluate(inst1, inst1.spec.zero)}, "
      f"f(1) = {evaluate(inst1, inst1.spec.one)}, "
      f"f(0x5) = {evaluate(inst1, inst1.spec.element(0x5))}")
