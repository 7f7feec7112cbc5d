"""Exhaustive bijection verification with diagnostics.

Run: python demos/03_verification.py
"""

import json

from permtri import (
    FieldSpec,
    check,
    cycle_structure,
    default_spec,
    enumerate_instances,
    instantiate,
    inverse_table,
    quick_reject,
    value_table,
)

# A permutation: the identity, and a family instance
F8 = default_spec(3)
print("identity map:", json.dumps(check(lambda e: e, F8).to_json_dict()))

inst = instantiate("F1", k=3)    # n = 9, checked over all 512 elements
report = check(value_table(inst), inst.spec)
print("F1 k=3:", json.dumps(report.to_json_dict()))

# A non-permutation: x^2 + x is 2-to-1 (Artin-Schreier); the witness is
# the first collision in ascending input order
rep = check(lambda e: e * e + e, F8)
print("x^2+x :", json.dumps(rep.to_json_dict()))

# quick_reject finds collisions probabilistically; useful as a search
# pre-filter, never as a final verdict
w = quick_reject(lambda e: e * e + e, F8, sample_count=8, seed=42)
print(f"quick_reject witness for x^2+x: ({w[0]}, {w[1]})")
print("quick_reject on identity:", quick_reject(lambda e: e, F8, 8, seed=42))

# Inverse tables give exact preimage sets; for a permutation all are singletons
table = inverse_table(value_table(inst), inst.spec)
print(f"\nF1 k=3 inverse table: {len(table)} attained values, "
      f"all singletons: {table.all_singletons}")
print(f"preimage of 0x1: {table.preimages(1)}")

# Cycle structure is a diagnostic beyond bijectivity
ct = cycle_structure(value_table(inst), inst.spec)
print(f"cycle type of F1 k=3: {ct}")

# Verdicts are representation-independent: different irreducible moduli
# give different value tables but the same bijectivity verdict
for modulus in (0x11B, 0x11D):
    alt = instantiate("F6", m=2, k=3, spec=FieldSpec(8, modulus))
    rep = check(value_table(alt), alt.spec)
    print(f"F6 m=2 k=3 under modulus 0x{modulus:X}: "
          f"is_permutation={rep.is_permutation}")

# Every instance with n <= 12, verified in one sweep
print("\nsweep of all instances with n <= 12:")
for inst in enumerate_instances(12):
    rep = check(value_table(inst), inst.spec)
    tag = f"{inst.family.value} k={inst.params.k}" + (
        "" if inst.params.m is None else f" m={inst.params.m}")
    print(f"  {tag:14} n={inst.n:2}  is_permutation={rep.is_permutation}")
