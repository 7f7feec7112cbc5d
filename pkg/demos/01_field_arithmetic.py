"""Tour of exact arithmetic in F_{2^n}.

Elements are bit-packed polynomials over GF(2); every operation reduces
modulo a pinned irreducible polynomial.  Run: python demos/01_field_arithmetic.py
"""

from permtri import (
    cube_root_of_unity,
    default_spec,
    fractional_power,
    irreducibles,
    is_irreducible,
)

# F_8 realized as F_2[X]/(x^3 + x + 1); 0xB encodes the modulus bits
F8 = default_spec(3)
print("field:", F8)

a = F8.element(0b011)   # x + 1
b = F8.element(0b101)   # x^2 + 1
print(f"(x+1) + (x^2+1)   = {a + b}")          # XOR of coefficients
print(f"(x+1) * (x^2+1)   = {a * b}")
print(f"(x+1)^-1          = {a.inv()}, check: {(a * a.inv())}")
print(f"sqrt(x^2+x+1)     = {F8.element(0b111).sqrt()}  (squaring is a bijection)")

# Frobenius orbits and the trace onto F_2
x = F8.element(0b010)
print(f"\nFrobenius orbit of x: {x} -> {x.frobenius(1)} -> {x.frobenius(2)} -> {x.frobenius(3)}")
print(f"trace of x onto F_2: {x.trace()}   (x + x^2 + x^4 = 0 here)")

# Exponents reduce mod 2^n - 1 for nonzero bases, so huge powers are exact
print(f"\nx^4681 = x^(4681 mod 7) = x^5 = {x ** 4681}")
print(f"x^(2^n - 1) = {x ** 7}  (Lagrange)")

# Fractional powers: exponent num/den in the multiplicative group
F16 = default_spec(4)
c = F16.element(0x9)
r = fractional_power(c, 1, 7)
print(f"\nin F_16: (0x9)^(1/7) = {r}, check r^7 = {r ** 7}")

# Cube roots of unity exist exactly when n is even
w = cube_root_of_unity(F16)
print(f"cube root of unity in F_16: {w}, w^3 = {w ** 3}, w^2+w+1 = {w * w + w + F16.one}")

# Irreducible moduli: the library pins the smallest one per degree,
# but any irreducible of the right degree works
print("\nfirst three irreducible octic polynomials:")
gen = irreducibles(8)
for _ in range(3):
    p = next(gen)
    print(f"  0x{p:X}  irreducible={is_irreducible(p)}")

# The log/antilog fast path (n <= 20) must agree with shift-and-XOR exactly
F8.build_tables()
assert all(F8.mul(i, j) == F8.mul_baseline(i, j) for i in range(8) for j in range(8))
print("\nlog-table multiplication agrees bit-exactly with the baseline on F_8")
