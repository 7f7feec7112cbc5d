"""The six permutation-trinomial families over F_{2^n} and their parameter rules.

Every family is f(x) = x^e1 + x^e2 + x with all coefficients 1; the three
exponents are determined by the family's parameters and are stored exactly
as the defining formulas produce them (no reduction mod 2^n - 1; reduction
is an evaluation concern inside pow).  Each family also carries the integer
gcd identities its permutation argument relies on, exposed as checkable
predicates over exact unbounded arithmetic.

    F1  x^(2^2k + 2^k - 1) + x^(2^2k)           + x   n = 3k,   k != 2 (mod 3)
    F2  x^(2^2k + 2^k - 1) + x^(2^2k - 2^k + 1) + x   n = 3k,   k != 2 (mod 3)
    F3  x^(2^(2k+1) + 2^(k+1) + 1) + x^(2^(k+1) + 1) + x   n = 3k + 1
    F4  x^(2^(3k-1) - 2^2k + 2^k) + x^(2^k - 1) + x   n = 3k - 1
    F5  x^(2^2k + 2^k + 1) + x^(2^2k + 1)       + x   n = 3k - 1
    F6  x^d + x^(2^2m) + x,  d = 1 + 2^k + ... + 2^(2mk)
                                                      n = 4m, k odd,
                                                      1 <= k <= n-1, gcd(m,k) = 1
"""

import enum
import json
import math
from dataclasses import dataclass

from .field import FieldElement, FieldSpec, default_spec


class ConditionViolatedError(Exception):
    """Family hypothesis violated; the message names the broken condition."""


class DegreeMismatchError(Exception):
    """Supplied FieldSpec degree differs from the family's n(params)."""


class FamilyId(str, enum.Enum):
    F1 = "F1"
    F2 = "F2"
    F3 = "F3"
    F4 = "F4"
    F5 = "F5"
    F6 = "F6"

    @property
    def formula(self) -> str:
        return _FORMULAS[self]

    @property
    def constraint(self) -> str:
        return _CONSTRAINTS[self]

    @property
    def uses_m(self) -> bool:
        return self is FamilyId.F6


_FORMULAS = {
    FamilyId.F1: "x^(2^2k+2^k-1) + x^(2^2k) + x",
    FamilyId.F2: "x^(2^2k+2^k-1) + x^(2^2k-2^k+1) + x",
    FamilyId.F3: "x^(2^(2k+1)+2^(k+1)+1) + x^(2^(k+1)+1) + x",
    FamilyId.F4: "x^(2^(3k-1)-2^2k+2^k) + x^(2^k-1) + x",
    FamilyId.F5: "x^(2^2k+2^k+1) + x^(2^2k+1) + x",
    FamilyId.F6: "x^d + x^(2^2m) + x, d = sum(2^ik, i=0..2m)",
}

_CONSTRAINTS = {
    FamilyId.F1: "n = 3k, k >= 1, k != 2 (mod 3)",
    FamilyId.F2: "n = 3k, k >= 1, k != 2 (mod 3)",
    FamilyId.F3: "n = 3k+1, k >= 1",
    FamilyId.F4: "n = 3k-1, k >= 1",
    FamilyId.F5: "n = 3k-1, k >= 1",
    FamilyId.F6: "n = 4m, k odd, 1 <= k <= n-1, gcd(m, k) = 1",
}


@dataclass(frozen=True)
class FamilyParams:
    """Parameters of one family instance: k always, m for F6 only."""
    k: int
    m: int | None = None


@dataclass(frozen=True)
class FamilyInstance:
    """One family pinned to concrete parameters and a concrete field."""
    family: FamilyId
    params: FamilyParams
    spec: FieldSpec
    exponents: tuple[int, int, int]

    @property
    def n(self) -> int:
        return self.spec.n

    def reduced_exponents(self) -> tuple[int, int, int]:
        """Exponents mapped into [1, 2^n - 1] (valid for nonzero inputs)."""
        m = self.spec.order - 1
        return tuple((e - 1) % m + 1 for e in self.exponents)

    def to_json_dict(self) -> dict:
        return {
            "id": self.family.value,
            "k": self.params.k,
            "m": self.params.m,
            "n": self.n,
            "modulus": f"0x{self.spec.modulus:x}",
            "exponents": [str(e) for e in self.exponents],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def field_degree(family: FamilyId, params: FamilyParams) -> int:
    """n as a function of the family's parameters."""
    k = params.k
    if family in (FamilyId.F1, FamilyId.F2):
        return 3 * k
    if family is FamilyId.F3:
        return 3 * k + 1
    if family in (FamilyId.F4, FamilyId.F5):
        return 3 * k - 1
    return 4 * params.m


def exponents_of(family: FamilyId, params: FamilyParams) -> tuple[int, int, int]:
    """The exact exponent triple (e1, e2, e3) of the defining trinomial."""
    k = params.k
    if family is FamilyId.F1:
        return ((1 << 2 * k) + (1 << k) - 1, 1 << 2 * k, 1)
    if family is FamilyId.F2:
        return ((1 << 2 * k) + (1 << k) - 1, (1 << 2 * k) - (1 << k) + 1, 1)
    if family is FamilyId.F3:
        return ((1 << (2 * k + 1)) + (1 << (k + 1)) + 1, (1 << (k + 1)) + 1, 1)
    if family is FamilyId.F4:
        return ((1 << (3 * k - 1)) - (1 << 2 * k) + (1 << k), (1 << k) - 1, 1)
    if family is FamilyId.F5:
        return ((1 << 2 * k) + (1 << k) + 1, (1 << 2 * k) + 1, 1)
    m = params.m
    d = sum(1 << (i * k) for i in range(2 * m + 1))
    return (d, 1 << 2 * m, 1)


def validate_params(family: FamilyId, params: FamilyParams) -> None:
    """Raise ConditionViolatedError unless the family's hypotheses hold."""
    k, m = params.k, params.m
    if family is not FamilyId.F6 and m is not None:
        raise ConditionViolatedError(f"family {family.value} takes no parameter m")
    if family is FamilyId.F6:
        if m is None:
            raise ConditionViolatedError("family F6 requires parameter m")
        if m < 1:
            raise ConditionViolatedError("m must be a positive integer")
    if k < 1:
        raise ConditionViolatedError("k must be a positive integer")
    if family in (FamilyId.F1, FamilyId.F2) and k % 3 == 2:
        raise ConditionViolatedError(
            f"k = {k} violates the hypothesis k ≢ 2 (mod 3)")
    if family is FamilyId.F6:
        n = 4 * m
        if k % 2 == 0:
            raise ConditionViolatedError(f"k = {k} violates the hypothesis that k is odd")
        if not 1 <= k <= n - 1:
            raise ConditionViolatedError(
                f"k = {k} violates the hypothesis 1 <= k <= n-1 (n = {n})")
        if math.gcd(m, k) != 1:
            raise ConditionViolatedError(
                f"(m, k) = ({m}, {k}) violates the hypothesis gcd(m, k) = 1")


def instantiate(family: FamilyId | str,
                params: FamilyParams | None = None,
                spec: FieldSpec | None = None,
                *,
                k: int | None = None,
                m: int | None = None,
                enforce_hypotheses: bool = True) -> FamilyInstance:
    """Build a FamilyInstance with exact exponents.

    Parameters may be given as a FamilyParams or as k=/m= keywords.  When
    ``spec`` is omitted the pinned default modulus for the family's n is
    used.  ``enforce_hypotheses=False`` permits excluded parameters for
    experiments (the resulting trinomial may well fail to permute).
    """
    family = FamilyId(family)
    if params is None:
        if k is None:
            raise ConditionViolatedError(f"family {family.value} requires parameter k")
        params = FamilyParams(k=k, m=m)
    elif k is not None or m is not None:
        raise TypeError("pass either params or k=/m= keywords, not both")
    if enforce_hypotheses:
        validate_params(family, params)
    else:
        if params.k < 1 or (family is FamilyId.F6 and (params.m is None or params.m < 1)):
            raise ConditionViolatedError("parameters must be positive integers")
    n = field_degree(family, params)
    if spec is None:
        spec = default_spec(n)
    elif spec.n != n:
        raise DegreeMismatchError(
            f"family {family.value} with {params} lives in degree {n}, spec has n={spec.n}")
    return FamilyInstance(family, params, spec, exponents_of(family, params))


def evaluate(inst: FamilyInstance, x: FieldElement) -> FieldElement:
    """f(x) = x^e1 + x^e2 + x^e3 at a single point."""
    if x.spec != inst.spec:
        raise ValueError("element bound to a different FieldSpec")
    spec = inst.spec
    e1, e2, e3 = inst.exponents
    bits = spec.pow(x.bits, e1) ^ spec.pow(x.bits, e2) ^ spec.pow(x.bits, e3)
    return FieldElement(spec, bits)


def value_table(inst: FamilyInstance, threads: int = 1):
    """f over the whole field as a numpy uint32 array indexed by x.bits.

    Uses the log/antilog fast path for n <= 20 (table build is cached on
    the FieldSpec); falls back to per-element powering above that.  The
    domain is split into contiguous chunks when threads > 1; results are
    assembled in chunk order and are bit-identical for any thread count.
    """
    import numpy as np

    spec = inst.spec
    size = spec.order
    mult = size - 1
    e1, e2, e3 = ((e - 1) % mult + 1 for e in inst.exponents)

    if spec.n <= 20:
        exp_np, log_np = spec.exp_log_arrays()

        def eval_chunk(lo: int, hi: int):
            lo = max(lo, 1)
            logs = log_np[lo:hi].astype(np.uint64)
            acc = exp_np[(e1 * logs) % mult]
            acc = acc ^ exp_np[(e2 * logs) % mult]
            acc = acc ^ exp_np[(e3 * logs) % mult]
            return acc
    else:
        def eval_chunk(lo: int, hi: int):
            lo = max(lo, 1)
            p = spec.pow
            return np.fromiter(
                (p(x, e1) ^ p(x, e2) ^ p(x, e3) for x in range(lo, hi)),
                dtype=np.uint32, count=hi - lo)

    out = np.empty(size, dtype=np.uint32)
    out[0] = 0  # all exponents >= 1
    if threads <= 1:
        out[1:] = eval_chunk(0, size)
        return out
    from concurrent.futures import ThreadPoolExecutor
    bounds = [(i * size // threads, (i + 1) * size // threads) for i in range(threads)]
    bounds = [(lo, hi) for lo, hi in bounds if hi > max(lo, 1)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        chunks = list(pool.map(lambda b: eval_chunk(*b), bounds))
    pos = 1
    for chunk in chunks:
        out[pos:pos + len(chunk)] = chunk
        pos += len(chunk)
    return out


def enumerate_params(family: FamilyId | str, n_max: int) -> list[tuple[int, FamilyParams]]:
    """All valid parameterizations with n <= n_max, ascending by n then k."""
    family = FamilyId(family)
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    out = []
    if family is FamilyId.F6:
        m = 1
        while 4 * m <= n_max:
            n = 4 * m
            for k in range(1, n, 2):
                if math.gcd(m, k) == 1:
                    out.append((n, FamilyParams(k=k, m=m)))
            m += 1
        return out
    k = 1
    while True:
        params = FamilyParams(k=k)
        n = field_degree(family, params)
        if n > n_max:
            return out
        try:
            validate_params(family, params)
        except ConditionViolatedError:
            pass
        else:
            if n >= 2:
                out.append((n, params))
        k += 1


def enumerate_instances(n_max: int, families=tuple(FamilyId)):
    """Instantiate every valid parameterization with n <= n_max (default moduli)."""
    for family in families:
        for _, params in enumerate_params(family, n_max):
            yield instantiate(family, params)


def check_gcd_identities(family: FamilyId | str,
                         params: FamilyParams) -> list[tuple[str, bool]]:
    """Evaluate the integer gcd identities used by the family's permutation
    argument, with exact unbounded arithmetic.  Returns (name, holds) pairs;
    families whose argument needs no gcd identity return an empty list.
    """
    family = FamilyId(family)
    validate_params(family, params)
    k = params.k
    out = []
    if family is FamilyId.F1:
        g = math.gcd((1 << (2 * k + 1)) - 4, (1 << (3 * k)) - 1)
        out.append(("gcd(2^(2k+1)-4, 2^(3k)-1) == 1", g == 1))
        out.append(("gcd(2^(2k+1)-4, 2^(3k)-1) == 2^gcd(2k-1,3k)-1",
                    g == (1 << math.gcd(2 * k - 1, 3 * k)) - 1))
    elif family is FamilyId.F2:
        out.append(("gcd(2^(2k)+2^k+1, 2^k+3) == 1",
                    math.gcd((1 << (2 * k)) + (1 << k) + 1, (1 << k) + 3) == 1))
        out.append(("gcd(2^k+3, 7) == 1", math.gcd((1 << k) + 3, 7) == 1))
        out.append(("gcd(2^(2k)+2^k+1, 2^(k+1)-1) == 1",
                    math.gcd((1 << (2 * k)) + (1 << k) + 1, (1 << (k + 1)) - 1) == 1))
        if k % 3 == 0:
            out.append(("gcd(7, 2^(2k)+2^k+1) == 1",
                        math.gcd(7, (1 << (2 * k)) + (1 << k) + 1) == 1))
    elif family is FamilyId.F4:
        n = 3 * k - 1
        g = math.gcd((1 << k) - 1, (1 << n) - 1)
        out.append(("gcd(2^k-1, 2^n-1) == 1", g == 1))
        out.append(("gcd(2^k-1, 2^n-1) == 2^gcd(k,3k-1)-1",
                    g == (1 << math.gcd(k, n)) - 1))
    elif family is FamilyId.F6:
        m = params.m
        n = 4 * m
        d = sum(1 << (i * k) for i in range(2 * m + 1))
        out.append(("gcd(d, 2^n-1) == 1", math.gcd(d, (1 << n) - 1) == 1))
        out.append(("gcd(2^k-1, 2^(4m)-1) == 1",
                    math.gcd((1 << k) - 1, (1 << n) - 1) == 1))
        out.append(("d == (2^((2m+1)k)-1)/(2^k-1)",
                    d * ((1 << k) - 1) == (1 << ((2 * m + 1) * k)) - 1))
    return out
