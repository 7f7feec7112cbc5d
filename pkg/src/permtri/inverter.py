"""Explicit preimage computation for the six trinomial families.

Each routine reverses f(x) = a by the constructive argument behind the
family's bijectivity: replace the Frobenius conjugates of x by fresh
unknowns, eliminate down to a low-degree or linearized equation in one
unknown, and read off a closed-form candidate set.  Wherever the
underlying uniqueness argument proceeds by cases, the implementation
enumerates every candidate the cases produce and selects by re-evaluating
f (candidate-and-validate); the returned value is therefore always
final-validated, and a candidate set with no valid member signals a bug or
an invalid instance, never a caller error.

Throughout, b and c denote the conjugates a^(2^k) and a^(2^2k), and
epsilon = a + b + c (which lies in F_{2^k} when n = 3k).
"""

from dataclasses import dataclass

from .families import FamilyId, FamilyInstance
from .field import FieldElement, cube_root_of_unity, fractional_power
from .linalg2 import LinearizedPoly, solve_affine


class InversionError(Exception):
    """Base class for inversion failures."""


class NoValidCandidateError(InversionError):
    """No candidate re-evaluates to the target: bug or invalid instance."""


class InternalContradictionError(InversionError):
    """A quantity the bijectivity argument proves nonzero came out zero."""


class Zeta1ZeroError(InternalContradictionError):
    """zeta1 = ac + b^2 + c^2 vanished while inverting F2."""


class ZeroDenominatorError(InternalContradictionError):
    """A division guaranteed well-defined hit a zero denominator."""


@dataclass(frozen=True)
class InversionTrace:
    """Intermediate values of one inversion, for diagnostics and tests.

    Conjugates a, b, c and epsilon are always present; the remaining
    fields are populated by the families that use them (zeta/lambda by F2,
    the cubic coefficients by F4, the unity-root pipeline by F6).
    ``chosen`` is a member of ``candidates`` and satisfies f(chosen) = a.
    """
    a: FieldElement
    b: FieldElement
    c: FieldElement
    epsilon: FieldElement
    lam: FieldElement | None = None
    zeta1: FieldElement | None = None
    zeta2: FieldElement | None = None
    alpha: FieldElement | None = None
    beta_coef: FieldElement | None = None
    gamma: FieldElement | None = None
    theta_coef: FieldElement | None = None
    w: FieldElement | None = None
    z: FieldElement | None = None
    t: FieldElement | None = None
    beta: FieldElement | None = None
    theta: FieldElement | None = None
    candidates: tuple[FieldElement, ...] = ()
    chosen: FieldElement | None = None

    def to_json_dict(self) -> dict:
        def fmt(v):
            return None if v is None else str(v)
        return {
            "a": fmt(self.a), "b": fmt(self.b), "c": fmt(self.c),
            "epsilon": fmt(self.epsilon), "lambda": fmt(self.lam),
            "zeta1": fmt(self.zeta1), "zeta2": fmt(self.zeta2),
            "alpha": fmt(self.alpha), "beta_coef": fmt(self.beta_coef),
            "gamma": fmt(self.gamma), "theta_coef": fmt(self.theta_coef),
            "w": fmt(self.w), "z": fmt(self.z), "t": fmt(self.t),
            "beta": fmt(self.beta), "theta": fmt(self.theta),
            "candidates": [str(x) for x in self.candidates],
            "chosen": fmt(self.chosen),
        }


def _eval_bits(inst: FamilyInstance, x: int) -> int:
    spec = inst.spec
    e1, e2, e3 = inst.exponents
    return spec.pow(x, e1) ^ spec.pow(x, e2) ^ spec.pow(x, e3)


def _pick(inst: FamilyInstance, a: int, candidates: list[int]) -> int:
    for x in candidates:
        if _eval_bits(inst, x) == a:
            return x
    raise NoValidCandidateError(
        f"no candidate maps to 0x{a:x} under {inst.family.value} "
        f"(k={inst.params.k}, m={inst.params.m}, n={inst.n})")


def _conjugates(inst: FamilyInstance, a: int) -> tuple[int, int]:
    spec = inst.spec
    b = spec.frobenius(a, inst.params.k)
    c = spec.frobenius(b, inst.params.k)
    return b, c


def _invert_f1(inst: FamilyInstance, a: int):
    spec = inst.spec
    k = inst.params.k
    b, c = _conjugates(inst, a)
    eps = a ^ b ^ c
    if eps == 0:
        # the conjugate system collapses to u=b, v=c, w=a, so x^2 = ac
        return [spec.sqrt(spec.mul(a, c))], {}
    # scaled linearized equation v^(2^(2k+1)) + v^2 + v = a^2/eps^2 ...
    a2 = spec.mul(a, a)
    eps2 = spec.mul(eps, eps)
    L1 = LinearizedPoly(spec, [(2 * k + 1, 1), (1, 1), (0, 1)])
    sols = solve_affine(L1, spec.element(spec.div(a2, eps2)))
    # ... intersected with the quartic v^4 + v^2 + v = (a^4+b^4+a^2 eps^2)/eps^4
    b2 = spec.mul(b, b)
    rhs2 = spec.div(spec.mul(a2, a2) ^ spec.mul(b2, b2) ^ spec.mul(a2, eps2),
                    spec.mul(eps2, eps2))
    L2 = LinearizedPoly(spec, [(2, 1), (1, 1), (0, 1)])
    candidates = []
    for v_scaled in sols:
        if L2.eval_bits(v_scaled.bits) != rhs2:
            continue
        v = spec.mul(eps, v_scaled.bits)       # undo the eps scaling
        u = spec.frobenius(v, 2 * k)
        w = eps ^ u ^ v
        candidates.append(spec.sqrt(spec.mul(v, w)))
    return candidates, {}


def _invert_f2(inst: FamilyInstance, a: int):
    spec = inst.spec
    k = inst.params.k
    b, c = _conjugates(inst, a)
    eps = a ^ b ^ c
    b2 = spec.mul(b, b)
    zeta1 = spec.mul(a, c) ^ b2 ^ spec.mul(c, c)
    if zeta1 == 0:
        raise Zeta1ZeroError(
            f"zeta1 = 0 at a=0x{a:x} (k={k}): contradicts the bijectivity argument")
    zeta2 = spec.mul(a, b) ^ spec.mul(a, a) ^ spec.mul(c, c)
    lam = spec.pow(zeta1, (1 << k) - 1)        # zeta2/zeta1, a (2^2k+2^k+1)-th root of unity
    lam2 = spec.mul(lam, lam)
    lam3 = spec.mul(lam2, lam)
    extras = {"zeta1": zeta1, "zeta2": zeta2, "lam": lam}
    den = lam3 ^ lam ^ 1
    if den != 0:
        z = spec.div(spec.mul(eps, lam2 ^ 1) ^ spec.mul(b, lam), den)
        extras["z"] = z
        return [spec.frobenius(z, k)], extras
    # lambda^3+lambda+1 = 0 forces lambda^7 = 1, reachable only for k = 1 (mod 3)
    den2 = spec.mul(lam3, lam2) ^ lam3 ^ 1
    if den2 == 0:
        raise ZeroDenominatorError(
            f"lambda^5+lambda^3+1 = 0 at a=0x{a:x} (k={k})")
    y = spec.div(b, den2)
    return [spec.mul(spec.mul(lam2, lam2), y)], extras


def _invert_f3(inst: FamilyInstance, a: int):
    spec = inst.spec
    if a == 1:
        return [1], {}
    b, c = _conjugates(inst, a)
    a2 = spec.mul(a, a)
    b2 = spec.mul(b, b)
    c2 = spec.mul(c, c)
    den = a2 ^ spec.mul(a2, b2) ^ spec.mul(b2, b2) ^ spec.mul(c2, c2) ^ 1
    if den == 0:
        raise ZeroDenominatorError(
            f"a^2+a^2b^2+b^4+c^4+1 = 0 at a=0x{a:x}: possible only for a in {{0,1}}")
    # from den*(x+a)^2 = a*b^2*(a^2+b^2+c^2+1)*(x+a): x = a or a + ab^2*num/den
    offset = spec.div(spec.mul(spec.mul(a, b2), a2 ^ b2 ^ c2 ^ 1), den)
    return [a, a ^ offset], {}


def _invert_f4(inst: FamilyInstance, a: int):
    spec = inst.spec
    b, c = _conjugates(inst, a)
    a2 = spec.mul(a, a)
    b2 = spec.mul(b, b)
    bc = spec.mul(b, c)
    alpha = a2 ^ b2 ^ bc ^ c ^ 1
    beta = spec.mul(a, bc)
    gamma = (spec.mul(a2, a2) ^ spec.mul(a2, bc) ^ spec.mul(a2, b2)
             ^ spec.mul(a2, c) ^ b2 ^ bc ^ c ^ 1)
    theta = spec.mul(spec.mul(a2, a), bc) ^ spec.mul(a, bc)
    extras = {"alpha": alpha, "beta_coef": beta, "gamma": gamma, "theta_coef": theta}
    if alpha == 0:
        # the cubic degenerates to x^2 = a^2 + 1
        return [a ^ 1], extras
    return [a ^ 1, spec.div(beta, alpha)], extras


def _invert_f5(inst: FamilyInstance, a: int):
    spec = inst.spec
    if a == 1:
        return [1], {}
    b, c = _conjugates(inst, a)
    a2 = spec.mul(a, a)
    b2 = spec.mul(b, b)
    den = spec.mul(a2, c) ^ a2 ^ b2 ^ spec.mul(c, c) ^ 1
    if den == 0:
        raise ZeroDenominatorError(
            f"a^2c+a^2+b^2+c^2+1 = 0 at a=0x{a:x}: excluded while f is onto")
    num = (spec.mul(a2, a) ^ spec.mul(a, b2) ^ spec.mul(a, spec.mul(b, c))
           ^ spec.mul(a, c) ^ a)
    return [spec.div(num, den)], {}


def _invert_f6(inst: FamilyInstance, a: int):
    spec = inst.spec
    k = inst.params.k
    m = inst.params.m
    w = cube_root_of_unity(spec).bits
    w2 = w ^ 1                                  # the other root: w^2 = w + 1
    big_a = spec.frobenius(a, 2 * m)
    c1 = spec.mul(w, big_a) ^ a                # coefficient of z^(2^k)
    c0 = spec.mul(w2, big_a) ^ a               # coefficient of z
    extras = {"w": w}
    if c1 == 0 and c0 == 0:
        raise ZeroDenominatorError("both linear coefficients vanish, forcing a = 0")
    if c1 == 0:
        zs = [spec.div(big_a, c0)]
    elif c0 == 0:
        zs = [fractional_power(spec.element(spec.div(big_a, c1)), 1, 1 << k).bits]
    else:
        L = LinearizedPoly(spec, [(k, c1), (0, c0)])
        zs = [s.bits for s in solve_affine(L, spec.element(big_a)) if s.bits]
    unity_order = (1 << (2 * m)) + 1
    candidates = []
    staged = []
    for z in zs:
        t = spec.inv(z)
        beta = t ^ w
        if beta == w or spec.pow(beta, unity_order) != 1:
            continue   # spurious root (z = 1 always solves the equation but fails here)
        theta = spec.pow(beta, (1 << k) - 1)
        den = 1 ^ theta ^ spec.mul(theta, beta)  # 1 + beta^(2^k - 1) + beta^(2^k)
        if den == 0:
            continue
        x = spec.div(a, den)
        if spec.frobenius(x, 2 * m) != spec.mul(theta, x):
            continue   # conjugacy x^(2^2m) = theta*x must hold
        candidates.append(x)
        staged.append((x, z, t, beta, theta))
    extras["_staged"] = staged
    return candidates, extras


_DISPATCH = {
    FamilyId.F1: _invert_f1,
    FamilyId.F2: _invert_f2,
    FamilyId.F3: _invert_f3,
    FamilyId.F4: _invert_f4,
    FamilyId.F5: _invert_f5,
    FamilyId.F6: _invert_f6,
}


def invert(inst: FamilyInstance, a: FieldElement) -> tuple[FieldElement, InversionTrace]:
    """The unique x with f(x) = a, plus the full inversion trace."""
    if a.spec != inst.spec:
        raise ValueError("element bound to a different FieldSpec")
    spec = inst.spec
    if spec.n <= 20 and not spec.tables_built:
        spec.build_tables()
    bits = a.bits
    b, c = _conjugates(inst, bits)
    eps = bits ^ b ^ c
    if bits == 0:
        candidates, extras, chosen = [0], {}, 0
    else:
        candidates, extras = _DISPATCH[inst.family](inst, bits)
        chosen = _pick(inst, bits, candidates)
    staged = extras.pop("_staged", None)
    if staged is not None:
        for x, z, t, beta, theta in staged:
            if x == chosen:
                extras.update(z=z, t=t, beta=beta, theta=theta)
                break
    elem = spec.element
    trace = InversionTrace(
        a=a, b=elem(b), c=elem(c), epsilon=elem(eps),
        candidates=tuple(elem(x) for x in candidates),
        chosen=elem(chosen),
        **{key: elem(v) for key, v in extras.items()},
    )
    return elem(chosen), trace


def _single(inst: FamilyInstance, a: FieldElement, family: FamilyId) -> FieldElement:
    if inst.family is not family:
        raise ValueError(f"instance is {inst.family.value}, expected {family.value}")
    if a.bits == 0:
        raise ValueError("per-family inverters require a != 0; f(0) = 0 trivially")
    return invert(inst, a)[0]


def invert_f1(inst: FamilyInstance, a: FieldElement) -> FieldElement:
    """Preimage under F1 via the conjugate split and linearized solve."""
    return _single(inst, a, FamilyId.F1)


def invert_f2(inst: FamilyInstance, a: FieldElement) -> FieldElement:
    """Preimage under F2 via the zeta/lambda rational form."""
    return _single(inst, a, FamilyId.F2)


def invert_f3(inst: FamilyInstance, a: FieldElement) -> FieldElement:
    """Preimage under F3 via the two-candidate closed form."""
    return _single(inst, a, FamilyId.F3)


def invert_f4(inst: FamilyInstance, a: FieldElement) -> FieldElement:
    """Preimage under F4 via the depressed-cubic candidates."""
    return _single(inst, a, FamilyId.F4)


def invert_f5(inst: FamilyInstance, a: FieldElement) -> FieldElement:
    """Preimage under F5 via the linear closed form."""
    return _single(inst, a, FamilyId.F5)


def invert_f6(inst: FamilyInstance, a: FieldElement) -> FieldElement:
    """Preimage under F6 via the cube-root-of-unity pipeline."""
    return _single(inst, a, FamilyId.F6)
