"""GF(2)-linear algebra on a binary field viewed as an n-dimensional F2 space.

A linearized polynomial sum_j c_j x^(2^j) induces an F2-linear map on
F_{2^n}; affine equations L(x) = b therefore reduce to bit-matrix systems.
Matrices are kept bit-packed: an n x n matrix is a tuple of n column ints
(column i = image of the basis monomial X^i), and Gaussian elimination
works on machine-word row XORs with the pivot always taken at the lowest
available index, so kernels and particular solutions are reproducible.
"""

from .field import FieldElement, FieldSpec


class LinearizedPoly:
    """x -> sum of c_j * x^(2^j) with at most one term per 2-power index j.

    Terms are given as (j, coefficient) pairs; duplicate j are merged by
    XOR (characteristic 2) and zero coefficients are dropped, so the stored
    form is canonical.  Indices are reduced mod n since x^(2^n) = x.
    """

    __slots__ = ("spec", "terms")

    def __init__(self, spec: FieldSpec, terms):
        merged: dict[int, int] = {}
        for j, c in terms:
            c_bits = c.bits if isinstance(c, FieldElement) else c
            if not 0 <= c_bits < spec.order:
                raise ValueError(f"coefficient 0x{c_bits:x} out of range for n={spec.n}")
            j %= spec.n
            merged[j] = merged.get(j, 0) ^ c_bits
        self.spec = spec
        self.terms = tuple(sorted((j, c) for j, c in merged.items() if c))

    def __repr__(self):
        body = " + ".join(f"0x{c:x}*x^(2^{j})" for j, c in self.terms) or "0"
        return f"LinearizedPoly({body}, n={self.spec.n})"

    def eval_bits(self, x: int) -> int:
        spec = self.spec
        acc = 0
        for j, c in self.terms:
            acc ^= spec.mul(c, spec.frobenius(x, j))
        return acc

    def __call__(self, x: FieldElement) -> FieldElement:
        if x.spec != self.spec:
            raise ValueError("element bound to a different FieldSpec")
        return FieldElement(self.spec, self.eval_bits(x.bits))


def evaluate(L: LinearizedPoly, x: FieldElement) -> FieldElement:
    """Apply the linearized polynomial to x."""
    return L(x)


class BitMatrix:
    """Square bit matrix over GF(2); column i is the image of X^i."""

    __slots__ = ("spec", "cols")

    def __init__(self, spec: FieldSpec, cols):
        cols = tuple(cols)
        if len(cols) != spec.n:
            raise ValueError(f"expected {spec.n} columns, got {len(cols)}")
        for c in cols:
            if not 0 <= c < spec.order:
                raise ValueError("column out of range")
        self.spec = spec
        self.cols = cols

    def __repr__(self):
        return f"BitMatrix(n={self.spec.n}, cols={[hex(c) for c in self.cols]})"

    def __eq__(self, other):
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.spec == other.spec and self.cols == other.cols

    def apply_bits(self, x: int) -> int:
        acc = 0
        i = 0
        while x:
            if x & 1:
                acc ^= self.cols[i]
            x >>= 1
            i += 1
        return acc

    def apply(self, x: FieldElement) -> FieldElement:
        return FieldElement(self.spec, self.apply_bits(x.bits))

    def rows(self) -> list[int]:
        """Bit-packed rows (row r bit i = entry (r, i)); transpose of cols."""
        n = self.spec.n
        out = [0] * n
        for i, col in enumerate(self.cols):
            r = 0
            while col:
                if col & 1:
                    out[r] |= 1 << i
                col >>= 1
                r += 1
        return out


def matrix_of(L: LinearizedPoly) -> BitMatrix:
    """Matrix of the induced F2-linear map: column i = L(X^i)."""
    spec = L.spec
    cols = [0] * spec.n
    for j, c in L.terms:
        basis = spec.frobenius_basis(j)
        for i in range(spec.n):
            cols[i] ^= spec.mul(c, basis[i])
    return BitMatrix(spec, cols)


class AffineSolutionSet:
    """Solutions of an affine system: particular + span(kernel_basis).

    Empty when ``particular`` is None; otherwise the set has exactly
    2^len(kernel_basis) elements.  Iteration enumerates them in a fixed
    order (subset masks of the basis, ascending), so callers get
    reproducible candidate lists.
    """

    __slots__ = ("spec", "particular", "kernel_basis")

    def __init__(self, spec: FieldSpec, particular: FieldElement | None, kernel_basis):
        self.spec = spec
        self.particular = particular
        self.kernel_basis = tuple(kernel_basis)

    @property
    def is_empty(self) -> bool:
        return self.particular is None

    def __len__(self):
        return 0 if self.particular is None else 1 << len(self.kernel_basis)

    def __iter__(self):
        if self.particular is None:
            return
        base = self.particular.bits
        basis = [v.bits for v in self.kernel_basis]
        for mask in range(1 << len(basis)):
            x = base
            m = mask
            i = 0
            while m:
                if m & 1:
                    x ^= basis[i]
                m >>= 1
                i += 1
            yield FieldElement(self.spec, x)

    def __repr__(self):
        return (f"AffineSolutionSet(particular={self.particular}, "
                f"kernel_dim={len(self.kernel_basis)})")


def _rref(n: int, rows: list[int]) -> tuple[list[int], list[tuple[int, int]]]:
    # In-place reduced row echelon form over the low n columns; any augment
    # bits ride along above bit n-1.  Pivots chosen at the lowest free
    # column, scanning rows top-down: fully deterministic.
    pivots = []
    rank = 0
    for col in range(n):
        bit = 1 << col
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r] & bit:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r] & bit:
                rows[r] ^= prow
        pivots.append((rank, col))
        rank += 1
    return rows, pivots


def _solve_bits(spec: FieldSpec, cols, b: int) -> tuple[int | None, list[int]]:
    n = spec.n
    rows = BitMatrix(spec, cols).rows()
    for r in range(n):
        rows[r] |= ((b >> r) & 1) << n
    rows, pivots = _rref(n, rows)
    var_mask = spec.order - 1
    for r in range(len(pivots), n):
        if rows[r] >> n:           # 0 = 1: inconsistent
            return None, _kernel_from_rref(n, rows, pivots)
    particular = 0
    for r, c in pivots:
        if rows[r] >> n:
            particular |= 1 << c
    return particular, _kernel_from_rref(n, rows, pivots)


def _kernel_from_rref(n: int, rows: list[int], pivots) -> list[int]:
    pivot_cols = {c for _, c in pivots}
    basis = []
    for free in range(n):
        if free in pivot_cols:
            continue
        v = 1 << free
        for r, c in pivots:
            if (rows[r] >> free) & 1:
                v |= 1 << c
        basis.append(v)
    return basis


def solve_affine(L: LinearizedPoly, b: FieldElement) -> AffineSolutionSet:
    """Exact solution set of L(x) = b via Gaussian elimination.

    Returns the empty set when b is not in the image; otherwise a coset of
    ker L with 2^dim(ker) elements.
    """
    if b.spec != L.spec:
        raise ValueError("right-hand side bound to a different FieldSpec")
    spec = L.spec
    particular, kernel_bits = _solve_bits(spec, matrix_of(L).cols, b.bits)
    part = None if particular is None else FieldElement(spec, particular)
    return AffineSolutionSet(spec, part, [FieldElement(spec, v) for v in kernel_bits])


def kernel(M: BitMatrix) -> list[FieldElement]:
    """Basis of the null space of M; empty iff M is invertible."""
    spec = M.spec
    rows, pivots = _rref(spec.n, M.rows())
    return [FieldElement(spec, v) for v in _kernel_from_rref(spec.n, rows, pivots)]
