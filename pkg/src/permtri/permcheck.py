"""Exhaustive bijection verification over F_{2^n}, with diagnostics.

The checker evaluates a map on the entire field, then analyzes the value
table in one deterministic pass: distinct-value count, first collision in
ascending input order, fixed points, and (for permutations) the cycle
type.  Because the analysis always runs over the fully assembled table,
the report is bit-identical no matter how the evaluation work was chunked
across threads.

Maps are given either as a callable on FieldElement or as a precomputed
value table (any integer sequence of length 2^n, e.g. the numpy array from
``families.value_table``).
"""

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .field import FieldElement, FieldSpec

CHECK_DEGREE_LIMIT = 28
TABLE_DEGREE_LIMIT = 20


class BudgetExceededError(Exception):
    """Field too large for the requested exhaustive pass (override with force)."""


class NotAPermutationError(Exception):
    """Cycle structure requested for a non-bijective map."""


@dataclass(frozen=True)
class PermutationReport:
    """Verdict plus diagnostics from one exhaustive pass.

    ``collision_witness`` is the canonical first collision: scanning inputs
    in ascending bit order, the first x2 whose value was already attained,
    paired with that value's first preimage x1.  ``cycle_type`` is present
    only for permutations, as ((length, count), ...) ascending by length.
    """
    is_permutation: bool
    domain_size: int
    missing_count: int
    collision_witness: tuple[FieldElement, FieldElement] | None
    fixed_point_count: int
    cycle_type: tuple[tuple[int, int], ...] | None

    def to_json_dict(self) -> dict:
        return {
            "is_permutation": self.is_permutation,
            "missing_count": self.missing_count,
            "fixed_points": self.fixed_point_count,
            "witness": (None if self.collision_witness is None
                        else [str(x) for x in self.collision_witness]),
            "cycle_type": (None if self.cycle_type is None
                           else [list(pair) for pair in self.cycle_type]),
        }


class InverseTable:
    """Exact preimage map of f: every attained value -> ascending preimages."""

    __slots__ = ("spec", "_map")

    def __init__(self, spec: FieldSpec, mapping: dict[int, tuple[int, ...]]):
        self.spec = spec
        self._map = mapping

    def preimages(self, a) -> tuple[FieldElement, ...]:
        bits = a.bits if isinstance(a, FieldElement) else a
        return tuple(FieldElement(self.spec, x) for x in self._map.get(bits, ()))

    def __getitem__(self, a):
        return self.preimages(a)

    def __contains__(self, a):
        bits = a.bits if isinstance(a, FieldElement) else a
        return bits in self._map

    def __len__(self):
        return len(self._map)

    @property
    def all_singletons(self) -> bool:
        return all(len(v) == 1 for v in self._map.values())

    def attained(self):
        return self._map.keys()


def _as_values(f, spec: FieldSpec, threads: int = 1):
    """Normalize callable-or-table input to a full value table."""
    if callable(f):
        return evaluate_map(f, spec, threads=threads)
    values = np.asarray(f, dtype=np.uint32)
    if values.shape != (spec.order,):
        raise ValueError(f"value table must have length 2^{spec.n}")
    return values


def evaluate_map(f, spec: FieldSpec, threads: int = 1):
    """Evaluate a FieldElement callable over the whole field, in input order."""
    size = spec.order

    def chunk(lo: int, hi: int):
        elem = spec.element
        return np.fromiter((f(elem(x)).bits for x in range(lo, hi)),
                           dtype=np.uint32, count=hi - lo)

    if threads <= 1:
        return chunk(0, size)
    from concurrent.futures import ThreadPoolExecutor
    bounds = [(i * size // threads, (i + 1) * size // threads) for i in range(threads)]
    bounds = [(lo, hi) for lo, hi in bounds if hi > lo]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        chunks = list(pool.map(lambda b: chunk(*b), bounds))
    return np.concatenate(chunks)


def _first_collision(values) -> tuple[int, int] | None:
    # Stable argsort groups equal values with their original indices
    # ascending; the canonical witness's x2 is the smallest second
    # occurrence over all groups, and the entry just before it in the
    # sorted order is that group's first occurrence.
    order = np.argsort(values, kind="stable")
    sv = values[order]
    dup = np.nonzero(sv[1:] == sv[:-1])[0]
    if dup.size == 0:
        return None
    seconds = order[dup + 1]
    best = int(np.argmin(seconds))
    return int(order[dup[best]]), int(seconds[best])


def check(f, spec: FieldSpec, *, threads: int = 1, force: bool = False) -> PermutationReport:
    """Exhaustively decide whether f permutes F_{2^n}.

    ``f`` is a callable on FieldElement or a precomputed value table.
    Fields beyond n = 28 are refused unless ``force`` is set.
    """
    if spec.n > CHECK_DEGREE_LIMIT and not force:
        raise BudgetExceededError(
            f"exhaustive check over 2^{spec.n} points exceeds the n <= "
            f"{CHECK_DEGREE_LIMIT} budget (pass force to override)")
    values = _as_values(f, spec, threads=threads)
    witness_bits = _first_collision(values)
    missing = int(values.size - np.unique(values).size)
    fixed = int(np.count_nonzero(values == np.arange(values.size, dtype=np.uint32)))
    is_perm = witness_bits is None
    assert is_perm == (missing == 0)
    cycle_type = _cycle_type_of_table(values) if is_perm else None
    witness = None
    if witness_bits is not None:
        witness = (spec.element(witness_bits[0]), spec.element(witness_bits[1]))
    return PermutationReport(
        is_permutation=is_perm,
        domain_size=int(values.size),
        missing_count=missing,
        collision_witness=witness,
        fixed_point_count=fixed,
        cycle_type=cycle_type,
    )


def _cycle_type_of_table(values) -> tuple[tuple[int, int], ...]:
    table = values.tolist()
    size = len(table)
    seen = bytearray(size)
    counts: Counter[int] = Counter()
    for start in range(size):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = 1
            x = table[x]
            length += 1
        counts[length] += 1
    return tuple(sorted(counts.items()))


def inverse_table(f, spec: FieldSpec, *, threads: int = 1, force: bool = False) -> InverseTable:
    """Exact preimage map from one exhaustive pass (n <= 20 unless forced)."""
    if spec.n > TABLE_DEGREE_LIMIT and not force:
        raise BudgetExceededError(
            f"inverse table over 2^{spec.n} points exceeds the n <= "
            f"{TABLE_DEGREE_LIMIT} budget (pass force to override)")
    values = _as_values(f, spec, threads=threads)
    mapping: dict[int, list[int]] = {}
    for x, v in enumerate(values.tolist()):
        mapping.setdefault(v, []).append(x)
    return InverseTable(spec, {v: tuple(xs) for v, xs in mapping.items()})


def quick_reject(f, spec: FieldSpec, sample_count: int, seed: int):
    """Probabilistic collision hunt on seeded pseudo-random inputs.

    Returns a witness pair (x1, x2) with f(x1) = f(x2), x1 != x2 if one is
    found among the samples, else None.  None proves nothing; a witness is
    always genuine.  Same seed, same f: identical outcome.
    """
    import random
    if sample_count < 1:
        raise ValueError("sample_count must be >= 1")
    rng = random.Random(seed)
    xs = rng.sample(range(spec.order), min(sample_count, spec.order))
    seen: dict[int, int] = {}
    for x in xs:
        v = f(spec.element(x)).bits
        prev = seen.get(v)
        if prev is not None and prev != x:
            return spec.element(prev), spec.element(x)
        seen[v] = x
    return None


def sample_points(spec: FieldSpec, sample_count: int, seed: int) -> list[int]:
    """The input sample quick_reject draws for this seed (shared with search)."""
    import random
    if sample_count < 1:
        raise ValueError("sample_count must be >= 1")
    rng = random.Random(seed)
    return rng.sample(range(spec.order), min(sample_count, spec.order))


def cycle_structure(f, spec: FieldSpec, *, force: bool = False) -> tuple[tuple[int, int], ...]:
    """Cycle type of a permutation as ((length, count), ...), ascending.

    Raises NotAPermutationError if f does not permute the field.
    """
    if spec.n > CHECK_DEGREE_LIMIT and not force:
        raise BudgetExceededError(
            f"cycle walk over 2^{spec.n} points exceeds the n <= "
            f"{CHECK_DEGREE_LIMIT} budget (pass force to override)")
    values = _as_values(f, spec)
    if np.unique(values).size != values.size:
        raise NotAPermutationError("map is not a bijection")
    return _cycle_type_of_table(values)
