import random

import numpy as np
import pytest

from permtri.families import enumerate_instances, instantiate, value_table
from permtri.field import FieldSpec, default_spec, irreducibles
from permtri.inverter import invert
from permtri.permcheck import (
    BudgetExceededError,
    NotAPermutationError,
    check,
    cycle_structure,
    inverse_table,
    quick_reject,
)

F8 = default_spec(3)


def artin_schreier(e):
    return e * e + e


class TestCheck:
    def test_identity(self):
        rep = check(lambda e: e, F8)
        assert rep.is_permutation
        assert rep.domain_size == 8
        assert rep.missing_count == 0
        assert rep.collision_witness is None
        assert rep.fixed_point_count == 8
        assert rep.cycle_type == ((1, 8),)

    def test_artin_schreier_two_to_one(self):
        rep = check(artin_schreier, F8)
        assert not rep.is_permutation
        assert rep.missing_count == 4
        x1, x2 = rep.collision_witness
        assert (x1.bits, x2.bits) == (0, 1)
        assert artin_schreier(x1) == artin_schreier(x2)
        assert rep.cycle_type is None

    def test_family_f1_k1_permutes(self):
        inst = instantiate("F1", k=1)
        rep = check(value_table(inst), inst.spec)
        assert rep.is_permutation

    def test_canonical_witness_multiple_groups(self):
        spec = default_spec(2)
        # values: 3 first seen at 0; 2 first seen at 1, repeated at 2
        rep = check([3, 2, 2, 3], spec)
        assert rep.collision_witness is not None
        assert tuple(x.bits for x in rep.collision_witness) == (1, 2)
        rep2 = check([3, 2, 3, 2], spec)
        assert tuple(x.bits for x in rep2.collision_witness) == (0, 2)

    def test_thread_count_never_changes_report(self):
        inst = instantiate("F6", m=2, k=3)
        baseline = check(value_table(inst, threads=1), inst.spec)
        for threads in (2, 3, 8):
            assert check(value_table(inst, threads=threads), inst.spec) == baseline
        rng = random.Random(5)
        table = [rng.randrange(64) for _ in range(64)]
        spec6 = default_spec(6)
        base = check(lambda e, t=table: spec6.element(t[e.bits]), spec6, threads=1)
        for threads in (2, 5):
            got = check(lambda e, t=table: spec6.element(t[e.bits]), spec6,
                        threads=threads)
            assert got == base

    def test_budget_guard(self):
        big = FieldSpec(29)
        with pytest.raises(BudgetExceededError):
            check(lambda e: e, big)

    def test_json_schema(self):
        rep = check(artin_schreier, F8)
        d = rep.to_json_dict()
        assert list(d) == ["is_permutation", "missing_count", "fixed_points",
                           "witness", "cycle_type"]
        assert d["witness"] == ["0x0", "0x1"]
        assert d["cycle_type"] is None

    def test_table_length_validated(self):
        with pytest.raises(ValueError):
            check([0, 1, 2], F8)


class TestInverseTable:
    def test_identity(self):
        table = inverse_table(lambda e: e, F8)
        for a in F8.elements():
            assert table.preimages(a) == (a,)

    def test_squaring(self):
        table = inverse_table(lambda e: e * e, F8)
        for a in F8.elements():
            assert table.preimages(a) == (a.sqrt(),)

    def test_preimage_sets_partition_domain(self):
        table = inverse_table(artin_schreier, F8)
        seen = []
        for v in table.attained():
            seen.extend(x.bits for x in table.preimages(v))
        assert sorted(seen) == list(range(8))
        assert not table.all_singletons

    def test_f1_matches_inverter_pointwise(self):
        inst = instantiate("F1", k=1)
        table = inverse_table(value_table(inst), inst.spec)
        assert table.all_singletons
        for a in inst.spec.elements():
            assert table.preimages(a) == (invert(inst, a)[0],)

    def test_singletons_iff_permutation(self):
        for inst in enumerate_instances(12):
            vt = value_table(inst)
            assert check(vt, inst.spec).is_permutation == \
                inverse_table(vt, inst.spec).all_singletons
        rng = random.Random(11)
        spec = default_spec(6)
        for _ in range(50):
            table = [rng.randrange(64) for _ in range(64)]
            arr = np.array(table, dtype=np.uint32)
            assert check(arr, spec).is_permutation == \
                inverse_table(arr, spec).all_singletons

    def test_budget_guard(self):
        with pytest.raises(BudgetExceededError):
            inverse_table(lambda e: e, FieldSpec(21))


class TestQuickReject:
    def test_finds_collision_in_two_to_one_map(self):
        witness = quick_reject(artin_schreier, F8, 8, seed=123)
        assert witness is not None
        x1, x2 = witness
        assert x1 != x2 and artin_schreier(x1) == artin_schreier(x2)

    def test_identity_never_rejected(self):
        for seed in range(20):
            assert quick_reject(lambda e: e, F8, 8, seed=seed) is None

    def test_deterministic(self):
        for seed in (0, 1, 99):
            a = quick_reject(artin_schreier, F8, 6, seed=seed)
            b = quick_reject(artin_schreier, F8, 6, seed=seed)
            assert a == b

    def test_no_false_witnesses(self):
        rng = random.Random(13)
        spec = default_spec(6)
        for trial in range(20):
            table = [rng.randrange(64) for _ in range(64)]
            w = quick_reject(lambda e, t=table: spec.element(t[e.bits]),
                             spec, 32, seed=trial)
            if w is not None:
                arr = np.array(table, dtype=np.uint32)
                assert not check(arr, spec).is_permutation

    def test_sample_count_validated(self):
        with pytest.raises(ValueError):
            quick_reject(lambda e: e, F8, 0, seed=1)


class TestCycleStructure:
    def test_identity(self):
        assert cycle_structure(lambda e: e, F8) == ((1, 8),)

    def test_frobenius_on_f4(self):
        spec = default_spec(2)
        assert cycle_structure(lambda e: e * e, spec) == ((1, 2), (2, 1))

    def test_matches_report_and_reruns_identical(self):
        inst = instantiate("F1", k=1)
        vt = value_table(inst)
        rep = check(vt, inst.spec)
        ct = cycle_structure(vt, inst.spec)
        assert ct == rep.cycle_type == cycle_structure(vt, inst.spec)
        assert sum(length * count for length, count in ct) == 8

    def test_rejects_non_permutation(self):
        with pytest.raises(NotAPermutationError):
            cycle_structure(artin_schreier, F8)

    def test_cycle_lengths_sum_to_domain(self):
        for inst in enumerate_instances(10):
            ct = cycle_structure(value_table(inst), inst.spec)
            assert sum(length * count for length, count in ct) == inst.spec.order


class TestModulusIndependence:
    def test_verdicts_agree_across_moduli(self):
        for inst in enumerate_instances(10):
            n = inst.n
            if n == 2:
                continue   # x^2+x+1 is the only irreducible quadratic
            first_two = []
            for modulus in irreducibles(n):
                first_two.append(modulus)
                if len(first_two) == 2:
                    break
            verdicts = []
            for modulus in first_two:
                alt = instantiate(inst.family, inst.params, FieldSpec(n, modulus))
                verdicts.append(check(value_table(alt), alt.spec).is_permutation)
            assert verdicts[0] == verdicts[1] is True
