import random

import numpy as np
import pytest

from selfdist import (InputError, are_mutually_distributive, cyclic_group,
                      heap_op, is_nary_distributive, is_quandle, is_rack,
                      make_op_table, projection_op)
from selfdist.enumeration import (enumerate_affine, enumerate_mutual_pairs,
                                  enumerate_operations, enumerate_racks,
                                  find_isomorphism, isomorphism_classes,
                                  tables_isomorphic)


def flat(op):
    return tuple(int(v) for v in op.table)


# ---------------------------------------------------------------------------
# full scans, frozen against an independent pure-python oracle

def test_binary_size_1():
    assert len(enumerate_operations(1, 2, "all")) == 1
    assert len(enumerate_operations(1, 2, "quandle")) == 1


def test_binary_size_2_lists():
    assert len(enumerate_operations(2, 2, "all")) == 16
    sd = enumerate_operations(2, 2, "sd")
    assert [flat(o) for o in sd] == [
        (0, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0), (0, 0, 1, 1), (0, 1, 0, 1),
        (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 0), (1, 1, 1, 1)]
    assert [flat(o) for o in enumerate_operations(2, 2, "rack")] == [
        (0, 0, 1, 1), (1, 1, 0, 0)]
    assert [flat(o) for o in enumerate_operations(2, 2, "quandle")] == [
        (0, 0, 1, 1)]


def test_binary_size_3_counts():
    sd = enumerate_operations(3, 2, "sd")
    assert len(sd) == 224
    assert flat(sd[0]) == (0,) * 9
    assert flat(sd[-1]) == (2,) * 9
    assert sum(int(o.table.sum()) for o in sd) == 2016
    assert len(enumerate_operations(3, 2, "rack")) == 13
    assert [flat(o) for o in enumerate_operations(3, 2, "quandle")] == [
        (0, 0, 0, 1, 1, 1, 2, 2, 2), (0, 0, 0, 2, 1, 1, 1, 2, 2),
        (0, 0, 1, 1, 1, 0, 2, 2, 2), (0, 2, 0, 1, 1, 1, 2, 0, 2),
        (0, 2, 1, 2, 1, 0, 1, 0, 2)]


def test_ternary_size_2():
    sd = enumerate_operations(2, 3, "sd")
    assert len(sd) == 56
    assert sum(int(o.table.sum()) for o in sd) == 224
    assert [flat(o) for o in enumerate_operations(2, 3, "rack")] == [
        (0, 0, 0, 0, 1, 1, 1, 1), (0, 1, 1, 0, 1, 0, 0, 1),
        (1, 0, 0, 1, 0, 1, 1, 0), (1, 1, 1, 1, 0, 0, 0, 0)]
    quandles = enumerate_operations(2, 3, "quandle")
    assert flat(quandles[0]) == flat(projection_op(2, 3))
    assert flat(quandles[1]) == flat(heap_op(cyclic_group(2)))
    assert len(quandles) == 2


def test_full_scan_members_pass_axiom_checks():
    rng = random.Random(0x51D)
    sd = enumerate_operations(3, 2, "sd")
    for op in rng.sample(sd, 20):
        assert is_nary_distributive(op)
    for op in enumerate_operations(3, 2, "rack"):
        assert is_rack(op)
    for op in enumerate_operations(2, 3, "quandle"):
        assert is_quandle(op)


def test_full_scan_complement_fails():
    # completeness on the smallest shape: everything left out is not SD
    sd = {flat(o) for o in enumerate_operations(2, 2, "sd")}
    for op in enumerate_operations(2, 2, "all"):
        if flat(op) not in sd:
            assert not is_nary_distributive(op)


def test_full_scan_guardrail():
    with pytest.raises(InputError):
        enumerate_operations(4, 2)
    with pytest.raises(InputError):
        enumerate_operations(3, 3)
    with pytest.raises(InputError):
        enumerate_operations(2, 2, kind="proper")


# ---------------------------------------------------------------------------
# affine scans

def test_affine_counts():
    assert len(enumerate_affine(3, 2, "sd")) == 3
    assert len(enumerate_affine(3, 2, "rack")) == 2
    assert len(enumerate_affine(5, 2, "rack")) == 4
    assert len(enumerate_affine(4, 3, "rack")) == 8
    assert len(enumerate_affine(4, 3, "quandle")) == 8


def test_affine_ternary_mod3():
    racks = enumerate_affine(3, 3, "rack")
    assert len(racks) == 6
    assert sum(int(o.table.sum()) for o in racks) == 162
    assert flat(racks[0]) == flat(projection_op(3, 3))
    assert flat(racks[-1]) == (0, 2, 1, 1, 0, 2, 2, 1, 0, 1, 0, 2, 2, 1, 0,
                               0, 2, 1, 2, 1, 0, 0, 2, 1, 1, 0, 2)
    for op in racks:
        assert is_rack(op)


def test_affine_always_sd():
    assert len(enumerate_affine(6, 2, "all")) == len(enumerate_affine(6, 2, "sd")) == 6
    for op in enumerate_affine(6, 2, "sd"):
        assert is_nary_distributive(op)


def test_affine_guardrail():
    with pytest.raises(InputError):
        enumerate_affine(100000, 2)


# ---------------------------------------------------------------------------
# translation-structured scans

def test_rack_scan_matches_full_scan():
    for size, arity in [(2, 2), (3, 2), (2, 3)]:
        struct = [flat(o) for o in enumerate_racks(size, arity)]
        full = [flat(o) for o in enumerate_operations(size, arity, "rack")]
        assert struct == full


def test_rack_scan_ternary_size_3():
    racks = enumerate_racks(3, 3)
    assert len(racks) == 129
    assert sum(int(o.table.sum()) for o in racks) == 3483
    assert flat(racks[0]) == flat(projection_op(3, 3))
    assert flat(racks[-1]) == tuple([2] * 9 + [1] * 9 + [0] * 9)
    rng = random.Random(0x51D)
    for op in rng.sample(racks, 12):
        assert is_rack(op)
    assert len(enumerate_racks(3, 3, "quandle")) == 63


def test_rack_scan_contains_affine_racks():
    racks = {flat(o) for o in enumerate_racks(3, 3)}
    for op in enumerate_affine(3, 3, "rack"):
        assert flat(op) in racks


def test_rack_scan_guardrail():
    with pytest.raises(InputError):
        enumerate_racks(5, 2)
    with pytest.raises(InputError):
        enumerate_racks(3, 4)
    with pytest.raises(InputError):
        enumerate_racks(3, 3, kind="sd")


# ---------------------------------------------------------------------------
# mutually distributive pairs

def test_mutual_pairs_size_2():
    pairs = enumerate_mutual_pairs(2)
    assert len(pairs) == 43
    assert sum(int(a.table.sum() + b.table.sum()) for a, b in pairs) == 172
    assert flat(pairs[0][0]) == flat(pairs[0][1]) == (0, 0, 0, 0)
    assert flat(pairs[-1][0]) == flat(pairs[-1][1]) == (1, 1, 1, 1)


def test_mutual_pairs_size_3():
    pairs = enumerate_mutual_pairs(3)
    assert len(pairs) == 4868
    assert sum(int(a.table.sum() + b.table.sum()) for a, b in pairs) == 87624


def test_mutual_pairs_members_verified():
    pairs = enumerate_mutual_pairs(3)
    rng = random.Random(0x51D)
    for a, b in rng.sample(pairs, 8):
        assert is_nary_distributive(a)
        assert is_nary_distributive(b)
        assert are_mutually_distributive(a, b)


def test_mutual_pairs_complement_fails():
    pairs = {(flat(a), flat(b)) for a, b in enumerate_mutual_pairs(2)}
    sd = enumerate_operations(2, 2, "sd")
    for a in sd:
        for b in sd:
            if (flat(a), flat(b)) not in pairs:
                assert not are_mutually_distributive(a, b)


def test_mutual_pairs_diagonal_present():
    pairs = {(flat(a), flat(b)) for a, b in enumerate_mutual_pairs(2)}
    for op in enumerate_operations(2, 2, "sd"):
        assert (flat(op), flat(op)) in pairs


# ---------------------------------------------------------------------------
# isomorphism testing

def test_find_isomorphism_positive():
    a = make_op_table(3, 2, [0, 0, 0, 1, 2, 2, 2, 1, 1])
    b = make_op_table(3, 2, [1, 1, 0, 0, 0, 1, 2, 2, 2])
    assert find_isomorphism(a, b) == (2, 0, 1)
    assert tables_isomorphic(b, a)


def test_functor_order_matters_up_to_isomorphism():
    # the two orderings of (x, 2y - x) on Z_3 feed to different ternary
    # tables that no relabeling identifies
    ta = make_op_table(3, 3, lambda x, y, z: 2 * z - x)
    tb = make_op_table(3, 3, lambda x, y, z: 2 * y - x)
    assert flat(ta) != flat(tb)
    assert not tables_isomorphic(ta, tb)


def test_dihedral_not_trivial():
    dih = make_op_table(3, 2, lambda x, y: 2 * y - x)
    assert not tables_isomorphic(dih, projection_op(3, 2))
    assert tables_isomorphic(dih, dih)


def test_isomorphism_classes_of_small_racks():
    cls = isomorphism_classes(enumerate_operations(3, 2, "rack"))
    assert len(cls) == 6
    assert sorted(len(c) for c in cls) == [1, 1, 2, 3, 3, 3]
    cls_q = isomorphism_classes(enumerate_operations(3, 2, "quandle"))
    assert len(cls_q) == 3


def test_isomorphism_guardrails():
    with pytest.raises(InputError):
        find_isomorphism(projection_op(2, 2), projection_op(2, 3))
    with pytest.raises(InputError):
        find_isomorphism(projection_op(3, 2), projection_op(2, 2))
    with pytest.raises(InputError):
        find_isomorphism(projection_op(9, 2), projection_op(9, 2))
