import random

import numpy as np
import pytest

from selfdist import (FiniteGroup, InputError, OpTable, are_compatible_ternary,
                      are_mutually_distributive, cyclic_group, dihedral_group,
                      evaluate, exchange_holds, group_from_cayley,
                      heap_vs_core_directional, inverse_translations,
                      is_nary_distributive, is_quandle, is_rack, make_op_table,
                      relabel, symmetric_group)

DIHEDRAL3 = [0, 2, 1, 2, 1, 0, 1, 0, 2]  # x*y = 2y-x mod 3


def z8_ternary():
    return make_op_table(8, 3, lambda x, y, z: 3 * x + 2 * y + 4 * z)


def test_make_op_table_validation():
    with pytest.raises(InputError):
        make_op_table(2, 2, [0, 1, 1])          # length 3 != 4
    with pytest.raises(InputError):
        make_op_table(2, 2, [0, 1, 1, 2])       # entry out of range
    with pytest.raises(InputError):
        OpTable(2, 1, [0, 1])                   # arity below 2
    assert make_op_table(1, 3, [0]).size == 1


def test_index_convention_first_argument_most_significant():
    rng = random.Random(2)
    entries = [rng.randrange(3) for _ in range(9)]
    op = make_op_table(3, 2, entries)
    for a in range(3):
        for b in range(3):
            assert evaluate(op, (a, b)) == entries[3 * a + b]
    # callable fill walks tuples in the same order
    fn = make_op_table(2, 3, lambda x, y, z: x + z)
    for x in range(2):
        for y in range(2):
            for z in range(2):
                assert fn.table[4 * x + 2 * y + z] == (x + z) % 2


def test_evaluate_examples():
    assert evaluate(z8_ternary(), (1, 2, 3)) == 3
    heap3 = make_op_table(3, 3, lambda x, y, z: x - y + z)
    assert evaluate(heap3, (1, 2, 0)) == 2
    one = make_op_table(1, 3, [0])
    assert evaluate(one, (0, 0, 0)) == 0


def test_evaluate_errors():
    op = make_op_table(2, 2, [0, 0, 1, 1])
    with pytest.raises(InputError):
        evaluate(op, (0,))
    with pytest.raises(InputError):
        evaluate(op, (0, 2))


def test_distributive_z8_affine():
    assert is_nary_distributive(z8_ternary())


def test_distributive_projection_all_arities():
    for size in (1, 2, 3, 4):
        for arity in (2, 3, 4):
            table = np.repeat(np.arange(size), size ** (arity - 1))
            assert is_nary_distributive(OpTable(size, arity, table))


def test_distributive_counterexample_frozen():
    res = is_nary_distributive(make_op_table(3, 2, lambda x, y: x + y))
    assert not res
    assert res.counterexample.witness == (0, 0, 1)
    assert res.counterexample.lhs == 1
    assert res.counterexample.rhs == 2


def test_counterexample_reevaluates():
    rng = random.Random(7)
    found = 0
    while found < 12:
        size = rng.randrange(2, 5)
        arity = rng.choice((2, 3))
        table = make_op_table(size, arity,
                              [rng.randrange(size) for _ in range(size ** arity)])
        res = is_nary_distributive(table)
        if res:
            continue
        found += 1
        cex = res.counterexample
        x, rest = cex.witness[0], cex.witness[1:]
        y, z = rest[:arity - 1], rest[arity - 1:]
        lhs = evaluate(table, (evaluate(table, (x,) + y),) + z)
        rhs = evaluate(table, (evaluate(table, (x,) + z),)
                       + tuple(evaluate(table, (yj,) + z) for yj in y))
        assert (lhs, rhs) == (cex.lhs, cex.rhs)
        assert lhs != rhs


def test_counterexample_is_lexicographically_first():
    rng = random.Random(19)
    for _ in range(60):
        size = rng.randrange(2, 4)
        arity = rng.choice((2, 3))
        table = make_op_table(size, arity,
                              [rng.randrange(size) for _ in range(size ** arity)])
        res = is_nary_distributive(table)
        if res:
            continue
        # naive scan must find the same tuple first
        import itertools
        for tup in itertools.product(range(size), repeat=2 * arity - 1):
            x, y, z = tup[0], tup[1:arity], tup[arity:]
            lhs = evaluate(table, (evaluate(table, (x,) + y),) + z)
            rhs = evaluate(table, (evaluate(table, (x,) + z),)
                           + tuple(evaluate(table, (yj,) + z) for yj in y))
            if lhs != rhs:
                assert tup == res.counterexample.witness
                break


def test_is_rack():
    assert is_rack(make_op_table(3, 2, DIHEDRAL3))
    assert is_rack(z8_ternary())
    res = is_rack(make_op_table(4, 2, lambda x, y: 2 * y))
    assert not res


def test_is_quandle():
    assert is_quandle(make_op_table(3, 2, DIHEDRAL3))
    assert is_quandle(z8_ternary())  # 3+2+4 = 9 = 1 mod 8
    shifted = make_op_table(2, 2, lambda x, y: x + 1)
    assert is_rack(shifted)
    res = is_quandle(shifted)
    assert not res
    assert res.counterexample.witness == (0, 0)
    assert res.counterexample.lhs == 1 and res.counterexample.rhs == 0


def test_mutual_product_pair():
    d = make_op_table(3, 2, DIHEDRAL3)
    op0 = make_op_table(9, 2, lambda a, b: (evaluate(d, (a // 3, b // 3))) * 3 + a % 3)
    op1 = make_op_table(9, 2, lambda a, b: (a // 3) * 3 + evaluate(d, (a % 3, b % 3)))
    assert are_mutually_distributive(op0, op1)


def test_mutual_power_pair_dihedral_z5():
    d = make_op_table(5, 2, lambda x, y: 2 * y - x)
    d2 = make_op_table(5, 2, lambda x, y: evaluate(d, (evaluate(d, (x, y)), y)))
    assert are_mutually_distributive(d, d2)


def test_mutual_self_reduces_to_distributivity():
    rng = random.Random(11)
    for _ in range(40):
        size = rng.randrange(2, 4)
        arity = rng.choice((2, 3))
        table = make_op_table(size, arity,
                              [rng.randrange(size) for _ in range(size ** arity)])
        mu = are_mutually_distributive(table, table)
        sd = is_nary_distributive(table)
        assert bool(mu) == bool(sd)
        if not mu:
            assert mu.counterexample == sd.counterexample


def test_mutual_size_mismatch():
    with pytest.raises(InputError):
        are_mutually_distributive(make_op_table(2, 2, [0] * 4),
                                  make_op_table(3, 2, [0] * 9))


def test_compatible_z8_pair():
    T1 = make_op_table(8, 3, lambda x, y, z: -x + 2 * y)
    assert are_compatible_ternary(z8_ternary(), T1)


def test_compatible_self_reduces_to_distributivity():
    rng = random.Random(13)
    for _ in range(30):
        size = rng.randrange(2, 4)
        table = make_op_table(size, 3,
                              [rng.randrange(size) for _ in range(size ** 3)])
        assert bool(are_compatible_ternary(table, table)) == \
            bool(is_nary_distributive(table))


def test_compatible_failure_frozen():
    A = make_op_table(4, 3, lambda x, y, z: 0 * x + 1 * y + 0 * z)  # (t,s)=(0,1)
    B = make_op_table(4, 3, lambda x, y, z: 0 * x + 3 * y + 2 * z)  # (t,s)=(0,3)
    res = are_compatible_ternary(A, B)
    assert not res
    assert res.counterexample.witness == (0, 0, 0, 0, 1)
    assert (res.counterexample.lhs, res.counterexample.rhs) == (2, 0)
    assert "identity 2" in res.detail


def test_compatible_arity_errors():
    with pytest.raises(InputError):
        are_compatible_ternary(make_op_table(2, 2, [0] * 4),
                               make_op_table(2, 3, [0] * 8))


def test_heap_vs_core_directions():
    assert heap_vs_core_directional(symmetric_group(3)) == (True, False)
    assert heap_vs_core_directional(cyclic_group(1)) == (True, True)
    assert heap_vs_core_directional(cyclic_group(2)) == (True, True)
    assert heap_vs_core_directional(cyclic_group(4)) == (True, True)


def test_relabel_preserves_axioms():
    rng = random.Random(23)
    d = make_op_table(3, 2, DIHEDRAL3)
    t8 = z8_ternary()
    for op in (d, t8):
        perm = list(range(op.size))
        rng.shuffle(perm)
        moved = relabel(op, perm)
        assert is_nary_distributive(moved)
        assert is_quandle(moved)
    # non-distributive tables stay non-distributive under relabeling
    bad = make_op_table(3, 2, lambda x, y: x + y)
    perm = [2, 0, 1]
    assert not is_nary_distributive(relabel(bad, perm))


def test_relabel_formula():
    op = make_op_table(3, 2, DIHEDRAL3)
    perm = [1, 2, 0]
    moved = relabel(op, perm)
    for a in range(3):
        for b in range(3):
            assert evaluate(moved, (perm[a], perm[b])) == perm[evaluate(op, (a, b))]


def test_inverse_translations_roundtrip():
    op = z8_ternary()
    inv = inverse_translations(op)
    inner = op.table.reshape(8, 64)
    for tail in range(64):
        assert np.array_equal(inner[inv[tail], tail], np.arange(8))
    with pytest.raises(InputError):
        inverse_translations(make_op_table(4, 2, lambda x, y: 2 * y))


def test_exchange_jobs_independent():
    table = make_op_table(5, 2, lambda x, y: x + y)  # fails in many places
    results = [is_nary_distributive(table, jobs=j) for j in (1, 2, 3, 4)]
    for res in results[1:]:
        assert res.counterexample == results[0].counterexample


def test_group_validation():
    g = symmetric_group(3)
    assert g.size == 6
    assert g.mul(g.inv(4), 4) == g.identity
    assert dihedral_group(4).size == 8
    with pytest.raises(InputError):
        group_from_cayley([0, 1, 1, 1], size=2)    # 1 has no inverse
    with pytest.raises(InputError):
        group_from_cayley([1, 0, 0, 0], size=2)    # no identity row/col pair
    with pytest.raises(InputError):
        group_from_cayley([0, 1, 2, 3], size=2)    # out of range


def test_group_product_convention():
    # "a then b": with a=(0,2,1) (index 1) and b=(1,0,2) (index 2),
    # r(i) = b(a(i)) gives (1,2,0), index 3
    g = symmetric_group(3)
    assert g.mul(1, 2) == 3


def test_json_roundtrip():
    op = z8_ternary()
    again = OpTable.from_json(op.as_json())
    assert again == op
    g = symmetric_group(3)
    g2 = FiniteGroup.from_json(g.as_json())
    assert np.array_equal(g2.cayley, g.cayley)
    assert g2.identity == g.identity
    with pytest.raises(InputError):
        OpTable.from_json({"size": 2, "arity": 2})
    with pytest.raises(InputError):
        FiniteGroup.from_json({"size": 2})


def test_exchange_holds_is_directional():
    # shift distributes over the dihedral one way round only
    d = make_op_table(3, 2, DIHEDRAL3)
    shift = make_op_table(3, 2, lambda x, y: x + 1)
    assert exchange_holds(d, shift)
    assert not exchange_holds(shift, d)
    assert not are_mutually_distributive(d, shift)
