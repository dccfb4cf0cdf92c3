"""Finite n-ary operation tables and the axiom checks on them.

An operation W of arity k on the carrier {0..N-1} is stored as a flat table of
length N^k.  The argument tuple (a_1, ..., a_k) lives at index
sum_i a_i * N^(k-i), so the first argument is the most significant digit.
That convention is fixed across the whole package: product carriers encode the
pair (a, b) as a*|second factor|+b, and matrix row orderings inherit it.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import kernels


class InputError(ValueError):
    """Malformed input: wrong shapes, out-of-range entries, bad arguments."""


@dataclass(frozen=True)
class Counterexample:
    """A witness tuple at which a checked identity fails, with both side values."""
    witness: tuple
    lhs: int
    rhs: int


@dataclass(frozen=True)
class CheckResult:
    """Boolean verdict plus an optional counterexample and failure detail.

    Truthy exactly when the checked property holds, so results can be used
    directly in conditions while still carrying the witness.
    """
    holds: bool
    counterexample: Counterexample | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds


OK = CheckResult(True)


class OpTable:
    """Immutable n-ary operation table on {0..N-1}."""

    __slots__ = ("size", "arity", "table", "meta")

    def __init__(self, size: int, arity: int, table, meta: dict | None = None):
        if size < 1:
            raise InputError(f"size must be positive, got {size}")
        if arity < 2:
            raise InputError(f"arity must be at least 2, got {arity}")
        arr = np.ascontiguousarray(table, dtype=np.int64).ravel()
        if arr.shape[0] != size ** arity:
            raise InputError(
                f"table length {arr.shape[0]} != size^arity = {size}^{arity}"
                f" = {size ** arity}")
        if arr.size and (arr.min() < 0 or arr.max() >= size):
            bad = int(np.flatnonzero((arr < 0) | (arr >= size))[0])
            raise InputError(
                f"table entry {int(arr[bad])} at index {bad} outside 0..{size - 1}")
        arr.setflags(write=False)
        object.__setattr__(self, "size", int(size))
        object.__setattr__(self, "arity", int(arity))
        object.__setattr__(self, "table", arr)
        object.__setattr__(self, "meta", dict(meta or {}))

    def __setattr__(self, name, value):
        raise AttributeError("OpTable is immutable")

    def __eq__(self, other):
        return (isinstance(other, OpTable) and self.size == other.size
                and self.arity == other.arity
                and bool(np.array_equal(self.table, other.table)))

    def __hash__(self):
        return hash((self.size, self.arity, self.table.tobytes()))

    def __repr__(self):
        return f"OpTable(size={self.size}, arity={self.arity})"

    def as_json(self) -> dict:
        out = {"size": self.size, "arity": self.arity,
               "table": [int(v) for v in self.table]}
        if self.meta:
            out["provenance"] = dict(self.meta)
        return out

    @staticmethod
    def from_json(obj: dict) -> "OpTable":
        try:
            size = obj["size"]
            arity = obj["arity"]
            table = obj["table"]
        except (KeyError, TypeError) as exc:
            raise InputError(f"operation table JSON needs size/arity/table: {exc}")
        return OpTable(size, arity, table, meta=obj.get("provenance"))


def tuple_to_index(args, size: int) -> int:
    idx = 0
    for a in args:
        idx = idx * size + int(a)
    return idx


def index_to_tuple(index: int, size: int, arity: int) -> tuple:
    digits = []
    for _ in range(arity):
        digits.append(index % size)
        index //= size
    return tuple(reversed(digits))


def make_op_table(size: int, arity: int, entries) -> OpTable:
    """Build a validated table from a flat sequence or a callable on tuples.

    A callable receives one argument tuple per carrier point and must return a
    carrier element; values are reduced mod size so formula lambdas can return
    raw integers.
    """
    if callable(entries):
        flat = np.fromiter(
            (entries(*args) % size
             for args in itertools.product(range(size), repeat=arity)),
            dtype=np.int64, count=size ** arity)
        return OpTable(size, arity, flat)
    return OpTable(size, arity, entries)


def evaluate(op: OpTable, args) -> int:
    """Table lookup at an argument tuple."""
    args = tuple(int(a) for a in args)
    if len(args) != op.arity:
        raise InputError(f"expected {op.arity} arguments, got {len(args)}")
    for a in args:
        if not 0 <= a < op.size:
            raise InputError(f"argument {a} outside 0..{op.size - 1}")
    return int(op.table[tuple_to_index(args, op.size)])


def _decode_exchange_witness(op_m: OpTable, op_n: OpTable, flat: int):
    """Turn a flat exchange-scan failure index into a Counterexample."""
    N = op_m.size
    m, n = op_m.arity, op_n.arity
    Pm, Pn = N ** (m - 1), N ** (n - 1)
    zi = flat % Pn
    rest = flat // Pn
    yi = rest % Pm
    x = rest // Pm
    y = index_to_tuple(yi, N, m - 1)
    z = index_to_tuple(zi, N, n - 1)
    a = int(op_m.table[x * Pm + yi])
    lhs = int(op_n.table[a * Pn + zi])
    idx = int(op_n.table[x * Pn + zi])
    for yj in y:
        idx = idx * N + int(op_n.table[yj * Pn + zi])
    rhs = int(op_m.table[idx])
    return Counterexample((x,) + y + z, lhs, rhs)


def exchange_holds(op_m: OpTable, op_n: OpTable, jobs: int = 1) -> CheckResult:
    """One direction of the exchange law: op_n distributes over op_m.

    Checks op_n(op_m(x, y), z) == op_m(op_n(x, z), op_n(y_1, z), ...) for all
    x in X, y in X^(m-1), z in X^(n-1).
    """
    if op_m.size != op_n.size:
        raise InputError(f"size mismatch: {op_m.size} vs {op_n.size}")
    flat = kernels.exchange_scan(op_m.table, op_n.table, op_m.size,
                                 op_m.arity, op_n.arity, jobs=jobs)
    if flat < 0:
        return OK
    cex = _decode_exchange_witness(op_m, op_n, flat)
    return CheckResult(False, cex, "exchange law fails")


def is_nary_distributive(op: OpTable, jobs: int = 1) -> CheckResult:
    """Right self-distributivity over all N^(2k-1) argument tuples.

    On failure the counterexample is the lexicographically first failing tuple
    (x, y_1..y_{k-1}, z_1..z_{k-1}).
    """
    res = exchange_holds(op, op, jobs=jobs)
    if res:
        return res
    return CheckResult(False, res.counterexample, "self-distributivity fails")


def is_rack(op: OpTable, jobs: int = 1) -> CheckResult:
    """Self-distributive with every translation x -> W(x, tail) a bijection."""
    sd = is_nary_distributive(op, jobs=jobs)
    if not sd:
        return sd
    t = kernels.translation_scan(op.table, op.size, op.arity)
    if t < 0:
        return OK
    tail = index_to_tuple(t, op.size, op.arity - 1)
    return CheckResult(False, None,
                       f"translation by tail {tail} is not a bijection")


def is_quandle(op: OpTable, jobs: int = 1) -> CheckResult:
    """Rack whose full diagonal is fixed: W(x, x, ..., x) == x for all x."""
    rk = is_rack(op, jobs=jobs)
    if not rk:
        return rk
    N, k = op.size, op.arity
    diag_idx = np.arange(N) * ((N ** k - 1) // (N - 1)) if N > 1 else np.zeros(1, np.int64)
    diag = op.table[diag_idx.astype(np.int64)]
    bad = np.flatnonzero(diag != np.arange(N) if N > 1 else diag != 0)
    if bad.size == 0:
        return OK
    x = int(bad[0])
    cex = Counterexample((x,) * k, int(diag[x]), x)
    return CheckResult(False, cex, "diagonal is not fixed")


def are_mutually_distributive(op_a: OpTable, op_b: OpTable,
                              jobs: int = 1) -> CheckResult:
    """Both directions of the exchange law between two operations.

    Only the two exchange identities are checked; each operation's own
    self-distributivity is a separate question.
    """
    if op_a.size != op_b.size:
        raise InputError(f"size mismatch: {op_a.size} vs {op_b.size}")
    first = exchange_holds(op_a, op_b, jobs=jobs)
    if not first:
        return CheckResult(False, first.counterexample,
                           "second operation fails to distribute over the first")
    second = exchange_holds(op_b, op_a, jobs=jobs)
    if not second:
        return CheckResult(False, second.counterexample,
                           "first operation fails to distribute over the second")
    return OK


def _decode_compat_witness(T0: OpTable, T1: OpTable, flat: int, which: int):
    N = T0.size
    x, y0, y1, z0, z1 = index_to_tuple(flat, N, 5)
    A = T0.table.reshape(N, N, N)
    B = T1.table.reshape(N, N, N)
    T = A if which == 1 else B
    lhs = int(T[T[x, y0, y1], z0, z1])
    rhs = int(T[T[x, z0, z1], A[y0, z0, z1], B[y1, z0, z1]])
    return Counterexample((x, y0, y1, z0, z1), lhs, rhs)


def are_compatible_ternary(T0: OpTable, T1: OpTable, jobs: int = 1) -> CheckResult:
    """Both ternary compatibility identities over all N^5 tuples.

    Identity 1 distributes T0-translations over T0, feeding the third slot
    through T1; identity 2 does the same with the roles of T0 and T1 swapped.
    """
    if T0.arity != 3 or T1.arity != 3:
        raise InputError("compatibility is defined for ternary operations only")
    if T0.size != T1.size:
        raise InputError(f"size mismatch: {T0.size} vs {T1.size}")
    for which in (1, 2):
        flat = kernels.compat_scan(T0.table, T1.table, T0.size, which)
        if flat >= 0:
            cex = _decode_compat_witness(T0, T1, flat, which)
            return CheckResult(False, cex, f"compatibility identity {which} fails")
    return OK


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its multiplication table, validated on build.

    cayley is flat: the product of a and b sits at index a*size+b.  The product
    convention for permutation groups is "a then b" (left-to-right).
    """
    size: int
    cayley: np.ndarray = field(compare=False)
    inverse: np.ndarray = field(compare=False)
    identity: int

    def mul(self, a: int, b: int) -> int:
        return int(self.cayley[a * self.size + b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def as_json(self) -> dict:
        return {"size": self.size, "cayley": [int(v) for v in self.cayley]}

    @staticmethod
    def from_json(obj: dict) -> "FiniteGroup":
        try:
            return group_from_cayley(obj["cayley"], size=obj.get("size"))
        except (KeyError, TypeError) as exc:
            raise InputError(f"group JSON needs size/cayley: {exc}")


def group_from_cayley(cayley, size: int | None = None) -> FiniteGroup:
    """Validate a flat multiplication table and derive identity and inverses."""
    flat = np.ascontiguousarray(cayley, dtype=np.int64).ravel()
    if size is None:
        size = round(len(flat) ** 0.5)
    size = int(size)
    if flat.shape[0] != size * size:
        raise InputError(f"cayley length {flat.shape[0]} != {size}^2")
    if flat.size and (flat.min() < 0 or flat.max() >= size):
        raise InputError("cayley entry outside the carrier")
    C = flat.reshape(size, size)
    # two-sided identity
    ident = -1
    for e in range(size):
        if np.array_equal(C[e], np.arange(size)) and np.array_equal(C[:, e], np.arange(size)):
            ident = e
            break
    if ident < 0:
        raise InputError("no two-sided identity element")
    # associativity: C[C[a,b],c] == C[a,C[b,c]] via broadcasting
    left = C[C][:, :, :]                      # left[a,b,c] = C[C[a,b],c]
    right = C[:, C].transpose(0, 1, 2)        # right[a,b,c] = C[a,C[b,c]]
    if not np.array_equal(left, right):
        bad = np.argwhere(left != right)[0]
        raise InputError(f"multiplication not associative at {tuple(int(v) for v in bad)}")
    # inverses
    inv = np.full(size, -1, np.int64)
    for a in range(size):
        hits = np.flatnonzero(C[a] == ident)
        if hits.size != 1 or C[int(hits[0]), a] != ident:
            raise InputError(f"element {a} has no two-sided inverse")
        inv[a] = int(hits[0])
    inv.setflags(write=False)
    flat.setflags(write=False)
    return FiniteGroup(size, flat, inv, ident)


def cyclic_group(n: int) -> FiniteGroup:
    C = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    return group_from_cayley(C.ravel(), size=n)


def symmetric_group(n: int) -> FiniteGroup:
    """Permutations of {0..n-1} in lexicographic order, product "a then b"."""
    elems = list(itertools.permutations(range(n)))
    idx = {p: i for i, p in enumerate(elems)}
    m = len(elems)
    C = np.empty((m, m), np.int64)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            C[i, j] = idx[tuple(b[a[t]] for t in range(n))]
    return group_from_cayley(C.ravel(), size=m)


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon; element r^i s^j encoded as 2*i+j."""
    m = 2 * n
    C = np.empty((m, m), np.int64)
    for i1, j1, i2, j2 in itertools.product(range(n), range(2), range(n), range(2)):
        # (r^i1 s^j1)(r^i2 s^j2) = r^(i1 + i2*(-1)^j1) s^(j1+j2)
        i = (i1 + (i2 if j1 == 0 else -i2)) % n
        j = (j1 + j2) % 2
        C[2 * i1 + j1, 2 * i2 + j2] = 2 * i + j
    return group_from_cayley(C.ravel(), size=m)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    n = g.size * h.size
    C = np.empty((n, n), np.int64)
    for a0, a1, b0, b1 in itertools.product(
            range(g.size), range(h.size), range(g.size), range(h.size)):
        C[a0 * h.size + a1, b0 * h.size + b1] = \
            g.mul(a0, b0) * h.size + h.mul(a1, b1)
    return group_from_cayley(C.ravel(), size=n)


def _core_table(g: FiniteGroup) -> OpTable:
    return make_op_table(g.size, 2, lambda a, b: g.mul(b, g.mul(g.inv(a), b)))


def _heap_table(g: FiniteGroup) -> OpTable:
    return make_op_table(g.size, 3,
                         lambda x, y0, y1: g.mul(g.mul(x, g.inv(y0)), y1))


def heap_vs_core_directional(group: FiniteGroup, jobs: int = 1):
    """The two exchange directions between a group's core and heap operations.

    Returns (heap distributes over core, core distributes over heap); the
    second->first direction fails for every nonabelian group.
    """
    core = _core_table(group)
    heap = _heap_table(group)
    return (bool(exchange_holds(core, heap, jobs=jobs)),
            bool(exchange_holds(heap, core, jobs=jobs)))


def relabel(op: OpTable, perm) -> OpTable:
    """Transport the table along a carrier permutation (old -> new labels)."""
    N, k = op.size, op.arity
    p = np.ascontiguousarray(perm, dtype=np.int64)
    if p.shape != (N,) or not np.array_equal(np.sort(p), np.arange(N)):
        raise InputError("relabeling must be a permutation of the carrier")
    # flat index map: apply p digit-wise
    idx = np.arange(N ** k, dtype=np.int64)
    new_idx = np.zeros_like(idx)
    rem = idx.copy()
    for pos in range(k):
        power = N ** (k - 1 - pos)
        new_idx = new_idx * N + p[rem // power]
        rem %= power
    out = np.empty_like(op.table)
    out[new_idx] = p[op.table]
    return OpTable(N, k, out)


def inverse_translations(op: OpTable) -> np.ndarray:
    """Array inv of shape (N^(k-1), N) with W(inv[tail, v], tail) == v.

    Raises when some translation is not a bijection.
    """
    N, k = op.size, op.arity
    P = N ** (k - 1)
    t = kernels.translation_scan(op.table, N, k)
    if t >= 0:
        tail = index_to_tuple(t, N, k - 1)
        raise InputError(f"translation by tail {tail} is not invertible")
    cols = op.table.reshape(N, P)
    inv = np.empty((P, N), np.int64)
    rows = np.arange(N)
    for tail in range(P):
        inv[tail, cols[:, tail]] = rows
    return inv
