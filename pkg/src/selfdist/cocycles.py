"""Degree-2 cocycles, abelian extensions, and their passages between arities.

A cochain assigns an element of a finite abelian group to every argument
tuple of an operation's carrier.  Values are stored as residue rows, one
column per cyclic factor, in the same first-argument-most-significant
order as operation tables.  Extensions live on the product carrier with
(x, a) encoded as x * |A| + index(a).

The checks mirror the table-level layer: a single operation has a cocycle
condition, a mutually distributive binary pair has a pair of mixed
conditions, and a compatible ternary pair has a six-variable pair of
conditions.  The second six-variable condition has a printed variant that
feeds the first pair coordinate into the final term; `literal=True`
selects it, the default is the variant under which the binary and ternary
composites below stay cocycles.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from . import kernels
from .homology import _digit_grid, boundary_matrix, solve_mod
from .optable import (CheckResult, Counterexample, InputError, OK, OpTable,
                      are_compatible_ternary, are_mutually_distributive,
                      index_to_tuple, is_nary_distributive, is_rack,
                      tuple_to_index)
from .constructions import (PreconditionError, _require, doubling_binary,
                            doubling_ternary, f_functor, g_functor, power_op)

# full fiber-permutation search refuses above this many candidates
FULL_SEARCH_LIMIT = 300_000


# ---------------------------------------------------------------------------
# coefficient groups

@functools.lru_cache(maxsize=None)
def _residue_table(factors: Tuple[int, ...]) -> np.ndarray:
    """(order, len(factors)) residue rows in index order, read-only."""
    out = np.zeros((int(np.prod(factors, dtype=np.int64)) if factors else 1,
                    len(factors)), dtype=np.int64)
    for i in range(out.shape[0]):
        rem = i
        for j in range(len(factors) - 1, -1, -1):
            out[i, j] = rem % factors[j]
            rem //= factors[j]
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class AbGroup:
    """Finite abelian group as a product of cyclic factors (d_1, ..., d_r).

    Elements are residue tuples; the flat index uses the first factor as
    the most significant digit, matching the carrier conventions.
    """
    factors: Tuple[int, ...]

    def __post_init__(self):
        facs = tuple(int(f) for f in self.factors)
        if any(f < 1 for f in facs):
            raise InputError(f"cyclic factors must be >= 1, got {facs}")
        object.__setattr__(self, "factors", facs)

    @property
    def order(self) -> int:
        out = 1
        for f in self.factors:
            out *= f
        return out

    @property
    def rank(self) -> int:
        return len(self.factors)

    def index(self, residues) -> int:
        if len(residues) != len(self.factors):
            raise InputError(f"element needs {len(self.factors)} residues")
        idx = 0
        for r, f in zip(residues, self.factors):
            idx = idx * f + int(r) % f
        return idx

    def residues(self, index: int) -> tuple:
        if not 0 <= index < self.order:
            raise InputError(f"index {index} outside 0..{self.order - 1}")
        return tuple(int(v) for v in _residue_table(self.factors)[index])

    def residue_table(self) -> np.ndarray:
        return _residue_table(self.factors)

    def reduce(self, arr) -> np.ndarray:
        mods = np.array(self.factors, dtype=np.int64)
        return np.asarray(arr, dtype=np.int64) % mods

    def index_array(self, residue_rows) -> np.ndarray:
        """Flat indices of residue rows with shape (..., rank)."""
        arr = self.reduce(residue_rows)
        idx = np.zeros(arr.shape[:-1], dtype=np.int64)
        for j, f in enumerate(self.factors):
            idx = idx * f + arr[..., j]
        return idx


def coeff_group(coeff) -> AbGroup:
    """Accept an AbGroup, a bare modulus, or a factor sequence."""
    if isinstance(coeff, AbGroup):
        return coeff
    if isinstance(coeff, int):
        return AbGroup((coeff,))
    return AbGroup(tuple(coeff))


# ---------------------------------------------------------------------------
# cochains

class Cochain:
    """Function from argument tuples of a carrier to an abelian group.

    values has shape (size^nargs, rank); `base` optionally remembers the
    operation the cochain belongs to and never takes part in equality.
    """

    __slots__ = ("size", "nargs", "coeff", "values", "base")

    def __init__(self, size: int, nargs: int, coeff, values, base=None):
        coeff = coeff_group(coeff)
        if size < 1 or nargs < 1:
            raise InputError("cochain needs size >= 1 and nargs >= 1")
        arr = np.asarray(values, dtype=np.int64)
        if arr.ndim == 1 and coeff.rank == 1:
            arr = arr[:, None]
        if arr.ndim != 2 or arr.shape[1] != coeff.rank:
            raise InputError(
                f"values must have shape (size^nargs, {coeff.rank})")
        if arr.shape[0] != size ** nargs:
            raise InputError(
                f"values length {arr.shape[0]} != {size}^{nargs}")
        arr = coeff.reduce(arr)
        arr.setflags(write=False)
        object.__setattr__(self, "size", int(size))
        object.__setattr__(self, "nargs", int(nargs))
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "base", base)

    def __setattr__(self, name, value):
        raise AttributeError("Cochain is immutable")

    def __eq__(self, other):
        return (isinstance(other, Cochain) and self.size == other.size
                and self.nargs == other.nargs and self.coeff == other.coeff
                and bool(np.array_equal(self.values, other.values)))

    def __hash__(self):
        return hash((self.size, self.nargs, self.coeff.factors,
                     self.values.tobytes()))

    def __repr__(self):
        return (f"Cochain(size={self.size}, nargs={self.nargs}, "
                f"coeff={self.coeff.factors})")

    def __call__(self, *args) -> tuple:
        idx = tuple_to_index(args, self.size)
        return tuple(int(v) for v in self.values[idx])

    def as_json(self) -> dict:
        return {"nargs": self.nargs,
                "coeff": list(self.coeff.factors),
                "values": [[int(v) for v in row] for row in self.values]}

    @staticmethod
    def from_json(obj: dict) -> "Cochain":
        try:
            nargs = int(obj["nargs"])
            coeff = coeff_group(obj["coeff"])
            values = obj["values"]
        except (KeyError, TypeError, InputError) as exc:
            raise InputError(f"cochain JSON needs nargs/coeff/values: {exc}")
        count = len(values)
        size = round(count ** (1.0 / nargs)) if nargs else 1
        for cand in (size - 1, size, size + 1):
            if cand >= 1 and cand ** nargs == count:
                return Cochain(cand, nargs, coeff, values)
        raise InputError(f"values length {count} is not a {nargs}-th power")


def make_cochain(size: int, nargs: int, coeff, entries, base=None) -> Cochain:
    """Build a cochain from a flat sequence or a callable on argument tuples.

    A callable must return one group element (residue sequence, or a bare
    integer when the group has a single factor)."""
    coeff = coeff_group(coeff)
    if callable(entries):
        rows = []
        for args in itertools.product(range(size), repeat=nargs):
            v = entries(*args)
            rows.append([v] if np.isscalar(v) else list(v))
        return Cochain(size, nargs, coeff, rows, base=base)
    return Cochain(size, nargs, coeff, entries, base=base)


def zero_cochain(size: int, nargs: int, coeff, base=None) -> Cochain:
    coeff = coeff_group(coeff)
    return Cochain(size, nargs, coeff,
                   np.zeros((size ** nargs, coeff.rank), np.int64), base=base)


def is_normalized_cochain(c: Cochain) -> bool:
    """True when the cochain vanishes on every constant tuple (x, ..., x)."""
    step = (c.size ** c.nargs - 1) // (c.size - 1) if c.size > 1 else 1
    diag = c.values[np.arange(c.size) * step]
    return not diag.any()


def _match(op: OpTable, c: Cochain, arity: int, what: str):
    if op.arity != arity:
        raise InputError(f"{what} needs an arity-{arity} operation")
    if c.nargs != arity:
        raise InputError(f"{what} needs a {arity}-argument cochain")
    if c.size != op.size:
        raise InputError(f"cochain carrier {c.size} != operation carrier {op.size}")


def _same_coeff(*cochains):
    first = cochains[0].coeff
    for c in cochains[1:]:
        if c.coeff != first:
            raise InputError("cochains take values in different groups")
    return first


# ---------------------------------------------------------------------------
# cocycle conditions

def _degree2_witness(op, c, flat, factor):
    k = op.arity
    N = op.size
    args = index_to_tuple(flat, N, 2 * k - 1)
    x, ys, zs = args[0], args[1:k], args[k:]
    d = c.coeff.factors[factor]

    def f(*a):
        return int(c.values[tuple_to_index(a, N), factor])

    def w(*a):
        return int(op.table[tuple_to_index(a, N)])

    lhs = f(x, *ys) + f(w(x, *ys), *zs)
    acted = tuple(w(y, *zs) for y in ys)
    rhs = f(x, *zs) + f(w(x, *zs), *acted)
    return Counterexample(args, lhs % d, rhs % d)


def _degree2_check(c: Cochain, op: OpTable) -> CheckResult:
    N = op.size
    for fi, d in enumerate(c.coeff.factors):
        flat = kernels.nary_cocycle_scan(op.table,
                                         np.ascontiguousarray(c.values[:, fi]),
                                         N, op.arity, d)
        if flat >= 0:
            cex = _degree2_witness(op, c, flat, fi)
            return CheckResult(False, cex,
                               f"cocycle condition fails in factor {fi}")
    return OK


def is_binary_2cocycle(phi: Cochain, op: OpTable) -> CheckResult:
    """phi(x,y) + phi(x*y, z) == phi(x,z) + phi(x*z, y*z) in the coefficients."""
    _match(op, phi, 2, "binary cocycle check")
    return _degree2_check(phi, op)


def is_ternary_2cocycle(psi: Cochain, op: OpTable) -> CheckResult:
    """psi(x,y) + psi(T(x,y), z) == psi(x,z) + psi(T(x,z), T(y,z)) with pair
    tails y = (y0,y1), z = (z0,z1)."""
    _match(op, psi, 3, "ternary cocycle check")
    return _degree2_check(psi, op)


def are_mutually_distributive_cocycles(phi0: Cochain, phi1: Cochain,
                                       op0: OpTable, op1: OpTable) -> CheckResult:
    """Mixed pair conditions for cocycles over a mutually distributive pair.

    Condition 1: phi0(x,y) + phi1(x *0 y, z) == phi1(x,z) + phi0(x *1 z, y *1 z).
    Condition 2 swaps the roles of the two operations and cochains.
    Individual validity and mutual distributivity of the pair are hypotheses,
    checked up front.
    """
    _match(op0, phi0, 2, "cocycle pair check")
    _match(op1, phi1, 2, "cocycle pair check")
    if op0.size != op1.size:
        raise InputError("operations live on different carriers")
    _same_coeff(phi0, phi1)
    _require(are_mutually_distributive(op0, op1),
             "operations are mutually distributive")
    _require(is_binary_2cocycle(phi0, op0), "first cochain is a cocycle")
    _require(is_binary_2cocycle(phi1, op1), "second cochain is a cocycle")
    N = op0.size
    s0, s1 = op0.table.reshape(N, N), op1.table.reshape(N, N)
    f0, f1 = phi0.values, phi1.values
    for fi, d in enumerate(phi0.coeff.factors):
        for which in (1, 2):
            flat = kernels.mutual_cocycle_scan(
                op0.table, op1.table,
                np.ascontiguousarray(f0[:, fi]),
                np.ascontiguousarray(f1[:, fi]), N, d, which)
            if flat >= 0:
                x, y, z = index_to_tuple(flat, N, 3)
                a, b = (f0, f1) if which == 1 else (f1, f0)
                sa, sb = (s0, s1) if which == 1 else (s1, s0)
                lhs = int(a[x * N + y, fi]) + int(b[sa[x, y] * N + z, fi])
                rhs = int(b[x * N + z, fi]) + int(a[sb[x, z] * N + sb[y, z], fi])
                return CheckResult(
                    False, Counterexample((x, y, z), lhs % d, rhs % d),
                    f"mixed condition {which} fails in factor {fi}")
    return OK


def are_compatible_ternary_cocycles(psi0: Cochain, psi1: Cochain,
                                    T0: OpTable, T1: OpTable,
                                    literal: bool = False) -> CheckResult:
    """Six-variable pair conditions for cocycles over a compatible ternary pair.

    Hypotheses checked up front: each cochain is a cocycle for its operation
    and the operations are compatible.  `literal=True` selects the printed
    variant of the second condition (leading first coordinate); the default
    variant is the one under which the pair-to-binary composite is a cocycle.
    """
    _match(T0, psi0, 3, "ternary cocycle pair check")
    _match(T1, psi1, 3, "ternary cocycle pair check")
    if T0.size != T1.size:
        raise InputError("operations live on different carriers")
    _same_coeff(psi0, psi1)
    _require(are_compatible_ternary(T0, T1), "operations are compatible")
    _require(is_ternary_2cocycle(psi0, T0), "first cochain is a cocycle")
    _require(is_ternary_2cocycle(psi1, T1), "second cochain is a cocycle")
    N = T0.size
    for fi, d in enumerate(psi0.coeff.factors):
        for which in (1, 2):
            flat = kernels.compat_cocycle_scan(
                T0.table, T1.table,
                np.ascontiguousarray(psi0.values[:, fi]),
                np.ascontiguousarray(psi1.values[:, fi]),
                N, d, which, literal=literal)
            if flat >= 0:
                args = index_to_tuple(flat, N, 6)
                return CheckResult(
                    False, _compat_witness(T0, T1, psi0, psi1, args, fi,
                                           which, literal),
                    f"pair condition {which} fails in factor {fi}")
    return OK


def _compat_witness(T0, T1, psi0, psi1, args, fi, which, literal):
    N = T0.size
    x0, x1, y0, y1, z0, z1 = args
    d = psi0.coeff.factors[fi]

    def v(c, *a):
        return int(c.values[tuple_to_index(a, N), fi])

    def t(op, *a):
        return int(op.table[tuple_to_index(a, N)])

    ay = t(T0, y0, z0, z1)
    by = t(T1, y1, z0, z1)
    if which == 1:
        lhs = v(psi0, x0, y0, y1) + v(psi1, t(T1, x1, y0, y1), z0, z1)
        rhs = v(psi1, x1, z0, z1) + v(psi0, t(T0, x0, z0, z1), ay, by)
    else:
        lead = x0 if literal else x1
        lhs = v(psi1, x1, y0, y1) + v(psi0, t(T0, x0, y0, y1), z0, z1)
        rhs = v(psi0, x0, z0, z1) + v(psi1, t(T1, lead, z0, z1), ay, by)
    return Counterexample(args, lhs % d, rhs % d)


# ---------------------------------------------------------------------------
# abelian extensions

def extend(op: OpTable, c: Cochain, verify: bool = True) -> OpTable:
    """Extension on X x A: first slot (x, a), result (op(x, ...), a + c(x, ...)).

    With verify on, a failed cocycle condition refuses with the witness; the
    unverified table exists for exactly the tables that fail to be racks.
    """
    _match(op, c, op.arity, "extension")
    if verify:
        _require(_degree2_check(c, op), "cochain is a cocycle")
    A = c.coeff
    o = A.order
    N = op.size
    k = op.arity
    M = N * o
    grid = _digit_grid(M, k, M ** k)
    xs = grid // o
    azs = grid % o
    base_idx = np.zeros(M ** k, dtype=np.int64)
    for j in range(k):
        base_idx = base_idx * N + xs[j]
    res = A.residue_table()
    vals = res[azs[0]] + c.values[base_idx]
    out = op.table[base_idx] * o + A.index_array(vals)
    return OpTable(M, k, out,
                   meta={"construction": "abelian_extension",
                         "base_size": N, "coeff": list(A.factors)})


def extend_mutual_pair(op0: OpTable, op1: OpTable,
                       phi0: Cochain, phi1: Cochain,
                       verify: bool = True) -> Tuple[OpTable, OpTable]:
    """Extend both operations of a pair; the results stay mutually
    distributive exactly because the pair conditions hold."""
    if verify:
        _require(are_mutually_distributive_cocycles(phi0, phi1, op0, op1),
                 "pair cocycle conditions")
    return (extend(op0, phi0, verify=False), extend(op1, phi1, verify=False))


# ---------------------------------------------------------------------------
# passages between arities and carriers

def ternary_cocycle_from_pair(phi0: Cochain, phi1: Cochain,
                              op0: OpTable, op1: OpTable,
                              verify: bool = True) -> Cochain:
    """psi(x, y, z) = phi0(x, y) + phi1(x *0 y, z), a ternary cocycle for the
    composite ternary operation of the pair."""
    if verify:
        _require(are_mutually_distributive_cocycles(phi0, phi1, op0, op1),
                 "pair cocycle conditions")
    N = op0.size
    A = _same_coeff(phi0, phi1)
    s0 = op0.table.reshape(N, N)
    x, y, z = np.indices((N,) * 3)
    vals = phi0.values[(x * N + y).ravel()] + phi1.values[(s0[x, y] * N + z).ravel()]
    return Cochain(N, 3, A, A.reduce(vals),
                   base=f_functor(op0, op1, verify=False))


def binary_cocycle_from_ternary_pair(psi0: Cochain, psi1: Cochain,
                                     T0: OpTable, T1: OpTable,
                                     literal: bool = False,
                                     verify: bool = True) -> Cochain:
    """phi((x0,x1), (y0,y1)) = psi0(x0, y0, y1) + psi1(x1, y0, y1) on the
    square carrier, a binary cocycle for the pair-to-binary composite."""
    if verify:
        _require(are_compatible_ternary_cocycles(psi0, psi1, T0, T1,
                                                 literal=literal),
                 "pair cocycle conditions")
    N = T0.size
    A = _same_coeff(psi0, psi1)
    x0, x1, y0, y1 = np.indices((N,) * 4)
    vals = (psi0.values[((x0 * N + y0) * N + y1).ravel()]
            + psi1.values[((x1 * N + y0) * N + y1).ravel()])
    return Cochain(N * N, 2, A, A.reduce(vals),
                   base=g_functor(T0, T1, verify=False))


def doubled_binary_cocycle(phi0: Cochain, phi1: Cochain,
                           op0: OpTable, op1: OpTable,
                           verify: bool = True) -> Cochain:
    """Cocycle for the doubled binary operation on the square carrier:
    phi0(x0,y0) + phi1(x0 *0 y0, y1) + phi0(x1,y0) + phi1(x1 *0 y0, y1).

    Equals the square-carrier composite of the ternary cocycle of the pair
    with itself, which is how the doubling is proved to stay a cocycle.
    """
    if verify:
        _require(are_mutually_distributive_cocycles(phi0, phi1, op0, op1),
                 "pair cocycle conditions")
    N = op0.size
    A = _same_coeff(phi0, phi1)
    s0 = op0.table.reshape(N, N)
    x0, x1, y0, y1 = np.indices((N,) * 4)
    vals = (phi0.values[(x0 * N + y0).ravel()]
            + phi1.values[(s0[x0, y0] * N + y1).ravel()]
            + phi0.values[(x1 * N + y0).ravel()]
            + phi1.values[(s0[x1, y0] * N + y1).ravel()])
    return Cochain(N * N, 2, A, A.reduce(vals),
                   base=doubling_binary(op0, op1, verify=False))


def doubled_ternary_cocycle(psi0: Cochain, psi1: Cochain,
                            T0: OpTable, T1: OpTable,
                            literal: bool = False,
                            verify: bool = True) -> Cochain:
    """Cocycle for the doubled ternary operation on the square carrier:
    psi0(x0,y) + psi1(x1,y) + psi0(T0(x0,y), z) + psi1(T1(x1,y), z)."""
    if verify:
        _require(are_compatible_ternary_cocycles(psi0, psi1, T0, T1,
                                                 literal=literal),
                 "pair cocycle conditions")
    N = T0.size
    A = _same_coeff(psi0, psi1)
    t0 = T0.table.reshape(N, N, N)
    t1 = T1.table.reshape(N, N, N)
    x0, x1, y0, y1, z0, z1 = np.indices((N,) * 6)
    vals = (psi0.values[((x0 * N + y0) * N + y1).ravel()]
            + psi1.values[((x1 * N + y0) * N + y1).ravel()]
            + psi0.values[((t0[x0, y0, y1] * N + z0) * N + z1).ravel()]
            + psi1.values[((t1[x1, y0, y1] * N + z0) * N + z1).ravel()])
    return Cochain(N * N, 3, A, A.reduce(vals),
                   base=doubling_ternary(T0, T1, verify=False))


def power_cocycle(phi: Cochain, op: OpTable, n: int,
                  verify: bool = True) -> Cochain:
    """phi_n(x, y) = sum over i < n of phi(x *^i y, y), a cocycle for the
    n-th power operation when phi is one for the base."""
    _match(op, phi, 2, "power cocycle")
    if n < 0:
        raise InputError("power must be nonnegative")
    if verify:
        _require(is_binary_2cocycle(phi, op), "cochain is a cocycle")
    N = op.size
    A = phi.coeff
    s = op.table.reshape(N, N)
    x, y = np.indices((N, N))
    cur = x
    total = np.zeros((N * N, A.rank), dtype=np.int64)
    for _ in range(n):
        total += phi.values[(cur * N + y).ravel()]
        cur = s[cur, y]
    return Cochain(N, 2, A, A.reduce(total), base=power_op(op, n, verify=False))


# ---------------------------------------------------------------------------
# short exact coefficient sequences and degree-3 cocycles

class SES:
    """Short exact sequence of finite abelian groups with a chosen section.

    sub --inclusion--> total --projection--> quotient, with a set-theoretic
    section of the projection fixing 0.  Maps are index arrays; construction
    validates homomorphism laws, injectivity, exactness, and the section.
    """

    __slots__ = ("sub", "total", "quotient", "inclusion", "projection",
                 "section")

    def __init__(self, sub, total, quotient, inclusion, projection, section):
        sub, total, quotient = (coeff_group(g) for g in (sub, total, quotient))
        inc = np.asarray(inclusion, dtype=np.int64)
        proj = np.asarray(projection, dtype=np.int64)
        sec = np.asarray(section, dtype=np.int64)
        if inc.shape != (sub.order,) or proj.shape != (total.order,) \
                or sec.shape != (quotient.order,):
            raise InputError("map tables have wrong lengths")
        if total.order != sub.order * quotient.order:
            raise InputError("total order must be |sub| * |quotient|")
        _check_hom(sub, total, inc, "inclusion")
        _check_hom(total, quotient, proj, "projection")
        if len(set(int(v) for v in inc)) != sub.order:
            raise InputError("inclusion is not injective")
        kernel = {i for i in range(total.order) if proj[i] == 0}
        if kernel != {int(v) for v in inc}:
            raise InputError("image of inclusion differs from kernel of projection")
        if any(proj[sec[a]] != a for a in range(quotient.order)):
            raise InputError("section does not split the projection")
        if sec[0] != 0:
            raise InputError("section must fix 0")
        for name, val in (("sub", sub), ("total", total),
                          ("quotient", quotient), ("inclusion", inc),
                          ("projection", proj), ("section", sec)):
            arr = val
            if isinstance(arr, np.ndarray):
                arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    def __setattr__(self, name, value):
        raise AttributeError("SES is immutable")

    def as_json(self) -> dict:
        return {"sub": list(self.sub.factors),
                "total": list(self.total.factors),
                "quotient": list(self.quotient.factors),
                "inclusion": [int(v) for v in self.inclusion],
                "projection": [int(v) for v in self.projection],
                "section": [int(v) for v in self.section]}

    @staticmethod
    def from_json(obj: dict) -> "SES":
        try:
            return SES(obj["sub"], obj["total"], obj["quotient"],
                       obj["inclusion"], obj["projection"], obj["section"])
        except (KeyError, TypeError) as exc:
            raise InputError(f"sequence JSON incomplete: {exc}")


def _check_hom(src: AbGroup, dst: AbGroup, table, what: str):
    res = src.residue_table()
    img = dst.residue_table()[table]
    for i in range(src.order):
        summed = dst.reduce(img[i][None, :] + img)
        target = table[src.index_array(src.reduce(res[i][None, :] + res))]
        if not np.array_equal(dst.index_array(summed), target):
            raise InputError(f"{what} is not a homomorphism")


def cyclic_ses(sub_order: int, quotient_order: int) -> SES:
    """Z_h --times a--> Z_(h a) --mod a--> Z_a with the canonical lift."""
    h, a = int(sub_order), int(quotient_order)
    total = h * a
    return SES((h,), (total,), (a,),
               [k * a for k in range(h)],
               [e % a for e in range(total)],
               list(range(a)))


def split_ses(sub_order: int, quotient_order: int) -> SES:
    """Z_h --> Z_h x Z_a --> Z_a with the additive section a -> (0, a)."""
    h, a = int(sub_order), int(quotient_order)
    total = AbGroup((h, a))
    return SES((h,), total, (a,),
               [total.index((k, 0)) for k in range(h)],
               [total.residues(e)[1] for e in range(total.order)],
               [total.index((0, r)) for r in range(a)])


def three_cocycle_from_ses(phi: Cochain, op: OpTable, ses: SES,
                           verify: bool = True) -> Cochain:
    """Degree-3 cocycle measuring the failure of a section-lifted 2-cocycle.

    alpha(x1..x5) = s phi(x1,x2,x3) - s phi(T(x1,x4,x5),T(x2,x4,x5),T(x3,x4,x5))
    - s phi(x1,x4,x5) + s phi(T(x1,x2,x3),x4,x5), computed in the total group;
    the value always lands in the included subgroup and is returned there.
    """
    _match(op, phi, 3, "degree-3 construction")
    if phi.coeff != ses.quotient:
        raise InputError("cochain coefficients must equal the quotient group")
    if verify:
        _require(is_ternary_2cocycle(phi, op), "cochain is a cocycle")
    N = op.size
    if N ** 5 > 40_000_000:
        raise InputError(f"carrier too large: {N}^5 tuples")
    E = ses.total
    lift_res = E.residue_table()[ses.section]           # quotient idx -> E residues
    a_idx = ses.quotient.index_array(phi.values)        # per 3-tuple
    sphi = lift_res[a_idx]                              # (N^3, rankE)
    T = op.table
    dig = _digit_grid(N, 5, N ** 5)
    x1, x2, x3, x4, x5 = dig

    def t(a, b, c):
        return T[(a * N + b) * N + c]

    i123 = (x1 * N + x2) * N + x3
    i145 = (x1 * N + x4) * N + x5
    acted = (t(x1, x4, x5) * N + t(x2, x4, x5)) * N + t(x3, x4, x5)
    last = (T[i123] * N + x4) * N + x5
    vals = E.reduce(sphi[i123] - sphi[acted] - sphi[i145] + sphi[last])
    # pull back through the inclusion
    inv = np.full(E.order, -1, dtype=np.int64)
    inv[ses.inclusion] = np.arange(ses.sub.order)
    e_idx = E.index_array(vals)
    h_idx = inv[e_idx]
    if (h_idx < 0).any():
        bad = int(np.flatnonzero(h_idx < 0)[0])
        raise RuntimeError(
            "internal error: degree-3 value escapes the included subgroup "
            f"at tuple {index_to_tuple(bad, N, 5)}")
    return Cochain(N, 5, ses.sub, ses.sub.residue_table()[h_idx], base=op)


# ---------------------------------------------------------------------------
# cohomology relations

def cocycles_cohomologous(c1: Cochain, c2: Cochain, op: OpTable):
    """Whether c1 - c2 is the coboundary of a function on the carrier.

    Returns (True, eta) with delta eta = c1 - c2, or (False, None).  Works
    for binary cochains over a binary operation and ternary cochains over a
    ternary operation.
    """
    _match(op, c1, op.arity, "cohomology comparison")
    _match(op, c2, op.arity, "cohomology comparison")
    A = _same_coeff(c1, c2)
    delta = boundary_matrix(op, 2, verify=False).T
    diff = A.reduce(c1.values.astype(np.int64) - c2.values)
    cols = []
    for fi, d in enumerate(A.factors):
        sol = solve_mod(delta, diff[:, fi], d)
        if sol is None:
            return False, None
        cols.append(sol % d)
    eta = Cochain(op.size, 1, A, np.stack(cols, axis=1))
    return True, eta


def _extract_cocycle(ext: OpTable, base: OpTable, A: AbGroup):
    """Recover the cochain of a standard-form extension table, or None."""
    o = A.order
    N = base.size
    if ext.size != N * o or ext.arity != base.arity:
        return None
    k = base.arity
    grid = _digit_grid(N * o, k, (N * o) ** k)
    xs = grid // o
    azs = grid % o
    base_idx = np.zeros((N * o) ** k, dtype=np.int64)
    for j in range(k):
        base_idx = base_idx * N + xs[j]
    out = ext.table
    if not np.array_equal(out // o, base.table[base_idx]):
        return None
    res = A.residue_table()
    offs = A.reduce(res[out % o] - res[azs[0]])
    # the offset must depend only on the base tuple
    first = np.zeros((N ** k, A.rank), dtype=np.int64)
    zero_fiber = (azs == 0).all(axis=0)
    first[base_idx[zero_fiber]] = offs[zero_fiber]
    if not np.array_equal(offs, first[base_idx]):
        return None
    return Cochain(N, k, A, first, base=base)


def extension_equivalent(ext0: OpTable, ext1: OpTable, base: OpTable,
                         coeff) -> CheckResult:
    """Whether two extension tables differ by a fiber-preserving bijection.

    Standard-form tables are compared through their cochains: translation
    maps (x, a) -> (x, a + eta(x)) realize exactly the coboundary relation.
    When that fails, a full search over per-point fiber permutations decides
    small cases; larger cases report the translation-map verdict.
    """
    A = coeff_group(coeff)
    c0 = _extract_cocycle(ext0, base, A)
    c1 = _extract_cocycle(ext1, base, A)
    if c0 is not None and c1 is not None:
        ok, eta = cocycles_cohomologous(c0, c1, base)
        if ok:
            return CheckResult(True, detail="translation fiber map from coboundary")
    N = base.size
    o = A.order
    import math
    candidates = math.factorial(o) ** N
    if candidates <= FULL_SEARCH_LIMIT:
        if _fiber_search(ext0, ext1, N, o):
            return CheckResult(True, detail="fiber permutation found by search")
        return CheckResult(False,
                           detail=f"no fiber bijection among all {candidates}")
    if c0 is not None and c1 is not None:
        return CheckResult(False, detail=(
            "cochains not cohomologous; equivalences of standard-form "
            "extensions are translation maps, so none exists"))
    return CheckResult(False, detail=(
        "tables not in standard extension form and search space "
        f"{candidates} too large"))


def _fiber_search(ext0: OpTable, ext1: OpTable, N: int, o: int) -> bool:
    k = ext0.arity
    perms = list(itertools.permutations(range(o)))
    tuples = list(itertools.product(range(N * o), repeat=k))
    for assign in itertools.product(perms, repeat=N):
        ok = True
        for args in tuples:
            u = int(ext0.table[tuple_to_index(args, N * o)])
            fu = (u // o) * o + assign[u // o][u % o]
            mapped = tuple((v // o) * o + assign[v // o][v % o] for v in args)
            if fu != int(ext1.table[tuple_to_index(mapped, N * o)]):
                ok = False
                break
        if ok:
            return True
    return False
