"""Chain complexes and exact integer (co)homology for distributive operations.

Two complexes are supported:

* the ternary complex of a single ternary operation, where the degree-n
  chain group is free on (2n-1)-tuples (x0, b1, ..., b_{n-1}) with each
  b_i a pair; degree 0 is the zero group and the first differential is 0;
* the labeled complex of a finite system of operations (any arities),
  where generators carry a label vector selecting which operation acts
  in each slot.

Boundary of a generator: sum over i of (-1)^i (acted tuple - tuple with
slot i deleted), where "acted" applies the slot-i operation with tail b_i
to every earlier entry.  Generators are enumerated lexicographically
(label vector first for the labeled complex); matrices have one column
per generator of the higher degree.

All arithmetic is exact: matrices are int64, Smith reduction runs on
Python integers (no overflow), nothing is floating point.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from .optable import (
    CheckResult,
    InputError,
    OpTable,
    exchange_holds,
    is_nary_distributive,
)
from .constructions import PreconditionError, _require

# refuse boundary matrices with more entries than this (dense int64);
# covers degree <= 4 on size <= 3 carriers (including ternary pairs) and
# degree <= 3 on size <= 4
MAX_MATRIX_ENTRIES = 20_000_000


# ---------------------------------------------------------------------------
# generator bookkeeping

def ternary_generator_count(size: int, n: int) -> int:
    if n <= 0:
        return 0
    return size ** (2 * n - 1)


def _digit_grid(size, ndigits, count):
    """Array (ndigits, count) of base-`size` digits of 0..count-1, big-endian."""
    idx = np.arange(count, dtype=np.int64)
    digits = np.empty((ndigits, count), dtype=np.int64)
    for pos in range(ndigits - 1, -1, -1):
        digits[pos] = idx % size
        idx //= size
    return digits


def _guard_matrix(rows, cols, what):
    if rows * cols > MAX_MATRIX_ENTRIES:
        raise InputError(
            f"{what} needs a {rows} x {cols} matrix "
            f"({rows * cols} entries); refusing above {MAX_MATRIX_ENTRIES}"
        )


def ternary_boundary(op: OpTable, n: int, verify: bool = True) -> np.ndarray:
    """Matrix of the degree-n differential of the ternary complex.

    Columns are indexed by degree-n generators, rows by degree n-1.
    Degree 1 returns the empty (0, size) matrix since degree 0 is zero.
    """
    if op.arity != 3:
        raise InputError("ternary complex needs an arity-3 operation")
    if n < 1:
        raise InputError("degree must be >= 1")
    if verify:
        _require(is_nary_distributive(op), "operation is self-distributive")
    N = op.size
    if n == 1:
        return np.zeros((0, N), dtype=np.int64)
    rows = ternary_generator_count(N, n - 1)
    cols = ternary_generator_count(N, n)
    _guard_matrix(rows, cols, f"ternary boundary at degree {n}, size {N}")
    T = op.table
    dig = _digit_grid(N, 2 * n - 1, cols)
    M = np.zeros((rows, cols), dtype=np.int64)
    colidx = np.arange(cols, dtype=np.int64)

    def flat3(x, y, z):
        return T[(x * N + y) * N + z]

    for i in range(1, n):
        by, bz = dig[2 * i - 1], dig[2 * i]
        sign = (-1) ** i
        acted = flat3(dig[0], by, bz)
        for k in range(1, i):
            acted = acted * N + flat3(dig[2 * k - 1], by, bz)
            acted = acted * N + flat3(dig[2 * k], by, bz)
        for k in range(i, n - 1):
            acted = acted * N + dig[2 * k + 1]
            acted = acted * N + dig[2 * k + 2]
        deleted = dig[0]
        for k in range(1, n):
            if k == i:
                continue
            deleted = deleted * N + dig[2 * k - 1]
            deleted = deleted * N + dig[2 * k]
        np.add.at(M, (acted, colidx), sign)
        np.add.at(M, (deleted, colidx), -sign)
    return M


def labeled_blocks(system: Sequence[OpTable], n: int):
    """(label_vector, offset, count) for each block of degree-n generators."""
    if n <= 0:
        return []
    N = system[0].size
    k = len(system)
    arities = [t.arity for t in system]
    blocks = []
    offset = 0
    for eps in _label_vectors(k, n - 1):
        count = N ** (1 + sum(arities[e] - 1 for e in eps))
        blocks.append((eps, offset, count))
        offset += count
    return blocks


def _label_vectors(k, length):
    if length == 0:
        return [()]
    out = []
    for eps in np.ndindex(*([k] * length)):
        out.append(tuple(int(e) for e in eps))
    return out


def labeled_generator_count(system: Sequence[OpTable], n: int) -> int:
    blocks = labeled_blocks(system, n)
    return blocks[-1][1] + blocks[-1][2] if blocks else 0


def _check_system(system):
    if not system:
        raise InputError("empty operation system")
    N = system[0].size
    for t in system:
        if t.size != N:
            raise InputError("system operations live on different carriers")
    for t in system:
        _require(is_nary_distributive(t), "every system operation is self-distributive")
    for a in range(len(system)):
        for b in range(len(system)):
            if a == b:
                continue
            _require(exchange_holds(system[a], system[b]),
                     f"system operations {a} and {b} satisfy the exchange law")


def labeled_boundary(system: Sequence[OpTable], n: int,
                     verify: bool = True) -> np.ndarray:
    """Degree-n differential of the labeled complex of an operation system.

    For a single binary operation this is the classical rack boundary;
    for a single ternary operation it equals ternary_boundary.
    """
    system = list(system)
    if n < 1:
        raise InputError("degree must be >= 1")
    if verify:
        _check_system(system)
    N = system[0].size
    arities = [t.arity for t in system]
    if n == 1:
        return np.zeros((0, N), dtype=np.int64)
    hi = labeled_blocks(system, n)
    lo = labeled_blocks(system, n - 1)
    lo_offset = {eps: off for eps, off, _ in lo}
    rows = labeled_generator_count(system, n - 1)
    cols = labeled_generator_count(system, n)
    _guard_matrix(rows, cols, f"labeled boundary at degree {n}, size {N}")
    M = np.zeros((rows, cols), dtype=np.int64)

    for eps, offset, count in hi:
        tails = [arities[e] - 1 for e in eps]
        ndig = 1 + sum(tails)
        dig = _digit_grid(N, ndig, count)
        colidx = offset + np.arange(count, dtype=np.int64)
        starts = [1]
        for L in tails:
            starts.append(starts[-1] + L)
        for i in range(1, n):
            e_i = eps[i - 1]
            Ti = system[e_i].table
            Li = tails[i - 1]
            sign = (-1) ** i

            def act(v, dig=dig, Ti=Ti, s=starts[i - 1], Li=Li, N=N):
                flat = v
                for q in range(Li):
                    flat = flat * N + dig[s + q]
                return Ti[flat]

            new_eps = eps[:i - 1] + eps[i:]
            acted = act(dig[0])
            deleted = dig[0]
            for k in range(1, n):
                if k == i:
                    continue
                s, L = starts[k - 1], tails[k - 1]
                for q in range(L):
                    comp = dig[s + q]
                    acted = acted * N + (act(comp) if k < i else comp)
                    deleted = deleted * N + comp
            base = lo_offset[new_eps]
            np.add.at(M, (base + acted, colidx), sign)
            np.add.at(M, (base + deleted, colidx), -sign)
    return M


def boundary_matrix(target, n: int, verify: bool = True) -> np.ndarray:
    """Dispatch: OpTable of arity 3 -> ternary complex; any other OpTable or a
    sequence of OpTables -> labeled complex."""
    if isinstance(target, OpTable):
        if target.arity == 3:
            return ternary_boundary(target, n, verify=verify)
        return labeled_boundary([target], n, verify=verify)
    return labeled_boundary(list(target), n, verify=verify)


def _generator_count(target, n):
    if isinstance(target, OpTable):
        if target.arity == 3:
            return ternary_generator_count(target.size, n)
        return labeled_generator_count([target], n)
    return labeled_generator_count(list(target), n)


# ---------------------------------------------------------------------------
# Smith normal form on exact integers

def xgcd(a: int, b: int):
    """(g, s, t) with s*a + t*b = g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class SmithResult:
    """U @ M @ V = diag(factors) with U, V unimodular (when requested)."""
    factors: Tuple[int, ...]
    U: Optional[np.ndarray] = None
    V: Optional[np.ndarray] = None

    @property
    def rank(self) -> int:
        return len(self.factors)


def smith_normal_form(matrix, transforms: bool = False) -> SmithResult:
    """Invariant factors of an integer matrix, optionally with transforms.

    Reduction runs on Python integers, so intermediates never overflow.
    """
    A = np.asarray(matrix)
    rows, cols = A.shape if A.ndim == 2 else (0, 0)
    if A.ndim != 2:
        raise InputError("matrix must be two-dimensional")
    M = [[int(v) for v in A[i]] for i in range(rows)]
    U = [[int(i == j) for j in range(rows)] for i in range(rows)] if transforms else None
    V = [[int(i == j) for j in range(cols)] for i in range(cols)] if transforms else None

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in M:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def row_combine(r, i, s, t, u, v):
        # (row_r, row_i) <- (s row_r + t row_i, u row_r + v row_i), sv - tu = 1
        Mr, Mi = M[r], M[i]
        for j in range(cols):
            a, b = Mr[j], Mi[j]
            Mr[j] = s * a + t * b
            Mi[j] = u * a + v * b
        if U is not None:
            Ur, Ui = U[r], U[i]
            for j in range(rows):
                a, b = Ur[j], Ui[j]
                Ur[j] = s * a + t * b
                Ui[j] = u * a + v * b

    def col_combine(r, j, s, t, u, v):
        for row in M:
            a, b = row[r], row[j]
            row[r] = s * a + t * b
            row[j] = u * a + v * b
        if V is not None:
            for row in V:
                a, b = row[r], row[j]
                row[r] = s * a + t * b
                row[j] = u * a + v * b

    factors = []
    r = 0
    limit = min(rows, cols)
    while r < limit:
        piv = None
        best = None
        for i in range(r, rows):
            Mi = M[i]
            for j in range(r, cols):
                v = Mi[j]
                if v and (best is None or abs(v) < best):
                    best = abs(v)
                    piv = (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if piv is None:
            break
        swap_rows(r, piv[0])
        swap_cols(r, piv[1])
        while True:
            # one xgcd step per entry: pivot becomes gcd, entry becomes 0
            for i in range(r + 1, rows):
                b = M[i][r]
                if b:
                    a = M[r][r]
                    if b % a == 0:
                        q = b // a
                        row_combine(r, i, 1, 0, -q, 1)
                    else:
                        g, s, t = xgcd(a, b)
                        row_combine(r, i, s, t, -(b // g), a // g)
            clean = True
            for j in range(r + 1, cols):
                b = M[r][j]
                if b:
                    a = M[r][r]
                    if b % a == 0:
                        q = b // a
                        col_combine(r, j, 1, 0, -q, 1)
                    else:
                        g, s, t = xgcd(a, b)
                        col_combine(r, j, s, t, -(b // g), a // g)
                        clean = False   # mixing may refill the pivot column
            if clean and not any(M[i][r] for i in range(r + 1, rows)):
                break
        d = M[r][r]
        if d < 0:
            for j in range(cols):
                M[r][j] = -M[r][j]
            if U is not None:
                for j in range(rows):
                    U[r][j] = -U[r][j]
            d = -d
        folded = False
        for i in range(r + 1, rows):
            Mi = M[i]
            for j in range(r + 1, cols):
                if Mi[j] % d:
                    Mr = M[r]
                    for jj in range(cols):
                        Mr[jj] += Mi[jj]
                    if U is not None:
                        Ur, Ui = U[r], U[i]
                        for jj in range(rows):
                            Ur[jj] += Ui[jj]
                    folded = True
                    break
            if folded:
                break
        if folded:
            continue
        factors.append(d)
        r += 1
    if transforms:
        Ua = np.array(U, dtype=object) if rows else np.zeros((0, 0), dtype=object)
        Va = np.array(V, dtype=object) if cols else np.zeros((0, 0), dtype=object)
        return SmithResult(tuple(factors), Ua, Va)
    return SmithResult(tuple(factors))


def _matmul_obj(A, B):
    """Exact product of object/int matrices as python ints."""
    A = np.asarray(A, dtype=object)
    B = np.asarray(B, dtype=object)
    return A @ B


def solve_mod(matrix, rhs, modulus: int):
    """One solution x of matrix @ x = rhs (mod modulus), or None.

    Works for any modulus >= 1 via Smith normal form.
    """
    if modulus < 1:
        raise InputError("modulus must be >= 1")
    A = np.asarray(matrix)
    b = np.asarray(rhs).reshape(-1)
    if A.shape[0] != b.shape[0]:
        raise InputError("rhs length does not match matrix rows")
    if modulus == 1:
        return np.zeros(A.shape[1], dtype=np.int64)
    snf = smith_normal_form(A, transforms=True)
    d = snf.factors
    Ub = _matmul_obj(snf.U, b.astype(object))
    rows, cols = A.shape
    y = [0] * cols
    for i in range(rows):
        target = int(Ub[i]) % modulus
        di = d[i] if i < len(d) else 0
        g = int(np.gcd(di, modulus))  # gcd(0, m) = m
        if target % g:
            return None
        if di and g != modulus:
            mm = modulus // g
            y[i] = (target // g) * pow((di // g) % mm, -1, mm) % mm
    x = _matmul_obj(snf.V, np.array(y, dtype=object))
    return np.array([int(v) % modulus for v in x], dtype=np.int64)


def kernel_lattice_mod(matrix, modulus: int) -> np.ndarray:
    """Columns generate {x : matrix @ x = 0 (mod modulus)} together with
    modulus * Z^n (the returned square matrix has full rank)."""
    A = np.asarray(matrix)
    cols = A.shape[1]
    if modulus == 1:
        return np.eye(cols, dtype=object)
    snf = smith_normal_form(A, transforms=True)
    scale = []
    for i in range(cols):
        di = snf.factors[i] if i < len(snf.factors) else 0
        g = int(np.gcd(di, modulus)) if di else modulus
        scale.append(modulus // g)
    V = np.asarray(snf.V, dtype=object)
    return V * np.array(scale, dtype=object)[None, :]


def _solve_unimodular_lattice(K, R):
    """Y with K @ Y = R for K square full-rank; raises if not integral."""
    snf = smith_normal_form(K, transforms=True)
    d = snf.factors
    n = K.shape[0]
    if len(d) != n:
        raise InputError("lattice basis is rank deficient")
    UR = _matmul_obj(snf.U, np.asarray(R, dtype=object))
    Y = np.empty_like(UR)
    for i in range(n):
        for j in range(UR.shape[1]):
            q, rmod = divmod(int(UR[i, j]), d[i])
            if rmod:
                raise InputError("relation does not lie in the lattice")
            Y[i, j] = q
    return _matmul_obj(snf.V, Y)


def _quotient_invariants(K, rel_columns):
    """Invariant factors (>1) of Z^n / lattice(rel) expressed in basis K."""
    Y = _solve_unimodular_lattice(K, rel_columns)
    return tuple(f for f in smith_normal_form(Y).factors if f > 1)


def combine_invariant_factors(groups: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Invariant-factor chain of a direct sum given per-summand factors."""
    ppowers = {}
    for factors in groups:
        for f in factors:
            f = int(f)
            m = 2
            while m * m <= f:
                e = 0
                while f % m == 0:
                    e += 1
                    f //= m
                if e:
                    ppowers.setdefault(m, []).append(m ** e)
                m += 1
            if f > 1:
                ppowers.setdefault(f, []).append(f)
    if not ppowers:
        return ()
    length = max(len(v) for v in ppowers.values())
    chain = []
    for pos in range(length):
        val = 1
        for p, powers in ppowers.items():
            powers_sorted = sorted(powers, reverse=True)
            if pos < len(powers_sorted):
                val *= powers_sorted[pos]
        chain.append(val)
    return tuple(sorted(chain))


# ---------------------------------------------------------------------------
# homology / cohomology results

@dataclass(frozen=True)
class HomologyResult:
    betti: int
    torsion: Tuple[int, ...]


@dataclass(frozen=True)
class CohomologyResult:
    """Generating data for n-cocycles and n-coboundaries mod a coefficient
    group, plus the invariant factors of the quotient.

    cocycles / coboundaries: arrays of shape (count, generators, factors)
    holding residue columns per coefficient factor; for the labeled complex
    `blocks` records (label_vector, offset, count) so degree-2 vectors can
    be split into the per-operation components."""
    cocycles: np.ndarray
    coboundaries: np.ndarray
    invariants: Tuple[int, ...]
    blocks: Tuple = ()


def _coeff_factors(coeff) -> Tuple[int, ...]:
    if coeff is None:
        return ()
    if isinstance(coeff, int):
        return (coeff,)
    factors = getattr(coeff, "factors", None)
    if factors is None:
        raise InputError("coefficients must be None (integral), an int, or an AbGroup")
    return tuple(int(f) for f in factors)


def homology(target, n: int, coeff=None, verify: bool = True) -> HomologyResult:
    """H_n of the ternary or labeled complex.

    coeff None computes integral homology (betti + invariant factors of the
    torsion subgroup).  A positive int d or an AbGroup computes the finite
    group H_n(X; coeff), reported with betti 0 and the cyclic decomposition
    in `torsion` (factors > 1)."""
    if n < 1:
        raise InputError("degree must be >= 1")
    dn = boundary_matrix(target, n, verify=verify)
    dn1 = boundary_matrix(target, n + 1, verify=False)
    gens = _generator_count(target, n)
    factors = _coeff_factors(coeff)
    if not factors:
        rank_n = smith_normal_form(dn).rank
        snf1 = smith_normal_form(dn1)
        betti = gens - rank_n - snf1.rank
        torsion = tuple(f for f in snf1.factors if f > 1)
        return HomologyResult(betti, torsion)
    per_factor = []
    for d in factors:
        if d == 0:
            raise InputError("infinite cyclic coefficients are only valid integrally")
        K = kernel_lattice_mod(dn, d)
        rel = np.concatenate(
            [dn1.astype(object), d * np.eye(gens, dtype=object)], axis=1)
        per_factor.append(_quotient_invariants(K, rel))
    return HomologyResult(0, combine_invariant_factors(per_factor))


def cohomology_solve(target, n: int, coeff, verify: bool = True) -> CohomologyResult:
    """Generating sets of n-cocycles / n-coboundaries and H^n invariants.

    The coboundary on n-cochains is the transpose of the degree-(n+1)
    boundary; for the labeled complex at degree 2 the cocycle vectors split
    per operation label into the pairs (phi_0, phi_1, ...)."""
    if n < 1:
        raise InputError("degree must be >= 1")
    factors = _coeff_factors(coeff)
    if not factors:
        raise InputError("cohomology_solve needs finite coefficients")
    delta_n = boundary_matrix(target, n + 1, verify=verify).T  # n-cochains -> n+1
    delta_prev = boundary_matrix(target, n, verify=False).T    # (n-1)-cochains -> n
    gens = _generator_count(target, n)
    cocycles = []
    coboundaries = []
    per_factor = []
    for fi, d in enumerate(factors):
        if d == 0:
            raise InputError("cochain coefficients must be finite")
        if d == 1:
            per_factor.append(())
            continue
        K = kernel_lattice_mod(delta_n, d)
        # generating set: nonzero columns of K mod d
        for j in range(K.shape[1]):
            col = np.array([int(v) % d for v in K[:, j]], dtype=np.int64)
            if col.any():
                vec = np.zeros((gens, len(factors)), dtype=np.int64)
                vec[:, fi] = col
                cocycles.append(vec)
        img = delta_prev % d
        for j in range(img.shape[1]):
            col = img[:, j]
            if col.any():
                vec = np.zeros((gens, len(factors)), dtype=np.int64)
                vec[:, fi] = col
                coboundaries.append(vec)
        rel = np.concatenate(
            [delta_prev.astype(object), d * np.eye(gens, dtype=object)], axis=1)
        per_factor.append(_quotient_invariants(K, rel))
    blocks = ()
    if not (isinstance(target, OpTable) and target.arity == 3):
        system = [target] if isinstance(target, OpTable) else list(target)
        blocks = tuple(labeled_blocks(system, n))
    shape = (len(cocycles), gens, len(factors))
    cz = np.array(cocycles, dtype=np.int64) if cocycles else np.zeros(shape, np.int64)
    cb = (np.array(coboundaries, dtype=np.int64) if coboundaries
          else np.zeros((0, gens, len(factors)), np.int64))
    return CohomologyResult(cz, cb, combine_invariant_factors(per_factor), blocks)


# ---------------------------------------------------------------------------
# chain maps from the ternary complex of a pair's composite to the labeled one

def chain_map_F(op0: OpTable, op1: OpTable, n: int,
                verify: bool = True) -> np.ndarray:
    """Chain map C_n(ternary composite) -> C_n(labeled pair), degrees 1..3.

    Degree 1 is the identity; degree 2 sends (x,y0,y1) to
    (x,y0) in block (0,) plus (x*0 y0, y1) in block (1,); degree 3 has four
    unit entries in blocks (0,0), (0,1), (1,0), (1,1)."""
    if n not in (1, 2, 3):
        raise InputError("chain map defined for degrees 1, 2, 3")
    for t in (op0, op1):
        if t.arity != 2:
            raise InputError("chain map needs a pair of binary operations")
    if op0.size != op1.size:
        raise InputError("operations live on different carriers")
    if verify:
        _require(exchange_holds(op0, op1), "pair satisfies the exchange law (0 over 1)")
        _require(exchange_holds(op1, op0), "pair satisfies the exchange law (1 over 0)")
        _require(is_nary_distributive(op0), "first operation is self-distributive")
        _require(is_nary_distributive(op1), "second operation is self-distributive")
    N = op0.size
    if n == 1:
        return np.eye(N, dtype=np.int64)
    system = [op0, op1]
    offs = {eps: off for eps, off, _ in labeled_blocks(system, n)}
    S0 = op0.table.reshape(N, N)
    cols = N ** (2 * n - 1)
    rows = labeled_generator_count(system, n)
    M = np.zeros((rows, cols), dtype=np.int64)
    colidx = np.arange(cols, dtype=np.int64)
    dig = _digit_grid(N, 2 * n - 1, cols)
    if n == 2:
        x, y0, y1 = dig
        np.add.at(M, (offs[(0,)] + x * N + y0, colidx), 1)
        np.add.at(M, (offs[(1,)] + S0[x, y0] * N + y1, colidx), 1)
        return M
    x, y0, y1, z0, z1 = dig
    np.add.at(M, (offs[(0, 0)] + (x * N + y0) * N + z0, colidx), 1)
    np.add.at(M, (offs[(0, 1)] + (S0[x, z0] * N + S0[y0, z0]) * N + z1, colidx), 1)
    np.add.at(M, (offs[(1, 0)] + (S0[x, y0] * N + y1) * N + z0, colidx), 1)
    np.add.at(M, (offs[(1, 1)] + (S0[S0[x, y0], z0] * N + S0[y1, z0]) * N + z1,
                  colidx), 1)
    return M


def verify_chain_map(op0: OpTable, op1: OpTable) -> CheckResult:
    """Exact matrix identities F_1 d = d F_2 and F_2 d = d F_3."""
    from .constructions import f_functor

    # degree-1 call checks SD + mutual distributivity; the composite ternary
    # operation is then SD even when the pair is not a rack pair
    F = {k: chain_map_F(op0, op1, k, verify=(k == 1)) for k in (1, 2, 3)}
    T = f_functor(op0, op1, verify=False)
    system = [op0, op1]
    for n in (2, 3):
        lhs = F[n - 1] @ ternary_boundary(T, n, verify=False)
        rhs = labeled_boundary(system, n, verify=False) @ F[n]
        if (lhs != rhs).any():
            col = int(np.argwhere((lhs != rhs).any(axis=0))[0][0])
            return CheckResult(
                False, None,
                f"chain map identity fails at degree {n}, generator column {col}")
    return CheckResult(True)


def pullback_labeled_2cocycle(phi0, phi1, op0: OpTable, op1: OpTable,
                              verify: bool = True):
    """Pull a labeled 2-cocycle pair back to a ternary 2-cochain through the
    degree-2 chain map (transpose composition).  The result equals the
    ternary cochain phi0(x,y0) + phi1(x *0 y0, y1)."""
    from .cocycles import Cochain, are_mutually_distributive_cocycles

    if verify:
        _require(are_mutually_distributive_cocycles(phi0, phi1, op0, op1),
                 "labeled 2-cocycle conditions")
    F2 = chain_map_F(op0, op1, 2, verify=False)
    vals = np.concatenate([phi0.values, phi1.values], axis=0)
    mods = np.array(phi0.coeff.factors, dtype=np.int64)
    out = (F2.T @ vals) % mods[None, :]
    return Cochain(op0.size, 3, phi0.coeff, out)
