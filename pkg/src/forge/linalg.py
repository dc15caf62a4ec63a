"""Exact linear algebra over Q(w), plus Smith normal form over Z.

Dense matrices are lists of Scalar rows.  Large kernel problems go through
SparseEchelon (dict-of-column sparse rows) so that constraint systems with
thousands of short rows stay cheap.  A numpy-backed modular rank bound
(rank mod p <= rank over Q, since a nonvanishing minor mod p cannot vanish
over Q) certifies "the kernel is no bigger than the part we exhibit" without
a full exact elimination.
"""

from __future__ import annotations

from math import gcd

import numpy as np

from .exact import ONE, ZERO, Polynomial, Scalar, poly_lcm, sc


class NotSquare(ValueError):
    pass


# =========================================================================
# dense matrices
# =========================================================================

class Matrix:
    """Dense matrix of Scalars."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        self.data = [[sc(x) for x in row] for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged rows")

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        return Matrix([[ZERO] * cols for _ in range(rows)])

    @staticmethod
    def identity(n: int) -> "Matrix":
        m = Matrix.zero(n, n)
        for i in range(n):
            m.data[i][i] = ONE
        return m

    def copy(self) -> "Matrix":
        return Matrix([row[:] for row in self.data])

    def __getitem__(self, ij):
        return self.data[ij[0]][ij[1]]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.data == other.data

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.data))

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a - b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.data, other.data)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self.data])

    def scale(self, c) -> "Matrix":
        c = sc(c)
        return Matrix([[c * a for a in r] for r in self.data])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        ot = list(zip(*other.data))
        out = []
        for row in self.data:
            orow = []
            for col in ot:
                acc = ZERO
                for a, b in zip(row, col):
                    if a.p or a.q:
                        if b.p or b.q:
                            acc = acc + a * b
                orow.append(acc)
            out.append(orow)
        return Matrix(out)

    def apply(self, vec):
        """Matrix times a dense vector (list of Scalars)."""
        out = []
        for row in self.data:
            acc = ZERO
            for a, b in zip(row, vec):
                if (a.p or a.q) and (b.p or b.q):
                    acc = acc + a * b
            out.append(acc)
        return out

    def transpose(self) -> "Matrix":
        return Matrix([list(r) for r in zip(*self.data)]) if self.rows else Matrix([])

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.data for x in row)

    def commutator(self, other: "Matrix") -> "Matrix":
        return self * other - other * self

    def __repr__(self):
        return "Matrix(%d x %d)" % (self.rows, self.cols)


def rref(m: Matrix):
    """Reduced row echelon form.

    Returns (R, rank, pivot_columns).  Deterministic pivoting: first row with
    a nonzero entry in column order.
    """
    a = [row[:] for row in m.data]
    rows, cols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if not a[i][c].is_zero():
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = a[r][c].inv()
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and not a[i][c].is_zero():
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return Matrix(a), r, pivots


def rank(m: Matrix) -> int:
    return rref(m)[1]


def nullspace(m: Matrix):
    """Exact basis of the right kernel, as dense vectors."""
    red, r, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = -red.data[i][f]
        basis.append(v)
    return basis


def solve(m: Matrix, rhs):
    """One exact solution of m x = rhs, or None if inconsistent."""
    aug = Matrix([row + [b] for row, b in zip(m.data, [sc(x) for x in rhs])])
    red, r, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = [ZERO] * m.cols
    for i, pc in enumerate(pivots):
        x[pc] = red.data[i][m.cols]
    return x

def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise NotSquare("inverse of non-square matrix")
    aug = Matrix([row + list(idr) for row, idr in
                  zip(m.data, Matrix.identity(m.rows).data)])
    red, r, pivots = rref(aug)
    if r < m.rows or pivots[:m.rows] != list(range(m.rows)):
        raise ValueError("singular matrix")
    return Matrix([row[m.rows:] for row in red.data])


# =========================================================================
# sparse rows: dict col -> Scalar
# =========================================================================

def vec_add_scaled(dst: dict, c: Scalar, src: dict):
    """dst += c * src, dropping zeros; mutates dst."""
    for k, v in src.items():
        w = dst.get(k)
        nv = c * v if w is None else w + c * v
        if nv.p or nv.q:
            dst[k] = nv
        elif w is not None:
            del dst[k]


class SparseEchelon:
    """Incremental row echelon over Q(w) with sparse dict rows."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivot_rows = {}  # pivot col -> normalized row (dict)

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def reduce(self, row: dict) -> dict:
        """Forward-reduce a row against current pivots (copy, not inserted)."""
        row = dict(row)
        prows = self.pivot_rows
        while row:
            lead = min(row)
            pr = prows.get(lead)
            if pr is None:
                return row
            c = -row[lead]
            del row[lead]
            for k, v in pr.items():
                if k == lead:
                    continue
                w = row.get(k)
                nv = c * v if w is None else w + c * v
                if nv.p or nv.q:
                    row[k] = nv
                elif w is not None:
                    del row[k]
        return row

    def insert(self, row: dict) -> bool:
        """Reduce and insert; True if the rank grew."""
        row = self.reduce(row)
        if not row:
            return False
        lead = min(row)
        inv = row[lead].inv()
        self.pivot_rows[lead] = {k: inv * v for k, v in row.items()}
        return True

    def back_substitute(self):
        """Make the echelon fully reduced (each pivot column cleared)."""
        for lead in sorted(self.pivot_rows, reverse=True):
            prow = self.pivot_rows[lead]
            for lead2, row2 in self.pivot_rows.items():
                if lead2 == lead:
                    continue
                c = row2.get(lead)
                if c is not None:
                    del row2[lead]
                    for k, v in prow.items():
                        if k == lead:
                            continue
                        w = row2.get(k)
                        nv = (-c) * v if w is None else w - c * v
                        if nv.p or nv.q:
                            row2[k] = nv
                        elif w is not None:
                            del row2[k]

    def kernel(self):
        """Sparse basis of the kernel (list of dicts), one per free column."""
        self.back_substitute()
        basis = []
        for f in range(self.ncols):
            if f in self.pivot_rows:
                continue
            v = {f: ONE}
            for lead, row in self.pivot_rows.items():
                c = row.get(f)
                if c is not None:
                    v[lead] = -c
            basis.append(v)
        return basis

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)


def sparse_kernel(rows, ncols: int):
    """Exact kernel of a (possibly huge) list of sparse rows.

    Rows are consumed once to build the echelon; rows arriving after the rank
    has stopped growing are only checked against the computed kernel, which
    is much cheaper, and trigger a recompute on a genuine violation.
    """
    rows = list(rows)
    ech = SparseEchelon(ncols)
    stall, i = 0, 0
    n = len(rows)
    # grow the echelon until the rank looks complete
    while i < n and stall < 4 * ncols and ech.rank < ncols:
        if ech.insert(rows[i]):
            stall = 0
        else:
            stall += 1
        i += 1
    while True:
        kern = ech.kernel()
        bad = None
        for j in range(i, n):
            row = rows[j]
            for v in kern:
                acc = ZERO
                for k, c in row.items():
                    x = v.get(k)
                    if x is not None:
                        acc = acc + c * x
                if not acc.is_zero():
                    bad = row
                    break
            if bad is not None:
                break
        if bad is None:
            return kern
        ech.insert(bad)


# =========================================================================
# minimal polynomial
# =========================================================================

def _annihilator_from_chain(chain):
    """Monic annihilator for a Krylov chain [v, Mv, ..., M^k v].

    The last vector is assumed dependent on the previous ones.
    """
    cols = sorted(set().union(*[c.keys() for c in chain]))
    idx = {c: i for i, c in enumerate(cols)}
    m = Matrix.zero(len(cols), len(chain) - 1)
    for j, v in enumerate(chain[:-1]):
        for k, val in v.items():
            m.data[idx[k]][j] = val
    rhs = [ZERO] * len(cols)
    for k, val in chain[-1].items():
        rhs[idx[k]] = val
    x = solve(m, rhs)
    if x is None:
        raise RuntimeError("chain not dependent")
    # M^k v = sum x_j M^j v  ->  X^k - sum x_j X^j annihilates v
    return Polynomial([-c for c in x] + [ONE])


def minimal_polynomial_op(apply_fn, dim: int) -> Polynomial:
    """Minimal polynomial of a linear operator given as a sparse apply.

    apply_fn maps a sparse dict vector to a sparse dict vector.  Krylov
    chains from basis seeds are combined by lcm; collected chain vectors
    span the whole space at the end, which certifies the result (p kills
    every chain vector, hence everything).
    """
    span = SparseEchelon(dim)
    minpoly = Polynomial([ONE])
    for seed in range(dim):
        if span.rank == dim:
            break
        if not span.reduce({seed: ONE}):
            continue
        chain = [{seed: ONE}]
        local = SparseEchelon(dim)
        local.insert(chain[0])
        while True:
            nxt = apply_fn(chain[-1])
            chain.append(nxt)
            if not local.insert(nxt):
                break
            if len(chain) > dim + 1:
                raise RuntimeError("krylov chain too long")
        ann = _annihilator_from_chain(chain)
        if not (minpoly % ann).is_zero():
            minpoly = poly_lcm(minpoly, ann)
        for v in chain[:-1]:
            span.insert(v)
    return minpoly


def minimal_polynomial(m: Matrix) -> Polynomial:
    if m.rows != m.cols:
        raise NotSquare("minimal polynomial needs a square matrix")
    cols = [{i: m.data[i][j] for i in range(m.rows) if not m.data[i][j].is_zero()}
            for j in range(m.cols)]

    def apply_fn(v):
        out = {}
        for j, c in v.items():
            vec_add_scaled(out, c, cols[j])
        return out

    return minimal_polynomial_op(apply_fn, m.rows)


# =========================================================================
# Smith normal form over Z
# =========================================================================

class IntMatrix:
    """Arbitrary-precision integer matrix."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        self.data = [[int(x) for x in row] for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0

    @staticmethod
    def identity(n):
        return IntMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __mul__(self, other):
        out = [[sum(self.data[i][k] * other.data[k][j] for k in range(self.cols))
                for j in range(other.cols)] for i in range(self.rows)]
        return IntMatrix(out)

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.data == other.data


def int_det(m: IntMatrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = m.rows
    if n != m.cols:
        raise NotSquare("determinant of non-square matrix")
    if n == 0:
        return 1
    a = [row[:] for row in m.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m: IntMatrix):
    """Smith normal form D = L m R.

    Returns (invariants, L, R) with L, R unimodular and each invariant
    dividing the next (invariants include any zero diagonal entries).
    """
    a = [row[:] for row in m.data]
    rows, cols = m.rows, m.cols
    L = IntMatrix.identity(rows).data
    R = IntMatrix.identity(cols).data

    def row_op(i, j, c):  # row_i += c * row_j
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        L[i] = [x + c * y for x, y in zip(L[i], L[j])]

    def col_op(i, j, c):  # col_i += c * col_j
        for r in a:
            r[i] += c * r[j]
        for r in R:
            r[i] += c * r[j]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        L[i], L[j] = L[j], L[i]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in R:
            r[i], r[j] = r[j], r[i]

    def row_neg(i):
        a[i] = [-x for x in a[i]]
        L[i] = [-x for x in L[i]]

    t = 0
    n = min(rows, cols)
    while t < n:
        # find a pivot of least absolute value in the trailing block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = a[i][j]
                if v != 0 and (best is None or abs(v) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        row_swap(t, best[0])
        col_swap(t, best[1])
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    row_op(i, t, -q)
                    if a[i][t] != 0:
                        row_swap(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    col_op(j, t, -q)
                    if a[t][j] != 0:
                        col_swap(t, j)
                        dirty = True
            if not dirty:
                break
        # divisibility: pivot must divide every remaining entry
        fixed = True
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t] != 0:
                    row_op(t, i, 1)
                    fixed = False
                    break
            if not fixed:
                break
        if fixed:
            if a[t][t] < 0:
                row_neg(t)
            t += 1
    inv = [a[i][i] if i < cols else 0 for i in range(n)]
    return inv, IntMatrix(L), IntMatrix(R)


def snf_diagonal(m: IntMatrix):
    """Invariant factors only (including zeros for the free part)."""
    return smith_normal_form(m)[0]


def lattice_row_reduce(rows, ncols: int):
    """Hermite-style basis of the lattice spanned by integer rows.

    Keeps at most ncols rows; useful to shrink huge relation sets before SNF.
    """
    basis = {}  # leading col -> row
    queue = [list(r) for r in rows]
    while queue:
        row = queue.pop()
        while True:
            lead = next((i for i, x in enumerate(row) if x != 0), None)
            if lead is None:
                break
            cur = basis.get(lead)
            if cur is None:
                if row[lead] < 0:
                    row = [-x for x in row]
                basis[lead] = row
                break
            if row[lead] % cur[lead] == 0:
                q = row[lead] // cur[lead]
                row = [x - q * y for x, y in zip(row, cur)]
            else:
                g, u, v = _xgcd(cur[lead], row[lead])
                comb = [u * x + v * y for x, y in zip(cur, row)]
                new_cur = [x - (cur[lead] // g) * y for x, y in zip(cur, comb)]
                row = [x - (row[lead] // g) * y for x, y in zip(row, comb)]
                basis[lead] = comb
                if any(new_cur):
                    queue.append(new_cur)
    return [basis[k] for k in sorted(basis)]


def _xgcd(aa: int, bb: int):
    x0, x1, y0, y1 = 1, 0, 0, 1
    a, b = aa, bb
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


# =========================================================================
# modular rank bound (numpy, exact certification)
# =========================================================================

def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _find_modulus(start: int = 999_983):
    """A prime p = 1 mod 3 near 2**20 together with a cube root of 1.

    Primes stay below 2**21 so that mod-p row operations in float64
    (products below 2**42, row sums below 2**53) are exact.
    """
    p = start
    while True:
        if p % 3 == 1 and _is_probable_prime(p):
            for g in range(2, 100):
                w = pow(g, (p - 1) // 3, p)
                if w != 1 and (w * w + w + 1) % p == 0:
                    return p, w
        p += 2


_MODULI_CACHE = []


def rank_moduli(count: int = 3):
    global _MODULI_CACHE
    while len(_MODULI_CACHE) < count:
        start = (_MODULI_CACHE[-1][0] + 2) if _MODULI_CACHE else 999_983
        _MODULI_CACHE.append(_find_modulus(start))
    return _MODULI_CACHE[:count]


class BadPrime(ArithmeticError):
    pass


def _row_mod(row: dict, ncols: int, p: int, w: int, inv_cache: dict):
    out = np.zeros(ncols, dtype=np.float64)
    for k, v in row.items():
        dinv = inv_cache.get(v.d)
        if dinv is None:
            if v.d % p == 0:
                raise BadPrime
            dinv = pow(v.d, -1, p)
            inv_cache[v.d] = dinv
        out[k] = (v.p + v.q * w) * dinv % p
    return out


def rank_mod_p(rows, ncols: int, limit: int | None = None) -> int:
    """Lower bound for the exact rank of sparse Scalar rows.

    Performs blocked Gauss elimination modulo a prime in exact float64
    integer arithmetic; the returned value never exceeds the true rank, so
    it certifies rank lower bounds exactly.  Stops early once `limit` is
    reached, if given.
    """
    for p, w in rank_moduli():
        try:
            return _rank_mod_single(rows, ncols, p, w, limit)
        except BadPrime:
            continue
    raise RuntimeError("no suitable prime found")


def _rank_mod_single(rows, ncols, p, w, limit):
    cap = ncols if limit is None else min(limit, ncols)
    pivots = np.zeros((cap, ncols), dtype=np.float64)  # rref rows, unit pivot
    pivot_cols: list[int] = []
    inv_cache: dict = {}
    rows_iter = iter(rows)
    done = False
    while not done:
        block = []
        for row in rows_iter:
            block.append(_row_mod(row, ncols, p, w, inv_cache))
            if len(block) >= 256:
                break
        else:
            done = True
        if not block:
            break
        b = np.array(block, dtype=np.float64)
        k_old = len(pivot_cols)
        if k_old:
            coeffs = b[:, pivot_cols]
            if coeffs.any():
                b = (b - coeffs @ pivots[:k_old]) % p
        new_rows: list[int] = []
        for r in range(b.shape[0]):
            nz = np.nonzero(b[r])[0]
            if nz.size == 0:
                continue
            c = int(nz[0])
            inv = pow(int(b[r, c]), -1, p)
            row = b[r] * inv % p
            b[r] = row
            col = b[:, c].copy()
            col[r] = 0
            touched = np.nonzero(col)[0]
            if touched.size:
                b[touched] = (b[touched] - np.outer(col[touched], row)) % p
            k = len(pivot_cols)
            pivots[k] = row
            pivot_cols.append(c)
            new_rows.append(k)
            if limit is not None and len(pivot_cols) >= limit:
                return len(pivot_cols)
        # re-reduce the old pivot rows against the block's pivots in one go
        if new_rows and k_old:
            newcols = [pivot_cols[i] for i in new_rows]
            coeffs = pivots[:k_old][:, newcols]
            if coeffs.any():
                pivots[:k_old] = (pivots[:k_old]
                                  - coeffs @ pivots[new_rows]) % p
    return len(pivot_cols)


# =========================================================================
# integer-pair sparse operators (cleared denominators)
# =========================================================================

def clear_denominators(table):
    """Scale a sparse Scalar table to integer pairs (p, q).

    `table` is a dict key -> dict key2 -> Scalar.  Returns (D, newtable)
    with newtable values integer pairs for D * scalar.
    """
    D = 1
    for sub in table.values():
        for v in sub.values():
            D = D // gcd(D, v.d) * v.d
    out = {}
    for k, sub in table.items():
        out[k] = {k2: (v.p * (D // v.d), v.q * (D // v.d)) for k2, v in sub.items()}
    return D, out
