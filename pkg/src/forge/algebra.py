"""Structure-constant algebras over Q(w) and their identity checkers.

An algebra is a sparse tensor (i, j) -> sum_k c_k e_k together with an
optional polar form of a norm.  All identity checks work by full
multilinearization on basis tuples, which is equivalent to the quadratic or
cubic identities in characteristic zero.  The heavy scans (Jacobi, Jordan)
run over denominator-cleared integer tables instead of Scalar objects.
"""

from __future__ import annotations

import random

from .exact import ONE, ZERO, Scalar, format_scalar, parse_scalar, sc
from .linalg import (Matrix, SparseEchelon, clear_denominators, rank, solve,
                     sparse_kernel, vec_add_scaled)
from .report import Report

DEFAULT_SEED = 271828
SAMPLED_DIM_THRESHOLD = 200
DEFAULT_SAMPLE_COUNT = 1_000_000


class MixedAlgebras(ValueError):
    pass


class MissingForm(ValueError):
    pass


class Algebra:
    """Finite-dimensional algebra given by sparse structure constants."""

    def __init__(self, dim: int, name: str, products: dict, polar=None, labels=None):
        self.dim = dim
        self.name = name
        clean = {}
        for (i, j), vec in products.items():
            v = {k: sc(c) for k, c in vec.items() if not sc(c).is_zero()}
            if v:
                clean[(i, j)] = v
        self.products = clean
        if polar is not None and not isinstance(polar, Matrix):
            polar = Matrix(polar)
        self.polar = polar
        self.labels = list(labels) if labels else None
        self.extras: dict = {}
        self._cache: dict = {}

    # ---- basics ---------------------------------------------------------

    def product(self, i: int, j: int) -> dict:
        return self.products.get((i, j), {})

    def element(self, coords) -> "Element":
        return Element(self, coords)

    def basis_element(self, i: int) -> "Element":
        coords = [ZERO] * self.dim
        coords[i] = ONE
        return Element(self, coords)

    def basis(self):
        return [self.basis_element(i) for i in range(self.dim)]

    def zero(self) -> "Element":
        return Element(self, [ZERO] * self.dim)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else "e%d" % i

    def multiply_sparse(self, a: dict, b: dict) -> dict:
        out: dict = {}
        prod = self.products
        for i, ca in a.items():
            for j, cb in b.items():
                vec = prod.get((i, j))
                if vec:
                    vec_add_scaled(out, ca * cb, vec)
        return out

    def polar_pair_sparse(self, a: dict, b: dict) -> Scalar:
        if self.polar is None:
            raise MissingForm("algebra %s has no polar form" % self.name)
        pm = self.polar.data
        acc = ZERO
        for i, ca in a.items():
            row = pm[i]
            for j, cb in b.items():
                v = row[j]
                if v.p or v.q:
                    acc = acc + ca * cb * v
        return acc

    def norm_sparse(self, a: dict) -> Scalar:
        return self.polar_pair_sparse(a, a) * Scalar(1, 0, 2)

    def polar_nondegenerate(self) -> bool:
        if self.polar is None:
            raise MissingForm("algebra %s has no polar form" % self.name)
        key = "polar_nondeg"
        if key not in self._cache:
            self._cache[key] = rank(self.polar) == self.dim
        return self._cache[key]

    def __repr__(self):
        return "Algebra(%s, dim=%d)" % (self.name, self.dim)

    # ---- integer tables for hot scans ------------------------------------

    def int_table(self):
        """(D, table, rational) with table[j][k] = ((m, p, q), ...) for D*c."""
        key = "int_table"
        if key not in self._cache:
            D, scaled = clear_denominators(self.products)
            table: dict = {}
            rational = True
            for (i, j), vec in scaled.items():
                entries = []
                for m, (p, q) in vec.items():
                    entries.append((m, p, q))
                    if q:
                        rational = False
                table.setdefault(i, {})[j] = tuple(entries)
            self._cache[key] = (D, table, rational)
        return self._cache[key]

    # ---- interchange format ----------------------------------------------

    def to_text(self) -> str:
        lines = ["dim %d over Q(w)" % self.dim]
        for (i, j) in sorted(self.products):
            vec = self.products[(i, j)]
            terms = ",".join("%d:%s" % (k, format_scalar(vec[k])) for k in sorted(vec))
            lines.append("%d %d -> %s" % (i, j, terms))
        if self.polar is not None:
            for i in range(self.dim):
                for j in range(i, self.dim):
                    v = self.polar.data[i][j]
                    if not v.is_zero():
                        lines.append("polar %d %d %s" % (i, j, format_scalar(v)))
        return "\n".join(lines) + "\n"


def algebra_from_text(text: str, name: str = "ingested") -> Algebra:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("dim "):
        raise ValueError("missing header line")
    head = lines[0].split()
    if len(head) < 4 or head[2] != "over" or head[3] != "Q(w)":
        raise ValueError("malformed header %r" % lines[0])
    dim = int(head[1])
    products: dict = {}
    polar_entries = []
    for ln in lines[1:]:
        if ln.startswith("polar "):
            _, i, j, val = ln.split(None, 3)
            polar_entries.append((int(i), int(j), parse_scalar(val)))
        else:
            left, right = ln.split("->")
            i, j = (int(t) for t in left.split())
            vec = {}
            for term in right.strip().split(","):
                k, val = term.split(":", 1)
                vec[int(k)] = parse_scalar(val)
            products[(i, j)] = vec
    polar = None
    if polar_entries:
        polar = Matrix.zero(dim, dim)
        for i, j, v in polar_entries:
            polar.data[i][j] = v
            polar.data[j][i] = v
    return Algebra(dim, name, products, polar=polar)


class Element:
    """Vector of exact coordinates in a fixed algebra."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: Algebra, coords):
        coords = tuple(sc(c) for c in coords)
        if len(coords) != algebra.dim:
            raise ValueError("coordinate length %d != dim %d"
                             % (len(coords), algebra.dim))
        self.algebra = algebra
        self.coords = coords

    def sparse(self) -> dict:
        return {i: c for i, c in enumerate(self.coords) if c.p or c.q}

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.algebra, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.algebra, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "Element":
        return Element(self.algebra, [-a for a in self.coords])

    def scale(self, c) -> "Element":
        c = sc(c)
        return Element(self.algebra, [c * a for a in self.coords])

    def __mul__(self, other: "Element") -> "Element":
        self._check(other)
        out = self.algebra.multiply_sparse(self.sparse(), other.sparse())
        coords = [ZERO] * self.algebra.dim
        for k, v in out.items():
            coords[k] = v
        return Element(self.algebra, coords)

    def _check(self, other: "Element"):
        if other.algebra is not self.algebra:
            raise MixedAlgebras("elements of different algebras")

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra is other.algebra and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coords):
            if c.is_zero():
                continue
            cs = format_scalar(c)
            terms.append("%s*%s" % (cs, self.algebra.label(i)))
        return " + ".join(terms) if terms else "0"


def multiply(a: Element, b: Element) -> Element:
    return a * b


# =========================================================================
# identity checkers
# =========================================================================

def verify_composition(A: Algebra) -> Report:
    """Multiplicativity of the norm, fully linearized on basis 4-tuples."""
    if A.polar is None:
        raise MissingForm("composition check needs a polar form")
    name = "composition(%s)" % A.name
    if not A.polar_nondegenerate():
        return Report(name, False, {"reason": "degenerate polar form"},
                      witness="polar")
    d = A.dim
    P = [[A.product(i, j) for j in range(d)] for i in range(d)]
    N = A.polar.data
    for i in range(d):
        for j in range(d):
            pij = P[i][j]
            for k in range(d):
                nik = N[i][k]
                for l in range(d):
                    lhs = A.polar_pair_sparse(pij, P[k][l]) \
                        + A.polar_pair_sparse(P[k][j], P[i][l])
                    if lhs != nik * N[j][l]:
                        return Report(name, False, witness=(i, j, k, l))
    return Report(name, True, {"dim": d})


def verify_symmetric(A: Algebra) -> Report:
    """Associativity of the polar form plus the linearized (x*y)*x = n(x)y."""
    if A.polar is None:
        raise MissingForm("symmetric-composition check needs a polar form")
    name = "symmetric(%s)" % A.name
    if not A.polar_nondegenerate():
        return Report(name, False, {"reason": "degenerate polar form"},
                      witness="polar")
    d = A.dim
    P = [[A.product(i, j) for j in range(d)] for i in range(d)]
    N = A.polar.data
    for i in range(d):
        for j in range(d):
            for k in range(d):
                if A.polar_pair_sparse(P[i][j], {k: ONE}) != \
                        A.polar_pair_sparse({i: ONE}, P[j][k]):
                    return Report(name, False,
                                  {"identity": "n(x*y,z)=n(x,y*z)"},
                                  witness=(i, j, k))
    for i in range(d):
        for j in range(d):
            for k in range(d):
                acc: dict = {}
                vec_add_scaled(acc, ONE, A.multiply_sparse(P[i][j], {k: ONE}))
                vec_add_scaled(acc, ONE, A.multiply_sparse(P[k][j], {i: ONE}))
                target = N[i][k]
                ok = True
                for m, v in acc.items():
                    want = target if m == j else ZERO
                    if v != want:
                        ok = False
                        break
                if ok and j not in acc and not target.is_zero():
                    ok = False
                if not ok:
                    return Report(name, False,
                                  {"identity": "(x*y)*x=n(x)y linearized"},
                                  witness=(i, j, k))
    return Report(name, True, {"dim": d})


def _pair_mul(p1, q1, p2, q2):
    t = q1 * q2
    return p1 * p2 - t, p1 * q2 + q1 * p2 - t


def _jacobi_triple_ok(T, rational, i, j, k) -> bool:
    if rational:
        acc: dict = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            tb = T.get(b)
            if not tb:
                continue
            lst = tb.get(c)
            if not lst:
                continue
            ta = T.get(a)
            if not ta:
                continue
            for m, p1, _ in lst:
                col = ta.get(m)
                if col:
                    for r, p2, _ in col:
                        acc[r] = acc.get(r, 0) + p1 * p2
        return not any(acc.values())
    accp: dict = {}
    accq: dict = {}
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        tb = T.get(b)
        if not tb:
            continue
        lst = tb.get(c)
        if not lst:
            continue
        ta = T.get(a)
        if not ta:
            continue
        for m, p1, q1 in lst:
            col = ta.get(m)
            if col:
                for r, p2, q2 in col:
                    t = q1 * q2
                    accp[r] = accp.get(r, 0) + p1 * p2 - t
                    accq[r] = accq.get(r, 0) + p1 * q2 + q1 * p2 - t
    return not any(accp.values()) and not any(accq.values())


def verify_lie(L: Algebra, mode: str = "auto", samples: int = DEFAULT_SAMPLE_COUNT,
               seed: int = DEFAULT_SEED, priority_block=None) -> Report:
    """Anticommutativity on all pairs; Jacobi by scan.

    mode "auto": full scan below dim 200, else the mixed policy (exhaustive
    over triples meeting priority_block, plus fixed-seed samples).
    mode "full": always exhaustive.  mode "sampled": sampled only.
    """
    name = "lie(%s)" % L.name
    d = L.dim
    for i in range(d):
        vec = L.product(i, i)
        if vec:
            return Report(name, False, {"identity": "[x,x]=0"}, witness=(i, i))
    for i in range(d):
        for j in range(i + 1, d):
            a, b = L.product(i, j), L.product(j, i)
            if set(a) != set(b) or any(a[m] != -b[m] for m in a):
                return Report(name, False, {"identity": "[x,y]=-[y,x]"},
                              witness=(i, j))
    _, T, rational = L.int_table()
    if mode == "auto":
        mode = "full" if d < SAMPLED_DIM_THRESHOLD else "mixed"
    policy = {"mode": mode, "dim": d}
    if mode == "full":
        for i in range(d):
            for j in range(i + 1, d):
                for k in range(j + 1, d):
                    if not _jacobi_triple_ok(T, rational, i, j, k):
                        return Report(name, False, policy, witness=(i, j, k))
        policy["triples"] = d * (d - 1) * (d - 2) // 6
        return Report(name, True, policy)
    checked = 0
    if mode == "mixed" and priority_block:
        lo, hi = priority_block
        policy["priority_block"] = [lo, hi]
        for i in range(lo, hi):
            for j in range(i + 1, d):
                for k in range(j + 1, d):
                    if not _jacobi_triple_ok(T, rational, i, j, k):
                        return Report(name, False, policy, witness=(i, j, k))
                    checked += 1
    rng = random.Random(seed)
    policy["seed"] = seed
    policy["samples"] = samples
    for _ in range(samples):
        i, j, k = sorted(rng.sample(range(d), 3))
        if not _jacobi_triple_ok(T, rational, i, j, k):
            return Report(name, False, policy, witness=(i, j, k))
        checked += 1
    policy["triples"] = checked
    return Report(name, True, policy)


def verify_jordan(J: Algebra) -> Report:
    """Commutativity on pairs; full linearization of the Jordan identity."""
    name = "jordan(%s)" % J.name
    d = J.dim
    for i in range(d):
        for j in range(i + 1, d):
            a, b = J.product(i, j), J.product(j, i)
            if set(a) != set(b) or any(a[m] != b[m] for m in a):
                return Report(name, False, {"identity": "commutativity"},
                              witness=(i, j))
    _, T, rational = J.int_table()

    def pmul(u: dict, v: dict) -> dict:
        # u, v sparse with integer-pair values
        out: dict = {}
        for a, (p1, q1) in u.items():
            ta = T.get(a)
            if not ta:
                continue
            for b, (p2, q2) in v.items():
                lst = ta.get(b)
                if not lst:
                    continue
                pp, qq = _pair_mul(p1, q1, p2, q2)
                for m, p3, q3 in lst:
                    np_, nq = _pair_mul(pp, qq, p3, q3)
                    cur = out.get(m)
                    out[m] = (np_, nq) if cur is None else (cur[0] + np_, cur[1] + nq)
        return out

    unit = {}
    basis_units = [{i: (1, 0)} for i in range(d)]

    def basis_prod(i, j):
        lst = T.get(i, {}).get(j, ())
        return {m: (p, q) for m, p, q in lst}

    # full polarization of (x^2 o y) o x = x^2 o (y o x): for every multiset
    # {i,j,k} of x-slots and every y-slot l, the three cyclic substitutions sum
    # to zero; commutativity (already checked) collapses the remaining orders.
    for i in range(d):
        for j in range(i, d):
            for k in range(j, d):
                pairs = ((basis_prod(i, j), k), (basis_prod(j, k), i),
                         (basis_prod(i, k), j))
                for l in range(d):
                    acc: dict = {}
                    el = basis_units[l]
                    for u, c in pairs:
                        if not u:
                            continue
                        ec = basis_units[c]
                        for m, (p, q) in pmul(pmul(u, el), ec).items():
                            cur = acc.get(m)
                            acc[m] = (p, q) if cur is None else (cur[0] + p, cur[1] + q)
                        for m, (p, q) in pmul(u, pmul(el, ec)).items():
                            cur = acc.get(m)
                            acc[m] = (-p, -q) if cur is None else (cur[0] - p, cur[1] - q)
                    if any(p or q for p, q in acc.values()):
                        return Report(name, False,
                                      {"identity": "jordan linearized"},
                                      witness=(i, j, k, l))
    return Report(name, True, {"dim": d})


# =========================================================================
# derived subspaces
# =========================================================================

def _matrix_from_kernel_vec(vec: dict, dim: int) -> Matrix:
    m = Matrix.zero(dim, dim)
    for u, v in vec.items():
        m.data[u // dim][u % dim] = v
    return m


def derivation_algebra(A: Algebra):
    """Exact basis of {d : d(xy) = d(x)y + x d(y)} as matrices."""
    d = A.dim
    P = [[A.product(i, j) for j in range(d)] for i in range(d)]

    def rows():
        for i in range(d):
            for j in range(d):
                pij = P[i][j]
                for m in range(d):
                    row: dict = {}
                    for l, c in pij.items():
                        row[m * d + l] = row.get(m * d + l, ZERO) + c
                    for r in range(d):
                        c = P[r][j].get(m)
                        if c is not None:
                            key = r * d + i
                            row[key] = row.get(key, ZERO) - c
                        c = P[i][r].get(m)
                        if c is not None:
                            key = r * d + j
                            row[key] = row.get(key, ZERO) - c
                    row = {k: v for k, v in row.items() if v.p or v.q}
                    if row:
                        yield row

    kern = sparse_kernel(rows(), d * d)
    return [_matrix_from_kernel_vec(v, d) for v in kern]


def orthogonal_algebra(A: Algebra):
    """Exact basis of the norm-skew maps o(A, n)."""
    if A.polar is None:
        raise MissingForm("orthogonal algebra needs a polar form")
    d = A.dim
    N = A.polar.data

    def rows():
        for i in range(d):
            for j in range(i, d):
                row: dict = {}
                for r in range(d):
                    c = N[r][j]
                    if c.p or c.q:
                        key = r * d + i
                        row[key] = row.get(key, ZERO) + c
                    c = N[i][r]
                    if c.p or c.q:
                        key = r * d + j
                        row[key] = row.get(key, ZERO) + c
                row = {k: v for k, v in row.items() if v.p or v.q}
                if row:
                    yield row

    kern = sparse_kernel(rows(), d * d)
    return [_matrix_from_kernel_vec(v, d) for v in kern]


def matrix_in_span(m: Matrix, basis, dim: int) -> bool:
    ech = SparseEchelon(dim * dim)
    for b in basis:
        ech.insert({r * dim + c: b.data[r][c] for r in range(dim)
                    for c in range(dim) if not b.data[r][c].is_zero()})
    probe = {r * dim + c: m.data[r][c] for r in range(dim)
             for c in range(dim) if not m.data[r][c].is_zero()}
    return ech.contains(probe)


def subalgebra_generated(A: Algebra, gens):
    """Closure of the span of gens under multiplication; echelonized basis."""
    d = A.dim
    ech = SparseEchelon(d)
    for g in gens:
        v = g.sparse() if isinstance(g, Element) else dict(g)
        ech.insert(v)
    while True:
        current = [dict(r) for r in ech.pivot_rows.values()]
        grew = False
        for u in current:
            for v in current:
                prod = A.multiply_sparse(u, v)
                if prod and ech.insert(prod):
                    grew = True
        if not grew:
            break
    basis = []
    for lead in sorted(ech.pivot_rows):
        row = ech.pivot_rows[lead]
        coords = [ZERO] * d
        for k, c in row.items():
            coords[k] = c
        basis.append(Element(A, coords))
    return basis


def commutative_center(A: Algebra):
    """Basis of {x : xy = yx for all y}."""
    d = A.dim
    P = [[A.product(i, j) for j in range(d)] for i in range(d)]

    def rows():
        for j in range(d):
            for m in range(d):
                row: dict = {}
                for i in range(d):
                    c = P[i][j].get(m, ZERO) - P[j][i].get(m, ZERO)
                    if c.p or c.q:
                        row[i] = c
                if row:
                    yield row

    kern = sparse_kernel(rows(), d)
    out = []
    for v in kern:
        coords = [ZERO] * d
        for k, c in v.items():
            coords[k] = c
        out.append(Element(A, coords))
    return out


def find_unity(A: Algebra):
    """The two-sided unity as an Element, or None."""
    d = A.dim
    rows, rhs = [], []
    for i in range(d):
        for m in range(d):
            row = [A.product(j, i).get(m, ZERO) for j in range(d)]
            rows.append(row)
            rhs.append(ONE if m == i else ZERO)
            row = [A.product(i, j).get(m, ZERO) for j in range(d)]
            rows.append(row)
            rhs.append(ONE if m == i else ZERO)
    x = solve(Matrix(rows), rhs)
    if x is None:
        return None
    e = Element(A, x)
    for i in range(d):
        b = A.basis_element(i)
        if e * b != b or b * e != b:
            return None
    return e


def operator_matrix(A: Algebra, kind: str, x: Element) -> Matrix:
    """Matrix of left/right multiplication or ad by x on the basis."""
    d = A.dim
    m = Matrix.zero(d, d)
    xs = x.sparse()
    for j in range(d):
        ej = {j: ONE}
        if kind == "left":
            out = A.multiply_sparse(xs, ej)
        elif kind == "right":
            out = A.multiply_sparse(ej, xs)
        elif kind == "ad":
            out = A.multiply_sparse(xs, ej)
            vec_add_scaled(out, Scalar(-1), A.multiply_sparse(ej, xs))
        else:
            raise ValueError(kind)
        for r, c in out.items():
            m.data[r][j] = c
    return m
