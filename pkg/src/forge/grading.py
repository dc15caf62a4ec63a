"""Abelian group gradings on structure-constant algebras.

A grading is a degree assignment on a distinguished homogeneous basis with
values in a finitely generated abelian group (free part plus torsion part).
The module verifies gradings, computes Hesselink type tuples, computes the
universal grading group by Smith normal form of the relation lattice, forms
coarsenings along group homomorphisms, and exposes the catalog of gradings
on Cayley algebras, quaternion algebras and symmetric composition algebras.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import compose
from .algebra import Algebra
from .exact import sc
from .linalg import IntMatrix, lattice_row_reduce, smith_normal_form
from .report import Report


class Unverified(RuntimeError):
    pass


class IllDefinedHom(ValueError):
    pass


class BadParams(ValueError):
    pass


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank x Z_m1 x ... x Z_mt; elements are flat int tuples."""

    free_rank: int
    torsion: tuple = ()

    @property
    def ncoords(self) -> int:
        return self.free_rank + len(self.torsion)

    def zero(self):
        return (0,) * self.ncoords

    def canon(self, elem):
        elem = tuple(elem)
        if len(elem) != self.ncoords:
            raise ValueError("element length %d != %d" % (len(elem), self.ncoords))
        free = elem[:self.free_rank]
        tors = tuple(r % m for r, m in zip(elem[self.free_rank:], self.torsion))
        return free + tors

    def add(self, a, b):
        return self.canon(tuple(x + y for x, y in zip(a, b)))

    def neg(self, a):
        return self.canon(tuple(-x for x in a))

    def scale(self, n: int, a):
        return self.canon(tuple(n * x for x in a))

    def is_zero(self, a) -> bool:
        return self.canon(a) == self.zero()

    def elements_generate(self, elems) -> bool:
        """Do the given elements generate the whole group?"""
        n = self.ncoords
        if n == 0:
            return True
        rows = [list(e) for e in elems]
        for i, m in enumerate(self.torsion):
            row = [0] * n
            row[self.free_rank + i] = m
            rows.append(row)
        reduced = lattice_row_reduce(rows, n)
        if len(reduced) < n:
            return False
        inv = smith_normal_form(IntMatrix(reduced))[0]
        return all(abs(d) == 1 for d in inv)

    def canonical_invariants(self):
        """(free_rank, invariant factors) in divisibility-normal form."""
        if not self.torsion:
            return (self.free_rank, ())
        diag = [[self.torsion[i] if i == j else 0 for j in range(len(self.torsion))]
                for i in range(len(self.torsion))]
        inv = smith_normal_form(IntMatrix(diag))[0]
        return (self.free_rank, tuple(d for d in inv if d not in (0, 1)))

    def describe(self) -> str:
        parts = ["Z"] * self.free_rank + ["Z%d" % m for m in self.torsion]
        return " x ".join(parts) if parts else "trivial"


@dataclass
class GroupHom:
    """Homomorphism given by images of the standard generators."""

    source: AbelianGroup
    target: AbelianGroup
    images: tuple  # one target element per source coordinate

    def __post_init__(self):
        self.images = tuple(self.target.canon(im) for im in self.images)
        if len(self.images) != self.source.ncoords:
            raise IllDefinedHom("need one image per source coordinate")
        for i, m in enumerate(self.source.torsion):
            im = self.images[self.source.free_rank + i]
            if not self.target.is_zero(self.target.scale(m, im)):
                raise IllDefinedHom("torsion generator %d of order %d maps to "
                                    "an element of larger order" % (i, m))

    def apply(self, elem):
        elem = self.source.canon(elem)
        out = self.target.zero()
        for c, im in zip(elem, self.images):
            if c:
                out = self.target.add(out, self.target.scale(c, im))
        return out


@dataclass
class Grading:
    """Degree assignment on the basis of an algebra."""

    algebra: Algebra
    group: AbelianGroup
    degrees: tuple
    name: str = ""
    verified: bool = field(default=False, compare=False)

    def __post_init__(self):
        self.degrees = tuple(self.group.canon(d) for d in self.degrees)
        if len(self.degrees) != self.algebra.dim:
            raise ValueError("need one degree per basis vector")

    def support(self):
        return sorted(set(self.degrees))

    def components(self) -> dict:
        out: dict = {}
        for i, d in enumerate(self.degrees):
            out.setdefault(d, []).append(i)
        return out

    def to_text(self) -> str:
        head = "group free=%d torsion=%s" % (
            self.group.free_rank,
            ",".join(str(m) for m in self.group.torsion) or "-")
        lines = [head]
        for i, d in enumerate(self.degrees):
            lines.append("deg %d = %s" % (i, " ".join(str(c) for c in d)))
        return "\n".join(lines) + "\n"


def grading_from_text(text: str, algebra: Algebra) -> Grading:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("group "):
        raise ValueError("missing group header")
    free = 0
    torsion: tuple = ()
    for tok in lines[0].split()[1:]:
        key, val = tok.split("=", 1)
        if key == "free":
            free = int(val)
        elif key == "torsion":
            torsion = tuple(int(x) for x in val.split(",")) if val != "-" else ()
    group = AbelianGroup(free, torsion)
    degrees = [group.zero()] * algebra.dim
    for ln in lines[1:]:
        if not ln.startswith("deg "):
            raise ValueError("malformed line %r" % ln)
        left, right = ln.split("=", 1)
        idx = int(left.split()[1])
        degrees[idx] = tuple(int(x) for x in right.split())
    return Grading(algebra, group, tuple(degrees))


# =========================================================================
# verification, type, universal group, coarsening
# =========================================================================

def verify_grading(gr: Grading) -> Report:
    """Check A_g A_h <= A_{g+h}, the polar pairing rule, and generation."""
    A, G = gr.algebra, gr.group
    name = "grading(%s%s)" % (A.name, ":" + gr.name if gr.name else "")
    deg = gr.degrees
    for (i, j), vec in A.products.items():
        target = G.add(deg[i], deg[j])
        for k in vec:
            if deg[k] != target:
                return Report(name, False,
                              {"rule": "product lands outside A_{g+h}"},
                              witness=(i, j, k))
    if A.polar is not None:
        pm = A.polar.data
        for i in range(A.dim):
            for j in range(A.dim):
                if not pm[i][j].is_zero() and not G.is_zero(G.add(deg[i], deg[j])):
                    return Report(name, False,
                                  {"rule": "n(A_g, A_h) = 0 unless g + h = 0"},
                                  witness=(i, j))
    if not G.elements_generate(set(deg)):
        return Report(name, False, {"rule": "support must generate the group"},
                      witness="support")
    gr.verified = True
    return Report(name, True, {"components": len(set(deg))})


def _require_verified(gr: Grading):
    if not gr.verified:
        rep = verify_grading(gr)
        if not rep.passed:
            raise Unverified("grading fails verification: %s" % (rep.witness,))


def grading_type(gr: Grading):
    """Type tuple (h1, ..., hl): h_i components of dimension i."""
    _require_verified(gr)
    dims = [len(idxs) for idxs in gr.components().values()]
    top = max(dims)
    return tuple(sum(1 for d in dims if d == i) for i in range(1, top + 1))


def universal_group(gr: Grading):
    """Universal grading group and the induced regrading.

    Generators: the support degrees.  Relations: a + b - c whenever
    0 != A_a A_b <= A_c.  The cokernel is read off the Smith normal form.
    Returns (group, degree_map, regraded Grading) where degree_map sends each
    support degree to its class.
    """
    _require_verified(gr)
    A, G = gr.algebra, gr.group
    support = gr.support()
    index = {d: i for i, d in enumerate(support)}
    s = len(support)
    deg = gr.degrees
    rel_rows = set()
    for (i, j), vec in A.products.items():
        if not vec:
            continue
        c = G.add(deg[i], deg[j])
        row = [0] * s
        row[index[deg[i]]] += 1
        row[index[deg[j]]] += 1
        row[index[c]] -= 1
        rel_rows.add(tuple(row))
    reduced = lattice_row_reduce([list(r) for r in rel_rows], s)
    if not reduced:
        inv, R = [], IntMatrix.identity(s)
    else:
        inv, _, R = smith_normal_form(IntMatrix(reduced))
    nrel = len(inv)
    free_pos = [j for j in range(s) if j >= nrel or inv[j] == 0]
    tors_pos = [j for j in range(nrel) if inv[j] not in (0, 1)]
    group = AbelianGroup(len(free_pos), tuple(inv[j] for j in tors_pos))

    def classify(degree):
        i = index[degree]
        y = [R.data[i][j] for j in range(s)]
        free = tuple(y[j] for j in free_pos)
        tors = tuple(y[j] % inv[j] for j in tors_pos)
        return free + tors

    degree_map = {d: classify(d) for d in support}
    new_degrees = tuple(degree_map[d] for d in deg)
    regraded = Grading(A, group, new_degrees, name=gr.name + ":universal")
    return group, degree_map, regraded


def coarsen(gr: Grading, hom: GroupHom) -> Grading:
    """Compose the degree map with a group homomorphism."""
    _require_verified(gr)
    if hom.source != gr.group:
        raise IllDefinedHom("homomorphism source does not match the grading group")
    return Grading(gr.algebra, hom.target,
                   tuple(hom.apply(d) for d in gr.degrees),
                   name=gr.name + ":coarse")


def grading_fingerprint(gr: Grading):
    """Necessary-condition fingerprint: canonical group invariants + type."""
    group, _, _ = universal_group(gr)
    return (group.canonical_invariants(), grading_type(gr))


# =========================================================================
# catalogs
# =========================================================================

Z = AbelianGroup(1)
Z2 = AbelianGroup(0, (2,))
Z3 = AbelianGroup(0, (3,))
Z4 = AbelianGroup(0, (4,))
Z2_2 = AbelianGroup(0, (2, 2))
Z2_3 = AbelianGroup(0, (2, 2, 2))
Z3_2 = AbelianGroup(0, (3, 3))
ZxZ = AbelianGroup(2)
ZxZ2 = AbelianGroup(1, (2,))

# split Cayley degree tables, basis order e1,e2,u1,u2,u3,v1,v2,v3
_CAYLEY_DEGREES = {
    "z3": (Z3, ((0,), (0,), (1,), (1,), (1,), (2,), (2,), (2,))),
    "z4": (Z4, ((0,), (0,), (1,), (1,), (2,), (3,), (3,), (2,))),
    "z-3grading": (Z, ((0,), (0,), (1,), (-1,), (0,), (-1,), (1,), (0,))),
    "z-5grading": (Z, ((0,), (0,), (1,), (1,), (-2,), (-1,), (-1,), (2,))),
    "z^2": (ZxZ, ((0, 0), (0, 0), (1, 0), (0, 1), (-1, -1),
                  (-1, 0), (0, -1), (1, 1))),
    "zxz2": (ZxZ2, ((0, 0), (0, 0), (1, 0), (-1, 1), (0, 1),
                    (-1, 0), (1, 1), (0, 1))),
}

CAYLEY_KINDS = ("z2", "z2^2", "z2^3", "z3", "z4", "z-3grading",
                "z-5grading", "z^2", "zxz2")


def cayley_grading(kind: str, params=(1, 1, 1)) -> Grading:
    """One of the nine gradings of a Cayley algebra, on its natural basis."""
    if kind in ("z2", "z2^2", "z2^3"):
        lams = tuple(sc(p) for p in params)
        if len(lams) != 3 or any(l.is_zero() for l in lams):
            raise BadParams("doubling tower needs three nonzero scalars")
        A = compose.cd_tower(*lams)
        bits = [((i >> 0) & 1, (i >> 1) & 1, (i >> 2) & 1) for i in range(8)]
        if kind == "z2":
            return Grading(A, Z2, tuple((b[2],) for b in bits), name="z2")
        if kind == "z2^2":
            return Grading(A, Z2_2, tuple((b[1], b[2]) for b in bits), name="z2^2")
        return Grading(A, Z2_3, tuple(bits), name="z2^3")
    if kind in _CAYLEY_DEGREES:
        group, degrees = _CAYLEY_DEGREES[kind]
        return Grading(compose.split_cayley(), group, degrees, name=kind)
    raise BadParams("unknown Cayley grading kind %r" % kind)


QUATERNION_KINDS = ("z2", "z2^2", "z-3grading")


def quaternion_grading(kind: str, params=(1, 1)) -> Grading:
    """Gradings of quaternion algebras: doubling steps or the matrix 3-grading."""
    if kind in ("z2", "z2^2"):
        lams = tuple(sc(p) for p in params)
        if len(lams) != 2 or any(l.is_zero() for l in lams):
            raise BadParams("doubling tower needs two nonzero scalars")
        A = compose.cd_tower(*lams)
        bits = [((i >> 0) & 1, (i >> 1) & 1) for i in range(4)]
        if kind == "z2":
            return Grading(A, Z2, tuple((b[1],) for b in bits), name="z2")
        return Grading(A, Z2_2, tuple(bits), name="z2^2")
    if kind == "z-3grading":
        A = compose.split_quaternion()
        return Grading(A, Z, ((0,), (0,), (1,), (-1,)), name="z-3grading")
    raise BadParams("unknown quaternion grading kind %r" % kind)


OKUBO_KINDS = ("z2", "z2^2", "z3", "z3^2", "z4", "z-3grading",
               "z-5grading", "z^2", "zxz2")


def okubo_grading(kind: str, params=(1, 1)) -> Grading:
    """The gradings of the eight-dimensional symmetric composition algebras
    that exist over fields of characteristic zero."""
    a, b = (sc(p) for p in params)
    if kind in ("z2", "z2^2"):
        S = compose.okubo_from_quaternion(b, a)
        if kind == "z2":
            degs = tuple((d,) for d in S.extras["z2_degrees"])
            return Grading(S, Z2, degs, name="z2")
        return Grading(S, Z2_2, S.extras["z2x2_degrees"], name="z2^2")
    if kind in ("z3", "z3^2"):
        S = compose.okubo(a, b)
        ij = compose.OKUBO_DEGREES
        if kind == "z3":
            return Grading(S, Z3, tuple((j,) for _, j in ij), name="z3")
        return Grading(S, Z3_2, ij, name="z3^2")
    if kind in ("z4", "z-5grading"):
        S = compose.petersson(compose.split_cayley(),
                              compose.tau_automorphism("nst"))
        S.name = "P8(nst)"
        group, degrees = _CAYLEY_DEGREES["z4" if kind == "z4" else "z-5grading"]
        return Grading(S, group, degrees, name=kind)
    if kind in ("z-3grading", "z^2", "zxz2"):
        S = compose.petersson(compose.split_cayley(),
                              compose.tau_automorphism("omega"))
        S.name = "P8(omega)"
        group, degrees = _CAYLEY_DEGREES[kind]
        return Grading(S, group, degrees, name=kind)
    raise BadParams("unknown Okubo grading kind %r" % kind)


def two_dim_z3_grading(xi=1) -> Grading:
    """Z3-grading of the two-dimensional symmetric composition algebra with
    isotropic norm: S_1 = span(x), S_2 = span(x*x), S_0 = 0."""
    S = compose.s2(xi)
    return Grading(S, Z3, ((1,), (2,)), name="dim2-z3")


DECLARED_GROUPS = {
    "z2": Z2, "z2^2": Z2_2, "z2^3": Z2_3, "z3": Z3, "z3^2": Z3_2, "z4": Z4,
    "z-3grading": Z, "z-5grading": Z, "z^2": ZxZ, "zxz2": ZxZ2,
}
