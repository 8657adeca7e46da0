"""Exact sparse linear algebra over the rationals and prime fields.

Everything downstream (structure-constant algebra, chain complexes, homology
ranks) reduces to a handful of primitives implemented here: sparse linear
maps between labelled finite-dimensional spaces, reduced row echelon forms,
kernels, images, intersections, quotients, Kronecker products, and a fixpoint
solver for the largest subspace invariant under an invertible map and its
inverse.

Design notes:

* Scalars are exact.  Over the rationals we use ``gmpy2.mpq`` when available
  (``fractions.Fraction`` otherwise); over GF(p) plain Python ints reduced
  mod p.  No floating point enters anywhere.
* Vectors are dicts ``{coordinate: scalar}`` with no explicit zeros; linear
  maps are column-major dicts ``{col: {row: scalar}}``.
* Subspaces are stored as reduced row echelon bases, which are canonical:
  two equal subspaces compare equal coordinate-for-coordinate.
* Row reduction picks, within the leading column, the sparsest available row
  (Markowitz-style fill control); the resulting RREF is unique regardless.

All values are immutable by convention and safe to share across threads;
nothing here mutates its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

try:
    from gmpy2 import mpq as _rat
except ImportError:  # pragma: no cover - gmpy2 is a hard dep, fallback for safety
    from fractions import Fraction as _rat

Vector = Dict[int, object]


class FieldSpec:
    """An exact field of scalars: the rationals or GF(p) for a prime p.

    ``kind`` is ``"rationals"`` or ``"prime_field"``; ``characteristic`` is 0
    for the rationals and the prime p otherwise.  Instances carry bound
    arithmetic closures (``add``, ``mul``, ...) so inner loops avoid
    per-operation dispatch.
    """

    __slots__ = ("kind", "characteristic", "add", "sub", "mul", "neg", "inv")

    def __init__(self, kind: str, characteristic: int = 0):
        if kind == "rationals":
            if characteristic != 0:
                raise ValueError("rationals have characteristic 0")
            self.add = lambda a, b: a + b
            self.sub = lambda a, b: a - b
            self.mul = lambda a, b: a * b
            self.neg = lambda a: -a
            self.inv = lambda a: 1 / _rat(a)
        elif kind == "prime_field":
            p = characteristic
            if p < 2 or not _is_prime(p):
                raise ValueError(f"characteristic must be prime, got {p}")
            self.add = lambda a, b: (a + b) % p
            self.sub = lambda a, b: (a - b) % p
            self.mul = lambda a, b: (a * b) % p
            self.neg = lambda a: (-a) % p
            self.inv = lambda a: pow(a, -1, p)
        else:
            raise ValueError(f"unknown field kind {kind!r}")
        self.kind = kind
        self.characteristic = characteristic

    @staticmethod
    def rationals() -> "FieldSpec":
        return FieldSpec("rationals", 0)

    @staticmethod
    def gf(p: int) -> "FieldSpec":
        return FieldSpec("prime_field", p)

    @property
    def zero(self):
        return 0 if self.characteristic else _rat(0)

    @property
    def one(self):
        return 1 if self.characteristic else _rat(1)

    def of(self, x) -> object:
        """Coerce an int, string like ``"-3/2"``, or scalar into the field."""
        if isinstance(x, str):
            x = x.strip()
            if "/" in x:
                num, den = x.split("/")
                return self.div(self.of(int(num)), self.of(int(den)))
            x = int(x)
        if self.characteristic:
            return int(x) % self.characteristic
        return _rat(x)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def to_str(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.kind == other.kind
            and self.characteristic == other.characteristic
        )

    def __hash__(self):
        return hash((self.kind, self.characteristic))

    def __repr__(self):
        if self.characteristic:
            return f"GF({self.characteristic})"
        return "Q"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class VecSpace:
    """A finite-dimensional space with a labelled, ordered basis."""

    dim: int
    labels: Tuple[str, ...]

    def __post_init__(self):
        if self.dim != len(self.labels):
            raise ValueError("label count must equal dim")
        if len(set(self.labels)) != self.dim:
            raise ValueError("basis labels must be unique")

    @staticmethod
    def make(labels: Sequence[str]) -> "VecSpace":
        return VecSpace(len(labels), tuple(labels))

    @staticmethod
    def scalar() -> "VecSpace":
        """The ground field as a 1-dimensional space."""
        return VecSpace(1, ("1k",))

    def __repr__(self):
        return f"VecSpace(dim={self.dim})"


def tensor_space(*spaces: VecSpace, sep: str = "|") -> VecSpace:
    """Tensor product space; basis ordered lexicographically, leftmost factor
    most significant.  Labels are joined with ``sep``."""
    out = spaces[0]
    for sp in spaces[1:]:
        out = _tensor_space_pair(out, sp, sep)
    return out


@lru_cache(maxsize=4096)
def _tensor_space_pair(a: VecSpace, b: VecSpace, sep: str) -> VecSpace:
    labels = tuple(x + sep + y for x in a.labels for y in b.labels)
    return VecSpace(len(labels), labels)


# ---------------------------------------------------------------------------
# sparse row reduction


def _axpy(field: FieldSpec, r: Vector, f, p: Vector) -> None:
    """r <- r - f*p, in place, dropping created zeros."""
    sub, mul = field.sub, field.mul
    for j, c in p.items():
        v = sub(r.get(j, 0), mul(f, c)) if j in r else field.neg(mul(f, c))
        if v:
            r[j] = v
        else:
            r.pop(j, None)


def rref(field: FieldSpec, rows: Iterable[Vector]) -> Tuple[List[Vector], List[int]]:
    """Reduced row echelon form of a list of sparse rows.

    Returns ``(reduced_rows, pivot_columns)`` sorted by pivot column.  The
    output is the canonical RREF basis of the row space.
    """
    buckets: Dict[int, List[Vector]] = {}

    def push(r: Vector) -> None:
        if r:
            buckets.setdefault(min(r), []).append(r)

    for r in rows:
        push(dict(r))

    piv: Dict[int, Vector] = {}
    while buckets:
        col = min(buckets)
        cand = buckets.pop(col)
        cand.sort(key=len)  # sparsest pivot first: keeps fill-in down
        p = cand[0]
        inv = field.inv(p[col])
        p = {j: field.mul(inv, c) for j, c in p.items()}
        piv[col] = p
        for r in cand[1:]:
            _axpy(field, r, r[col], p)
            push(r)
    # Back substitution, highest pivot first, so each pivot row ends fully
    # reduced against all later pivots.
    for col in sorted(piv, reverse=True):
        row = piv[col]
        for c2 in [j for j in row if j != col and j in piv]:
            _axpy(field, row, row[c2], piv[c2])
    cols = sorted(piv)
    return [piv[c] for c in cols], cols


def reduce_vector(field: FieldSpec, v: Vector, rows: Sequence[Vector], pivots: Sequence[int]) -> Vector:
    """Residual of v after elimination against an RREF basis."""
    r = dict(v)
    for p, row in zip(pivots, rows):
        if p in r:
            _axpy(field, r, r[p], row)
    return r


# ---------------------------------------------------------------------------
# linear maps


class LinMap:
    """A sparse linear map, column-major: ``cols[j][i]`` is the (i, j) entry
    (row = codomain index, column = domain index)."""

    __slots__ = ("domain", "codomain", "field", "cols")

    def __init__(self, domain: VecSpace, codomain: VecSpace, field: FieldSpec,
                 cols: Dict[int, Vector]):
        self.domain = domain
        self.codomain = codomain
        self.field = field
        self.cols = cols

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_entries(domain, codomain, field, entries: Iterable[Tuple[int, int, object]]) -> "LinMap":
        """Build from (row, col, coeff) triples; repeated positions accumulate."""
        cols: Dict[int, Vector] = {}
        add = field.add
        for i, j, c in entries:
            if not (0 <= i < codomain.dim and 0 <= j < domain.dim):
                raise ValueError(f"entry ({i},{j}) outside {codomain.dim}x{domain.dim}")
            col = cols.setdefault(j, {})
            v = add(col.get(i, 0), c) if i in col else c
            if v:
                col[i] = v
            else:
                col.pop(i, None)
        return LinMap(domain, codomain, field, {j: c for j, c in cols.items() if c})

    @staticmethod
    def identity(space: VecSpace, field: FieldSpec) -> "LinMap":
        one = field.one
        return LinMap(space, space, field, {j: {j: one} for j in range(space.dim)})

    @staticmethod
    def zero(domain: VecSpace, codomain: VecSpace, field: FieldSpec) -> "LinMap":
        return LinMap(domain, codomain, field, {})

    # -- basic algebra -------------------------------------------------------

    def entry(self, i: int, j: int):
        return self.cols.get(j, {}).get(i, self.field.zero)

    def entries(self) -> Iterable[Tuple[int, int, object]]:
        for j, col in self.cols.items():
            for i, c in col.items():
                yield i, j, c

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols.values())

    def is_zero(self) -> bool:
        return not self.cols

    def apply(self, v: Vector) -> Vector:
        out: Vector = {}
        add, mul = self.field.add, self.field.mul
        for j, a in v.items():
            col = self.cols.get(j)
            if not col:
                continue
            for i, c in col.items():
                w = add(out.get(i, 0), mul(a, c)) if i in out else mul(a, c)
                if w:
                    out[i] = w
                else:
                    out.pop(i, None)
        return out

    def compose(self, other: "LinMap") -> "LinMap":
        """self after other (matrix product self @ other)."""
        if other.codomain.dim != self.domain.dim:
            raise ValueError("composition shape mismatch")
        cols = {}
        for k, col in other.cols.items():
            out = self.apply(col)
            if out:
                cols[k] = out
        return LinMap(other.domain, self.codomain, self.field, cols)

    __matmul__ = compose

    def add_map(self, other: "LinMap") -> "LinMap":
        self._check_same_shape(other)
        add = self.field.add
        cols = {j: dict(c) for j, c in self.cols.items()}
        for j, col in other.cols.items():
            dst = cols.setdefault(j, {})
            for i, c in col.items():
                v = add(dst.get(i, 0), c) if i in dst else c
                if v:
                    dst[i] = v
                else:
                    dst.pop(i, None)
        return LinMap(self.domain, self.codomain, self.field, {j: c for j, c in cols.items() if c})

    def sub_map(self, other: "LinMap") -> "LinMap":
        return self.add_map(other.scale(self.field.neg(self.field.one)))

    def scale(self, a) -> "LinMap":
        if not a:
            return LinMap.zero(self.domain, self.codomain, self.field)
        mul = self.field.mul
        return LinMap(self.domain, self.codomain, self.field,
                      {j: {i: mul(a, c) for i, c in col.items()} for j, col in self.cols.items()})

    def power(self, k: int) -> "LinMap":
        if self.domain.dim != self.codomain.dim:
            raise ValueError("power needs an endomorphism")
        acc = LinMap.identity(self.domain, self.field)
        for _ in range(k):
            acc = self.compose(acc)
        return acc

    def transpose(self) -> "LinMap":
        cols: Dict[int, Vector] = {}
        for j, col in self.cols.items():
            for i, c in col.items():
                cols.setdefault(i, {})[j] = c
        return LinMap(self.codomain, self.domain, self.field, cols)

    def tensor(self, other: "LinMap") -> "LinMap":
        """Kronecker product; left factor most significant in both bases."""
        dn, do = self.domain.dim, other.domain.dim
        cn, co = self.codomain.dim, other.codomain.dim
        dom = tensor_space(self.domain, other.domain)
        cod = tensor_space(self.codomain, other.codomain)
        mul = self.field.mul
        cols: Dict[int, Vector] = {}
        for j1, col1 in self.cols.items():
            for j2, col2 in other.cols.items():
                col = {}
                for i1, c1 in col1.items():
                    for i2, c2 in col2.items():
                        col[i1 * co + i2] = mul(c1, c2)
                if col:
                    cols[j1 * do + j2] = col
        return LinMap(dom, cod, self.field, cols)

    def rows(self) -> List[Vector]:
        out: List[Vector] = [dict() for _ in range(self.codomain.dim)]
        for j, col in self.cols.items():
            for i, c in col.items():
                out[i][j] = c
        return out

    def rank(self) -> int:
        _, pivots = rref(self.field, [c for c in self.cols.values()])
        return len(pivots)

    def _check_same_shape(self, other: "LinMap") -> None:
        if self.domain.dim != other.domain.dim or self.codomain.dim != other.codomain.dim:
            raise ValueError("shape mismatch")

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.domain.dim == other.domain.dim
                and self.codomain.dim == other.codomain.dim
                and self.cols == other.cols)

    def __hash__(self):
        return hash((self.domain.dim, self.codomain.dim, self.nnz()))

    def __repr__(self):
        return f"LinMap({self.domain.dim}->{self.codomain.dim}, nnz={self.nnz()})"


def first_difference(f: LinMap, g: LinMap) -> Optional[int]:
    """Smallest domain index where the two maps disagree, or None."""
    if f.domain.dim != g.domain.dim or f.codomain.dim != g.codomain.dim:
        return -1
    bad = [j for j in set(f.cols) | set(g.cols) if f.cols.get(j, {}) != g.cols.get(j, {})]
    return min(bad) if bad else None


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """A subspace of an ambient space, held as its canonical RREF basis."""

    __slots__ = ("ambient", "field", "rows", "pivots")

    def __init__(self, ambient: VecSpace, field: FieldSpec,
                 rows: Sequence[Vector], pivots: Sequence[int], *, _canonical=False):
        if not _canonical:
            rows, pivots = rref(field, rows)
        self.ambient = ambient
        self.field = field
        self.rows = tuple(rows)
        self.pivots = tuple(pivots)

    @staticmethod
    def span(ambient: VecSpace, field: FieldSpec, vectors: Iterable[Vector]) -> "Subspace":
        rows, pivots = rref(field, vectors)
        return Subspace(ambient, field, rows, pivots, _canonical=True)

    @staticmethod
    def zero(ambient: VecSpace, field: FieldSpec) -> "Subspace":
        return Subspace(ambient, field, (), (), _canonical=True)

    @staticmethod
    def full(ambient: VecSpace, field: FieldSpec) -> "Subspace":
        one = field.one
        rows = [{j: one} for j in range(ambient.dim)]
        return Subspace(ambient, field, rows, list(range(ambient.dim)), _canonical=True)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains_vector(self, v: Vector) -> bool:
        return not reduce_vector(self.field, v, self.rows, self.pivots)

    def contains(self, other: "Subspace") -> bool:
        return all(self.contains_vector(r) for r in other.rows)

    def coords_of(self, v: Vector) -> Vector:
        """Coordinates of v in this RREF basis; raises if v is outside."""
        coords = {k: v[p] for k, p in enumerate(self.pivots) if p in v}
        if reduce_vector(self.field, v, self.rows, self.pivots):
            raise ValueError("vector not in subspace")
        return coords

    def basis_map(self) -> LinMap:
        """Inclusion map from coordinate space into the ambient space."""
        coord = VecSpace.make([f"s{k}" for k in range(self.dim)])
        cols = {k: dict(r) for k, r in enumerate(self.rows)}
        return LinMap(coord, self.ambient, self.field, cols)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient.dim == other.ambient.dim
                and self.pivots == other.pivots and self.rows == other.rows)

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.ambient.dim})"


# ---------------------------------------------------------------------------
# the spec'd operations


def kernel(f: LinMap) -> Subspace:
    """Canonical basis of ``{v : f(v) = 0}``."""
    field = f.field
    red, pivots = rref(field, f.rows())
    pivset = set(pivots)
    one = field.one
    neg = field.neg
    basis = []
    for j in range(f.domain.dim):
        if j in pivset:
            continue
        v = {j: one}
        for p, row in zip(pivots, red):
            if j in row:
                v[p] = neg(row[j])
        basis.append(v)
    return Subspace.span(f.domain, field, basis)


def image(f: LinMap) -> Subspace:
    """Canonical basis of the column space of f."""
    return Subspace.span(f.codomain, f.field, list(f.cols.values()))


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_same_ambient(a, b)
    return Subspace.span(a.ambient, a.field, list(a.rows) + list(b.rows))


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Canonical basis of the intersection of two subspaces."""
    _check_same_ambient(a, b)
    field = a.field
    # Kernel of (u, w) |-> sum u_i a_i - sum w_j b_j; the a-part of each
    # kernel vector spans the intersection.
    na = a.dim
    rows: List[Vector] = [dict() for _ in range(a.ambient.dim)]
    for k, r in enumerate(a.rows):
        for j, c in r.items():
            rows[j][k] = c
    for k, r in enumerate(b.rows):
        for j, c in r.items():
            rows[j][na + k] = field.neg(c)
    red, pivots = rref(field, rows)
    pivset = set(pivots)
    total = na + b.dim
    vecs = []
    one, neg, mul, add = field.one, field.neg, field.mul, field.add
    for jf in range(total):
        if jf in pivset:
            continue
        coeff = {jf: one}
        for p, row in zip(pivots, red):
            if jf in row:
                coeff[p] = neg(row[jf])
        v: Vector = {}
        for k, cku in coeff.items():
            if k >= na:
                continue
            for j, c in a.rows[k].items():
                w = add(v.get(j, 0), mul(cku, c)) if j in v else mul(cku, c)
                if w:
                    v[j] = w
                else:
                    v.pop(j, None)
        if v:
            vecs.append(v)
    return Subspace.span(a.ambient, field, vecs)


def quotient(space: VecSpace, w: Subspace) -> Tuple[VecSpace, LinMap]:
    """Quotient of ``space`` by ``w``: returns the quotient space and the
    projection map, whose kernel is exactly ``w``."""
    if w.ambient.dim != space.dim:
        raise ValueError("subspace not inside the given space")
    field = w.field
    pivset = set(w.pivots)
    free = [j for j in range(space.dim) if j not in pivset]
    pos = {j: k for k, j in enumerate(free)}
    q_space = VecSpace.make([f"[{space.labels[j]}]" for j in free])
    one, neg = field.one, field.neg
    cols: Dict[int, Vector] = {}
    for j in free:
        cols[j] = {pos[j]: one}
    for p, row in zip(w.pivots, w.rows):
        col = {pos[j]: neg(c) for j, c in row.items() if j != p}
        if col:
            cols[p] = col
    return q_space, LinMap(space, q_space, field, cols)


def quotient_section(space: VecSpace, w: Subspace, q: LinMap) -> LinMap:
    """A right inverse of the projection returned by :func:`quotient`."""
    field = w.field
    pivset = set(w.pivots)
    free = [j for j in range(space.dim) if j not in pivset]
    one = field.one
    cols = {k: {j: one} for k, j in enumerate(free)}
    return LinMap(q.codomain, space, field, cols)


def tensor(f: LinMap, g: LinMap) -> LinMap:
    return f.tensor(g)


def compose(f: LinMap, g: LinMap) -> LinMap:
    return f.compose(g)


def image_subspace(f: LinMap, w: Subspace) -> Subspace:
    """The image f(W) as a subspace of the codomain."""
    return Subspace.span(f.codomain, f.field, [f.apply(r) for r in w.rows])


def preimage_subspace(f: LinMap, w: Subspace) -> Subspace:
    """The preimage f^{-1}(W) = {v : f(v) in W} as a subspace of the domain."""
    _, q = quotient(f.codomain, w)
    return kernel(q.compose(f))


def largest_bi_invariant_subspace(w: Subspace, t: LinMap, t_inv: LinMap) -> Subspace:
    """Largest subspace V of W with t(V) = V, for invertible t.

    Fixpoint iteration V <- V n t(V) n t^{-1}(V); dimensions strictly
    decrease until they stabilise, so this terminates.  Any V' in W stable
    under t and t^{-1} is contained in every iterate, hence in the result.
    """
    ident = LinMap.identity(t.domain, t.field)
    if t.compose(t_inv) != ident or t_inv.compose(t) != ident:
        raise ValueError("t and t_inv are not mutually inverse")
    v = w
    while True:
        nxt = intersect(v, image_subspace(t, v))
        nxt = intersect(nxt, image_subspace(t_inv, v))
        if nxt.dim == v.dim:
            return nxt
        v = nxt


def largest_forward_invariant_subspace(w: Subspace, t: LinMap) -> Subspace:
    """Largest subspace V of W with t(V) contained in V (t need not be
    invertible); used when only forward cyclic powers are available."""
    v = w
    while True:
        nxt = intersect(v, preimage_subspace(t, v))
        if nxt.dim == v.dim:
            return nxt
        v = nxt


def restrict_map(f: LinMap, dom_sub: Subspace, cod_sub: Subspace) -> LinMap:
    """Matrix of f restricted to dom_sub, in the RREF coordinates of the two
    subspaces.  Raises if f does not map dom_sub into cod_sub."""
    field = f.field
    dom = VecSpace.make([f"r{k}" for k in range(dom_sub.dim)])
    cod = VecSpace.make([f"r{k}" for k in range(cod_sub.dim)])
    cols = {}
    for k, r in enumerate(dom_sub.rows):
        y = f.apply(r)
        c = cod_sub.coords_of(y)
        if c:
            cols[k] = c
    return LinMap(dom, cod, field, cols)


def maps_into(f: LinMap, dom_sub: Subspace, cod_sub: Subspace) -> bool:
    """Does f send dom_sub into cod_sub?"""
    return all(cod_sub.contains_vector(f.apply(r)) for r in dom_sub.rows)


def induce_on_quotients(f: LinMap, q_dom: LinMap, s_dom: LinMap, q_cod: LinMap) -> Optional[LinMap]:
    """The map induced by f on quotients, or None when f does not descend.

    q_dom, q_cod are the projections, s_dom a section of q_dom.  The
    candidate is q_cod o f o s_dom; it is returned only if it satisfies
    (induced) o q_dom == q_cod o f, i.e. f preserves the kernels.
    """
    cand = q_cod.compose(f).compose(s_dom)
    if cand.compose(q_dom) != q_cod.compose(f):
        return None
    return cand


def _check_same_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient.dim != b.ambient.dim:
        raise ValueError("subspaces live in different ambient spaces")
