"""Hopf algebras and module/comodules as structure constants.

A Hopf algebra here is a finite-dimensional space together with sparse
structure tensors (multiplication, unit, comultiplication, counit, antipode
and, when stored, its inverse).  All axiom checking compares full tensor
compositions for exact equality; the dimensions involved are small enough
that probing with random vectors would save nothing.

Coefficient data for the complexes lives in :class:`ModComod`: a space with
an action H (x) X -> X and a left coaction X -> H (x) X (plus an optional
right coaction for the op-comodule picture).  Sweedler-style leg expansions
(iterated comultiplication) are cached per basis element since the complex
builders ask for them constantly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .checks import CheckReport
from .exactla import FieldSpec, LinMap, VecSpace, Vector, rref, tensor_space


def _bump(d: Dict, k, c, add) -> None:
    v = add(d.get(k, 0), c) if k in d else c
    if v:
        d[k] = v
    else:
        d.pop(k, None)


class HopfAlgebra:
    """Structure-constant presentation of a finite-dimensional Hopf algebra.

    The antipode inverse is optional: it is required by the maps that use
    S^{-1} (inverse cyclic operators, p, the anti-Yetter-Drinfeld condition)
    and those raise a clear error when it is absent.
    """

    def __init__(self, field: FieldSpec, space: VecSpace, mult: LinMap, unit: LinMap,
                 comult: LinMap, counit: LinMap, antipode: LinMap,
                 antipode_inv: Optional[LinMap] = None, name: str = ""):
        self.field = field
        self.space = space
        self.mult = mult
        self.unit = unit
        self.comult = comult
        self.counit = counit
        self.antipode = antipode
        self.antipode_inv = antipode_inv
        self.name = name
        d = space.dim
        shapes = [
            (mult, d * d, d), (unit, 1, d), (comult, d, d * d),
            (counit, d, 1), (antipode, d, d),
        ]
        if antipode_inv is not None:
            shapes.append((antipode_inv, d, d))
        for m, dn, cn in shapes:
            if m.domain.dim != dn or m.codomain.dim != cn:
                raise ValueError("structure tensor shapes inconsistent with dim")
        # adjacency caches
        self._mult: Dict[Tuple[int, int], List[Tuple[int, object]]] = {}
        for j, col in mult.cols.items():
            self._mult[divmod(j, d)] = sorted(col.items())
        self._comult: Dict[int, List[Tuple[int, int, object]]] = {}
        for j, col in comult.cols.items():
            self._comult[j] = sorted((i // d, i % d, c) for i, c in col.items())
        self._counit = {j: col.get(0, field.zero) for j, col in counit.cols.items()}
        self.unit_vec: Vector = dict(unit.cols.get(0, {}))
        self._antipode = {j: sorted(col.items()) for j, col in antipode.cols.items()}
        self._antipode_inv = (None if antipode_inv is None else
                              {j: sorted(col.items()) for j, col in antipode_inv.cols.items()})
        self._legs_cache: Dict[Tuple[int, int], List[Tuple[Tuple[int, ...], object]]] = {}

    @property
    def dim(self) -> int:
        return self.space.dim

    # -- basis-level structure constants -------------------------------------

    def mult_list(self, a: int, b: int) -> List[Tuple[int, object]]:
        return self._mult.get((a, b), [])

    def comult_list(self, a: int) -> List[Tuple[int, int, object]]:
        return self._comult.get(a, [])

    def counit_of(self, a: int):
        return self._counit.get(a, self.field.zero)

    def antipode_list(self, a: int, power: int = 1) -> List[Tuple[int, object]]:
        """Adjacency of S^power (negative powers use the stored inverse)."""
        if power == 0:
            return [(a, self.field.one)]
        if power < 0:
            if self._antipode_inv is None:
                raise ValueError("antipode inverse not available")
            table = self._antipode_inv
        else:
            table = self._antipode
        out = {a: self.field.one}
        for _ in range(abs(power)):
            nxt: Dict[int, object] = {}
            for i, c in out.items():
                for j, c2 in table.get(i, []):
                    _bump(nxt, j, self.field.mul(c, c2), self.field.add)
            out = nxt
        return sorted(out.items())

    def legs(self, a: int, k: int) -> List[Tuple[Tuple[int, ...], object]]:
        """Terms of the (k-1)-fold comultiplication of basis element a:
        list of (k-tuple of basis indices, coefficient)."""
        if k < 1:
            raise ValueError("need at least one leg")
        key = (a, k)
        got = self._legs_cache.get(key)
        if got is not None:
            return got
        if k == 1:
            out = [((a,), self.field.one)]
        else:
            mul = self.field.mul
            acc: Dict[Tuple[int, ...], object] = {}
            for heads, c in self.legs(a, k - 1):
                for (u, v, c2) in self.comult_list(heads[-1]):
                    _bump(acc, heads[:-1] + (u, v), mul(c, c2), self.field.add)
            out = sorted(acc.items())
        self._legs_cache[key] = out
        return out

    # -- element-level helpers (elements are sparse dicts over the basis) ----

    def elem_mult(self, u: Vector, v: Vector) -> Vector:
        out: Vector = {}
        mul, add = self.field.mul, self.field.add
        for a, ca in u.items():
            for b, cb in v.items():
                c = mul(ca, cb)
                for k, ck in self.mult_list(a, b):
                    _bump(out, k, mul(c, ck), add)
        return out

    def elem_mult_many(self, elems: Sequence[Vector]) -> Vector:
        acc = dict(self.unit_vec)
        for e in elems:
            acc = self.elem_mult(acc, e)
        return acc

    def elem_antipode(self, u: Vector, power: int = 1) -> Vector:
        out: Vector = {}
        mul, add = self.field.mul, self.field.add
        for a, ca in u.items():
            for j, c in self.antipode_list(a, power):
                _bump(out, j, mul(ca, c), add)
        return out

    def elem_counit(self, u: Vector):
        s = self.field.zero
        for a, ca in u.items():
            s = self.field.add(s, self.field.mul(ca, self.counit_of(a)))
        return s

    # -- global properties ----------------------------------------------------

    def is_commutative(self) -> bool:
        return self.mult == self.mult.compose(_swap_map(self.space, self.field))

    def is_cocommutative(self) -> bool:
        return self.comult == _swap_map(self.space, self.field).compose(self.comult)

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return f"HopfAlgebra(dim={self.dim}{tag})"


def _swap_map(space: VecSpace, field: FieldSpec) -> LinMap:
    """The flip v (x) w -> w (x) v on space (x) space."""
    d = space.dim
    sq = tensor_space(space, space)
    one = field.one
    cols = {a * d + b: {b * d + a: one} for a in range(d) for b in range(d)}
    return LinMap(sq, sq, field, cols)


# ---------------------------------------------------------------------------
# axiom verification


def check_hopf_axioms(h: HopfAlgebra) -> CheckReport:
    """Verify every bialgebra/Hopf axiom as an exact matrix identity."""
    f = h.field
    sp = h.space
    ident = LinMap.identity(sp, f)
    swap = _swap_map(sp, f)
    rep = CheckReport(f"Hopf axioms for {h.name or 'algebra'} over {f!r}")

    rep.add("associativity",
            h.mult.compose(h.mult.tensor(ident)) == h.mult.compose(ident.tensor(h.mult)))
    # k (x) H and H (x) k are index-identical to H, so these compose directly.
    rep.add("unit (left/right)",
            h.mult.compose(h.unit.tensor(ident)) == ident
            and h.mult.compose(ident.tensor(h.unit)) == ident)
    rep.add("coassociativity",
            h.comult.tensor(ident).compose(h.comult) == ident.tensor(h.comult).compose(h.comult))
    rep.add("counit (left/right)",
            h.counit.tensor(ident).compose(h.comult) == ident
            and ident.tensor(h.counit).compose(h.comult) == ident)
    mid = ident.tensor(swap).tensor(ident)
    rep.add("comult multiplicative",
            h.comult.compose(h.mult)
            == h.mult.tensor(h.mult).compose(mid).compose(h.comult.tensor(h.comult)))
    rep.add("counit multiplicative",
            h.counit.compose(h.mult) == h.counit.tensor(h.counit))
    rep.add("unit is coalgebra map",
            h.comult.compose(h.unit) == h.unit.tensor(h.unit)
            and h.counit.compose(h.unit) == LinMap.identity(VecSpace.scalar(), f))
    eta_eps = h.unit.compose(h.counit)
    rep.add("antipode (left)",
            h.mult.compose(h.antipode.tensor(ident)).compose(h.comult) == eta_eps)
    rep.add("antipode (right)",
            h.mult.compose(ident.tensor(h.antipode)).compose(h.comult) == eta_eps)
    rep.add("antipode bijective", h.antipode.rank() == h.dim)
    if h.antipode_inv is not None:
        rep.add("antipode inverse",
                h.antipode.compose(h.antipode_inv) == ident
                and h.antipode_inv.compose(h.antipode) == ident)
    return rep


# ---------------------------------------------------------------------------
# builtin algebras


def cyclic_group_table(n: int) -> Tuple[List[List[int]], List[str]]:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ["1"] + [f"g{k}" if k > 1 else "g" for k in range(1, n)]
    return table, labels


def symmetric3_table() -> Tuple[List[List[int]], List[str]]:
    perms = sorted(itertools.permutations(range(3)))
    index = {p: k for k, p in enumerate(perms)}

    def compose(s, t):  # (s o t)(x) = s(t(x))
        return tuple(s[t[x]] for x in range(3))

    table = [[index[compose(s, t)] for t in perms] for s in perms]
    return table, [_cycle_label(p) for p in perms]


def _cycle_label(perm: Tuple[int, ...]) -> str:
    seen, cycles = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            seen.add(start)
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = perm[x]
        cycles.append("(" + "".join(map(str, cyc)) + ")")
    return "".join(cycles) if cycles else "e"


def validate_group_table(table: Sequence[Sequence[int]]) -> int:
    """Check the table is a group; returns the identity index."""
    n = len(table)
    for row in table:
        if len(row) != n or any(not (0 <= x < n) for x in row):
            raise ValueError("not a group: malformed Cayley table")
    ident = None
    for e in range(n):
        if all(table[e][j] == j for j in range(n)) and all(table[i][e] == i for i in range(n)):
            ident = e
            break
    if ident is None:
        raise ValueError("not a group: no two-sided identity")
    for i in range(n):
        if ident not in table[i]:
            raise ValueError("not a group: missing inverse")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise ValueError(f"not a group: associativity fails at ({i},{j},{k})")
    return ident


def group_algebra(table: Sequence[Sequence[int]], field: FieldSpec,
                  labels: Optional[Sequence[str]] = None, name: str = "") -> HopfAlgebra:
    """The group ring k[G] from a Cayley table: grouplike basis, counit 1,
    antipode = inversion."""
    ident = validate_group_table(table)
    n = len(table)
    if labels is None:
        labels = [f"g{i}" for i in range(n)]
    sp = VecSpace.make(labels)
    one = field.one
    sq = tensor_space(sp, sp)
    mult = LinMap(sq, sp, field,
                  {i * n + j: {table[i][j]: one} for i in range(n) for j in range(n)})
    unit = LinMap(VecSpace.scalar(), sp, field, {0: {ident: one}})
    comult = LinMap(sp, sq, field, {i: {i * n + i: one} for i in range(n)})
    counit = LinMap(sp, VecSpace.scalar(), field, {i: {0: one} for i in range(n)})
    inv = [table[i].index(ident) for i in range(n)]
    s = LinMap(sp, sp, field, {i: {inv[i]: one} for i in range(n)})
    return HopfAlgebra(field, sp, mult, unit, comult, counit, s, s, name=name or "k[G]")


def sweedler_h4(field: FieldSpec) -> HopfAlgebra:
    """The 4-dimensional algebra with basis 1, g, x, gx, relations g^2 = 1,
    x^2 = 0, xg = -gx, comultiplication Delta x = x (x) 1 + g (x) x, and a
    non-involutive antipode (S^2 != id, S^4 = id).  Needs characteristic != 2."""
    if field.characteristic == 2:
        raise ValueError("this algebra degenerates in characteristic 2")
    sp = VecSpace.make(["1", "g", "x", "gx"])
    one = field.one
    neg = field.neg(one)
    prod = {  # (i, j) -> list of (k, coeff); zero products omitted
        (0, 0): [(0, one)], (0, 1): [(1, one)], (0, 2): [(2, one)], (0, 3): [(3, one)],
        (1, 0): [(1, one)], (1, 1): [(0, one)], (1, 2): [(3, one)], (1, 3): [(2, one)],
        (2, 0): [(2, one)], (2, 1): [(3, neg)],
        (3, 0): [(3, one)], (3, 1): [(2, neg)],
    }
    sq = tensor_space(sp, sp)
    mult = LinMap.from_entries(sq, sp, field,
                               [(k, i * 4 + j, c) for (i, j), lst in prod.items() for k, c in lst])
    unit = LinMap(VecSpace.scalar(), sp, field, {0: {0: one}})
    com = {
        0: [(0, 0, one)],
        1: [(1, 1, one)],
        2: [(2, 0, one), (1, 2, one)],
        3: [(3, 1, one), (0, 3, one)],
    }
    comult = LinMap.from_entries(sp, sq, field,
                                 [(a * 4 + b, i, c) for i, lst in com.items() for a, b, c in lst])
    counit = LinMap.from_entries(sp, VecSpace.scalar(), field, [(0, 0, one), (0, 1, one)])
    s = LinMap.from_entries(sp, sp, field,
                            [(0, 0, one), (1, 1, one), (3, 2, neg), (2, 3, one)])
    s_inv = LinMap.from_entries(sp, sp, field,
                                [(0, 0, one), (1, 1, one), (3, 2, one), (2, 3, neg)])
    return HopfAlgebra(field, sp, mult, unit, comult, counit, s, s_inv, name="sweedler4")


def dual_hopf(h: HopfAlgebra, name: str = "") -> HopfAlgebra:
    """The dual Hopf algebra on the dual basis: every structure tensor is the
    transpose of its partner (mult* = comult^T and so on)."""
    f = h.field
    sp = VecSpace.make([l + "*" for l in h.space.labels])
    sq = tensor_space(sp, sp)
    k = VecSpace.scalar()

    def relabel(m: LinMap, dom, cod) -> LinMap:
        return LinMap(dom, cod, f, {j: dict(c) for j, c in m.cols.items()})

    s_inv = None if h.antipode_inv is None else relabel(h.antipode_inv.transpose(), sp, sp)
    return HopfAlgebra(
        f, sp,
        relabel(h.comult.transpose(), sq, sp),
        relabel(h.counit.transpose(), k, sp),
        relabel(h.mult.transpose(), sp, sq),
        relabel(h.unit.transpose(), sp, k),
        relabel(h.antipode.transpose(), sp, sp),
        s_inv,
        name=name or (f"dual:{h.name}" if h.name else "dual"),
    )


# ---------------------------------------------------------------------------
# grouplike elements


def grouplikes(h: HopfAlgebra) -> List[Vector]:
    """All g with Delta g = g (x) g and eps(g) = 1.

    The quadratic system is solved without a polynomial-system backend.  Any
    nonzero coordinate g_i of a grouplike makes g an eigenvector, with
    eigenvalue g_i, of the slice matrix R_i of the comultiplication pencil,
    and products against a pinned coordinate turn bilinear constraints into
    linear ones.  So we branch coordinate by coordinate over {0} union
    {field-rational eigenvalues of R_i}, propagating the linear cuts, and
    verify every zero-dimensional leaf.  Over a small prime field an
    exhaustive scan is used instead.  Supported for dim <= 8 (every builtin
    fixture is); a guard trips if the branch tree degenerates.
    """
    d = h.dim
    if d > 8:
        raise ValueError("grouplike search is implemented for dim <= 8")
    f = h.field
    p = f.characteristic
    if p and p ** d <= 1 << 16:
        return _grouplikes_bruteforce(h)

    slices = [_comult_slice(h, i) for i in range(d)]
    eigs = [[t for t in _eigenvalue_candidates(f, r) if t] for r in slices]
    eps_row = {m: h.counit_of(m) for m in range(d) if h.counit_of(m)}
    budget = [20000]
    found: Dict[Tuple, Vector] = {}
    for v in _branch_grouplikes(h, slices, eigs, [eps_row], [f.one], 0, budget):
        if _is_grouplike(h, v):
            found[_vec_key(f, v)] = v
    return [found[k] for k in sorted(found)]


def _comult_slice(h: HopfAlgebra, i0: int):
    """R[l][m] = coefficient of e_i0 (x) e_l in Delta e_m."""
    f, d = h.field, h.dim
    r = [[f.zero] * d for _ in range(d)]
    for m in range(d):
        for (a, b, c) in h.comult_list(m):
            if a == i0:
                r[b][m] = f.add(r[b][m], c)
    return r


def _pencil_row(h: HopfAlgebra, first: int, second: int) -> Vector:
    """The linear functional v -> coefficient of e_first (x) e_second in
    Delta v."""
    f = h.field
    row: Vector = {}
    for m in range(h.dim):
        for (a, b, c) in h.comult_list(m):
            if a == first and b == second:
                _bump(row, m, c, f.add)
    return row


def _branch_grouplikes(h, slices, eigs, rows, rhs, coord, budget):
    """Depth-first enumeration over coordinate values; yields candidate
    vectors at zero-dimensional leaves."""
    f, d = h.field, h.dim
    budget[0] -= 1
    if budget[0] < 0:
        raise NotImplementedError("grouplike branch tree too large for this algebra")
    sol = _solve_affine(f, rows, rhs, d)
    if sol is None:
        return
    part, null = sol
    if not null:
        yield part
        return
    if coord >= d:
        return  # all coordinates pinned yet dim > 0: cannot happen
    # Skip coordinates already constant on the affine space.
    i1 = coord
    while i1 < d and all(i1 not in w for w in null):
        i1 += 1
    if i1 >= d:
        yield part
        return
    for t in [f.zero] + eigs[i1]:
        nrows = list(rows)
        nrhs = list(rhs)
        nrows.append({i1: f.one})
        nrhs.append(t)
        # products against the pinned coordinate are linear now:
        # L_{i,i1}(v) = t v_i and L_{i1,i}(v) = t v_i
        for i in range(d):
            for (first, second) in ((i, i1), (i1, i)):
                row = _pencil_row(h, first, second)
                _bump(row, i, f.neg(t), f.add)
                if row:
                    nrows.append(row)
                    nrhs.append(f.zero)
        if t:
            r = slices[i1]
            for l in range(d):
                row = {m: r[l][m] for m in range(d) if r[l][m]}
                _bump(row, l, f.neg(t), f.add)
                if row:
                    nrows.append(row)
                    nrhs.append(f.zero)
        yield from _branch_grouplikes(h, slices, eigs, nrows, nrhs, i1 + 1, budget)


def _grouplikes_bruteforce(h: HopfAlgebra) -> List[Vector]:
    f, d, p = h.field, h.dim, h.field.characteristic
    out = []
    for coeffs in itertools.product(range(p), repeat=d):
        v = {i: c for i, c in enumerate(coeffs) if c}
        if v and _is_grouplike(h, v):
            out.append(v)
    return out


def _is_grouplike(h: HopfAlgebra, v: Vector) -> bool:
    if h.elem_counit(v) != h.field.one:
        return False
    dv = h.comult.apply(v)
    mul = h.field.mul
    outer = {}
    for a, ca in v.items():
        for b, cb in v.items():
            c = mul(ca, cb)
            if c:
                outer[a * h.dim + b] = c
    return dv == outer


def _vec_key(f: FieldSpec, v: Vector) -> Tuple:
    return tuple(sorted((i, str(c)) for i, c in v.items()))


def _solve_affine(f: FieldSpec, rows: List[Vector], rhs: List, nvars: int):
    """Solve A v = b; returns (particular, nullspace basis) or None."""
    aug = []
    for row, b in zip(rows, rhs):
        r = dict(row)
        if b:
            r[nvars] = f.neg(b)  # row . (v, 1) = 0 formulation
        if r:
            aug.append(r)
    red, pivots = rref(f, aug)
    if nvars in pivots:
        return None
    part: Vector = {}
    for pcol, row in zip(pivots, red):
        if nvars in row:
            part[pcol] = f.neg(row[nvars])
    pivset = set(pivots)
    null = []
    for jf in range(nvars):
        if jf in pivset:
            continue
        v = {jf: f.one}
        for pcol, row in zip(pivots, red):
            if jf in row:
                v[pcol] = f.neg(row[jf])
        null.append(v)
    return part, null


def _eigenvalue_candidates(f: FieldSpec, r) -> List:
    """Field-rational roots of the characteristic polynomial of the matrix r."""
    coeffs = _berkowitz_charpoly(f, r)
    return _poly_roots(f, coeffs)


def _berkowitz_charpoly(f: FieldSpec, a) -> List:
    """Division-free characteristic polynomial (monic, descending powers)."""
    n = len(a)
    if n == 0:
        return [f.one]
    c = [f.one, f.neg(a[0][0])]
    for k in range(2, n + 1):
        sub = [row[:k - 1] for row in a[:k - 1]]
        row_r = a[k - 1][:k - 1]
        col_s = [a[i][k - 1] for i in range(k - 1)]
        akk = a[k - 1][k - 1]
        # powers of sub applied to col_s
        pow_s = [col_s]
        for _ in range(k - 2):
            prev = pow_s[-1]
            pow_s.append([_dotrow(f, sub[i], prev) for i in range(k - 1)])
        toep = [[f.zero] * k for _ in range(k + 1)]
        for i in range(k + 1):
            for j in range(k):
                if i == j:
                    toep[i][j] = f.one
                elif i == j + 1:
                    toep[i][j] = f.neg(akk)
                elif i >= j + 2:
                    toep[i][j] = f.neg(_dotrow(f, row_r, pow_s[i - j - 2]))
        c = [_dotrow(f, toep[i], c) for i in range(k + 1)]
    return c


def _dotrow(f: FieldSpec, row, vec):
    s = f.zero
    for x, y in zip(row, vec):
        if x and y:
            s = f.add(s, f.mul(x, y))
    return s


def _poly_roots(f: FieldSpec, coeffs: List) -> List:
    """Roots in the field of a polynomial given in descending powers."""
    coeffs = list(coeffs)
    while coeffs and not coeffs[0]:
        coeffs.pop(0)
    if len(coeffs) <= 1:
        return []

    def val(t):
        acc = f.zero
        for c in coeffs:
            acc = f.add(f.mul(acc, t), c)
        return acc

    if f.characteristic:
        return [t for t in range(f.characteristic) if not val(t)]
    # rational root theorem on the integer-cleared polynomial
    from math import gcd

    dens = [int(c.denominator) for c in coeffs]
    scale = 1
    for d in dens:
        scale = scale // gcd(scale, d) * d
    ints = [int(c * scale) for c in coeffs]
    lead, const = ints[0], ints[-1]
    if const == 0:
        tail = list(ints)
        while tail and tail[-1] == 0:
            tail.pop()
        roots = set(_poly_roots(f, [f.of(c) for c in tail])) if len(tail) > 1 else set()
        roots.add(f.zero)
        return sorted(roots, key=str)
    out = []
    for pp in _divisors(abs(const)):
        for qq in _divisors(abs(lead)):
            for sgn in (1, -1):
                t = f.div(f.of(sgn * pp), f.of(qq))
                if not val(t):
                    out.append(t)
    return sorted(set(out), key=str)


def _divisors(n: int) -> List[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


# ---------------------------------------------------------------------------
# module/comodule data


@dataclass
class ModComod:
    """A space X with an action H (x) X -> X and coactions.

    ``left_coaction`` maps x to x_(-1) (x) x_(0); ``right_coaction`` maps x
    to x_(0) (x) x_(1).  Either may be absent; consumers state what they
    need.
    """

    hopf: HopfAlgebra
    space: VecSpace
    action: LinMap
    left_coaction: Optional[LinMap] = None
    right_coaction: Optional[LinMap] = None
    name: str = ""

    def __post_init__(self):
        dh, dx = self.hopf.dim, self.space.dim
        if self.action.domain.dim != dh * dx or self.action.codomain.dim != dx:
            raise ValueError("action tensor shape mismatch")
        if self.left_coaction is not None and (
                self.left_coaction.domain.dim != dx or self.left_coaction.codomain.dim != dh * dx):
            raise ValueError("left coaction shape mismatch")
        if self.right_coaction is not None and (
                self.right_coaction.domain.dim != dx or self.right_coaction.codomain.dim != dx * dh):
            raise ValueError("right coaction shape mismatch")
        dxl = self.space.dim
        self._act = {}
        for j, col in self.action.cols.items():
            self._act[divmod(j, dxl)] = sorted(col.items())
        self._lco = None
        if self.left_coaction is not None:
            self._lco = {}
            for j, col in self.left_coaction.cols.items():
                self._lco[j] = sorted((i // dxl, i % dxl, c) for i, c in col.items())
        self._rco = None
        if self.right_coaction is not None:
            self._rco = {}
            for j, col in self.right_coaction.cols.items():
                self._rco[j] = sorted((i // dh, i % dh, c) for i, c in col.items())

    @property
    def field(self) -> FieldSpec:
        return self.hopf.field

    def act_list(self, h: int, x: int) -> List[Tuple[int, object]]:
        return self._act.get((h, x), [])

    def act_elem(self, u: Vector, x_elem: Vector) -> Vector:
        """Action of an algebra element (dict) on a module element (dict)."""
        out: Vector = {}
        f = self.field
        for h, ch in u.items():
            for x, cx in x_elem.items():
                c = f.mul(ch, cx)
                for y, cy in self.act_list(h, x):
                    _bump(out, y, f.mul(c, cy), f.add)
        return out

    def lcoact_list(self, x: int) -> List[Tuple[int, int, object]]:
        if self._lco is None:
            raise ValueError("left coaction not available")
        return self._lco.get(x, [])

    def rcoact_list(self, x: int) -> List[Tuple[int, int, object]]:
        if self._rco is None:
            raise ValueError("right coaction not available")
        return self._rco.get(x, [])


def check_module_axioms(x: ModComod) -> CheckReport:
    h, f = x.hopf, x.field
    idx = LinMap.identity(x.space, f)
    idh = LinMap.identity(h.space, f)
    rep = CheckReport(f"module/comodule axioms for {x.name or 'X'}")
    rep.add("action associative",
            x.action.compose(h.mult.tensor(idx)) == x.action.compose(idh.tensor(x.action)))
    rep.add("action unital", x.action.compose(h.unit.tensor(idx)) == idx)
    if x.left_coaction is not None:
        rho = x.left_coaction
        rep.add("left coaction coassociative",
                h.comult.tensor(idx).compose(rho) == idh.tensor(rho).compose(rho))
        rep.add("left coaction counital", h.counit.tensor(idx).compose(rho) == idx)
    if x.right_coaction is not None:
        rho = x.right_coaction
        rep.add("right coaction coassociative",
                idx.tensor(h.comult).compose(rho) == rho.tensor(idh).compose(rho))
        rep.add("right coaction counital", idx.tensor(h.counit).compose(rho) == idx)
    if x.left_coaction is not None and x.right_coaction is not None:
        rep.add("right coaction is op of left",
                x.right_coaction == _op_of_left(x))
    return rep


def _op_of_left(x: ModComod) -> LinMap:
    """x -> x_(0) (x) S(x_(-1)) as a LinMap X -> X (x) H."""
    h, f = x.hopf, x.field
    dh = h.dim
    cod = tensor_space(x.space, h.space)
    cols: Dict[int, Vector] = {}
    for j in range(x.space.dim):
        col: Vector = {}
        for (a, x0, c) in x.lcoact_list(j):
            for (b, c2) in h.antipode_list(a):
                _bump(col, x0 * dh + b, f.mul(c, c2), f.add)
        if col:
            cols[j] = col
    return LinMap(x.space, cod, f, cols)


def op_comodule(x: ModComod, direction: str = "left_to_right") -> ModComod:
    """Swap a left coaction for its op right coaction (or back); applying
    both directions returns the original tensors bit for bit."""
    h, f = x.hopf, x.field
    dh = h.dim
    if direction == "left_to_right":
        rc = _op_of_left(x)
        return ModComod(h, x.space, x.action, left_coaction=None, right_coaction=rc,
                        name=(x.name + "^op") if x.name else "op")
    if direction == "right_to_left":
        if h.antipode_inv is None:
            raise ValueError("antipode inverse needed for right_to_left")
        cod = tensor_space(h.space, x.space)
        cols: Dict[int, Vector] = {}
        for j in range(x.space.dim):
            col: Vector = {}
            for (x0, a, c) in x.rcoact_list(j):
                for (b, c2) in h.antipode_list(a, -1):
                    _bump(col, b * x.space.dim + x0, f.mul(c, c2), f.add)
            if col:
                cols[j] = col
        lc = LinMap(x.space, cod, f, cols)
        return ModComod(h, x.space, x.action, left_coaction=lc, right_coaction=None,
                        name=(x.name + "^op") if x.name else "op")
    raise ValueError("direction must be left_to_right or right_to_left")


def character_module(h: HopfAlgebra, g: Vector, delta: Sequence, name: str = "") -> ModComod:
    """The one-dimensional module/comodule with action through the character
    delta and coaction through the grouplike g."""
    f = h.field
    delta = [f.of(c) for c in delta]
    if len(delta) != h.dim:
        raise ValueError("delta row must have one coefficient per basis element")
    if not _is_grouplike(h, g):
        raise ValueError("coaction element is not grouplike")
    # delta must be an algebra map to k
    if _apply_row(f, delta, h.unit_vec) != f.one:
        raise ValueError("delta is not unital")
    for a in range(h.dim):
        for b in range(h.dim):
            prod = f.zero
            for (k, c) in h.mult_list(a, b):
                prod = f.add(prod, f.mul(c, delta[k]))
            if prod != f.mul(delta[a], delta[b]):
                raise ValueError(f"delta is not multiplicative at basis pair ({a},{b})")
    sp = VecSpace(1, ("m",))
    action = LinMap(tensor_space(h.space, sp), sp, f,
                    {a: {0: delta[a]} for a in range(h.dim) if delta[a]})
    coact = LinMap(sp, tensor_space(h.space, sp), f, {0: dict(g)})
    return ModComod(h, sp, action, left_coaction=coact, name=name or "k(g,delta)")


def trivial_module(h: HopfAlgebra) -> ModComod:
    """k with action via the counit and coaction via the unit."""
    f = h.field
    delta = [h.counit_of(a) for a in range(h.dim)]
    return character_module(h, dict(h.unit_vec), delta, name="k")


def _apply_row(f: FieldSpec, row, v: Vector):
    s = f.zero
    for i, c in v.items():
        s = f.add(s, f.mul(row[i], c))
    return s


def stability_map(x: ModComod, m: int) -> LinMap:
    """The map x -> S^m(x_(-1)) x_(0) on X."""
    f = x.field
    cols: Dict[int, Vector] = {}
    for j in range(x.space.dim):
        col: Vector = {}
        for (a, x0, c) in x.lcoact_list(j):
            sm = {b: c2 for b, c2 in x.hopf.antipode_list(a, m)}
            for y, cy in x.act_elem(sm, {x0: c}).items():
                _bump(col, y, cy, f.add)
        if col:
            cols[j] = col
    return LinMap(x.space, x.space, f, cols)


def check_stability(x: ModComod, m: int) -> bool:
    """m-stability: S^m(x_(-1)) x_(0) = x identically.  Negative m needs the
    stored antipode inverse."""
    return stability_map(x, m) == LinMap.identity(x.space, x.field)


def is_stable(x: ModComod) -> bool:
    """Stable = 0-stable and 1-stable."""
    return check_stability(x, 0) and check_stability(x, 1)


def check_ayd(x: ModComod) -> bool:
    """The anti-Yetter-Drinfeld condition
    (h x)_(-1) (x) (h x)_(0) = h_(1) x_(-1) S^{-1}(h_(3)) (x) h_(2) x_(0),
    compared as linear maps H (x) X -> H (x) X."""
    h, f = x.hopf, x.field
    if h.antipode_inv is None:
        raise ValueError("anti-Yetter-Drinfeld check needs the antipode inverse")
    if x.left_coaction is None:
        raise ValueError("anti-Yetter-Drinfeld check needs a left coaction")
    lhs = x.left_coaction.compose(x.action)
    dx = x.space.dim
    cols: Dict[int, Vector] = {}
    for hh in range(h.dim):
        for xx in range(dx):
            col: Vector = {}
            for (legs3, c1) in h.legs(hh, 3):
                h1, h2, h3 = legs3
                for (a, x0, c2) in x.lcoact_list(xx):
                    left = h.elem_mult_many([{h1: f.one}, {a: f.one},
                                             dict(h.antipode_list(h3, -1))])
                    c12 = f.mul(c1, c2)
                    for y, cy in x.act_list(h2, x0):
                        for b, cb in left.items():
                            _bump(col, b * dx + y, f.mul(c12, f.mul(cy, cb)), f.add)
            if col:
                cols[hh * dx + xx] = col
    rhs = LinMap(lhs.domain, lhs.codomain, f, cols)
    return lhs == rhs


def is_stable_ayd(x: ModComod) -> bool:
    return is_stable(x) and check_ayd(x)


@dataclass
class RightModule:
    """A right module over a Hopf algebra: action Y (x) H -> Y."""

    algebra: HopfAlgebra
    space: VecSpace
    action: LinMap

    def __post_init__(self):
        dh, dy = self.algebra.dim, self.space.dim
        if self.action.domain.dim != dy * dh or self.action.codomain.dim != dy:
            raise ValueError("right action shape mismatch")
        self._act = {}
        for j, col in self.action.cols.items():
            self._act[divmod(j, dh)] = sorted(col.items())

    def act_list(self, y: int, h: int) -> List[Tuple[int, object]]:
        return self._act.get((y, h), [])

    def axioms_ok(self) -> bool:
        h, f = self.algebra, self.algebra.field
        idy = LinMap.identity(self.space, f)
        idh = LinMap.identity(h.space, f)
        return (self.action.compose(self.action.tensor(idh))
                == self.action.compose(idy.tensor(h.mult))
                and self.action.compose(idy.tensor(h.unit)) == idy)


def adjoint_module(h: HopfAlgebra) -> RightModule:
    """H as a right module over itself via m . h = S^{-1}(h_(1)) m h_(2)."""
    if h.antipode_inv is None:
        raise ValueError("adjoint action needs the antipode inverse")
    f = h.field
    dh = h.dim
    cols: Dict[int, Vector] = {}
    for m in range(dh):
        for a in range(dh):
            col: Vector = {}
            for ((h1, h2), c) in h.legs(a, 2):
                out = h.elem_mult_many([dict(h.antipode_list(h1, -1)), {m: f.one}, {h2: f.one}])
                for y, cy in out.items():
                    _bump(col, y, f.mul(c, cy), f.add)
            if col:
                cols[m * dh + a] = col
    act = LinMap(tensor_space(h.space, h.space), h.space, f, cols)
    mod = RightModule(h, h.space, act)
    if not mod.axioms_ok():
        raise RuntimeError("adjoint action failed the right module axioms")
    return mod


@dataclass
class ComoduleAlgebra:
    """An algebra Y with a right coaction Y -> Y (x) B over a bialgebra B
    that is a morphism of algebras."""

    bialgebra: HopfAlgebra
    space: VecSpace
    mult: LinMap
    unit: LinMap
    coaction: LinMap
    name: str = ""

    def __post_init__(self):
        dy, db = self.space.dim, self.bialgebra.dim
        if self.mult.domain.dim != dy * dy or self.mult.codomain.dim != dy:
            raise ValueError("mult shape mismatch")
        if self.coaction.domain.dim != dy or self.coaction.codomain.dim != dy * db:
            raise ValueError("coaction shape mismatch")
        self._mult = {}
        for j, col in self.mult.cols.items():
            self._mult[divmod(j, dy)] = sorted(col.items())
        self._co = {}
        for j, col in self.coaction.cols.items():
            self._co[j] = sorted((i // db, i % db, c) for i, c in col.items())
        self.unit_vec = dict(self.unit.cols.get(0, {}))

    @property
    def field(self):
        return self.bialgebra.field

    def mult_list(self, a, b):
        return self._mult.get((a, b), [])

    def coact_list(self, y):
        return self._co.get(y, [])


def check_comodule_algebra(y: ComoduleAlgebra) -> CheckReport:
    b, f = y.bialgebra, y.field
    idy = LinMap.identity(y.space, f)
    idb = LinMap.identity(b.space, f)
    rep = CheckReport(f"comodule algebra axioms for {y.name or 'Y'}")
    rep.add("mult associative",
            y.mult.compose(y.mult.tensor(idy)) == y.mult.compose(idy.tensor(y.mult)))
    rep.add("mult unital",
            y.mult.compose(y.unit.tensor(idy)) == idy
            and y.mult.compose(idy.tensor(y.unit)) == idy)
    rep.add("coaction coassociative",
            idy.tensor(b.comult).compose(y.coaction)
            == y.coaction.tensor(idb).compose(y.coaction))
    rep.add("coaction counital", idy.tensor(b.counit).compose(y.coaction) == idy)
    # rho o mult = (mult (x) mult_B) o (id (x) swap (x) id) o (rho (x) rho)
    swap = _swap_between(y.space, b.space, f)
    lhs = y.coaction.compose(y.mult)
    rhs = (y.mult.tensor(b.mult)
           .compose(idy.tensor(swap).tensor(idb))
           .compose(y.coaction.tensor(y.coaction)))
    rep.add("coaction multiplicative", lhs == rhs)
    rep.add("coaction unital (algebra map)",
            y.coaction.apply(dict(y.unit_vec))
            == _outer(f, y.unit_vec, dict(b.unit_vec), b.dim))
    return rep


def _outer(f: FieldSpec, u: Vector, v: Vector, dim_right: int) -> Vector:
    out: Vector = {}
    for a, ca in u.items():
        for b, cb in v.items():
            out[a * dim_right + b] = f.mul(ca, cb)
    return out


def _swap_between(sp1: VecSpace, sp2: VecSpace, f: FieldSpec) -> LinMap:
    d1, d2 = sp1.dim, sp2.dim
    dom = tensor_space(sp2, sp1)
    cod = tensor_space(sp1, sp2)
    one = f.one
    cols = {b * d1 + a: {a * d2 + b: one} for a in range(d1) for b in range(d2)}
    return LinMap(dom, cod, f, cols)


def comodule_algebra_from_bialgebra(b: HopfAlgebra) -> ComoduleAlgebra:
    """B as a right comodule algebra over itself with coaction Delta."""
    return ComoduleAlgebra(b, b.space, b.mult, b.unit, b.comult, name=f"{b.name} over itself")
