"""Finite-dimensional Hopf algebras given by structure constants.

Conventions (fixed throughout the package):
  - mult[i][j] is the sparse vector e_i * e_j,
  - comult[i] maps (j, k) to the coefficient of e_j (x) e_k in Delta(e_i),
  - antipode[i] is the sparse vector S(e_i),
  - Lambda is a left integral (h Lambda = eps(h) Lambda), lam a right
    cointegral (lam(h_(1)) h_(2) = lam(h) 1), normalized so lam(Lambda) = 1,
  - the distinguished grouplikes satisfy Lambda h = alpha(h) Lambda and
    h_(1) lam(h_(2)) = lam(h) g,
  - twisted integrals: Lambda_{n-1/2} = alpha^{-n} -> S(Lambda) (Sweedler
    leg 1 kept, alpha^{-n} eaten by leg 2) and lam_{n-1/2}(y) = lam(y g^n).

Sparse vectors are {index: CycScalar} dicts, covectors dense lists,
matrices lists of sparse columns (matrix[i] = image of e_i).
"""

from __future__ import annotations

import os
import random as _random
from math import gcd

from .scalar import CycScalar, as_scalar, parse_scalar
from .tensor import SparseTensor

# All values here are immutable after construction and every operation is
# pure, so algebras, integrals and reports are safe to share across threads.


class HopfError(Exception):
    pass


class NotAGroup(HopfError):
    pass


class NotPrimitive(HopfError):
    pass


class DegenerateIntegralSpace(HopfError):
    pass


class NormalizationFailure(HopfError):
    pass


class AxiomFailure(HopfError):
    pass


class HopfFormatError(HopfError, ValueError):
    pass


# --------------------------------------------------------------------------
# reports


class Check:
    __slots__ = ("name", "ok", "witness")

    def __init__(self, name, ok, witness=""):
        self.name = name
        self.ok = ok
        self.witness = witness

    def __repr__(self):
        return f"Check({self.name!r}, {'ok' if self.ok else 'FAIL'}{', ' + self.witness if self.witness else ''})"


class SuiteReport:
    """A list of named pass/fail checks with an optional RNG seed."""

    def __init__(self, title, seed=None):
        self.title = title
        self.seed = seed
        self.checks = []

    def record(self, name, ok, witness=""):
        self.checks.append(Check(name, bool(ok), witness))

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def lines(self):
        out = [f"# {self.title}" + (f" (seed={self.seed})" if self.seed is not None else "")]
        for c in self.checks:
            mark = "ok  " if c.ok else "FAIL"
            out.append(f"{mark} {c.name}" + (f"  [{c.witness}]" if c.witness and not c.ok else ""))
        return out

    def __str__(self):
        return "\n".join(self.lines())


# --------------------------------------------------------------------------
# linear algebra over CycScalar


def _dot(cov, vec):
    total = CycScalar.zero()
    for i, c in vec.items():
        if cov[i]:
            total = total + cov[i] * c
    return total


def _vec_add(a, b):
    out = dict(a)
    for i, c in b.items():
        acc = out.get(i)
        new = c if acc is None else acc + c
        if new:
            out[i] = new
        else:
            out.pop(i, None)
    return out


def _vec_scale(v, c):
    if not c:
        return {}
    return {i: x * c for i, x in v.items()}


def _vec_eq(a, b):
    if set(a) != set(b):
        return False
    return all(a[i] == b[i] for i in a)


def _rref(rows, width):
    """In-place reduced row echelon form; returns list of pivot columns."""
    pivots = []
    r = 0
    for col in range(width):
        p = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][col].inv()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                c = rows[i][col]
                rows[i] = [a - c * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    del rows[r:]
    return pivots


def _nullspace(rows, width):
    """Basis of the nullspace of the given row list (dense CycScalar rows)."""
    rows = [list(r) for r in rows if any(r)]
    pivots = _rref(rows, width)
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for fc in free:
        v = [CycScalar.zero()] * width
        v[fc] = CycScalar.one()
        for r, pc in zip(rows, pivots):
            if r[fc]:
                v[pc] = -r[fc]
        basis.append(v)
    return basis


def matrix_inverse(cols, dim):
    """Invert a matrix given as sparse columns; raises AxiomFailure if singular."""
    rows = [[cols[j].get(i, CycScalar.zero()) for j in range(dim)]
            + [CycScalar.one() if k == i else CycScalar.zero() for k in range(dim)]
            for i in range(dim)]
    pivots = _rref(rows, dim)
    if pivots != list(range(dim)):
        raise AxiomFailure("matrix is singular")
    inv_cols = [dict() for _ in range(dim)]
    for i, row in enumerate(rows):
        for j in range(dim):
            c = row[dim + j]
            if c:
                inv_cols[j][i] = c
    return inv_cols


# --------------------------------------------------------------------------
# the algebra container


class HopfData:
    __slots__ = ("dim", "labels", "field_order", "mult", "unit", "comult",
                 "counit", "antipode", "_antipode_inv", "_axiom_report",
                 "_integrals", "_s_powers", "_delta_cache", "_mult_support")

    def __init__(self, dim, labels, field_order, mult, unit, comult, counit, antipode):
        if dim < 1:
            raise HopfError("dimension must be positive")
        if len(labels) != dim or len(mult) != dim or len(comult) != dim or len(counit) != dim or len(antipode) != dim:
            raise HopfError("structure tensors are dimension-inconsistent")
        for row in mult:
            if len(row) != dim:
                raise HopfError("multiplication tensor is dimension-inconsistent")
        self.dim = dim
        self.labels = list(labels)
        self.field_order = field_order
        self.mult = mult
        self.unit = unit
        self.comult = comult
        self.counit = counit
        self.antipode = antipode
        self._antipode_inv = None
        self._axiom_report = None
        self._integrals = None
        self._s_powers = {}
        self._delta_cache = {}
        self._mult_support = None

    # -- basic algebra -----------------------------------------------------

    def zero_scalar(self):
        return CycScalar.zero()

    def one(self):
        return dict(self.unit)

    def basis_vec(self, i):
        return {i: CycScalar.one()}

    def mult_support(self):
        """mult_support()[i] = tuple of j with e_i e_j != 0 (pair pruning)."""
        if self._mult_support is None:
            self._mult_support = [tuple(j for j in range(self.dim) if self.mult[i][j])
                                  for i in range(self.dim)]
        return self._mult_support

    def multiply_basis_right(self, vec, j):
        out = {}
        for i, c in vec.items():
            for k, m in self.mult[i][j].items():
                acc = out.get(k)
                new = c * m if acc is None else acc + c * m
                if new:
                    out[k] = new
                else:
                    out.pop(k, None)
        return out

    def multiply(self, v, w):
        out = {}
        for i, a in v.items():
            for j, b in w.items():
                c = a * b
                if not c:
                    continue
                for k, m in self.mult[i][j].items():
                    acc = out.get(k)
                    new = c * m if acc is None else acc + c * m
                    if new:
                        out[k] = new
                    else:
                        out.pop(k, None)
        return out

    def product(self, *vecs):
        acc = self.one()
        for v in vecs:
            acc = self.multiply(acc, v)
        return acc

    def counit_of(self, v):
        return _dot(self.counit, v)

    def apply_matrix(self, cols, v):
        out = {}
        for i, c in v.items():
            for k, m in cols[i].items():
                acc = out.get(k)
                new = c * m if acc is None else acc + c * m
                if new:
                    out[k] = new
                else:
                    out.pop(k, None)
        return out

    def compose(self, A, B):
        """Matrix product A o B on sparse columns."""
        return [self.apply_matrix(A, B[i]) for i in range(self.dim)]

    def identity_matrix(self):
        return [ {i: CycScalar.one()} for i in range(self.dim) ]

    @property
    def antipode_inv(self):
        if self._antipode_inv is None:
            self._antipode_inv = matrix_inverse(self.antipode, self.dim)
        return self._antipode_inv

    def s_power(self, k: int):
        """Matrix of S^k (k may be negative)."""
        if k in self._s_powers:
            return self._s_powers[k]
        if k == 0:
            m = self.identity_matrix()
        elif k > 0:
            m = self.compose(self.antipode, self.s_power(k - 1))
        else:
            m = self.compose(self.antipode_inv, self.s_power(k + 1))
        self._s_powers[k] = m
        return m

    def antipode_of(self, v, power=1):
        return self.apply_matrix(self.s_power(power), v)

    def trace(self, cols):
        total = CycScalar.zero()
        for i in range(self.dim):
            c = cols[i].get(i)
            if c:
                total = total + c
        return total

    def left_mult_matrix(self, v):
        return [self.multiply(v, self.basis_vec(j)) for j in range(self.dim)]

    def right_mult_matrix(self, v):
        return [self.multiply(self.basis_vec(j), v) for j in range(self.dim)]

    # -- coalgebra ---------------------------------------------------------

    def as_tensor(self, v) -> SparseTensor:
        return SparseTensor.from_vector(v, self.dim, context=self)

    def delta_n(self, v, n: int) -> SparseTensor:
        """Delta^(n) of a vector as an n-leg tensor (n = 0 gives eps(v) as a
        0-leg tensor, n = 1 the vector itself)."""
        t = self.as_tensor(v)
        return t.expand_leg(1, n)

    def delta_n_basis(self, i, n):
        key = (i, n)
        if key not in self._delta_cache:
            self._delta_cache[key] = self.delta_n(self.basis_vec(i), n)
        return self._delta_cache[key]

    def covector_convolve(self, phi, psi):
        """(phi * psi)(e_i) = sum phi(e_i(1)) psi(e_i(2))."""
        out = []
        for i in range(self.dim):
            total = CycScalar.zero()
            for (j, k), c in self.comult[i].items():
                if phi[j] and psi[k]:
                    total = total + c * phi[j] * psi[k]
            out.append(total)
        return out

    def covector_power(self, phi, m: int, phi_inv=None):
        """m-th convolution power of a covector (m may be negative if phi_inv given)."""
        base = phi
        if m < 0:
            if phi_inv is None:
                raise HopfError("negative covector power needs an inverse")
            base, m = phi_inv, -m
        acc = list(self.counit)
        for _ in range(m):
            acc = self.covector_convolve(acc, base)
        return acc

    def covector_compose(self, phi, cols):
        """phi o M for a matrix in sparse-column form."""
        return [_dot(phi, cols[i]) for i in range(self.dim)]

    def element_power(self, v, m: int, v_inv=None):
        base = v
        if m < 0:
            if v_inv is None:
                raise HopfError("negative element power needs an inverse")
            base, m = v_inv, -m
        acc = self.one()
        for _ in range(m):
            acc = self.multiply(acc, base)
        return acc

    def render_vec(self, v):
        if not v:
            return "0"
        parts = []
        for i in sorted(v):
            parts.append(f"({v[i].render()})*{self.labels[i]}")
        return " + ".join(parts)

    def __repr__(self):
        return f"HopfData(dim={self.dim}, field=Q(zeta_{self.field_order}))"


# --------------------------------------------------------------------------
# axiom verification


def verify_axioms(H: HopfData) -> SuiteReport:
    """Check every Hopf axiom; failures carry a witness, nothing raises."""
    if H._axiom_report is not None:
        return H._axiom_report
    rep = SuiteReport(f"Hopf axioms, dim {H.dim}")
    dim = H.dim
    one = H.one()

    ok, wit = True, ""
    for j in range(dim):
        e = H.basis_vec(j)
        if not _vec_eq(H.multiply(one, e), e) or not _vec_eq(H.multiply(e, one), e):
            ok, wit = False, f"unit fails at {H.labels[j]}"
            break
    rep.record("unit", ok, wit)

    ok, wit = True, ""
    for i in range(dim):
        for j in range(dim):
            ij = H.mult[i][j]
            for k in range(dim):
                lhs = H.multiply_basis_right(ij, k)
                rhs = H.multiply(H.basis_vec(i), H.mult[j][k])
                if not _vec_eq(lhs, rhs):
                    ok, wit = False, f"({H.labels[i]}*{H.labels[j]})*{H.labels[k]}"
                    break
            if not ok:
                break
        if not ok:
            break
    rep.record("associativity", ok, wit)

    ok, wit = True, ""
    for i in range(dim):
        d = H.delta_n_basis(i, 2)
        left = d.comult_leg(1)
        right = d.comult_leg(2)
        if left != right:
            ok, wit = False, H.labels[i]
            break
    rep.record("coassociativity", ok, wit)

    ok, wit = True, ""
    for i in range(dim):
        d = H.delta_n_basis(i, 2)
        v1 = d.contract_with_covector([1], [H.counit]).entries
        v2 = d.contract_with_covector([2], [H.counit]).entries
        if not _vec_eq({k[0]: v for k, v in v1.items()}, {i: CycScalar.one()}) or \
           not _vec_eq({k[0]: v for k, v in v2.items()}, {i: CycScalar.one()}):
            ok, wit = False, H.labels[i]
            break
    rep.record("counit", ok, wit)

    ok, wit = True, ""
    if H.as_tensor(one).expand_leg(1, 2) != H.as_tensor(one).tensor(H.as_tensor(one)):
        ok, wit = False, "Delta(1) != 1x1"
    if ok:
        for i in range(dim):
            for j in range(dim):
                lhs = H.as_tensor(H.mult[i][j]).expand_leg(1, 2)
                rhs = H.delta_n_basis(i, 2).algebra_product(H.delta_n_basis(j, 2))
                if lhs != rhs:
                    ok, wit = False, f"Delta({H.labels[i]}*{H.labels[j]})"
                    break
            if not ok:
                break
    if ok:
        for i in range(dim):
            for j in range(dim):
                if H.counit_of(H.mult[i][j]) != H.counit_of(H.basis_vec(i)) * H.counit_of(H.basis_vec(j)):
                    ok, wit = False, f"eps({H.labels[i]}*{H.labels[j]})"
                    break
            if not ok:
                break
    if ok and H.counit_of(one) != 1:
        ok, wit = False, "eps(1) != 1"
    rep.record("bialgebra", ok, wit)

    ok, wit = True, ""
    for i in range(dim):
        d = H.delta_n_basis(i, 2)
        lhs = d.apply_on_leg(1, H.antipode).multiply_legs([1, 2]).entries
        rhs = d.apply_on_leg(2, H.antipode).multiply_legs([1, 2]).entries
        target = _vec_scale(one, H.counit[i])
        if not _vec_eq({k[0]: v for k, v in lhs.items()}, target) or \
           not _vec_eq({k[0]: v for k, v in rhs.items()}, target):
            ok, wit = False, H.labels[i]
            break
    rep.record("antipode", ok, wit)

    ok, wit = True, ""
    try:
        inv = H.antipode_inv
        for i in range(dim):
            if not _vec_eq(H.apply_matrix(inv, H.antipode[i]), H.basis_vec(i)):
                ok, wit = False, H.labels[i]
                break
    except AxiomFailure:
        ok, wit = False, "antipode is not invertible"
    rep.record("antipode invertible", ok, wit)

    H._axiom_report = rep
    return rep


def require_axioms(H: HopfData):
    rep = verify_axioms(H)
    if not rep.ok:
        raise AxiomFailure("; ".join(f"{c.name}: {c.witness}" for c in rep.failures()))


def _debug_verify(H: HopfData) -> HopfData:
    # constructors self-verify when HOPFINV_DEBUG is set
    if __debug__ and os.environ.get("HOPFINV_DEBUG"):
        require_axioms(H)
    return H


# --------------------------------------------------------------------------
# groups and group algebras


class Group:
    """A finite group as a Cayley table on element names."""

    def __init__(self, names, table):
        self.names = list(names)
        self.table = [list(r) for r in table]
        n = len(self.names)
        if any(len(r) != n for r in self.table) or len(self.table) != n:
            raise NotAGroup("table is not square")
        ident = None
        for e in range(n):
            if all(self.table[e][j] == j and self.table[j][e] == j for j in range(n)):
                ident = e
                break
        if ident is None:
            raise NotAGroup("no identity element")
        self.identity = ident
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.table[self.table[i][j]][k] != self.table[i][self.table[j][k]]:
                        raise NotAGroup(f"associativity fails at ({self.names[i]},{self.names[j]},{self.names[k]})")
        self.inverse = [None] * n
        for i in range(n):
            inv = next((j for j in range(n) if self.table[i][j] == ident and self.table[j][i] == ident), None)
            if inv is None:
                raise NotAGroup(f"{self.names[i]} has no inverse")
            self.inverse[i] = inv

    @property
    def order(self):
        return len(self.names)


def cyclic_group(n: int) -> Group:
    names = [f"t{i}" if i else "e" for i in range(n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return Group(names, table)


def builtin_group(name: str) -> Group:
    key = name.lower()
    if key.startswith("z") and key[1:].isdigit():
        return cyclic_group(int(key[1:]))
    if key in ("z2xz2", "v4", "klein"):
        names = ["e", "a", "b", "ab"]
        idx = {(0, 0): 0, (1, 0): 1, (0, 1): 2, (1, 1): 3}
        pos = {v: k for k, v in idx.items()}
        table = [[idx[((pos[i][0] + pos[j][0]) % 2, (pos[i][1] + pos[j][1]) % 2)]
                  for j in range(4)] for i in range(4)]
        return Group(names, table)
    if key == "s3":
        perms = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
        names = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]
        index = {p: i for i, p in enumerate(perms)}
        table = [[index[tuple(p[q[t]] for t in range(3))] for q in perms] for p in perms]
        return Group(names, table)
    if key == "q8":
        names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        # encode q = (sign, axis) with axis in {1,i,j,k}
        def mul(a, b):
            sa, xa = a
            sb, xb = b
            rules = {("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
                     ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
                     ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
                     ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                     ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")}
            s, x = rules[(xa, xb)]
            return (sa * sb * s, x)
        elems = [(1, "1"), (-1, "1"), (1, "i"), (-1, "i"), (1, "j"), (-1, "j"), (1, "k"), (-1, "k")]
        index = {q: i for i, q in enumerate(elems)}
        table = [[index[mul(a, b)] for b in elems] for a in elems]
        return Group(names, table)
    raise NotAGroup(f"unknown builtin group {name!r}")


def parse_group_table(text: str) -> Group:
    """Cayley table text: first line the element names, then one row of
    products (by name) per element; '#' starts a comment."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise NotAGroup("empty group table")
    names = lines[0].split()
    index = {n: i for i, n in enumerate(names)}
    if len(index) != len(names):
        raise NotAGroup("duplicate element names")
    if len(lines) != len(names) + 1:
        raise NotAGroup(f"expected {len(names)} table rows, found {len(lines) - 1}")
    table = []
    for ln in lines[1:]:
        row = ln.split()
        if len(row) != len(names):
            raise NotAGroup("ragged table row")
        try:
            table.append([index[x] for x in row])
        except KeyError as exc:
            raise NotAGroup(f"unknown element {exc.args[0]!r} in table") from None
    return Group(names, table)


def group_algebra(group, field_order: int = 1) -> HopfData:
    """k[G]: basis the group elements, Delta(g) = g x g, S(g) = g^-1."""
    if not isinstance(group, Group):
        group = Group(*group) if isinstance(group, tuple) else parse_group_table(group)
    n = group.order
    one = CycScalar.one()
    mult = [[{group.table[i][j]: one} for j in range(n)] for i in range(n)]
    comult = [{(i, i): one} for i in range(n)]
    counit = [one] * n
    antipode = [{group.inverse[i]: one} for i in range(n)]
    unit = {group.identity: one}
    return _debug_verify(HopfData(n, group.names, field_order, mult, unit, comult, counit, antipode))


# --------------------------------------------------------------------------
# Taft algebras


def taft(n: int, zeta: CycScalar) -> HopfData:
    """The n^2-dimensional algebra <x, g | x^n = 0, g^n = 1, gx = zeta xg>
    with Delta(x) = x (x) g + 1 (x) x, Delta(g) = g (x) g, S(g) = g^-1,
    S(x) = -x g^-1.  Basis x^a g^b at index a*n + b."""
    if n < 2:
        raise NotPrimitive("n must be at least 2")
    is_root, order = zeta.is_root_of_unity()
    if not is_root or order != n:
        raise NotPrimitive(f"zeta is not a primitive {n}-th root of unity")
    dim = n * n
    labels = []
    for a in range(n):
        for b in range(n):
            xs = "" if a == 0 else ("x" if a == 1 else f"x{a}")
            gs = "" if b == 0 else ("g" if b == 1 else f"g{b}")
            labels.append((xs + gs) or "1")

    def idx(a, b):
        return a * n + b

    zero = CycScalar.zero()
    one = CycScalar.one()
    mult = [[None] * dim for _ in range(dim)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    if a + c >= n:
                        cell = {}
                    else:
                        cell = {idx(a + c, (b + d) % n): zeta ** (b * c)}
                    mult[idx(a, b)][idx(c, d)] = cell
    unit = {idx(0, 0): one}
    counit = [one if a == 0 else zero for a in range(n) for b in range(n)]

    # Delta is an algebra map: build Delta(x^a g^b) = Delta(x)^a Delta(g)^b
    def t2_mult(u, v):
        out = {}
        for (i1, i2), c1 in u.items():
            for (j1, j2), c2 in v.items():
                t1 = mult[i1][j1]
                t2 = mult[i2][j2]
                if not t1 or not t2:
                    continue
                (k1, m1), = t1.items()
                (k2, m2), = t2.items()
                key = (k1, k2)
                val = c1 * c2 * m1 * m2
                acc = out.get(key)
                new = val if acc is None else acc + val
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
        return out

    dx = {(idx(1, 0), idx(0, 1)): one, (idx(0, 0), idx(1, 0)): one}
    dg = {(idx(0, 1), idx(0, 1)): one}
    comult = [None] * dim
    row = {(idx(0, 0), idx(0, 0)): one}
    for a in range(n):
        acc = dict(row)
        for b in range(n):
            comult[idx(a, b)] = acc
            acc = t2_mult(acc, dg)
        row = t2_mult(row, dx)

    # antipode: anti-homomorphism with S(g) = g^(n-1), S(x) = -x g^(n-1)
    sg = {idx(0, n - 1): one}
    sx = {idx(1, n - 1): -one}
    antipode = [None] * dim

    def vec_mult(u, v):
        out = {}
        for i, c1 in u.items():
            for j, c2 in v.items():
                for k, m in mult[i][j].items():
                    acc = out.get(k)
                    new = c1 * c2 * m if acc is None else acc + c1 * c2 * m
                    if new:
                        out[k] = new
                    else:
                        out.pop(k, None)
        return out

    for a in range(n):
        for b in range(n):
            v = {idx(0, 0): one}
            for _ in range(b):
                v = vec_mult(v, sg)
            for _ in range(a):
                v = vec_mult(v, sx)
            antipode[idx(a, b)] = v

    field_order = zeta.order
    return _debug_verify(HopfData(dim, labels, field_order, mult, unit, comult, counit, antipode))


# --------------------------------------------------------------------------
# dual / opposite / tensor product


def dual(H: HopfData) -> HopfData:
    """H*: multiplication is Delta transposed, comultiplication is m transposed."""
    dim = H.dim
    mult = [[dict() for _ in range(dim)] for _ in range(dim)]
    for i in range(dim):
        for (j, k), c in H.comult[i].items():
            mult[j][k][i] = c
    unit = {i: c for i, c in enumerate(H.counit) if c}
    comult = [dict() for _ in range(dim)]
    for j in range(dim):
        for k in range(dim):
            for i, c in H.mult[j][k].items():
                comult[i][(j, k)] = c
    counit = [H.unit.get(i, CycScalar.zero()) for i in range(dim)]
    antipode = [dict() for _ in range(dim)]
    for j in range(dim):
        for i, c in H.antipode[j].items():
            antipode[i][j] = c
    labels = [f"{lbl}*" for lbl in H.labels]
    return _debug_verify(HopfData(dim, labels, H.field_order, mult, unit, comult, counit, antipode))


def opposite(H: HopfData) -> HopfData:
    """H^op: reversed multiplication, antipode S^-1."""
    dim = H.dim
    mult = [[H.mult[j][i] for j in range(dim)] for i in range(dim)]
    antipode = [dict(H.antipode_inv[i]) for i in range(dim)]
    return _debug_verify(HopfData(dim, list(H.labels), H.field_order, mult, dict(H.unit),
                                  [dict(c) for c in H.comult], list(H.counit), antipode))


def tensor_product(H: HopfData, K: HopfData) -> HopfData:
    """H (x) K with basis e_i (x) f_j at index i*dim(K) + j."""
    m = H.field_order
    k_ord = K.field_order
    field = m // gcd(m, k_ord) * k_ord
    dim = H.dim * K.dim

    def idx(i, j):
        return i * K.dim + j

    labels = [f"{a}|{b}" for a in H.labels for b in K.labels]
    mult = [[None] * dim for _ in range(dim)]
    for i1 in range(H.dim):
        for j1 in range(K.dim):
            for i2 in range(H.dim):
                for j2 in range(K.dim):
                    cell = {}
                    for a, ca in H.mult[i1][i2].items():
                        for b, cb in K.mult[j1][j2].items():
                            cell[idx(a, b)] = ca * cb
                    mult[idx(i1, j1)][idx(i2, j2)] = cell
    unit = {idx(a, b): ca * cb for a, ca in H.unit.items() for b, cb in K.unit.items()}
    comult = [None] * dim
    for i in range(H.dim):
        for j in range(K.dim):
            cell = {}
            for (i1, i2), ci in H.comult[i].items():
                for (j1, j2), cj in K.comult[j].items():
                    cell[(idx(i1, j1), idx(i2, j2))] = ci * cj
            comult[idx(i, j)] = cell
    counit = [H.counit[i] * K.counit[j] for i in range(H.dim) for j in range(K.dim)]
    antipode = [None] * dim
    for i in range(H.dim):
        for j in range(K.dim):
            cell = {}
            for a, ca in H.antipode[i].items():
                for b, cb in K.antipode[j].items():
                    cell[idx(a, b)] = ca * cb
            antipode[idx(i, j)] = cell
    return _debug_verify(HopfData(dim, labels, field, mult, unit, comult, counit, antipode))


# --------------------------------------------------------------------------
# integrals


class IntegralData:
    """Normalized integral pair plus distinguished grouplikes.

    Lambda: left integral (sparse vec); lam: right cointegral (dense covector)
    with lam(Lambda) = 1; g in H and alpha in H* the distinguished grouplikes;
    alpha_at_g = alpha(g), a root of unity of order dividing dim(H).
    """

    __slots__ = ("algebra", "Lambda", "lam", "g", "g_inv", "alpha", "alpha_inv",
                 "alpha_at_g", "_twisted_elem", "_twisted_func", "_t_matrix")

    def __init__(self, algebra, Lambda, lam, g, g_inv, alpha, alpha_inv, alpha_at_g):
        self.algebra = algebra
        self.Lambda = Lambda
        self.lam = lam
        self.g = g
        self.g_inv = g_inv
        self.alpha = alpha
        self.alpha_inv = alpha_inv
        self.alpha_at_g = alpha_at_g
        self._twisted_elem = {}
        self._twisted_func = {}
        self._t_matrix = None

    def lam_of(self, v):
        return _dot(self.lam, v)

    def alpha_power(self, m: int):
        return self.algebra.covector_power(self.alpha, m, self.alpha_inv)

    def g_power(self, m: int):
        return self.algebra.element_power(self.g, m, self.g_inv)


def integrals(H: HopfData) -> IntegralData:
    """Solve for the normalized integral pair and the distinguished grouplikes,
    asserting every structural invariant before returning."""
    if H._integrals is not None:
        return H._integrals
    require_axioms(H)
    dim = H.dim
    zero = CycScalar.zero()

    # left integral: h v = eps(h) v for every basis h
    candidates = [[CycScalar.one() if i == j else zero for i in range(dim)] for j in range(dim)]
    for h in range(dim):
        if len(candidates) == 0:
            break
        rows = []
        for r in range(dim):
            row = []
            for cand in candidates:
                total = zero
                for i, c in enumerate(cand):
                    if c:
                        m = H.mult[h][i].get(r)
                        if m:
                            total = total + c * m
                if H.counit[h]:
                    total = total - H.counit[h] * cand[r]
                row.append(total)
            rows.append(row)
        ns = _nullspace(rows, len(candidates))
        candidates = [
            [sum((v[t] * candidates[t][i] for t in range(len(candidates)) if v[t]), zero)
             for i in range(dim)]
            for v in ns
        ]
        if not candidates:
            break
    if len(candidates) != 1:
        raise DegenerateIntegralSpace(f"left-integral space has dimension {len(candidates)}")
    Lambda = {i: c for i, c in enumerate(candidates[0]) if c}

    # right cointegral: lam(h_(1)) h_(2) = lam(h) 1 for every basis h
    candidates = [[CycScalar.one() if i == j else zero for i in range(dim)] for j in range(dim)]
    for h in range(dim):
        rows = []
        for r in range(dim):
            row = []
            for cand in candidates:
                total = zero
                for (j, k), c in H.comult[h].items():
                    if k == r and cand[j]:
                        total = total + c * cand[j]
                u = H.unit.get(r)
                if u and cand[h]:
                    total = total - u * cand[h]
                row.append(total)
            rows.append(row)
        ns = _nullspace(rows, len(candidates))
        candidates = [
            [sum((v[t] * candidates[t][i] for t in range(len(candidates)) if v[t]), zero)
             for i in range(dim)]
            for v in ns
        ]
        if not candidates:
            break
    if len(candidates) != 1:
        raise DegenerateIntegralSpace(f"right-cointegral space has dimension {len(candidates)}")
    lam = candidates[0]

    norm = _dot(lam, Lambda)
    if not norm:
        raise NormalizationFailure("lam(Lambda) = 0; input is not a Hopf algebra")
    inv = norm.inv()
    lam = [c * inv for c in lam]

    # alpha from Lambda h = alpha(h) Lambda
    pivot = next(iter(sorted(Lambda)))
    piv_inv = Lambda[pivot].inv()
    alpha = []
    for i in range(dim):
        prod = H.multiply_basis_right(Lambda, i)
        a = prod.get(pivot, zero) * piv_inv
        if not _vec_eq(prod, _vec_scale(Lambda, a)):
            raise DegenerateIntegralSpace("Lambda h is not proportional to Lambda")
        alpha.append(a)
    alpha_inv = H.covector_compose(alpha, H.antipode)
    if H.covector_convolve(alpha, alpha_inv) != H.counit:
        raise NormalizationFailure("alpha has no convolution inverse alpha o S")

    # g from lam -> h = lam(h) g, pinned by g = (id x lam) Delta(S(Lambda))
    SL = H.antipode_of(Lambda)
    d = H.delta_n(SL, 2)
    g = {}
    for (j, k), c in d.entries.items():
        if lam[k]:
            acc = g.get(j)
            new = c * lam[k] if acc is None else acc + c * lam[k]
            if new:
                g[j] = new
            else:
                g.pop(j, None)
    for i in range(dim):
        lhs = {}
        for (j, k), c in H.comult[i].items():
            if lam[k]:
                acc = lhs.get(j)
                new = c * lam[k] if acc is None else acc + c * lam[k]
                if new:
                    lhs[j] = new
                else:
                    lhs.pop(j, None)
        if not _vec_eq(lhs, _vec_scale(g, lam[i])):
            raise DegenerateIntegralSpace("h_(1) lam(h_(2)) is not lam(h) g")
    g_inv = H.antipode_of(g)
    if not _vec_eq(H.multiply(g, g_inv), H.one()):
        raise NormalizationFailure("g S(g) != 1")

    # grouplike sanity
    if H.delta_n(g, 2) != H.as_tensor(g).tensor(H.as_tensor(g)):
        raise NormalizationFailure("g is not grouplike")
    if H.counit_of(g) != 1:
        raise NormalizationFailure("eps(g) != 1")
    for i in range(dim):
        for j in range(dim):
            if _dot(alpha, H.mult[i][j]) != alpha[i] * alpha[j]:
                raise NormalizationFailure("alpha is not an algebra map")
    if _dot(alpha, H.one()) != 1:
        raise NormalizationFailure("alpha(1) != 1")

    alpha_at_g = _dot(alpha, g)
    data = IntegralData(H, Lambda, lam, g, g_inv, alpha, alpha_inv, alpha_at_g)

    # invariants from the integral lemma and Radford's S^4 formula
    if _dot(lam, SL) != 1:
        raise NormalizationFailure("lam(S(Lambda)) != 1")
    lam_S_inv = H.covector_compose(lam, H.s_power(-1))
    if _dot(lam_S_inv, SL) != 1:
        raise NormalizationFailure("lam(S^-1(S(Lambda))) != 1")
    if _dot(lam_S_inv, Lambda) != alpha_at_g:
        raise NormalizationFailure("lam(S^-1(Lambda)) != alpha(g)")
    is_root, order = alpha_at_g.is_root_of_unity()
    if not is_root or H.dim % order != 0:
        raise NormalizationFailure("alpha(g) is not a dim(H)-th root of unity")
    s4 = H.s_power(4)
    for i in range(dim):
        x = H.multiply(H.multiply(g, H.basis_vec(i)), g_inv)
        t = H.delta_n(x, 3)
        rhs = {}
        for (a, b, c), val in t.entries.items():
            coeff = val * alpha_inv[a] * alpha[c]
            if coeff:
                acc = rhs.get(b)
                new = coeff if acc is None else acc + coeff
                if new:
                    rhs[b] = new
                else:
                    rhs.pop(b, None)
        if not _vec_eq(s4[i], rhs):
            raise NormalizationFailure(f"Radford S^4 formula fails at {H.labels[i]}")

    H._integrals = data
    return data


def twisted_integral(I: IntegralData, side: str, n: int):
    """Lambda_{n-1/2} (side='element') or lam_{n-1/2} (side='functional')."""
    H = I.algebra
    if side == "element":
        if n not in I._twisted_elem:
            SL = H.antipode_of(I.Lambda)
            phi = I.alpha_power(-n)
            d = H.delta_n(SL, 2)
            out = {}
            for (j, k), c in d.entries.items():
                if phi[k]:
                    acc = out.get(j)
                    new = c * phi[k] if acc is None else acc + c * phi[k]
                    if new:
                        out[j] = new
                    else:
                        out.pop(j, None)
            I._twisted_elem[n] = out
        return dict(I._twisted_elem[n])
    if side == "functional":
        if n not in I._twisted_func:
            gn = I.g_power(n)
            right = H.right_mult_matrix(gn)
            I._twisted_func[n] = H.covector_compose(I.lam, right)
        return list(I._twisted_func[n])
    raise HopfError(f"unknown side {side!r}")


def sweedler_power(H: HopfData, n: int, x):
    """P^(n)(x): multiply the Delta^n legs in order; P^(0) = eps(x) 1;
    negative n multiplies antipoded legs."""
    if n == 0:
        return _vec_scale(H.one(), H.counit_of(x))
    t = H.delta_n(x, abs(n))
    if n < 0:
        for leg in range(1, abs(n) + 1):
            t = t.apply_on_leg(leg, H.antipode)
    t = t.multiply_legs(list(range(1, abs(n) + 1)))
    return {k[0]: v for k, v in t.entries.items()}


def T_operator(H: HopfData, I: IntegralData):
    """Matrix of T(x) = alpha^-1(x_(1)) S^-2(x_(2)) alpha(x_(3))."""
    if I._t_matrix is not None:
        return I._t_matrix
    s_m2 = H.s_power(-2)
    cols = []
    for i in range(H.dim):
        mid = {}
        for (a, b, c), val in H.delta_n_basis(i, 3).entries.items():
            coeff = val * I.alpha_inv[a] * I.alpha[c]
            if coeff:
                acc = mid.get(b)
                new = coeff if acc is None else acc + coeff
                if new:
                    mid[b] = new
                else:
                    mid.pop(b, None)
        cols.append(H.apply_matrix(s_m2, mid))
    I._t_matrix = cols
    return cols


# --------------------------------------------------------------------------
# the Radford-formula identity suite


SUITE_SEED = 271828


def _random_maps(H: HopfData, seed: int, count: int = 2):
    rng = _random.Random(seed + H.dim)
    maps = []
    for _ in range(count):
        cols = []
        for _i in range(H.dim):
            col = {}
            for j in range(H.dim):
                if rng.random() < 0.4:
                    c = rng.choice([-2, -1, 1, 2])
                    col[j] = as_scalar(c)
            cols.append(col)
        maps.append(cols)
    return maps


def identity_suite(H: HopfData, I: IntegralData = None, seed: int = SUITE_SEED) -> SuiteReport:
    """Radford trace formulas and their corollaries, checked on every basis
    pair and on {id, S, S^2, seeded random maps}."""
    if I is None:
        I = integrals(H)
    rep = SuiteReport(f"integral identities, dim {H.dim}", seed=seed)
    dim = H.dim
    lam = I.lam
    lam_S = H.covector_compose(lam, H.antipode)
    S = H.antipode
    s2 = H.s_power(2)
    dL = H.delta_n(I.Lambda, 2)

    def lam_of(v):
        return _dot(lam, v)

    def lamS_of(v):
        return _dot(lam_S, v)

    # (i) lam(ab) = lam(S^2(b <- alpha) a) and (ii) its S-twisted form
    ok_i, wit_i, ok_ii, wit_ii = True, "", True, ""
    hooked = []
    for b in range(dim):
        w = {}
        for (j, k), c in H.comult[b].items():
            if I.alpha[j]:
                acc = w.get(k)
                new = c * I.alpha[j] if acc is None else acc + c * I.alpha[j]
                if new:
                    w[k] = new
                else:
                    w.pop(k, None)
        hooked.append(w)  # b <- alpha
    for a in range(dim):
        ea = H.basis_vec(a)
        Sa = H.antipode[a]
        for b in range(dim):
            ab = H.mult[a][b]
            if ok_i:
                rhs = H.multiply(H.apply_matrix(s2, hooked[b]), ea)
                if lam_of(ab) != lam_of(rhs):
                    ok_i, wit_i = False, f"a={H.labels[a]}, b={H.labels[b]}"
            if ok_ii:
                # S(S(a) <- alpha): hook alpha into S(a), then S
                sa_hooked = {}
                for i, c in Sa.items():
                    for (j, k), cc in H.comult[i].items():
                        if I.alpha[j]:
                            acc = sa_hooked.get(k)
                            new = c * cc * I.alpha[j] if acc is None else acc + c * cc * I.alpha[j]
                            if new:
                                sa_hooked[k] = new
                            else:
                                sa_hooked.pop(k, None)
                rhs = H.multiply(H.basis_vec(b), H.apply_matrix(S, sa_hooked))
                if lamS_of(ab) != lamS_of(rhs):
                    ok_ii, wit_ii = False, f"a={H.labels[a]}, b={H.labels[b]}"
            if not ok_i and not ok_ii:
                break
        if not ok_i and not ok_ii:
            break
    rep.record("radford.i lam(ab) = lam(S2(b<-alpha) a)", ok_i, wit_i)
    rep.record("radford.ii lamS(ab) = lamS(b S(S(a)<-alpha))", ok_ii, wit_ii)

    # (iii) Lambda_(1) x a Lambda_(2) = S(a) Lambda_(1) x Lambda_(2)
    ok, wit = True, ""
    for a in range(dim):
        left = dL.apply_on_leg(2, H.left_mult_matrix(H.basis_vec(a)))
        right = dL.apply_on_leg(1, H.left_mult_matrix(H.antipode[a]))
        if left != right:
            ok, wit = False, H.labels[a]
            break
    rep.record("radford.iii Lambda_(1) x a Lambda_(2)", ok, wit)

    # (iv) Lambda_(1) a x Lambda_(2) = Lambda_(1) x Lambda_(2) S(a <- alpha)
    ok, wit = True, ""
    for a in range(dim):
        left = dL.apply_on_leg(1, H.right_mult_matrix(H.basis_vec(a)))
        right = dL.apply_on_leg(2, H.right_mult_matrix(H.apply_matrix(S, hooked[a])))
        if left != right:
            ok, wit = False, H.labels[a]
            break
    rep.record("radford.iv Lambda_(1) a x Lambda_(2)", ok, wit)

    # (v) Tr(X) = lam(S(Lambda_(2)) X(Lambda_(1))) = lam(S(X(Lambda_(2))) Lambda_(1))
    maps = [("id", H.identity_matrix()), ("S", S), ("S^2", s2)]
    maps += [(f"rand{t}", M) for t, M in enumerate(_random_maps(H, seed))]
    ok, wit = True, ""
    for name, X in maps:
        tr = H.trace(X)
        t1 = CycScalar.zero()
        t2 = CycScalar.zero()
        for (j, k), c in dL.entries.items():
            t1 = t1 + c * lam_of(H.multiply(H.antipode[k], X[j]))
            t2 = t2 + c * lam_of(H.multiply(H.apply_matrix(S, X[k]), H.basis_vec(j)))
        if tr != t1 or tr != t2:
            ok, wit = False, name
            break
    rep.record("radford.v trace formula", ok, wit)

    # (vi) lamS(a X(Lambda_(1)) Lambda_(2)) = lamS(X(Lambda_(1) S(a)) Lambda_(2))
    ok, wit = True, ""
    for name, X in maps:
        for a in range(dim):
            lhs = CycScalar.zero()
            rhs = CycScalar.zero()
            Sa = H.antipode[a]
            for (j, k), c in dL.entries.items():
                lhs = lhs + c * lamS_of(H.multiply_basis_right(H.multiply(H.basis_vec(a), X[j]), k))
                rhs = rhs + c * lamS_of(H.multiply_basis_right(H.apply_matrix(X, H.multiply(H.basis_vec(j), Sa)), k))
            if lhs != rhs:
                ok, wit = False, f"X={name}, a={H.labels[a]}"
                break
        if not ok:
            break
    rep.record("radford.vi integral slide", ok, wit)

    # Corollary: sliding x through Y against Sweedler powers, n = 1..3
    p_cache = {}

    def pn(k, n):
        if (k, n) not in p_cache:
            p_cache[(k, n)] = sweedler_power(H, n, H.basis_vec(k))
        return p_cache[(k, n)]

    dL3 = H.delta_n(I.Lambda, 3)
    for n in (1, 2, 3):
        okA, witA = True, ""
        okB, witB = True, ""
        for name, Y in maps:
            for x in range(dim):
                dx3 = H.delta_n_basis(x, 3)
                lhs = CycScalar.zero()
                rhs = CycScalar.zero()
                for (j, k), c in dL.entries.items():
                    lhs = lhs + c * lamS_of(H.multiply(H.multiply(H.basis_vec(x), Y[j]), pn(k, n)))
                for (x1, x2, x3), cx in dx3.entries.items():
                    for (j, k), c in dL.entries.items():
                        inner = H.multiply(H.multiply_basis_right(dict(s2[x1]), j), S[x3])
                        rhs = rhs + cx * c * lamS_of(H.multiply(
                            H.multiply(H.apply_matrix(Y, inner), s2[x2]), pn(k, n)))
                if lhs != rhs:
                    okA, witA = False, f"n={n}, Y={name}, x={H.labels[x]}"
                    break
                lhs = CycScalar.zero()
                rhs = CycScalar.zero()
                for (j, k, l), c in dL3.entries.items():
                    lhs = lhs + c * lamS_of(H.multiply_basis_right(
                        H.multiply_basis_right(H.multiply(pn(j, n - 1), Y[k]), x), l))
                for (x1, x2, x3), cx in dx3.entries.items():
                    for (j, k, l), c in dL3.entries.items():
                        inner = H.multiply(H.multiply_basis_right(S[x1], k), s2[x3])
                        rhs = rhs + cx * c * lamS_of(H.multiply_basis_right(H.multiply(
                            H.multiply(pn(j, n - 1), s2[x2]), H.apply_matrix(Y, inner)), l))
                if lhs != rhs:
                    okB, witB = False, f"n={n}, Y={name}, x={H.labels[x]}"
                    break
            if not (okA and okB):
                break
        rep.record(f"power-slide.i (n={n})", okA, witA)
        rep.record(f"power-slide.ii (n={n})", okB, witB)

    return rep


# --------------------------------------------------------------------------
# the registered sweep set


_BUILTIN_CACHE = None


def builtin_algebras():
    """The registered verification sweep set (every dim <= 16): the group
    algebras of Z/2, Z/3, Z/4, Z/2xZ/2, S3, Q8 and the Taft algebras of
    parameter 2, 3, 4.  Instances are shared so caches persist."""
    global _BUILTIN_CACHE
    if _BUILTIN_CACHE is None:
        _BUILTIN_CACHE = [(f"group:{g}", group_algebra(builtin_group(g)))
                          for g in ("z2", "z3", "z4", "z2xz2", "s3", "q8")]
        _BUILTIN_CACHE += [(f"taft:{n}", taft(n, CycScalar.zeta(n))) for n in (2, 3, 4)]
    return list(_BUILTIN_CACHE)


# --------------------------------------------------------------------------
# serialization


def dumps_hopf(H: HopfData) -> str:
    """Line-oriented structure-constant text; exact round-trip."""
    out = [f"hopf dim {H.dim} field {H.field_order}"]
    out.append("labels " + " ".join(H.labels))
    for i in sorted(H.unit):
        out.append(f"u {i} = {H.unit[i].render()}")
    for i, c in enumerate(H.counit):
        if c:
            out.append(f"e {i} = {c.render()}")
    for i in range(H.dim):
        for j in range(H.dim):
            for k in sorted(H.mult[i][j]):
                out.append(f"m {i} {j} {k} = {H.mult[i][j][k].render()}")
    for i in range(H.dim):
        for (j, k) in sorted(H.comult[i]):
            out.append(f"d {i} {j} {k} = {H.comult[i][(j, k)].render()}")
    for i in range(H.dim):
        for j in sorted(H.antipode[i]):
            out.append(f"s {i} {j} = {H.antipode[i][j].render()}")
    return "\n".join(out) + "\n"


def loads_hopf(text: str) -> HopfData:
    dim = None
    field = 1
    labels = None
    unit, counit, mult, comult, antipode = {}, None, None, None, None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "hopf":
                dim = int(parts[parts.index("dim") + 1])
                if "field" in parts:
                    field = int(parts[parts.index("field") + 1])
                counit = [CycScalar.zero()] * dim
                mult = [[dict() for _ in range(dim)] for _ in range(dim)]
                comult = [dict() for _ in range(dim)]
                antipode = [dict() for _ in range(dim)]
                labels = [f"e{i}" for i in range(dim)]
            elif parts[0] == "labels":
                if dim is None or len(parts) != dim + 1:
                    raise ValueError("labels line before header or wrong count")
                labels = parts[1:]
            else:
                eq = line.index("=")
                value = parse_scalar(line[eq + 1:])
                head = line[:eq].split()
                kind, idxs = head[0], [int(x) for x in head[1:]]
                if kind == "u":
                    unit[idxs[0]] = value
                elif kind == "e":
                    counit[idxs[0]] = value
                elif kind == "m":
                    mult[idxs[0]][idxs[1]][idxs[2]] = value
                elif kind == "d":
                    comult[idxs[0]][(idxs[1], idxs[2])] = value
                elif kind == "s":
                    antipode[idxs[0]][idxs[1]] = value
                else:
                    raise ValueError(f"unknown record {kind!r}")
        except HopfFormatError:
            raise
        except Exception as exc:
            raise HopfFormatError(f"line {lineno}: {exc}") from None
    if dim is None:
        raise HopfFormatError("missing `hopf dim <d> field <N>` header")
    return HopfData(dim, labels, field, mult, unit, comult, counit, antipode)
