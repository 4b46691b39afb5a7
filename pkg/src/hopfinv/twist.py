"""2-cocycles, Drinfeld twists, and the F_n calculus.

A 2-cocycle is an invertible F in H (x) H with (eps x id)F = (id x eps)F = 1
and (1 x F)(id x Delta)(F) = (F x 1)(Delta x id)(F).  The twist H_F keeps the
algebra and counit, conjugates the comultiplication by F and the antipode by
u = f1 S(f2).  F_n is defined by F_1 = 1, F_{n+1} = (1 x F_n)(id x Delta^n)(F);
the alternate recursion (F_n x 1)(Delta^n x id)(F) is checked, not assumed.

No cocycle constructor is trusted analytically: everything routes through
verify_cocycle.
"""

from __future__ import annotations

from .scalar import CycScalar, as_scalar, parse_scalar
from .hopf import HopfData, SuiteReport, AxiomFailure, require_axioms, matrix_inverse, _vec_eq
from .tensor import SparseTensor


class TwistError(Exception):
    pass


class NotGaugeTransform(TwistError):
    pass


class NotInverse(TwistError):
    pass


class CocycleIdentityFails(TwistError):
    pass


def _unit_tensor(H: HopfData, n: int) -> SparseTensor:
    if n == 0:
        return SparseTensor((), {(): CycScalar.one()}, context=H)
    t = H.as_tensor(H.one())
    out = t
    for _ in range(n - 1):
        out = out.tensor(t)
    return out


class TwoCocycle:
    """A verified gauge transformation; carries the u / Q / F_n caches."""

    __slots__ = ("host", "F", "Finv", "u", "u_inv", "Q", "Q_inv",
                 "_fn", "_fn_inv", "_qs")

    def __init__(self, host, F, Finv):
        # built by verify_cocycle only
        self.host = host
        self.F = F
        self.Finv = Finv
        H = host
        u = {}
        for (i, j), c in F.entries.items():
            for k, m in H.multiply(H.basis_vec(i), H.antipode[j]).items():
                acc = u.get(k)
                new = c * m if acc is None else acc + c * m
                if new:
                    u[k] = new
                else:
                    u.pop(k, None)
        u_inv = {}
        for (i, j), c in Finv.entries.items():
            for k, m in H.multiply(H.antipode[i], H.basis_vec(j)).items():
                acc = u_inv.get(k)
                new = c * m if acc is None else acc + c * m
                if new:
                    u_inv[k] = new
                else:
                    u_inv.pop(k, None)
        if not _vec_eq(H.multiply(u, u_inv), H.one()) or not _vec_eq(H.multiply(u_inv, u), H.one()):
            raise CocycleIdentityFails("u u^-1 != 1; F is not a 2-cocycle")
        self.u = u
        self.u_inv = u_inv
        self.Q = H.multiply(u, H.antipode_of(u_inv))
        self.Q_inv = H.multiply(H.antipode_of(u), u_inv)
        self._fn = {1: H.as_tensor(H.one())}
        self._fn_inv = {1: H.as_tensor(H.one())}
        self._qs = {0: H.one()}

    def is_trivial(self):
        return self.F == _unit_tensor(self.host, 2)

    def f_n(self, n: int) -> SparseTensor:
        """F_n via F_{n+1} = (1 x F_n)(id x Delta^n)(F); memoized."""
        if n < 1:
            raise TwistError("F_n needs n >= 1")
        if n not in self._fn:
            H = self.host
            prev = self.f_n(n - 1)
            expanded = self.F.expand_leg(2, n - 1)
            self._fn[n] = _unit_tensor(H, 1).tensor(prev).algebra_product(expanded)
        return self._fn[n]

    def f_n_inv(self, n: int) -> SparseTensor:
        if n < 1:
            raise TwistError("F_n needs n >= 1")
        if n not in self._fn_inv:
            H = self.host
            prev = self.f_n_inv(n - 1)
            expanded = self.Finv.expand_leg(2, n - 1)
            self._fn_inv[n] = expanded.algebra_product(_unit_tensor(H, 1).tensor(prev))
        return self._fn_inv[n]

    def q_s(self, s: int):
        """Q_0 = 1, Q_{s+1} = Q_s S^{2s}(Q); descending via S^{2s-2}(Q^-1)."""
        H = self.host
        if s not in self._qs:
            if s > 0:
                self._qs[s] = H.multiply(self.q_s(s - 1), H.antipode_of(self.Q, 2 * (s - 1)))
            else:
                self._qs[s] = H.multiply(self.q_s(s + 1), H.antipode_of(self.Q_inv, 2 * s))
        return dict(self._qs[s])


def f_n(C: TwoCocycle, n: int) -> SparseTensor:
    return C.f_n(n)


def verify_cocycle(H: HopfData, F: SparseTensor, Finv: SparseTensor | None = None) -> TwoCocycle:
    """Validate the gauge normalization, the inverse and the cocycle identity;
    the failing clause names the raised error."""
    require_axioms(H)
    if F.dims != (H.dim, H.dim):
        raise NotGaugeTransform("F is not a 2-leg tensor over H")
    F = SparseTensor(F.dims, F.entries, context=H)
    one_leg = SparseTensor((H.dim,), {(i,): c for i, c in H.unit.items()}, context=H)
    if F.contract_with_covector([1], [H.counit]) != one_leg:
        raise NotGaugeTransform("(eps x id)F != 1")
    if F.contract_with_covector([2], [H.counit]) != one_leg:
        raise NotGaugeTransform("(id x eps)F != 1")
    if Finv is None:
        Finv = _invert_in_square(H, F)
    else:
        Finv = SparseTensor(Finv.dims, Finv.entries, context=H)
    unit2 = _unit_tensor(H, 2)
    if F.algebra_product(Finv) != unit2 or Finv.algebra_product(F) != unit2:
        raise NotInverse("F Finv != 1 x 1")
    lhs = _unit_tensor(H, 1).tensor(F).algebra_product(F.expand_leg(2, 2))
    rhs = F.tensor(_unit_tensor(H, 1)).algebra_product(F.expand_leg(1, 2))
    if lhs != rhs:
        raise CocycleIdentityFails("(1xF)(id x Delta)(F) != (Fx1)(Delta x id)(F)")
    return TwoCocycle(H, F, Finv)


def _invert_in_square(H: HopfData, F: SparseTensor) -> SparseTensor:
    """Solve F X = 1 x 1 in H (x) H; NotInverse if singular."""
    dim = H.dim
    pairs = [(a, b) for a in range(dim) for b in range(dim)]
    index = {p: t for t, p in enumerate(pairs)}
    cols = []
    for (a, b) in pairs:
        col = {}
        prod = F.algebra_product(SparseTensor((dim, dim), {(a, b): CycScalar.one()}, context=H))
        for key, c in prod.entries.items():
            col[index[key]] = c
        cols.append(col)
    try:
        inv_cols = matrix_inverse(cols, len(pairs))
    except AxiomFailure:
        raise NotInverse("F is not invertible in H x H") from None
    target = {i: c for i, c in enumerate(
        [_unit_square_coeff(H, p) for p in pairs]) if c}
    out = {}
    for t, c in target.items():
        for r, m in inv_cols[t].items():
            key = pairs[r]
            acc = out.get(key)
            new = c * m if acc is None else acc + c * m
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return SparseTensor((dim, dim), out, context=H)


def _unit_square_coeff(H: HopfData, pair):
    a, b = pair
    ca = H.unit.get(a)
    cb = H.unit.get(b)
    if ca and cb:
        return ca * cb
    return CycScalar.zero()


def trivial_cocycle(H: HopfData) -> TwoCocycle:
    one2 = _unit_tensor(H, 2)
    return verify_cocycle(H, one2, one2)


def drinfeld_twist(H: HopfData, C: TwoCocycle) -> HopfData:
    """H_F: same algebra and counit, Delta_F = F Delta(.) F^-1, S_F = u S(.) u^-1.
    The result must pass every Hopf axiom (else the cocycle verification is buggy)."""
    if C.host is not H:
        raise TwistError("cocycle was verified on a different algebra")
    dim = H.dim
    comult = []
    for i in range(dim):
        t = C.F.algebra_product(H.delta_n_basis(i, 2)).algebra_product(C.Finv)
        comult.append(dict(t.entries))
    lu = H.left_mult_matrix(C.u)
    ru = H.right_mult_matrix(C.u_inv)
    antipode = [H.apply_matrix(ru, H.apply_matrix(lu, H.antipode[i])) for i in range(dim)]
    HF = HopfData(dim, [f"{lbl}" for lbl in H.labels], H.field_order,
                  [[dict(cell) for cell in row] for row in H.mult],
                  dict(H.unit), comult, list(H.counit), antipode)
    try:
        require_axioms(HF)
    except AxiomFailure as exc:
        raise AxiomFailure(f"twist output violates Hopf axioms: {exc}") from None
    return HF


# --------------------------------------------------------------------------
# cocycle constructors


def bicharacter_cocycle(H: HopfData, idems, beta) -> TwoCocycle:
    """F = sum beta(a,b) e_a x e_b over a family of orthogonal idempotents
    summing to 1; beta(a,b) indexes the family.  Never trusted: the result is
    machine-verified before return."""
    require_axioms(H)
    total = {}
    for e in idems:
        for i, c in e.items():
            acc = total.get(i)
            new = c if acc is None else acc + c
            if new:
                total[i] = new
            else:
                total.pop(i, None)
    if not _vec_eq(total, H.one()):
        raise CocycleIdentityFails("idempotents do not sum to 1")
    for a, ea in enumerate(idems):
        for b, eb in enumerate(idems):
            prod = H.multiply(ea, eb)
            want = ea if a == b else {}
            if not _vec_eq(prod, want):
                raise CocycleIdentityFails(f"family is not orthogonal idempotent at ({a},{b})")
    entries_f = {}
    entries_d = {}
    for a, ea in enumerate(idems):
        for b, eb in enumerate(idems):
            c = as_scalar(beta(a, b))
            cinv = c.inv()
            for i, x in ea.items():
                for j, y in eb.items():
                    xy = x * y
                    key = (i, j)
                    for store, coeff in ((entries_f, c * xy), (entries_d, cinv * xy)):
                        acc = store.get(key)
                        new = coeff if acc is None else acc + coeff
                        if new:
                            store[key] = new
                        else:
                            store.pop(key, None)
    F = SparseTensor((H.dim, H.dim), entries_f, context=H)
    Finv = SparseTensor((H.dim, H.dim), entries_d, context=H)
    return verify_cocycle(H, F, Finv)


def cyclic_idempotents(H: HopfData, grouplike_powers, zeta: CycScalar):
    """e_j = (1/n) sum_i zeta^(-ij) g^i for a grouplike g of order n,
    given the vectors [g^0, g^1, ..., g^(n-1)]."""
    n = len(grouplike_powers)
    idems = []
    inv_n = CycScalar.from_rational(1) / n
    for j in range(n):
        e = {}
        for i, gi in enumerate(grouplike_powers):
            c = inv_n * zeta ** (-i * j)
            for k, x in gi.items():
                acc = e.get(k)
                new = c * x if acc is None else acc + c * x
                if new:
                    e[k] = new
                else:
                    e.pop(k, None)
        idems.append(e)
    return idems


def taft_bicharacter_cocycle(H: HopfData, n: int, zeta: CycScalar, power: int = 1) -> TwoCocycle:
    """The cocycle beta(a,b) = zeta^(power*ab) on the cyclic grouplike
    subalgebra k[g] of the Taft algebra built by `taft(n, zeta)`."""
    g_powers = [H.basis_vec(b) for b in range(n)]  # x^0 g^b sits at index b
    idems = cyclic_idempotents(H, g_powers, zeta)
    return bicharacter_cocycle(H, idems, lambda a, b: zeta ** (power * a * b))


def group_bicharacter_cocycle(H: HopfData, group, zeta: CycScalar, power: int = 1) -> TwoCocycle:
    """Cyclic-group version for k[Z/n] built by `group_algebra(cyclic_group(n))`."""
    n = group.order
    ident = group.identity
    # powers of the generator t1
    gen = next(i for i in range(n) if i != ident)
    powers = [ident]
    cur = ident
    for _ in range(n - 1):
        cur = group.table[cur][gen]
        powers.append(cur)
    g_powers = [H.basis_vec(i) for i in powers]
    idems = cyclic_idempotents(H, g_powers, zeta)
    return bicharacter_cocycle(H, idems, lambda a, b: zeta ** (power * a * b))


def dual_group_bicharacter_cocycle(H: HopfData, group, beta) -> TwoCocycle:
    """On the dual of a group algebra the basis itself is the idempotent
    family; beta takes two group element indices."""
    idems = [H.basis_vec(i) for i in range(H.dim)]
    return bicharacter_cocycle(H, idems, lambda a, b: beta(a, b))


def klein_dual_cocycle(H_dual_klein: HopfData) -> TwoCocycle:
    """beta((a1,a2),(b1,b2)) = (-1)^(a1 b2) on dual(k[Z/2 x Z/2]) with the
    builtin element order e, a, b, ab."""
    bits = [(0, 0), (1, 0), (0, 1), (1, 1)]

    def beta(i, j):
        return as_scalar((-1) ** (bits[i][0] * bits[j][1]))

    return dual_group_bicharacter_cocycle(H_dual_klein, None, beta)


# --------------------------------------------------------------------------
# serialization


def dumps_cocycle(C: TwoCocycle) -> str:
    out = [f"cocycle dim {C.host.dim}"]
    for (i, j) in sorted(C.F.entries):
        out.append(f"F {i} {j} = {C.F.entries[(i, j)].render()}")
    for (i, j) in sorted(C.Finv.entries):
        out.append(f"G {i} {j} = {C.Finv.entries[(i, j)].render()}")
    return "\n".join(out) + "\n"


def loads_cocycle(text: str, H: HopfData) -> TwoCocycle:
    entries_f, entries_d = {}, {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "cocycle":
            if int(parts[parts.index("dim") + 1]) != H.dim:
                raise TwistError(f"line {lineno}: cocycle dimension does not match the algebra")
            continue
        if parts[0] not in ("F", "G") or "=" not in line:
            raise TwistError(f"line {lineno}: expected `F i j = <scalar>`")
        eq = line.index("=")
        head = line[:eq].split()
        value = parse_scalar(line[eq + 1:])
        key = (int(head[1]), int(head[2]))
        (entries_f if parts[0] == "F" else entries_d)[key] = value
    F = SparseTensor((H.dim, H.dim), entries_f, context=H)
    Finv = SparseTensor((H.dim, H.dim), entries_d, context=H) if entries_d else None
    return verify_cocycle(H, F, Finv)


# --------------------------------------------------------------------------
# the F_n identity suite


def _splice(H, T, specs):
    """Build a tensor whose output leg L is the ordered product of factors
    from specs[L]; a factor is ('leg', M, pos) applying matrix M (or None for
    the identity) to input leg pos of T, or ('const', vec)."""
    out = {}
    for key, val in T.entries.items():
        legs = []
        dead = False
        for spec in specs:
            v = None
            for factor in spec:
                if factor[0] == "const":
                    w = factor[1]
                else:
                    _, M, pos = factor
                    w = H.basis_vec(key[pos - 1]) if M is None else M[key[pos - 1]]
                v = dict(w) if v is None else H.multiply(v, w)
                if not v:
                    dead = True
                    break
            if dead:
                break
            legs.append(H.one() if v is None else v)
        if dead:
            continue
        # cartesian product across output legs
        partial = [((), val)]
        for v in legs:
            partial = [(k + (i,), c * x) for k, c in partial for i, x in v.items() if c * x]
        for k, c in partial:
            acc = out.get(k)
            new = c if acc is None else acc + c
            if new:
                out[k] = new
            else:
                out.pop(k, None)
    return SparseTensor((H.dim,) * len(specs), out, context=H)


def _tensor_power_vec(H, vec, n):
    t = H.as_tensor(vec)
    out = t
    for _ in range(n - 1):
        out = out.tensor(t)
    return out


def _apply_all_legs(T, M):
    out = T
    for leg in range(1, T.arity + 1):
        out = out.apply_on_leg(leg, M)
    return out


def _reverse_legs(T):
    n = T.arity
    return T.permute_legs(list(range(n, 0, -1)))


def fn_identity_suite(C: TwoCocycle, max_n: int = 5, check_qs: bool = True) -> SuiteReport:
    """Exact tensor checks of the insertion / splitting / reduction / u- and
    Q-identities of the F_n calculus, for all parameters with m+n <= max_n."""
    H = C.host
    rep = SuiteReport(f"F_n identities, dim {H.dim}, max_n={max_n}")
    S = H.antipode
    Sinv = H.antipode_inv
    s2 = H.s_power(2)
    u_const = ("const", C.u)
    uinv_const = ("const", C.u_inv)

    # (i) insertion
    for n in range(1, max_n):
        for m in range(1, max_n - n + 1):
            target = C.f_n(m + n)
            target_inv = C.f_n_inv(m + n)
            for j in range(1, n + 2):
                ins = (_unit_tensor(H, j - 1).tensor(C.f_n(m)).tensor(_unit_tensor(H, n + 1 - j))
                       if j <= n else _unit_tensor(H, j - 1).tensor(C.f_n(m)))
                expanded = C.f_n(n + 1).expand_leg(j, m)
                ok = ins.algebra_product(expanded) == target
                rep.record(f"fn insertion: F_{m+n} (m={m}, n={n}, j={j})", ok)
                expanded_inv = C.f_n_inv(n + 1).expand_leg(j, m)
                ins_inv = (_unit_tensor(H, j - 1).tensor(C.f_n_inv(m)).tensor(_unit_tensor(H, n + 1 - j))
                           if j <= n else _unit_tensor(H, j - 1).tensor(C.f_n_inv(m)))
                ok = expanded_inv.algebra_product(ins_inv) == target_inv
                rep.record(f"fn inverse insertion (m={m}, n={n}, j={j})", ok)

    # (ii) splitting F_{m+n} = (F_m x F_n)(Delta^m x Delta^n)(F)
    for m in range(0, max_n + 1):
        for n in range(0, max_n + 1 - m):
            if m + n < 1:
                continue
            expanded = C.F.expand_leg(2, n).expand_leg(1, m)
            parts = []
            if m:
                parts.append(C.f_n(m))
            if n:
                parts.append(C.f_n(n))
            lhs = parts[0] if len(parts) == 1 else parts[0].tensor(parts[1])
            ok = lhs.algebra_product(expanded) == C.f_n(m + n)
            rep.record(f"fn splitting: F_{m+n} (m={m}, n={n})", ok)

    # (iii) reduction: legs (m, m+1) of F_n collapse to S(f)u^-1 f / d u S(d)
    for n in range(2, max_n + 1):
        for m in range(1, n):
            fn = C.f_n(n)
            specs = ([[("leg", None, s)] for s in range(1, m)]
                     + [[("leg", S, m), uinv_const, ("leg", None, m + 1)]]
                     + [[("leg", None, s)] for s in range(m + 2, n + 1)])
            lhs = _splice(H, fn, specs)
            if n == 2:
                rhs = _unit_tensor(H, 1)
            else:
                core = C.f_n(n - 2)
                rhs = _splice(H, core,
                              [[("leg", None, s)] for s in range(1, m)]
                              + [[]]
                              + [[("leg", None, s)] for s in range(m, n - 1)])
            rep.record(f"fn reduction: F_{n} at {m}", lhs == rhs)
            fninv = C.f_n_inv(n)
            specs = ([[("leg", None, s)] for s in range(1, m)]
                     + [[("leg", None, m), u_const, ("leg", S, m + 1)]]
                     + [[("leg", None, s)] for s in range(m + 2, n + 1)])
            lhs = _splice(H, fninv, specs)
            if n == 2:
                rhs = _unit_tensor(H, 1)
            else:
                core = C.f_n_inv(n - 2)
                rhs = _splice(H, core,
                              [[("leg", None, s)] for s in range(1, m)]
                              + [[]]
                              + [[("leg", None, s)] for s in range(m, n - 1)])
            rep.record(f"fn reduction: F_{n}^-1 at {m}", lhs == rhs)

    # (iv) u-identities; F_{2n+1} / F_{2n} must stay inside the leg budget
    for n in range(1, max_n + 1):
        if 2 * n + 1 <= max_n:
            big = C.f_n(2 * n + 1)
            specs = [[("leg", None, 1)]] + [
                [("leg", None, l), ("leg", S, 2 * n + 3 - l)] for l in range(2, n + 2)]
            lhs = _splice(H, big, specs)
            target = _unit_tensor(H, 1).tensor(_tensor_power_vec(H, C.u, n))
            rep.record(f"u-identity 1xu first (n={n})", lhs == target)
            fn1 = C.f_n(n + 1).expand_leg(1, n + 1)  # legs: (f1)_(1..n+1), f2..f_{n+1}
            specs = [[("leg", None, 1)]] + [
                [("leg", None, l), ("leg", S, (n + 1) + (n + 3 - l) - 1)] for l in range(2, n + 2)]
            bracket = _splice(H, fn1, specs)
            rep.record(f"u-identity 1xu second (n={n})",
                       C.f_n(n + 1).algebra_product(bracket) == target)

            biginv = C.f_n_inv(2 * n + 1)
            specs = [[("leg", None, 1)]] + [
                [("leg", Sinv, 2 * n + 3 - l), ("leg", None, l)] for l in range(2, n + 2)]
            lhs = _splice(H, biginv, specs)
            target2 = _unit_tensor(H, 1).tensor(
                _tensor_power_vec(H, H.apply_matrix(Sinv, C.u_inv), n))
            rep.record(f"u-identity inverse first (n={n})", lhs == target2)
            fn1i = C.f_n_inv(n + 1).expand_leg(1, n + 1)
            specs = [[("leg", None, 1)]] + [
                [("leg", Sinv, (n + 1) + (n + 3 - l) - 1), ("leg", None, l)] for l in range(2, n + 2)]
            bracket = _splice(H, fn1i, specs)
            rep.record(f"u-identity inverse second (n={n})",
                       bracket.algebra_product(C.f_n_inv(n + 1)) == target2)

        if 2 * n <= max_n:
            big = C.f_n(2 * n)
            specs = [[("leg", None, l), ("leg", S, 2 * n + 1 - l)] for l in range(1, n + 1)]
            lhs = _splice(H, big, specs)
            target = _tensor_power_vec(H, C.u, n)
            rep.record(f"u-identity power first (n={n})", lhs == target)
            fn1 = C.f_n(n + 1).expand_leg(1, n)  # legs: (f1)_(1..n), f2..f_{n+1}
            specs = [[("leg", None, l), ("leg", S, n + (n + 2 - l) - 1)] for l in range(1, n + 1)]
            bracket = _splice(H, fn1, specs)
            rep.record(f"u-identity power second (n={n})",
                       C.f_n(n).algebra_product(bracket) == target)
            fn1b = C.f_n(n + 1).expand_leg(n + 1, n)  # legs: f1..fn, (f_{n+1})_(1..n)
            specs = [[("leg", None, n + 1 - l), ("leg", S, n + l)] for l in range(1, n + 1)]
            bracket = _splice(H, fn1b, specs)
            rep.record(f"u-identity power third (n={n})",
                       bracket.algebra_product(_apply_all_legs(C.f_n(n), S)) == target)

            biginv = C.f_n_inv(2 * n)
            specs = [[("leg", S, l), ("leg", None, 2 * n + 1 - l)] for l in range(1, n + 1)]
            lhs = _splice(H, biginv, specs)
            target = _tensor_power_vec(H, C.u_inv, n)
            rep.record(f"u-identity inverse power first (n={n})", lhs == target)
            fn1i = C.f_n_inv(n + 1).expand_leg(1, n)
            specs = [[("leg", S, l), ("leg", None, n + (n + 2 - l) - 1)] for l in range(1, n + 1)]
            bracket = _splice(H, fn1i, specs)
            rep.record(f"u-identity inverse power second (n={n})",
                       _apply_all_legs(C.f_n_inv(n), S).algebra_product(bracket) == target)
            fn1c = C.f_n_inv(n + 1).expand_leg(n + 1, n)
            specs = [[("leg", S, n + 1 - l), ("leg", None, n + l)] for l in range(1, n + 1)]
            bracket = _splice(H, fn1c, specs)
            rep.record(f"u-identity inverse power third (n={n})",
                       bracket.algebra_product(C.f_n_inv(n)) == target)

    # (v) Delta^n(u) and the Q-identity
    for n in range(1, max_n + 1):
        du = H.delta_n(C.u, n)
        rhs = C.f_n_inv(n).algebra_product(_tensor_power_vec(H, C.u, n)) \
            .algebra_product(_reverse_legs(_apply_all_legs(C.f_n_inv(n), S)))
        rep.record(f"coproduct of u (n={n})", du == rhs)
        dq = H.delta_n(C.Q, n)
        lhs = C.f_n(n).algebra_product(dq)
        rhs = _tensor_power_vec(H, C.Q, n).algebra_product(_apply_all_legs(C.f_n(n), s2))
        rep.record(f"coproduct of Q (n={n})", lhs == rhs)

    for n in range(1, max_n):
        fni_exp = C.f_n_inv(n + 1).expand_leg(1, n)  # (d1)_(1..n), d2..d_{n+1}
        a = _splice(H, fni_exp, [[("leg", S, n + 1 - l), ("leg", None, n + l)] for l in range(1, n + 1)])
        b = _splice(H, C.f_n(n), [[("leg", S, n + 1 - l), uinv_const] for l in range(1, n + 1)])
        c = H.delta_n(C.u_inv, n).algebra_product(C.f_n_inv(n))
        rep.record(f"u-inverse leg form (n={n})", a == b and b == c)

        fn_exp = C.f_n(n + 1).expand_leg(1, n)  # (f1)_(1..n), f2..f_{n+1}
        a = _splice(H, fn_exp, [[("leg", None, l), ("leg", S, n + (n + 2 - l) - 1)] for l in range(1, n + 1)])
        b = _splice(H, C.f_n_inv(n), [[("leg", None, l), u_const] for l in range(1, n + 1)])
        c = H.delta_n(C.u, n).algebra_product(_splice(
            H, C.f_n(n), [[("leg", S, n + 1 - l)] for l in range(1, n + 1)]))
        rep.record(f"du leg form (n={n})", a == b and b == c)

        fn_exp2 = C.f_n(n + 1).expand_leg(n + 1, n)  # f1..fn, (f_{n+1})_(1..n)
        a = _splice(H, fn_exp2, [[("leg", None, n + 1 - l), ("leg", S, n + l)] for l in range(1, n + 1)])
        b = _splice(H, C.f_n_inv(n), [[u_const, ("leg", S, l)] for l in range(1, n + 1)])
        c = _reverse_legs(C.f_n(n).algebra_product(H.delta_n(C.u, n)))
        rep.record(f"uSd leg form (n={n})", a == b and b == c)

    if check_qs:
        for s in range(-2, 3):
            qs = C.q_s(s)
            qs_inv = None
            # S_F^{2s}(x) = Q_s S^{2s}(x) Q_s^{-1} on every basis vector
            HF_s = H.s_power(2 * s)
            try:
                qs_inv = _invert_vec(H, qs)
            except NotInverse:
                rep.record(f"Qs invertible (s={s})", False)
                continue
            sf = _sf_power(H, C, 2 * s)
            ok = True
            for i in range(H.dim):
                lhs = sf[i]
                rhs = H.multiply(H.multiply(qs, H.apply_matrix(HF_s, H.basis_vec(i))), qs_inv)
                if not _vec_eq(lhs, rhs):
                    ok = False
                    break
            rep.record(f"Qs conjugation (s={s})", ok)

    return rep


def _invert_vec(H: HopfData, v):
    try:
        inv_cols = matrix_inverse(H.left_mult_matrix(v), H.dim)
    except AxiomFailure:
        raise NotInverse("element is not invertible") from None
    return H.apply_matrix(inv_cols, H.one())


def _sf_power(H: HopfData, C: TwoCocycle, k: int):
    """Matrix of S_F^k with S_F = u S(.) u^-1."""
    lu = H.left_mult_matrix(C.u)
    ru = H.right_mult_matrix(C.u_inv)
    sf = [H.apply_matrix(ru, H.apply_matrix(lu, H.antipode[i])) for i in range(H.dim)]
    if k >= 0:
        out = H.identity_matrix()
        for _ in range(k):
            out = H.compose(sf, out)
        return out
    sf_inv = matrix_inverse(sf, H.dim)
    out = H.identity_matrix()
    for _ in range(-k):
        out = H.compose(sf_inv, out)
    return out
