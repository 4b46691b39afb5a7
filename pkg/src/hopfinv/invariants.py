"""Evaluation of Kuperberg invariants and the gauge-invariance harness.

The plan evaluator pairs twisted cointegrals against a permuted,
antipode-decorated Sweedler expansion of twisted integrals:

    K = < (x)_j lam_{-theta(mu_j)},
          ((x)_j m_j) o sigma o ((x)_r S^{s_r} T^{t_r}) o ((x)_i Delta^{n_i})
          ((x)_i Lambda_{theta(eta_i)}) >

with an intersection-free lower curve contributing eps(Lambda_theta) and an
intersection-free upper curve contributing lam_theta(1).

Closed forms (exact, no tolerances anywhere):
  - lens fR:   K(L(n,k)) = lamS(S^{2c}(Lambda legs) product) via the Radford
               trace of S o P^(n,-k), one extra Sweedler leg instead of a
               dim^2 matrix trace;
  - lens fL:   K(L(n,k), fL, H) = K(L(n,n-k), fR, H^op);
  - nu_n     = lamS(P^(n)(Lambda));
  - nu_{n,k} / nu'_{n,k} / shuffled nu~_{n,k};
  - genus 2:   product of two lamS factors over Delta^4 x Delta^5, plus the
               Tr((S x S) o Psi) form as an independent path.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .scalar import CycScalar
from .hopf import (HopfData, integrals, twisted_integral, sweedler_power,
                   T_operator, dual, opposite, tensor_product, matrix_inverse, _dot)
from .diagram import (EvalPlan, BadParity, NotCoprime, BadParameters, _res1,
                      fixture, compile_plan)
from .twist import TwoCocycle, drinfeld_twist

HALF = Fraction(1, 2)


class IntegralFailure(Exception):
    pass


def _theta_to_element_index(theta: Fraction) -> int:
    m = theta + HALF
    if m.denominator != 1:
        raise BadParameters(f"theta = {theta} is not a half-integer")
    return int(m)


def _theta_to_functional_index(theta: Fraction) -> int:
    m = HALF - theta
    if m.denominator != 1:
        raise BadParameters(f"theta = {theta} is not a half-integer")
    return int(m)


def kuperberg(plan: EvalPlan, H: HopfData) -> CycScalar:
    """Evaluate an EvalPlan on H, exactly."""
    try:
        I = integrals(H)
    except Exception as exc:
        raise IntegralFailure(str(exc)) from exc
    scalar = CycScalar.one()

    st_cache = {}

    def st_matrix(s, t):
        if (s, t) not in st_cache:
            M = H.s_power(s)
            if t:
                T = T_operator(H, I)
                if t < 0:
                    T = matrix_inverse(T, H.dim)
                for _ in range(abs(t)):
                    M = H.compose(M, T)
            st_cache[(s, t)] = M
        return st_cache[(s, t)]

    tensors = []
    r = 0
    for size, theta in zip(plan.lower_sizes, plan.theta_lower):
        Lam = twisted_integral(I, "element", _theta_to_element_index(theta))
        if size == 0:
            scalar = scalar * H.counit_of(Lam)
            continue
        t = H.delta_n(Lam, size)
        for local in range(1, size + 1):
            s_r, t_r = plan.s[r], plan.t[r]
            r += 1
            if s_r or t_r:
                t = t.apply_on_leg(local, st_matrix(s_r, t_r))
        tensors.append(t)
    pending = []
    for size, theta in zip(plan.upper_sizes, plan.theta_upper):
        lam_tw = twisted_integral(I, "functional", _theta_to_functional_index(theta))
        if size == 0:
            scalar = scalar * _dot(lam_tw, H.one())
        pending.append((size, lam_tw))
    if not tensors:
        return scalar

    full = tensors[0]
    for t in tensors[1:]:
        full = full.tensor(t)
    full = full.permute_legs(plan.sigma)
    for size, lam_tw in pending:
        if size == 0:
            continue
        full = full.multiply_legs(list(range(1, size + 1)))
        full = full.contract_with_covector([1], [lam_tw])
    return scalar * full.entries.get((), CycScalar.zero())


# --------------------------------------------------------------------------
# lens spaces: closed forms


def c_sequence(n: int, k: int):
    """The S-exponent halves for the fR framing: c_n = 0 and
    c_{i+k} = c_i + 1 (i <= k0), - 1 (k0 < i <= 2 k0), unchanged otherwise,
    where k0 = (n-k-1)/2.  Requires n > k > 0 coprime with n-k odd."""
    if not (n > k > 0):
        raise BadParameters(f"need n > k > 0, got ({n}, {k})")
    if gcd(n, k) != 1:
        raise NotCoprime(f"gcd({n}, {k}) != 1")
    if (n - k) % 2 == 0:
        raise BadParity(f"n - k = {n - k} must be odd")
    k0 = (n - k - 1) // 2
    c = {n: 0}
    i = n
    for _ in range(n - 1):
        j = _res1(i + k, n)
        if 1 <= i <= k0:
            c[j] = c[i] + 1
        elif k0 + 1 <= i <= 2 * k0:
            c[j] = c[i] - 1
        else:
            c[j] = c[i]
        i = j
    seq = [c[i] for i in range(1, n + 1)]
    assert seq[n - 1] == 0 and seq[n - k - 1] == 0
    return seq


def _lam_S(H, I):
    return H.covector_compose(I.lam, H.antipode)


def lens_fR_closed(n: int, k: int, H: HopfData) -> CycScalar:
    """Tr(S o P^(n,-k)) through the Radford trace formula: one extra
    Sweedler leg, never a dim^2 matrix trace."""
    c = c_sequence(n, k)
    I = integrals(H)
    t = H.delta_n(I.Lambda, n)
    for j in range(1, n):
        if c[j - 1]:
            t = t.apply_on_leg(j, H.s_power(2 * c[j - 1]))
    order = [_res1(-p * k, n) for p in range(1, n)] + [n]
    t = t.multiply_legs(order)
    return t.contract_with_covector([1], [_lam_S(H, I)]).entries.get((), CycScalar.zero())


def lens_fL_closed(n: int, k: int, H: HopfData) -> CycScalar:
    """K(L(n,k), fL, H) = K(L(n, n-k), fR, H^op)."""
    if not (n > k > 0):
        raise BadParameters(f"need n > k > 0, got ({n}, {k})")
    if gcd(n, k) != 1:
        raise NotCoprime(f"gcd({n}, {k}) != 1")
    if k % 2 == 0:
        raise BadParity(f"k = {k} must be odd for the fL framing")
    return lens_fR_closed(n, n - k, opposite(H))


def nu(n: int, H: HopfData) -> CycScalar:
    """The n-th indicator lamS(P^(n)(Lambda)), any integer n."""
    I = integrals(H)
    return _dot(_lam_S(H, I), sweedler_power(H, n, I.Lambda))


def nu_nk(n: int, k: int, H: HopfData) -> CycScalar:
    """nu_{n,k}: K(L(n,n-k), fR, H) for odd k, K(L(n,n-k), fL, H^op) for even k."""
    if not (n > k > 0):
        raise BadParameters(f"need n > k > 0, got ({n}, {k})")
    if gcd(n, k) != 1:
        raise NotCoprime(f"gcd({n}, {k}) != 1")
    if k % 2 == 1:
        return lens_fR_closed(n, n - k, H)
    # coprime with k even forces n odd, so n-k is odd and fL applies
    assert (n - k) % 2 == 1
    return lens_fL_closed(n, n - k, opposite(H))


def nu_prime_nk(n: int, k: int, H: HopfData) -> CycScalar:
    """nu'_{n,k}: K(L(n,k), fL, H) for odd k, K(L(n,k), fR, H^op) for even k;
    satisfies nu'_{n,k}(H) = nu_{n,k}(H^op)."""
    if not (n > k > 0):
        raise BadParameters(f"need n > k > 0, got ({n}, {k})")
    if gcd(n, k) != 1:
        raise NotCoprime(f"gcd({n}, {k}) != 1")
    if k % 2 == 1:
        return lens_fL_closed(n, k, H)
    assert (n - k) % 2 == 1
    return lens_fR_closed(n, k, opposite(H))


def nu_tilde(n: int, k: int, H: HopfData) -> CycScalar:
    """The shuffled indicator lamS(Lambda_(k~) Lambda_(2k~) ... Lambda_(n));
    k is reduced mod n, so nu~_{n,k} = nu~_{n,k+mn}."""
    if n <= 1:
        raise BadParameters("nu~ needs n > 1")
    if gcd(n, k) != 1:
        raise NotCoprime(f"gcd({n}, {k}) != 1")
    I = integrals(H)
    t = H.delta_n(I.Lambda, n)
    order = [_res1(p * k, n) for p in range(1, n)] + [n]
    t = t.multiply_legs(order)
    return t.contract_with_covector([1], [_lam_S(H, I)]).entries.get((), CycScalar.zero())


# --------------------------------------------------------------------------
# genus 2


def genus2(m: int, n: int, H: HopfData) -> CycScalar:
    """The genus-2 Seifert invariant as the product of two lamS factors over
    Delta^4(Lambda) x Delta^5(Lambda) with inner Sweedler powers."""
    if m < 1 or n < 1:
        raise BadParameters("genus2 needs m >= 1 and n >= 1")
    I = integrals(H)
    lamS = _lam_S(H, I)
    sm1 = H.s_power(-1)
    sm2 = H.s_power(-2)
    A = H.delta_n(I.Lambda, 4)
    B = H.delta_n(I.Lambda, 5)
    pm = {}
    pn1 = {}
    total = CycScalar.zero()
    for (a1, a2, a3, a4), ca in A.entries.items():
        if a4 not in pm:
            pm[a4] = sweedler_power(H, m, H.basis_vec(a4))
        for (b1, b2, b3, b4, b5), cb in B.entries.items():
            w1 = H.multiply(sm2[b4], sm1[a2])
            w1 = H.multiply_basis_right(w1, b2)
            w1 = H.multiply(w1, pm[a4])
            f1 = _dot(lamS, w1)
            if not f1:
                continue
            if b1 not in pn1:
                pn1[b1] = sweedler_power(H, n - 1, H.basis_vec(b1))
            w2 = H.multiply_basis_right(pn1[b1], a3)
            w2 = H.multiply(w2, sm1[b3])
            w2 = H.multiply(w2, sm2[a1])
            w2 = H.multiply_basis_right(w2, b5)
            f2 = _dot(lamS, w2)
            if not f2:
                continue
            total = total + ca * cb * f1 * f2
    return total


def genus2_trace(m: int, n: int, H: HopfData) -> CycScalar:
    """Independent path: Tr((S x S) o Psi^{m,n}) with
    Psi(x,y) = S^-2(y4) S^-1(x2) y2 P^(m-1)(x4) (x) P^(n-1)(y1) x3 S^-1(y3) S^-2(x1)."""
    if m < 1 or n < 1:
        raise BadParameters("genus2 needs m >= 1 and n >= 1")
    sm1 = H.s_power(-1)
    sm2 = H.s_power(-2)
    S = H.antipode
    pm1 = [sweedler_power(H, m - 1, H.basis_vec(i)) for i in range(H.dim)]
    pn1 = [sweedler_power(H, n - 1, H.basis_vec(i)) for i in range(H.dim)]
    total = CycScalar.zero()
    for i in range(H.dim):
        dx = H.delta_n_basis(i, 4)
        for j in range(H.dim):
            dy = H.delta_n_basis(j, 4)
            for (x1, x2, x3, x4), cx in dx.entries.items():
                for (y1, y2, y3, y4), cy in dy.entries.items():
                    w1 = H.multiply(sm2[y4], sm1[x2])
                    w1 = H.multiply_basis_right(w1, y2)
                    w1 = H.multiply(w1, pm1[x4])
                    c1 = CycScalar.zero()
                    for idx, c in w1.items():
                        coeff = S[idx].get(i)
                        if coeff:
                            c1 = c1 + c * coeff
                    if not c1:
                        continue
                    w2 = H.multiply_basis_right(pn1[y1], x3)
                    w2 = H.multiply(w2, sm1[y3])
                    w2 = H.multiply(w2, sm2[x1])
                    c2 = CycScalar.zero()
                    for idx, c in w2.items():
                        coeff = S[idx].get(j)
                        if coeff:
                            c2 = c2 + c * coeff
                    if not c2:
                        continue
                    total = total + cx * cy * c1 * c2
    return total


def q8_closed(H: HopfData) -> CycScalar:
    """The quaternion-manifold value as the independent two-factor expression

        sum lam(S(L1_(1)) S^3(L2_(2)) S^2(L1_(3)) S(L2_(4)) g)
          * lam(S(L2_(1)) S(L1_(2)) S^2(L2_(3)) S^3(L1_(4)) g)

    over Delta^4 of two copies of Lambda."""
    I = integrals(H)
    S1 = H.antipode
    S2 = H.s_power(2)
    S3 = H.s_power(3)
    A = H.delta_n(I.Lambda, 4)
    total = CycScalar.zero()
    for (a1, a2, a3, a4), ca in A.entries.items():
        for (b1, b2, b3, b4), cb in A.entries.items():
            w1 = H.multiply(S1[a1], S3[b2])
            w1 = H.multiply(w1, S2[a3])
            w1 = H.multiply(w1, S1[b4])
            w1 = H.multiply(w1, I.g)
            f1 = I.lam_of(w1)
            if not f1:
                continue
            w2 = H.multiply(S1[b1], S1[a2])
            w2 = H.multiply(w2, S2[b3])
            w2 = H.multiply(w2, S3[a4])
            w2 = H.multiply(w2, I.g)
            f2 = I.lam_of(w2)
            if not f2:
                continue
            total = total + ca * cb * f1 * f2
    return total


# --------------------------------------------------------------------------
# requests and harness checks


LENS_FRAMINGS = ("fR", "fL")


class InvariantRequest:
    """A manifold selector bound to nothing: evaluate against any algebra."""

    __slots__ = ("kind", "params", "plan")

    def __init__(self, kind, params=(), plan=None):
        self.kind = kind
        self.params = tuple(params)
        self.plan = plan
        if kind == "plan":
            if plan is None:
                raise BadParameters("plan request needs an EvalPlan")
        elif kind == "lens":
            n, k, framing = self.params
            if framing not in LENS_FRAMINGS:
                raise BadParameters(f"framing must be one of {LENS_FRAMINGS}")
            if gcd(n, k) != 1:
                raise NotCoprime(f"gcd({n}, {k}) != 1")
            if framing == "fR" and (n - k) % 2 == 0:
                raise BadParity("fR needs n - k odd")
            if framing == "fL" and k % 2 == 0:
                raise BadParity("fL needs k odd")
        elif kind == "nu":
            (n,) = self.params
        elif kind in ("nu_nk", "nu_prime", "nu_tilde"):
            n, k = self.params
            if gcd(n, k) != 1:
                raise NotCoprime(f"gcd({n}, {k}) != 1")
        elif kind in ("seifert", "genus2"):
            m, n = self.params
            if m < 1 or n < 1:
                raise BadParameters("need m, n >= 1")
        elif kind not in ("s3", "s2xs1", "q8"):
            raise BadParameters(f"unknown manifold kind {self.kind!r}")

    def describe(self):
        if self.kind == "plan":
            return f"plan:{self.plan.name or 'anon'}"
        return self.kind + (":" + ":".join(str(p) for p in self.params) if self.params else "")

    def __repr__(self):
        return f"InvariantRequest({self.describe()})"


def evaluate_request(req: InvariantRequest, H: HopfData) -> CycScalar:
    kind = req.kind
    if kind == "plan":
        return kuperberg(req.plan, H)
    if kind == "lens":
        n, k, framing = req.params
        return lens_fR_closed(n, k, H) if framing == "fR" else lens_fL_closed(n, k, H)
    if kind == "nu":
        return nu(req.params[0], H)
    if kind == "nu_nk":
        return nu_nk(*req.params, H)
    if kind == "nu_prime":
        return nu_prime_nk(*req.params, H)
    if kind == "nu_tilde":
        return nu_tilde(*req.params, H)
    if kind in ("seifert", "genus2"):
        return genus2(*req.params, H)
    if kind == "s3":
        return kuperberg(compile_plan(fixture("s3"), name="s3"), H)
    if kind == "s2xs1":
        return kuperberg(compile_plan(fixture("s2xs1"), name="s2xs1"), H)
    if kind == "q8":
        return kuperberg(compile_plan(fixture("q8"), name="q8"), H)
    raise BadParameters(f"unknown manifold kind {kind!r}")


class ComparisonReport:
    __slots__ = ("label", "left_label", "right_label", "left", "right")

    def __init__(self, label, left_label, right_label, left, right):
        self.label = label
        self.left_label = left_label
        self.right_label = right_label
        self.left = left
        self.right = right

    @property
    def equal(self):
        return self.left == self.right

    def __str__(self):
        verdict = "EQUAL" if self.equal else "DIFFER"
        return (f"{self.label}: {verdict}\n  {self.left_label} = {self.left.render()}\n"
                f"  {self.right_label} = {self.right.render()}")


def gauge_check(req: InvariantRequest, C: TwoCocycle) -> ComparisonReport:
    """Compute the invariant on H and on the Drinfeld twist H_F, with H_F's
    integrals recomputed from scratch, and report exact equality."""
    H = C.host
    HF = drinfeld_twist(H, C)
    return ComparisonReport(
        f"gauge {req.describe()}", "K(H)", "K(H_F)",
        evaluate_request(req, H), evaluate_request(req, HF))


def multiplicativity_check(req: InvariantRequest, H: HopfData, K: HopfData) -> ComparisonReport:
    """K(., H x K) = K(., H) K(., K)."""
    return ComparisonReport(
        f"multiplicativity {req.describe()}", "K(HxK)", "K(H) K(K)",
        evaluate_request(req, tensor_product(H, K)),
        evaluate_request(req, H) * evaluate_request(req, K))


def duality_check(req: InvariantRequest, H: HopfData) -> ComparisonReport:
    """K(., H) = K(., H*)."""
    return ComparisonReport(
        f"duality {req.describe()}", "K(H)", "K(H*)",
        evaluate_request(req, H), evaluate_request(req, dual(H)))
