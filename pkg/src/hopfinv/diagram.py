"""Framed Heegaard diagrams and their evaluation plans.

A diagram records, per curve, the ordered intersection points (traversal
order from the base point) with their rotation numbers: theta in quarter
turns, phi in half turns, totals half-integers.  Admissibility is
theta = -phi on upper curves and theta = phi on lower curves.

compile_plan orders the points lexicographically along the lower curves
(p_1 ... p_n) and along the upper curves (p^1 ... p^n), defines sigma by
p_{sigma(r)} = p^r, and the exponents

    s_r = 2 (theta_lower(p_r) - theta_upper(p_r)) + 1/2,
    t_r = phi_lower(p_r) - phi_upper(p_r).

The evaluator consumes lower-ordered legs and emits upper-ordered products,
so output leg r of the permutation carries input leg sigma(r).  Worked check
(the quaternion fixture): upper curve 1 visits p_1, p_6, p_3, p_8 and curve 2
visits p_5, p_2, p_7, p_4, giving sigma = [1,6,3,8,5,2,7,4] = (2 6)(4 8).

Rotation data is user-supplied (per point and per curve): the built-in fixtures
carry tabulated rotation data, and there is no algorithm here to derive
rotations from curve geometry.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class DiagramError(Exception):
    pass


class DiagramSyntaxError(DiagramError):
    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line


class DuplicatePoint(DiagramError):
    pass


class OrphanPoint(DiagramError):
    pass


class BadRotationGrain(DiagramError):
    pass


class NotAdmissible(DiagramError):
    pass


class BadParity(DiagramError):
    pass


class NotCoprime(DiagramError):
    pass


class BadParameters(DiagramError):
    pass


QUARTER = Fraction(1, 4)
HALF = Fraction(1, 2)


class Curve:
    """One gluing curve: ordered (point, theta, phi) plus total rotations."""

    __slots__ = ("name", "points", "theta_total", "phi_total")

    def __init__(self, name, points, theta_total, phi_total):
        self.name = name
        self.points = [(pid, Fraction(th), Fraction(ph)) for (pid, th, ph) in points]
        self.theta_total = Fraction(theta_total)
        self.phi_total = Fraction(phi_total)

    def point_ids(self):
        return [p for (p, _, _) in self.points]


class FramedDiagram:
    __slots__ = ("genus", "lower", "upper")

    def __init__(self, genus, lower, upper):
        if len(lower) != genus or len(upper) != genus:
            raise DiagramError(f"genus {genus} needs {genus} lower and upper curves")
        self.genus = genus
        self.lower = list(lower)
        self.upper = list(upper)
        self._validate()

    def _validate(self):
        for side, curves in (("lower", self.lower), ("upper", self.upper)):
            seen = set()
            for c in curves:
                for (pid, th, ph) in c.points:
                    if pid in seen:
                        raise DuplicatePoint(f"point {pid} occurs twice on {side} curves")
                    seen.add(pid)
                    if th % QUARTER != 0:
                        raise BadRotationGrain(f"theta({pid}) = {th} is not a quarter integer")
                    if ph % HALF != 0:
                        raise BadRotationGrain(f"phi({pid}) = {ph} is not a half integer")
                if (c.theta_total - HALF) % 1 != 0 or (c.phi_total - HALF) % 1 != 0:
                    raise BadRotationGrain(
                        f"curve {c.name}: totals ({c.theta_total}, {c.phi_total}) must be half-integers")
        lower_pts = {p for c in self.lower for p in c.point_ids()}
        upper_pts = {p for c in self.upper for p in c.point_ids()}
        if lower_pts != upper_pts:
            orphan = min(lower_pts ^ upper_pts)
            raise OrphanPoint(f"point {orphan} is missing from one side")

    def point_count(self):
        return sum(len(c.points) for c in self.lower)


class EvalPlan:
    """The combinatorial payload the evaluator needs: sigma, s, t,
    curve partitions, and total theta rotations."""

    __slots__ = ("genus", "n", "sigma", "s", "t", "lower_sizes", "upper_sizes",
                 "theta_lower", "theta_upper", "name")

    def __init__(self, genus, n, sigma, s, t, lower_sizes, upper_sizes,
                 theta_lower, theta_upper, name=""):
        self.genus = genus
        self.n = n
        self.sigma = tuple(sigma)
        self.s = tuple(s)
        self.t = tuple(t)
        self.lower_sizes = tuple(lower_sizes)
        self.upper_sizes = tuple(upper_sizes)
        self.theta_lower = tuple(Fraction(x) for x in theta_lower)
        self.theta_upper = tuple(Fraction(x) for x in theta_upper)
        self.name = name
        if sum(lower_sizes) != n or sum(upper_sizes) != n:
            raise DiagramError("curve partitions do not cover the points")
        if sorted(self.sigma) != list(range(1, n + 1)):
            raise DiagramError("sigma is not a permutation")

    def __eq__(self, other):
        if not isinstance(other, EvalPlan):
            return NotImplemented
        return (self.genus, self.n, self.sigma, self.s, self.t, self.lower_sizes,
                self.upper_sizes, self.theta_lower, self.theta_upper) == \
               (other.genus, other.n, other.sigma, other.s, other.t, other.lower_sizes,
                other.upper_sizes, other.theta_lower, other.theta_upper)

    __hash__ = None

    def __repr__(self):
        return (f"EvalPlan({self.name or 'anon'}: genus={self.genus}, n={self.n}, "
                f"sigma={list(self.sigma)}, s={list(self.s)}, t={list(self.t)})")


# --------------------------------------------------------------------------
# text format


def parse_diagram(text: str) -> FramedDiagram:
    """Line-oriented diagram text; grammar:

        genus <g>
        lower <name> total_theta <q> total_phi <q>
          point <id> theta <q> phi <q>
        upper <name> total_theta <q> total_phi <q>
          ...

    with `<q>` a rational like -3/4 and `#` comments."""
    genus = None
    lower, upper = [], []
    current = None

    def frac(tok, line):
        try:
            return Fraction(tok)
        except ValueError:
            raise DiagramSyntaxError(line, f"bad rational {tok!r}") from None

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "genus":
            if genus is not None or len(parts) != 2 or not parts[1].isdigit():
                raise DiagramSyntaxError(lineno, "expected a single `genus <g>` header")
            genus = int(parts[1])
        elif parts[0] in ("lower", "upper"):
            if len(parts) != 6 or parts[2] != "total_theta" or parts[4] != "total_phi":
                raise DiagramSyntaxError(lineno, "expected `lower|upper <name> total_theta <q> total_phi <q>`")
            current = Curve(parts[1], [], frac(parts[3], lineno), frac(parts[5], lineno))
            (lower if parts[0] == "lower" else upper).append(current)
        elif parts[0] == "point":
            if current is None:
                raise DiagramSyntaxError(lineno, "point before any curve")
            if len(parts) != 6 or parts[2] != "theta" or parts[4] != "phi":
                raise DiagramSyntaxError(lineno, "expected `point <id> theta <q> phi <q>`")
            current.points.append((parts[1], frac(parts[3], lineno), frac(parts[5], lineno)))
        else:
            raise DiagramSyntaxError(lineno, f"unknown directive {parts[0]!r}")
    if genus is None:
        raise DiagramSyntaxError(0, "missing genus header")
    return FramedDiagram(genus, lower, upper)


def render_diagram(D: FramedDiagram) -> str:
    out = [f"genus {D.genus}"]
    for side, curves in (("lower", D.lower), ("upper", D.upper)):
        for c in curves:
            out.append(f"{side} {c.name} total_theta {c.theta_total} total_phi {c.phi_total}")
            for (pid, th, ph) in c.points:
                out.append(f"  point {pid} theta {th} phi {ph}")
    return "\n".join(out) + "\n"


# --------------------------------------------------------------------------
# admissibility and plan compilation


def check_admissibility(D: FramedDiagram):
    """theta = -phi on upper curves, theta = phi on lower curves."""
    rep = []
    for c in D.upper:
        rep.append(("upper", c.name, c.theta_total == -c.phi_total))
    for c in D.lower:
        rep.append(("lower", c.name, c.theta_total == c.phi_total))
    return rep


def is_admissible(D: FramedDiagram) -> bool:
    return all(ok for (_, _, ok) in check_admissibility(D))


def compile_plan(D: FramedDiagram, name="") -> EvalPlan:
    bad = [f"{side} {cname}" for (side, cname, ok) in check_admissibility(D) if not ok]
    if bad:
        raise NotAdmissible("inadmissible curves: " + ", ".join(bad))
    lower_order = []
    lower_data = {}
    for c in D.lower:
        for (pid, th, ph) in c.points:
            lower_order.append(pid)
            lower_data[pid] = (th, ph)
    upper_order = []
    upper_data = {}
    for c in D.upper:
        for (pid, th, ph) in c.points:
            upper_order.append(pid)
            upper_data[pid] = (th, ph)
    pos = {pid: r for r, pid in enumerate(lower_order, 1)}
    sigma = [pos[pid] for pid in upper_order]
    s, t = [], []
    for pid in lower_order:
        th_l, ph_l = lower_data[pid]
        th_u, ph_u = upper_data[pid]
        s_val = 2 * (th_l - th_u) + HALF
        t_val = ph_l - ph_u
        if s_val.denominator != 1 or t_val.denominator != 1:
            raise BadRotationGrain(f"point {pid}: s = {s_val}, t = {t_val} must be integers")
        s.append(int(s_val))
        t.append(int(t_val))
    return EvalPlan(
        genus=D.genus,
        n=len(lower_order),
        sigma=sigma,
        s=s,
        t=t,
        lower_sizes=[len(c.points) for c in D.lower],
        upper_sizes=[len(c.points) for c in D.upper],
        theta_lower=[c.theta_total for c in D.lower],
        theta_upper=[c.theta_total for c in D.upper],
        name=name,
    )


def stabilize(D: FramedDiagram) -> FramedDiagram:
    """Add one handle with the standard one-point block: the new point has
    theta 1/4 / phi 0 on its lower curve (totals 1/2, 1/2) and theta 0 /
    phi 0 on its upper curve (totals 1/2, -1/2)."""
    used = {p for c in D.lower for p in c.point_ids()}
    k = 1
    while f"st{k}" in used:
        k += 1
    pid = f"st{k}"
    low = Curve(f"eta_st{k}", [(pid, QUARTER, 0)], HALF, HALF)
    up = Curve(f"mu_st{k}", [(pid, 0, 0)], HALF, -HALF)
    return FramedDiagram(D.genus + 1, D.lower + [low], D.upper + [up])


# --------------------------------------------------------------------------
# lens-space plans from the rotation recursions


def _res1(a: int, n: int) -> int:
    """Positive residue in 1..n."""
    r = a % n
    return r if r else n


def lens_fR_plan(n: int, k: int) -> EvalPlan:
    """The right diagram framing of L(n,k), n > k > 0 coprime with n-k odd:
    sigma(i) = k(i-1) mod n, s_n = 1 and the three-case recursion, all t = 0,
    totals theta(mu) = theta(eta) = phi(eta) = 1/2, phi(mu) = -1/2."""
    if not (n > k > 0):
        raise BadParameters(f"need n > k > 0, got ({n}, {k})")
    if gcd(n, k) != 1:
        raise NotCoprime(f"gcd({n}, {k}) != 1")
    if (n - k) % 2 == 0:
        raise BadParity(f"n - k = {n - k} must be odd for the fR framing")
    k0 = (n - k - 1) // 2
    s = {n: 1}
    i = n
    for _ in range(n - 1):
        j = _res1(i + k, n)
        if 1 <= i <= k0:
            s[j] = s[i] + 2
        elif k0 + 1 <= i <= n - k - 1:
            s[j] = s[i] - 2
        else:
            s[j] = s[i]
        i = j
    assert s[n] == s[_res1(n - k, n)] == s[k if k else n] == 1
    assert all(v % 2 == 1 for v in s.values())
    sigma = [_res1(k * (i - 1), n) for i in range(1, n + 1)]
    return EvalPlan(1, n, sigma, [s[i] for i in range(1, n + 1)], [0] * n,
                    [n], [n], [HALF], [HALF], name=f"L({n},{k}) fR")


def lens_fL_plan(n: int, k: int) -> EvalPlan:
    """The left diagram framing of L(n,k), n > k >= 1 coprime with k odd:
    sigma(i) = 1 + (i-1)k mod n, s_1 = 1 and the three-case recursion,
    totals theta(eta) = phi(eta) = phi(mu) = 1/2, theta(mu) = -1/2."""
    if not (n > k > 0):
        raise BadParameters(f"need n > k > 0, got ({n}, {k})")
    if gcd(n, k) != 1:
        raise NotCoprime(f"gcd({n}, {k}) != 1")
    if k % 2 == 0:
        raise BadParity(f"k = {k} must be odd for the fL framing")
    k1 = (k - 1) // 2
    s = {1: 1}
    i = 1
    for _ in range(n - 1):
        j = _res1(i + k, n)
        if 1 <= i <= n - k + 1:
            s[j] = s[i]
        elif n - k + 2 <= i <= n - k1:
            s[j] = s[i] + 2
        else:
            s[j] = s[i] - 2
        i = j
    assert all(v % 2 == 1 for v in s.values())
    sigma = [_res1(1 + (i - 1) * k, n) for i in range(1, n + 1)]
    return EvalPlan(1, n, sigma, [s[i] for i in range(1, n + 1)], [0] * n,
                    [n], [n], [HALF], [-HALF], name=f"L({n},{k}) fL")


# --------------------------------------------------------------------------
# fixtures (transcribed rotation tables)


def _s3_diagram() -> FramedDiagram:
    low = Curve("eta", [("p", QUARTER, 0)], HALF, HALF)
    up = Curve("mu", [("p", 0, 0)], HALF, -HALF)
    return FramedDiagram(1, [low], [up])


def _s2xs1_diagram(a: int = 0, b: int = -1) -> FramedDiagram:
    """No intersection points; theta(mu) = -(a - 1/2), theta(eta) = -b - 3/2.
    The default (a, b) = (0, -1) is the standard framing with
    theta(eta) = -1/2 = phi(eta) and theta(mu) = 1/2 = -phi(mu)."""
    th_mu = -(Fraction(a) - HALF)
    th_eta = -(Fraction(b) + 1) - HALF
    low = Curve("eta", [], th_eta, th_eta)
    up = Curve("mu", [], th_mu, -th_mu)
    return FramedDiagram(1, [low], [up])


def _q8_diagram() -> FramedDiagram:
    thetas_eta = [QUARTER, HALF, HALF, HALF]
    eta1 = Curve("eta1", [(f"p{i}", thetas_eta[i - 1], 0) for i in range(1, 5)], HALF, HALF)
    eta2 = Curve("eta2", [(f"p{i}", thetas_eta[i - 5], 0) for i in range(5, 9)], HALF, HALF)
    mu1 = Curve("mu1", [("p1", 0, 0), ("p6", Fraction(-3, 4), 0), ("p3", -QUARTER, 0),
                        ("p8", QUARTER, 0)], -HALF, HALF)
    mu2 = Curve("mu2", [("p5", 0, 0), ("p2", QUARTER, 0), ("p7", -QUARTER, 0),
                        ("p4", Fraction(-3, 4), 0)], -HALF, HALF)
    return FramedDiagram(2, [eta1, eta2], [mu1, mu2])


def _l83_fR_diagram() -> FramedDiagram:
    th_eta = [0, 0, 0, 0, 0, 0, 0, QUARTER]
    th_mu_at = {1: Fraction(3, 4), 2: Fraction(3, 4), 3: -QUARTER, 4: -QUARTER,
                5: -QUARTER, 6: Fraction(3, 4), 7: Fraction(3, 4), 8: 0}
    eta = Curve("eta", [(f"p{i}", th_eta[i - 1], 0) for i in range(1, 9)], HALF, HALF)
    visits = [8, 3, 6, 1, 4, 7, 2, 5]
    mu = Curve("mu", [(f"p{i}", th_mu_at[i], 0) for i in visits], HALF, -HALF)
    return FramedDiagram(1, [eta], [mu])


def _l83_fL_diagram() -> FramedDiagram:
    th_eta = [QUARTER] + [HALF] * 7
    th_mu_at = {1: 0, 2: Fraction(-3, 4), 3: QUARTER, 4: QUARTER,
                5: Fraction(-3, 4), 6: QUARTER, 7: QUARTER, 8: Fraction(-3, 4)}
    eta = Curve("eta", [(f"p{i}", th_eta[i - 1], 0) for i in range(1, 9)], HALF, HALF)
    visits = [1, 4, 7, 2, 5, 8, 3, 6]
    mu = Curve("mu", [(f"p{i}", th_mu_at[i], 0) for i in visits], -HALF, HALF)
    return FramedDiagram(1, [eta], [mu])


def _seifert_diagram(m: int, n: int) -> FramedDiagram:
    """Genus-2 Seifert fixture: lower curves with m+3 points p_i and n+3
    points q_i, upper curves visiting

        mu1: p1, p_{m+3}..p_5 (desc), q_{n+1}, p3, q_{n+3}
        mu2: q1, p2, q_{n+2}, p4, q_n..q_2 (desc)

    with the tabulated theta values; reduces to the quaternion fixture at
    m = n = 1."""
    if m < 1 or n < 1:
        raise BadParameters("seifert fixture needs m >= 1 and n >= 1")
    eta1 = Curve("eta1", [("p1", QUARTER, 0)] + [(f"p{i}", HALF, 0) for i in range(2, m + 4)],
                 HALF, HALF)
    eta2 = Curve("eta2", [("q1", QUARTER, 0)] + [(f"q{i}", HALF, 0) for i in range(2, n + 4)],
                 HALF, HALF)
    m34 = Fraction(-3, 4)
    mu1_pts = [("p1", Fraction(0))]
    mu1_pts += [(f"p{i}", m34) for i in range(m + 3, 4, -1)]
    mu1_pts += [(f"q{n + 1}", m34), ("p3", -QUARTER), (f"q{n + 3}", QUARTER)]
    mu2_pts = [("q1", Fraction(0)), ("p2", QUARTER), (f"q{n + 2}", -QUARTER), ("p4", m34)]
    mu2_pts += [(f"q{i}", m34) for i in range(n, 1, -1)]
    mu1 = Curve("mu1", [(pid, th, 0) for (pid, th) in mu1_pts], -HALF, HALF)
    mu2 = Curve("mu2", [(pid, th, 0) for (pid, th) in mu2_pts], -HALF, HALF)
    return FramedDiagram(2, [eta1, eta2], [mu1, mu2])


FIXTURE_BUILDERS = {
    "s3": _s3_diagram,
    "s2xs1": _s2xs1_diagram,
    "q8": _q8_diagram,
    "l83_fR": _l83_fR_diagram,
    "l83_fL": _l83_fL_diagram,
    "seifert": _seifert_diagram,
}


def fixture(name: str, *args) -> FramedDiagram:
    """Diagram fixtures: s3, s2xs1, q8, l83_fR, l83_fL, seifert(m, n)."""
    try:
        builder = FIXTURE_BUILDERS[name]
    except KeyError:
        raise BadParameters(f"unknown fixture {name!r}; have {sorted(FIXTURE_BUILDERS)}") from None
    return builder(*args)


def fixture_text(name: str, *args) -> str:
    return render_diagram(fixture(name, *args))
