"""Points and divisors on X_0(N).

Interior points are quadratic irrationals z = (-B + sqrt(B^2-4AC))/(2A)
stored as integral binary quadratic forms [A, B, C] with A > 0 and
negative discriminant, so every comparison is exact integer arithmetic.
A Gamma_0(N)-class gets the canonical key

    (level-1 reduced primitive form,  min P^1(Z/N) label over the
     stabilizer translates of the reduction witness),

which simultaneously solves level-1 reduction (N = 1: the label is
trivial) and gives an exact equivalence test at higher levels.  The
fundamental-domain convention is -1/2 <= Re z < 1/2, |z| >= 1 with the
|z| = 1 boundary tie broken towards Re z <= 0, i.e. the classical
-A < B <= A <= C (B >= 0 when A = C) reduction.

Cusps are classified by the T-orbit of the bottom row of a lift to
SL_2(Z) in P^1(Z/N); widths come from conjugating the stabilizer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import forms
from .algebra import Mat, mat_mul, p1_label, left_coset_reps
from .errors import NotPolynomialInJ, UnknownDivisor, UnsupportedParameter
from .series import PuiseuxSeries

S_MAT: Mat = (0, -1, 1, 0)
U_MAT: Mat = (0, -1, 1, 1)  # ST, fixes omega = exp(2 pi i / 3)


# ---------------------------------------------------------------------------
# Heegner points and reduction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HeegnerPoint:
    """z = (-B + sqrt(B^2 - 4AC)) / (2A) in the upper half-plane."""
    A: int
    B: int
    C: int

    def __post_init__(self):
        if self.A <= 0 or self.discriminant >= 0:
            raise ValueError(f"[{self.A},{self.B},{self.C}] is not a point of H")

    @property
    def discriminant(self) -> int:
        return self.B * self.B - 4 * self.A * self.C

    @property
    def content(self) -> int:
        return gcd(gcd(abs(self.A), abs(self.B)), abs(self.C))

    def primitive(self) -> "HeegnerPoint":
        g = self.content
        return self if g == 1 else HeegnerPoint(self.A // g, self.B // g, self.C // g)

    def approx(self) -> complex:
        d = -self.discriminant
        return complex(-self.B / (2 * self.A), (d ** 0.5) / (2 * self.A))


OMEGA = HeegnerPoint(1, 1, 1)   # e^(2 pi i/3)
POINT_I = HeegnerPoint(1, 0, 1)


def act_matrix(m: Mat, z: HeegnerPoint) -> HeegnerPoint:
    """Image of z under the Moebius action of an integer matrix with
    positive determinant, as an exact quadratic form (content kept)."""
    a, b, c, d = m
    A, B, C = z.A, z.B, z.C
    A2 = A * d * d - B * c * d + C * c * c
    B2 = -2 * A * b * d + B * (a * d + b * c) - 2 * C * a * c
    C2 = A * b * b - B * a * b + C * a * a
    if A2 < 0:
        A2, B2, C2 = -A2, -B2, -C2
    return HeegnerPoint(A2, B2, C2)


def _gauss_reduce(z: HeegnerPoint) -> tuple[HeegnerPoint, Mat]:
    """Reduce a primitive form; returns (reduced, witness) with
    z_reduced = witness . z.  Reduced means -A < B <= A <= C with B >= 0
    when A = C, i.e. -1/2 <= Re z < 1/2, |z| >= 1, ties towards Re z <= 0."""
    A, B, C = z.A, z.B, z.C
    wit: Mat = (1, 0, 0, 1)
    while True:
        j = (B + A - 1) // (2 * A)  # B - 2Aj lands in (-A, A]
        if j:
            C = A * j * j - B * j + C
            B = B - 2 * A * j
            wit = mat_mul((1, j, 0, 1), wit)
        if A > C or (A == C and B < 0):
            A, B, C = C, -B, A
            wit = mat_mul(S_MAT, wit)
        else:
            break
    return HeegnerPoint(A, B, C), wit


def _stabilizer_mod_pm(form: HeegnerPoint) -> list[Mat]:
    """Coset representatives of the PSL_2(Z)-stabilizer of a reduced
    primitive form (nontrivial only at i and omega)."""
    key = (form.A, form.B, form.C)
    if key == (1, 0, 1):
        return [(1, 0, 0, 1), S_MAT]
    if key == (1, 1, 1):
        u2 = mat_mul(U_MAT, U_MAT)
        return [(1, 0, 0, 1), U_MAT, u2]
    return [(1, 0, 0, 1)]


def _mat_inv_unimodular(m: Mat) -> Mat:
    a, b, c, d = m
    return (d, -b, -c, a)


@lru_cache(maxsize=None)
def _p1_points(N: int) -> tuple[tuple[int, int], ...]:
    seen = set()
    for c in range(N):
        for d in range(N):
            if gcd(gcd(c, d), N) == 1:
                seen.add(p1_label(c, d, N))
    return tuple(sorted(seen))


def p1_lift(label: tuple[int, int], N: int) -> Mat:
    """A deterministic SL_2(Z) matrix whose bottom row represents the given
    P^1(Z/N) class."""
    c0, d0 = label
    if N == 1:
        return (1, 0, 0, 1)
    if c0 % N == 0:
        return (1, 0, 0, 1)  # (0 : 1) class
    c = c0
    d = d0
    while gcd(c, d) != 1:
        d += N
    # extend (c, d) to an SL2 matrix: a*d - b*c = 1
    a, b = _bezout(d, c)
    return (a, -b, c, d)


def _bezout(x: int, y: int) -> tuple[int, int]:
    """(u, v) with u*x + v*y = gcd(x, y)."""
    if y == 0:
        return (1 if x >= 0 else -1, 0)
    u0, v0, u1, v1 = 1, 0, 0, 1
    while y:
        q = x // y
        x, y, u0, v0, u1, v1 = y, x - q * y, u1, v1, u0 - q * u1, v0 - q * v1
    return u0, v0


@dataclass(frozen=True)
class CanonicalPoint:
    """Exact key of a Gamma_0(N)-class of CM points."""
    N: int
    form: tuple[int, int, int]       # level-1 reduced primitive form
    label: tuple[int, int]           # canonical coset invariant

    def representative(self) -> HeegnerPoint:
        g = p1_lift(self.label, self.N)
        return act_matrix(g, HeegnerPoint(*self.form))

    def period(self) -> int:
        return period(self.representative(), self.N)

    def approx(self) -> complex:
        return self.representative().approx()

    def __repr__(self):
        if self.N == 1 or self.label == (0, 0):
            return f"[{self.form[0]},{self.form[1]},{self.form[2]}]"
        return f"[{self.form[0]},{self.form[1]},{self.form[2]};{self.label[0]}:{self.label[1]}]"


@dataclass(frozen=True)
class JFiberPoint:
    """Symbolic level-1 point j^{-1}(value); resolved numerically only when
    coordinates are required."""
    value: Fraction

    def __repr__(self):
        return f"[j={self.value}]"


def reduce_point(z: HeegnerPoint, N: int) -> tuple[CanonicalPoint, Mat]:
    """Canonical Gamma_0(N)-class key of z plus an SL_2(Z) witness gamma
    with gamma . z equal to the level-1 reduced point."""
    prim = z.primitive()
    red, wit = _gauss_reduce(prim)
    inv = _mat_inv_unimodular(wit)
    best = None
    for s in _stabilizer_mod_pm(red):
        g = mat_mul(inv, s)
        lab = p1_label(g[2] % N, g[3] % N, N)
        if best is None or lab < best:
            best = lab
    return CanonicalPoint(N, (red.A, red.B, red.C), best), wit


def period(z: HeegnerPoint, N: int) -> int:
    """Order of the PSL_2-stabilizer of [z] in Gamma_0(N): 2 at points over
    i, 3 at points over omega (when the elliptic element survives), else 1."""
    prim = z.primitive()
    red, wit = _gauss_reduce(prim)
    inv = _mat_inv_unimodular(wit)
    key = (red.A, red.B, red.C)
    if key == (1, 0, 1):
        e = mat_mul(mat_mul(inv, S_MAT), wit)
        return 2 if e[2] % N == 0 else 1
    if key == (1, 1, 1):
        e = mat_mul(mat_mul(inv, U_MAT), wit)
        return 3 if e[2] % N == 0 else 1
    return 1


# ---------------------------------------------------------------------------
# cusps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CuspClass:
    """Canonical cusp a/c of X_0(N) ((1, 0) is the infinite cusp)."""
    a: int
    c: int
    width: int

    def __repr__(self):
        return "inf" if self.c == 0 else f"{self.a}/{self.c}"

    @property
    def label(self) -> str:
        return repr(self)


def _cusp_orbit_key(a: int, c: int, N: int) -> tuple[int, int]:
    """Exact Gamma_0(N)-invariant of the cusp a/c: the minimal P^1(Z/N)
    label of the bottom row of a lift, over its T-translates."""
    g = gcd(abs(a), abs(c))
    if g:
        a, c = a // g, c // g
    if c < 0 or (c == 0 and a < 0):
        a, c = -a, -c
    u, _v = _bezout(a, c)
    d = u  # (a, -v; c, u) lies in SL_2(Z)
    best = None
    for j in range(N):
        lab = p1_label(c % N, (d + j * c) % N, N)
        if best is None or lab < best:
            best = lab
    return best


def cusp_width(c: int, N: int) -> int:
    """Width of the cusp a/c: least h > 0 with sigma T^h sigma^{-1} in
    Gamma_0(N); the conjugate has lower-left entry -c^2 h."""
    h = 1
    while (c * c * h) % N != 0:
        h += 1
    return h


@lru_cache(maxsize=None)
def cusps(N: int) -> tuple[CuspClass, ...]:
    """A complete system of inequivalent cusps of X_0(N) with widths.

    Representatives a/c with c | N and a mod gcd(c, N/c); the class of
    (1, 0) (equivalently c = N) is displayed as the infinite cusp.
    """
    inf_key = _cusp_orbit_key(1, 0, N)
    out = []
    seen = set()
    for c in sorted(d for d in range(1, N + 1) if N % d == 0):
        g = gcd(c, N // c)
        for a0 in range(g if g > 1 else 1):
            if g > 1 and gcd(a0, g) != 1:
                continue
            if c == 1:
                a = 0
            else:
                a = a0 if a0 else 1
                while gcd(a, c) != 1:
                    a += g
            key = _cusp_orbit_key(a, c, N)
            if key in seen:
                continue
            seen.add(key)
            if key == inf_key:
                out.append(CuspClass(1, 0, cusp_width(N, N)))
            else:
                out.append(CuspClass(a, c, cusp_width(c, N)))
    return tuple(sorted(out, key=lambda cc: (cc.c, cc.a)))


@lru_cache(maxsize=None)
def _cusp_table(N: int) -> dict:
    return {_cusp_orbit_key(cc.a, cc.c, N): cc for cc in cusps(N)}


def canonical_cusp(a: int, c: int, N: int) -> CuspClass:
    """Canonical representative of the cusp a/c (use (1, 0) for infinity)."""
    if c == 0:
        a, c = 1, 0
    return _cusp_table(N)[_cusp_orbit_key(a, c, N)]


# ---------------------------------------------------------------------------
# divisors
# ---------------------------------------------------------------------------

PointKey = CanonicalPoint | JFiberPoint


@dataclass(frozen=True)
class Divisor:
    """Finite Q-combination of canonical points of X_0(N)."""
    N: int
    interior: tuple[tuple[PointKey, Fraction], ...]
    cusp_part: tuple[tuple[CuspClass, Fraction], ...]
    numeric: tuple[tuple[complex, Fraction], ...] = ()

    @staticmethod
    def make(N: int, interior=None, cusp_part=None, numeric=None) -> "Divisor":
        inter = {}
        for k, v in (interior or {}).items():
            v = Fraction(v)
            if v:
                inter[k] = inter.get(k, Fraction(0)) + v
        cp = {}
        for k, v in (cusp_part or {}).items():
            v = Fraction(v)
            if v:
                cp[k] = cp.get(k, Fraction(0)) + v
        inter = {k: v for k, v in inter.items() if v}
        cp = {k: v for k, v in cp.items() if v}
        return Divisor(
            N,
            tuple(sorted(inter.items(), key=lambda kv: repr(kv[0]))),
            tuple(sorted(cp.items(), key=lambda kv: repr(kv[0]))),
            tuple(numeric or ()),
        )

    def interior_dict(self) -> dict:
        return dict(self.interior)

    def cusp_dict(self) -> dict:
        return dict(self.cusp_part)

    def coefficient(self, key) -> Fraction:
        if isinstance(key, CuspClass):
            return self.cusp_dict().get(key, Fraction(0))
        return self.interior_dict().get(key, Fraction(0))

    def cusp_coefficient(self, a: int, c: int) -> Fraction:
        return self.coefficient(canonical_cusp(a, c, self.N))

    @property
    def degree(self) -> Fraction:
        return (sum((v for _, v in self.interior), Fraction(0))
                + sum((v for _, v in self.cusp_part), Fraction(0))
                + sum((v for _, v in self.numeric), Fraction(0)))

    def __add__(self, other: "Divisor") -> "Divisor":
        assert self.N == other.N
        inter = self.interior_dict()
        for k, v in other.interior:
            inter[k] = inter.get(k, Fraction(0)) + v
        cp = self.cusp_dict()
        for k, v in other.cusp_part:
            cp[k] = cp.get(k, Fraction(0)) + v
        return Divisor.make(self.N, inter, cp, self.numeric + other.numeric)

    def __rmul__(self, s) -> "Divisor":
        s = Fraction(s)
        return Divisor.make(self.N,
                            {k: s * v for k, v in self.interior},
                            {k: s * v for k, v in self.cusp_part},
                            tuple((z, s * v) for z, v in self.numeric))

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-1) * other

    def __repr__(self):
        parts = [f"({v})[{k!r}]" for k, v in self.interior]
        parts += [f"({v})[{k!r}]" for k, v in self.cusp_part]
        parts += [f"({v})[~{z:.6g}]" for z, v in self.numeric]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        inter = []
        for k, v in self.interior:
            if isinstance(k, CanonicalPoint):
                rep = k.representative()
                inter.append({"A": rep.A, "B": rep.B, "C": rep.C,
                              "coeff": _frac_str(v)})
            else:
                inter.append({"j_fiber": _frac_str(k.value), "coeff": _frac_str(v)})
        return {
            "N": self.N,
            "interior": inter,
            "cusps": [{"cusp": k.label, "coeff": _frac_str(v)}
                      for k, v in self.cusp_part],
            "numeric": [{"z": [z.real, z.imag], "coeff": _frac_str(v)}
                        for z, v in self.numeric],
        }

    @staticmethod
    def from_json(data: dict) -> "Divisor":
        N = data["N"]
        inter = {}
        for item in data["interior"]:
            if "j_fiber" in item:
                key: PointKey = JFiberPoint(Fraction(item["j_fiber"]))
            else:
                key, _ = reduce_point(HeegnerPoint(item["A"], item["B"], item["C"]), N)
            inter[key] = inter.get(key, Fraction(0)) + Fraction(item["coeff"])
        cp = {}
        for item in data["cusps"]:
            lab = item["cusp"]
            if lab == "inf":
                cc = canonical_cusp(1, 0, N)
            else:
                a, c = lab.split("/")
                cc = canonical_cusp(int(a), int(c), N)
            cp[cc] = cp.get(cc, Fraction(0)) + Fraction(item["coeff"])
        numeric = tuple((complex(item["z"][0], item["z"][1]), Fraction(item["coeff"]))
                        for item in data["numeric"])
        return Divisor.make(N, inter, cp, numeric)


def _frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def point_divisor(N: int, z: HeegnerPoint, coeff=1) -> Divisor:
    key, _ = reduce_point(z, N)
    return Divisor.make(N, {key: Fraction(coeff)}, {})


def cusp_divisor(N: int, a: int, c: int, coeff=1) -> Divisor:
    return Divisor.make(N, {}, {canonical_cusp(a, c, N): Fraction(coeff)})


# ---------------------------------------------------------------------------
# Hecke action on divisors
# ---------------------------------------------------------------------------

def hecke_divisor(n: int, D: Divisor, N: int | None = None) -> Divisor:
    """T(n) D = sum_z n_z sum_i [alpha_i z], every image point reduced to
    its canonical class."""
    N = D.N if N is None else N
    assert N == D.N
    reps = left_coset_reps(N, n)
    inter: dict = {}
    cp: dict = {}
    numeric = []
    for key, v in D.interior:
        if isinstance(key, JFiberPoint):
            raise UnsupportedParameter(
                "cannot act exactly on a symbolic j-fiber point; resolve it first")
        z = key.representative()
        for m in reps:
            img, _ = reduce_point(act_matrix(m, z), N)
            inter[img] = inter.get(img, Fraction(0)) + v
    for cc, v in D.cusp_part:
        for m in reps:
            a2 = m[0] * cc.a + m[1] * cc.c
            c2 = m[2] * cc.a + m[3] * cc.c
            g = gcd(abs(a2), abs(c2))
            img = canonical_cusp(a2 // g, c2 // g, N)
            cp[img] = cp.get(img, Fraction(0)) + v
    for z, v in D.numeric:
        for m in reps:
            a, b, c, d = m
            numeric.append(((a * z + b) / (c * z + d), v))
    return Divisor.make(N, inter, cp, tuple(numeric))


# ---------------------------------------------------------------------------
# divisors of form expressions
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _classes_over(form: tuple[int, int, int], N: int) -> tuple[tuple[CanonicalPoint, int], ...]:
    """Gamma_0(N)-classes lying over a level-1 point, with their periods."""
    base = HeegnerPoint(*form)
    out = {}
    for lab in _p1_points(N):
        g = p1_lift(lab, N)
        key, _ = reduce_point(act_matrix(g, base), N)
        if key not in out:
            out[key] = period(key.representative(), N)
    return tuple(out.items())


def _interior_fiber_divisor(N: int, form: tuple[int, int, int], ord_z: int) -> dict:
    return {key: Fraction(ord_z, per) for key, per in _classes_over(form, N)}


def _cusp_orders_level1_atom(N: int, nu_infinity: int) -> dict:
    # a level-1 form has the same expansion at every cusp, so the order at a
    # width-h cusp is h * (order at infinity)
    return {cc: Fraction(nu_infinity * cc.width) for cc in cusps(N)}


def _atom_divisor(atom, N: int) -> Divisor:
    if isinstance(atom, forms.Eisenstein):
        if atom.k == 4:
            return Divisor.make(N, _interior_fiber_divisor(N, (1, 1, 1), 1), {})
        if atom.k == 6:
            return Divisor.make(N, _interior_fiber_divisor(N, (1, 0, 1), 1), {})
        raise UnknownDivisor(f"no divisor data for E{atom.k}")
    if isinstance(atom, forms.JMinus):
        cusp_part = _cusp_orders_level1_atom(N, -1)
        if atom.c == 1728:
            inter = _interior_fiber_divisor(N, (1, 0, 1), 2)
        elif atom.c == 0:
            inter = _interior_fiber_divisor(N, (1, 1, 1), 3)
        elif atom.fiber is not None:
            inter = _interior_fiber_divisor(N, atom.fiber, 1)
        elif N == 1:
            inter = {JFiberPoint(Fraction(atom.c)): Fraction(1)}
        else:
            raise UnknownDivisor(
                f"generic j - {atom.c} needs an attached fiber point at level {N}")
        return Divisor.make(N, inter, cusp_part)
    if isinstance(atom, forms.DeltaShift):
        spec = forms.EtaQuotientSpec.make(atom.m, {atom.m: 24})
        return _eta_divisor(spec, N)
    if isinstance(atom, forms.EtaQuotient):
        return _eta_divisor(atom.spec, N)
    raise UnknownDivisor(f"atom {atom!r} has no symbolic divisor")


def _eta_divisor(spec: forms.EtaQuotientSpec, N: int) -> Divisor:
    cp = {}
    for cc in cusps(N):
        c = N if cc.c == 0 else cc.c
        cp[cc] = forms.ligozat_order(spec, N, c)
    return Divisor.make(N, {}, cp)


def divisor_of_form(expr: forms.FormExpression, N: int) -> Divisor:
    """Exact divisor on X_0(N) of an expression with atomwise known data;
    degree k mu(N) / 12."""
    if N % expr.level != 0:
        raise UnsupportedParameter(
            f"expression of level {expr.level} does not live on X_0({N})")
    if expr.shift:
        return _shifted_divisor(expr, N)
    total = Divisor.make(N, {}, {})
    for atom, e in expr.atoms:
        total = total + e * _atom_divisor(atom, N)
    return total


def _shifted_divisor(expr: forms.FormExpression, N: int) -> Divisor:
    """Divisor of (Hauptmodul + shift): a degree-one function on a
    genus-zero X_0(N), so a simple zero at the fiber of -shift and the
    pole divisor of the Hauptmodul itself."""
    value = -expr.shift
    if len(expr.atoms) == 1 and expr.atoms[0][1] == 1:
        atom = expr.atoms[0][0]
        if (isinstance(atom, forms.EtaQuotient)
                and N in forms.GENUS_ZERO_ETA_LEVELS
                and atom.spec == forms.hauptmodul_spec(N)):
            fiber = forms.HAUPTMODUL_CM_VALUES.get((N, Fraction(value)))
            if fiber is None:
                raise UnknownDivisor(
                    f"no registered fiber for Hauptmodul value {value} at level {N}")
            key, _ = reduce_point(HeegnerPoint(*fiber), N)
            return Divisor.make(N, {key: Fraction(1)},
                                {canonical_cusp(1, 0, N): Fraction(-1)})
        if isinstance(atom, forms.JMinus) and N == 1:
            # (j - c) + shift = j - (c - shift)
            return _atom_divisor(forms.JMinus(atom.c - expr.shift), 1)
    raise UnknownDivisor("additive shifts are only resolved for Hauptmoduln")


# ---------------------------------------------------------------------------
# weight-0 level-1 series as polynomials in j
# ---------------------------------------------------------------------------

def weight0_to_j_polynomial(f: PuiseuxSeries) -> dict[int, Fraction]:
    """The unique P with P(j) = f through the known precision of f.

    Raises NotPolynomialInJ when the remainder fails to vanish (wrong level
    or not enough precision)."""
    if f.D != 1:
        raise NotPolynomialInJ("series has fractional exponents")
    poly: dict[int, Fraction] = {}
    g = f
    while not g.is_zero() and g.order < 0:
        m = -g.order
        a = Fraction(g.leading_coefficient())
        poly[m] = a
        jm = forms.j_function(g.cutoff + m + 2) ** m
        g = g - a * jm
    if not g.is_zero():
        if g.cutoff <= 0:
            raise NotPolynomialInJ("no constant term within precision")
        c0 = Fraction(g.coefficient(0))
        if c0:
            poly[0] = c0
            g = g - c0
    if not g.is_zero():
        raise NotPolynomialInJ(
            f"remainder {g!r} does not vanish; not a polynomial in j")
    return poly


def polynomial_rational_roots(poly: dict[int, Fraction]) -> tuple[dict[Fraction, int], dict[int, Fraction]]:
    """Split off the rational linear factors of P (with multiplicity),
    returning (roots, residual polynomial).

    Numeric root-finding (on the exact square-free part, so multiple roots
    cannot stall it) only guides the search; every root is verified by
    exact synthetic division before it is accepted.
    """
    import mpmath

    dense = [poly.get(i, Fraction(0)) for i in range(max(poly, default=0) + 1)]
    while len(dense) > 1 and dense[-1] == 0:
        dense.pop()
    roots: dict[Fraction, int] = {}
    if len(dense) <= 1:
        return roots, {i: c for i, c in enumerate(dense) if c}
    sf = _poly_squarefree(dense)
    with mpmath.workdps(60):
        approx = mpmath.polyroots([mpmath.mpf(c.numerator) / c.denominator
                                   for c in reversed(sf)], maxsteps=500,
                                  extraprec=200)
    for r in approx:
        if abs(mpmath.im(r)) > mpmath.mpf(10) ** -30:
            continue
        re = mpmath.re(r)
        cand = Fraction(round(float(re)))
        if abs(re - cand.numerator) > mpmath.mpf(10) ** -20:
            cand = Fraction(int(mpmath.nint(re * 10 ** 6)), 10 ** 6).limit_denominator(10 ** 6)
        while len(dense) > 1:
            quot, rem = _synthetic_division(dense, cand)
            if rem != 0:
                break
            dense = quot
            roots[cand] = roots.get(cand, 0) + 1
    residual = {i: c for i, c in enumerate(dense) if c != 0}
    return roots, residual


def _synthetic_division(dense: list[Fraction], r: Fraction):
    """Divide sum dense[i] x^i by (x - r); returns (quotient, remainder)."""
    n = len(dense)
    quot = [Fraction(0)] * (n - 1)
    carry = Fraction(dense[-1])
    for i in range(n - 2, -1, -1):
        quot[i] = carry
        carry = dense[i] + carry * r
    return quot, carry


def _poly_squarefree(dense: list[Fraction]) -> list[Fraction]:
    """Exact square-free part P / gcd(P, P')."""
    deriv = [i * c for i, c in enumerate(dense)][1:]
    g = _poly_gcd(dense, deriv)
    if len(g) == 1:
        return dense
    q, r = _poly_divmod(dense, g)
    assert all(c == 0 for c in r)
    return q


def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    num = [Fraction(c) for c in num]
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    for i in range(len(q) - 1, -1, -1):
        coef = num[i + len(den) - 1] / den[-1]
        q[i] = coef
        if coef:
            for j, dc in enumerate(den):
                num[i + j] -= coef * dc
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    while len(b) > 1 or (b and b[0] != 0):
        _, r = _poly_divmod(a, b)
        a, b = b, r
        if not b or all(c == 0 for c in b):
            break
    lead = a[-1]
    return [c / lead for c in a]
