"""Constructors for the classical modular forms the library works with.

Everything here produces exact q-expansions (:class:`PuiseuxSeries`) or
symbolic :class:`FormExpression` values: normalized Eisenstein series,
Delta, the j-function in both normalizations (classical constant 744 and
the shifted variant with constant 24 that the divisor-sum identities are
stated for), the weight-0 Hecke images j_n, eta quotients, and the
genus-zero Hauptmoduln eta(tau)^a/eta(N tau)^a.

Expansion caches are process-wide and only ever append (pure constructors
behind lru_cache), so concurrent readers are safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

from .errors import UnsupportedWeight
from .series import PuiseuxSeries


# ---------------------------------------------------------------------------
# number-theoretic helpers
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def bernoulli(k: int) -> Fraction:
    """Exact Bernoulli number B_k (B_1 = -1/2 convention)."""
    if k == 0:
        return Fraction(1)
    # sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
    bs = [Fraction(1)]
    for m in range(1, k + 1):
        s = sum(comb(m + 1, j) * bs[j] for j in range(m))
        bs.append(-s / (m + 1))
    return bs[k]


def sigma(k: int, n: int) -> int:
    """Divisor power sum sigma_k(n) for n >= 1."""
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d ** k
            e = n // d
            if e != d:
                total += e ** k
        d += 1
    return total


def psl2_index(N: int) -> int:
    """Index of the image of Gamma_0(N) in PSL_2(Z): N * prod(1 + 1/p)."""
    idx = N
    m, p = N, 2
    seen = []
    while p * p <= m:
        if m % p == 0:
            seen.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        seen.append(m)
    for p in seen:
        idx += idx // p
    return idx


# ---------------------------------------------------------------------------
# q-expansions of the classical atoms
# ---------------------------------------------------------------------------

@lru_cache(maxsize=64)
def eisenstein(k: int, prec: int) -> PuiseuxSeries:
    """Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n."""
    if k % 2 != 0 or k < 4:
        raise UnsupportedWeight(f"Eisenstein weight must be even and >= 4, got {k}")
    c = -Fraction(2 * k) / bernoulli(k)
    coeffs = [Fraction(1)] + [c * sigma(k - 1, n) for n in range(1, prec)]
    return PuiseuxSeries(1, 0, coeffs)


@lru_cache(maxsize=64)
def euler_product(prec: int) -> PuiseuxSeries:
    """prod_{n>=1} (1 - q^n) via the pentagonal number expansion."""
    coeffs = [0] * prec
    k = 0
    while True:
        hit = False
        for kk in (k, -k) if k else (0,):
            g = kk * (3 * kk - 1) // 2
            if g < prec:
                coeffs[g] += (-1) ** (kk % 2)
                hit = True
        if not hit:
            break
        k += 1
    return PuiseuxSeries(1, 0, coeffs)


@lru_cache(maxsize=64)
def delta(prec: int) -> PuiseuxSeries:
    """The discriminant cusp form q prod (1-q^n)^24."""
    return PuiseuxSeries.q_power(1, prec) * (euler_product(prec) ** 24)


@lru_cache(maxsize=64)
def j_function(prec: int) -> PuiseuxSeries:
    """Classical j = E4^3 / Delta = q^-1 + 744 + 196884 q + ..."""
    p = prec + 2
    return (eisenstein(4, p) ** 3 / delta(p)).truncate(prec - 1)


def j_shifted(prec: int) -> PuiseuxSeries:
    """j - 720 = q^-1 + 24 + 196884 q + ...; the normalization whose Hecke
    images have constant term 24 sigma_1(n)."""
    return j_function(prec) - 720


def standard_form(name: str, prec: int) -> PuiseuxSeries:
    if name == "delta":
        return delta(prec)
    if name == "j":
        return j_function(prec)
    if name == "j_shifted":
        return j_shifted(prec)
    raise ValueError(f"unknown standard form {name!r}")


def _weight0_tn(f: PuiseuxSeries, n: int) -> PuiseuxSeries:
    # weight-0 Hecke image on integral q-expansions:
    # coefficient of q^M becomes sum_{d | (M, n)} (n/d) c(M n / d^2),
    # with d running over all divisors of n when M = 0
    assert f.D == 1
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    lo = n * f.order if f.order < 0 else 0
    hi = -(-f.cutoff // n)  # ceil: c(Mn) must be known
    out = []
    for M in range(lo, hi):
        s = 0
        for d in divisors:
            if M % d == 0:
                idx = M * n // (d * d)
                s += (n // d) * f.coefficient(idx)
        out.append(s)
    return PuiseuxSeries(1, lo, out)


@lru_cache(maxsize=128)
def jn(n: int, prec: int) -> PuiseuxSeries:
    """j_n = (j - 720)|T(n) at weight 0: q^-n + 24 sigma_1(n) + O(q)."""
    if n < 1:
        raise ValueError("n must be positive")
    base = j_shifted(n * (prec + n) + 1)
    return _weight0_tn(base, n).truncate(prec - n)


# ---------------------------------------------------------------------------
# eta quotients
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EtaQuotientSpec:
    """prod_{m | N} eta(m tau)^{r_m}; exponents as a sorted tuple of pairs."""
    level: int
    exponents: tuple[tuple[int, int], ...]

    @staticmethod
    def make(level: int, exponents: dict[int, int]) -> "EtaQuotientSpec":
        for m in exponents:
            if level % m != 0:
                raise ValueError(f"eta argument {m} does not divide level {level}")
        items = tuple(sorted((m, r) for m, r in exponents.items() if r != 0))
        return EtaQuotientSpec(level, items)

    @property
    def weight(self) -> Fraction:
        return Fraction(sum(r for _, r in self.exponents), 2)


def eta_quotient_qexp(spec: EtaQuotientSpec, prec: int) -> PuiseuxSeries:
    """Exact expansion of prod eta(m tau)^{r_m} with eta(m tau) =
    q^{m/24} prod (1 - q^{mn})."""
    lead = sum(Fraction(m * r, 24) for m, r in spec.exponents)
    # each factor is a unit times q^(m r/24); precision prec from the lead term
    out = PuiseuxSeries.q_power(lead, prec)
    for m, r in spec.exponents:
        unit = euler_product(prec).rescale_exponents(m).truncate(prec)
        out = out * unit ** r
    return out


def ligozat_order(spec: EtaQuotientSpec, N: int, c: int) -> Fraction:
    """Order of the eta quotient at the cusp a/c of X_0(N), in the local
    variable q_h of that cusp (the standard eta-quotient cusp-order formula).

    The cusp at infinity is c = N; the order there equals the leading
    q-exponent of the expansion.
    """
    if N % spec.level != 0:
        raise ValueError("eta quotient level must divide N")
    total = Fraction(0)
    for m, r in spec.exponents:
        g = gcd(c, m)
        total += Fraction(g * g * r, gcd(c, N // c) * c * m)
    return Fraction(N, 24) * total


# ---------------------------------------------------------------------------
# symbolic form expressions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Eisenstein:
    k: int

    @property
    def weight(self) -> int:
        return self.k

    @property
    def level(self) -> int:
        return 1

    def qexp(self, prec: int) -> PuiseuxSeries:
        return eisenstein(self.k, prec)


@dataclass(frozen=True)
class DeltaShift:
    """Delta(m tau)."""
    m: int = 1

    @property
    def weight(self) -> int:
        return 12

    @property
    def level(self) -> int:
        return self.m

    def qexp(self, prec: int) -> PuiseuxSeries:
        return delta(prec).rescale_exponents(self.m).truncate(self.m + prec)


@dataclass(frozen=True)
class JMinus:
    """j(tau) - c, with an optional attached fiber point (A, B, C) for the
    zero of j - c when c is not one of the special values 0, 1728."""
    c: Fraction
    fiber: tuple[int, int, int] | None = None

    @property
    def weight(self) -> int:
        return 0

    @property
    def level(self) -> int:
        return 1

    def qexp(self, prec: int) -> PuiseuxSeries:
        return j_function(prec + 1) - self.c


@dataclass(frozen=True)
class EtaQuotient:
    spec: EtaQuotientSpec

    @property
    def weight(self):
        w = self.spec.weight
        return int(w) if w.denominator == 1 else w

    @property
    def level(self) -> int:
        return self.spec.level

    def qexp(self, prec: int) -> PuiseuxSeries:
        return eta_quotient_qexp(self.spec, prec)


@dataclass(frozen=True)
class OpaqueSeries:
    """A bare q-expansion carrying its weight and level; no divisor data."""
    series: PuiseuxSeries
    weight: int
    level: int

    def qexp(self, prec: int) -> PuiseuxSeries:
        return self.series


Atom = Eisenstein | DeltaShift | JMinus | EtaQuotient | OpaqueSeries


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True)
class FormExpression:
    """A product of classical atoms with integer exponents, optionally plus
    a rational constant (the constant is only meaningful at weight 0, where
    it lets Hauptmodul shifts like j_{2,1} - 512 stay symbolic)."""
    atoms: tuple[tuple[Atom, int], ...]
    shift: Fraction = Fraction(0)

    @staticmethod
    def of(*atoms, shift=0) -> "FormExpression":
        """Build from atoms or (atom, exponent) pairs."""
        pairs = []
        for a in atoms:
            if isinstance(a, tuple):
                pairs.append((a[0], int(a[1])))
            else:
                pairs.append((a, 1))
        expr = FormExpression(tuple(pairs), Fraction(shift))
        if expr.shift != 0 and expr.weight != 0:
            raise ValueError("additive constant only makes sense at weight 0")
        return expr

    @property
    def weight(self) -> int:
        w = sum(a.weight * e for a, e in self.atoms)
        if isinstance(w, Fraction):
            if w.denominator != 1:
                raise ValueError("non-integral total weight")
            w = int(w)
        return w

    @property
    def level(self) -> int:
        lev = 1
        for a, _ in self.atoms:
            lev = _lcm(lev, a.level)
        return lev

    def qexp(self, prec: int) -> PuiseuxSeries:
        out = PuiseuxSeries.one(prec)
        for a, e in self.atoms:
            out = out * a.qexp(prec) ** e
        if self.shift:
            out = out + self.shift
        return out

    def __mul__(self, other: "FormExpression") -> "FormExpression":
        if self.shift or other.shift:
            raise ValueError("cannot multiply shifted expressions symbolically")
        return FormExpression(self.atoms + other.atoms)

    def to_json(self) -> dict:
        out = {"atoms": [_atom_json(a, e) for a, e in self.atoms],
               "weight": self.weight, "level": self.level}
        if self.shift:
            out["shift"] = f"{self.shift.numerator}/{self.shift.denominator}" \
                if self.shift.denominator != 1 else str(self.shift.numerator)
        return out


def _atom_json(a: Atom, e: int) -> dict:
    if isinstance(a, Eisenstein):
        return {"type": "eisenstein", "params": {"k": a.k}, "exp": e}
    if isinstance(a, DeltaShift):
        return {"type": "delta_shift", "params": {"m": a.m}, "exp": e}
    if isinstance(a, JMinus):
        return {"type": "j_minus", "params": {"c": str(a.c)}, "exp": e}
    if isinstance(a, EtaQuotient):
        return {"type": "eta_quotient",
                "params": {"level": a.spec.level,
                           "exponents": {str(m): r for m, r in a.spec.exponents}},
                "exp": e}
    return {"type": "opaque", "params": {"weight": a.weight, "level": a.level,
                                         "series": a.series.to_json()}, "exp": e}


def _atom_unjson(data: dict) -> tuple[Atom, int]:
    kind, p, e = data["type"], data["params"], data["exp"]
    if kind == "eisenstein":
        return Eisenstein(p["k"]), e
    if kind == "delta_shift":
        return DeltaShift(p["m"]), e
    if kind == "j_minus":
        return JMinus(Fraction(p["c"])), e
    if kind == "eta_quotient":
        spec = EtaQuotientSpec.make(p["level"],
                                    {int(m): r for m, r in p["exponents"].items()})
        return EtaQuotient(spec), e
    if kind == "opaque":
        return OpaqueSeries(PuiseuxSeries.from_json(p["series"]),
                            p["weight"], p["level"]), e
    raise ValueError(f"unknown atom type {kind!r}")


def expression_from_json(data: dict) -> "FormExpression":
    atoms = tuple(_atom_unjson(a) for a in data["atoms"])
    shift = Fraction(data.get("shift", 0))
    expr = FormExpression(atoms, shift)
    assert expr.weight == data["weight"] and expr.level == data["level"]
    return expr


def expression_qexp(expr: FormExpression, prec: int) -> PuiseuxSeries:
    return expr.qexp(prec)


def expression_divisor(expr: FormExpression):
    """Divisor of the expression on X_0(level); see heckediv.curve."""
    from .curve import divisor_of_form
    return divisor_of_form(expr, expr.level)


# ---------------------------------------------------------------------------
# Hauptmoduln of the genus-zero levels used by the harmonic slices
# ---------------------------------------------------------------------------

GENUS_ZERO_ETA_LEVELS = (2, 3, 4, 5)


def hauptmodul_spec(N: int) -> EtaQuotientSpec:
    """(eta(tau)/eta(N tau))^(24/(N-1)) = q^-1 + O(1) for N in {2,3,4,5}."""
    if N not in GENUS_ZERO_ETA_LEVELS:
        raise ValueError(f"no eta Hauptmodul registered for level {N}")
    a = 24 // (N - 1)
    return EtaQuotientSpec.make(N, {1: a, N: -a})


def hauptmodul_qexp(N: int, prec: int) -> PuiseuxSeries:
    if N == 1:
        return j_shifted(prec)
    return eta_quotient_qexp(hauptmodul_spec(N), prec)


# known CM values of the eta Hauptmoduln: (level, value) -> quadratic form of
# the point where the Hauptmodul takes that value
HAUPTMODUL_CM_VALUES = {
    (2, Fraction(512)): (1, 0, 1),  # j_{2,1}(i) = 512
}


# registry used by the CLI
def form_by_name(name: str, prec: int) -> PuiseuxSeries:
    key = name.strip()
    if key in ("E4", "E6", "E8", "E10", "E12", "E14", "E16"):
        return eisenstein(int(key[1:]), prec)
    if key == "Delta":
        return delta(prec)
    if key == "j":
        return j_function(prec)
    if key == "j_shifted":
        return j_shifted(prec)
    if key.startswith("jminus:"):
        return j_function(prec + 1) - Fraction(key.split(":", 1)[1])
    if key.startswith("eta:"):
        _, level, body = key.split(":", 2)
        exps = {}
        for part in body.split(","):
            m, r = part.split("=")
            exps[int(m)] = int(r)
        return eta_quotient_qexp(EtaQuotientSpec.make(int(level), exps), prec)
    raise ValueError(f"unknown form name {name!r}")


def expression_by_name(name: str) -> FormExpression:
    key = name.strip()
    if key in ("E4", "E6", "E8", "E10", "E12", "E14", "E16"):
        return FormExpression.of(Eisenstein(int(key[1:])))
    if key == "Delta":
        return FormExpression.of(DeltaShift(1))
    if key == "j_shifted":
        return FormExpression.of(JMinus(Fraction(720)))
    if key == "j":
        return FormExpression.of(JMinus(Fraction(0)))
    if key.startswith("jminus:"):
        return FormExpression.of(JMinus(Fraction(key.split(":", 1)[1])))
    if key.startswith("eta:"):
        _, level, body = key.split(":", 2)
        exps = {}
        for part in body.split(","):
            m, r = part.split("=")
            exps[int(m)] = int(r)
        return FormExpression.of(EtaQuotient(EtaQuotientSpec.make(int(level), exps)))
    raise ValueError(f"unknown form name {name!r}")
