"""Truncated Laurent/Puiseux series with exact coefficients.

A series lives on the exponent grid (1/D)*Z.  It stores the numerators of
its known window: ``coeffs[i]`` is the coefficient of ``q**((order+i)/D)``,
and everything at exponents ``>= cutoff/D`` (``cutoff = order + len(coeffs)``)
is unknown.  Two facts are part of the representation contract:

* exponents below ``order/D`` and exponents off the grid carry coefficient
  exactly zero (a series *lives* on its grid; lifting to a finer grid adds
  known zeros, it does not lose information);
* a nonzero series has a nonzero leading coefficient.  The zero-to-precision
  series is stored with an empty coefficient tuple and ``order == cutoff``
  marking where knowledge ends.

Coefficients are ``int`` (preferred), ``fractions.Fraction`` or
:class:`~heckediv.cyclotomic.Cyclo`.  Arithmetic never extends a knowledge
window, only shrinks it, following the conservative propagation rules:
products know ``min(cutoff_a + order_b, cutoff_b + order_a)`` grid units.

All values are immutable; operations are pure functions, so series may be
shared freely between threads.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import gcd

from .cyclotomic import Cyclo, _as_rational, coeff_is_zero, coeff_rational
from .errors import NonUnitLeading, NotIntegralSeries, PrecisionExhausted


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _coeff_inv(x):
    if isinstance(x, Cyclo):
        return x.inv()
    if x == 0:
        raise ZeroDivisionError("coefficient not invertible")
    return _as_rational(Fraction(1, 1) / x)


class PuiseuxSeries:
    __slots__ = ("D", "order", "coeffs")

    def __init__(self, D: int, order: int, coeffs):
        coeffs = list(coeffs)
        # strip leading known zeros so the leading coefficient is nonzero
        i = 0
        while i < len(coeffs) and coeff_is_zero(coeffs[i]):
            i += 1
        order += i
        coeffs = [_as_rational(c) if not isinstance(c, Cyclo) else c for c in coeffs[i:]]
        if not coeffs:
            D, order = self._reduced_zero(D, order)
        else:
            D, order, coeffs = self._reduced_grid(D, order, coeffs)
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, *a):
        raise AttributeError("PuiseuxSeries is immutable")

    @staticmethod
    def _reduced_zero(D, cutoff):
        # zero series: only the knowledge boundary matters
        if D == 1:
            return 1, cutoff
        return 1, _ceil_div(cutoff, D)

    @staticmethod
    def _reduced_grid(D, order, coeffs):
        g = D
        for i, c in enumerate(coeffs):
            if not coeff_is_zero(c):
                g = gcd(g, order + i)
                if g == 1:
                    return D, order, coeffs
        cutoff = order + len(coeffs)
        new_order = _ceil_div(order, g)
        new_cutoff = _ceil_div(cutoff, g)
        reduced = [0] * (new_cutoff - new_order)
        for i, c in enumerate(coeffs):
            if not coeff_is_zero(c):
                reduced[(order + i) // g - new_order] = c
        return D // g, new_order, reduced

    # -- basic protocol ------------------------------------------------

    @property
    def precision(self) -> int:
        """Number of known coefficients at and above `order`."""
        return len(self.coeffs)

    @property
    def cutoff(self) -> int:
        """First unknown exponent numerator (grid units)."""
        return self.order + len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self):
        if not self.coeffs:
            raise NonUnitLeading("zero series has no leading coefficient")
        return self.coeffs[0]

    def leading_exponent(self) -> Fraction:
        if not self.coeffs:
            raise NonUnitLeading("zero series has no leading exponent")
        return Fraction(self.order, self.D)

    def coefficient(self, e):
        """Exact coefficient of q**e, or raise PrecisionExhausted if e is
        beyond the known window."""
        e = Fraction(e)
        if e >= Fraction(self.cutoff, self.D):
            raise PrecisionExhausted(f"coefficient of q^{e} is beyond precision")
        num = e * self.D
        if num.denominator != 1:
            return 0
        i = int(num) - self.order
        return self.coeffs[i] if i >= 0 else 0

    def __eq__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return (self.D, self.order, self.coeffs) == (other.D, other.order, other.coeffs)

    def __hash__(self):
        return hash((self.D, self.order, self.coeffs))

    def __repr__(self):
        def expo(n):
            if n % self.D == 0:
                return str(n // self.D)
            return f"{n}/{self.D}"

        parts = []
        for i, c in enumerate(self.coeffs):
            if coeff_is_zero(c):
                continue
            n = self.order + i
            if n == 0:
                parts.append(f"{c}")
            else:
                parts.append(f"({c})*q^{expo(n)}" if not isinstance(c, int) or c != 1
                             else f"q^{expo(n)}")
            if len(parts) > 8:
                parts.append("...")
                break
        body = " + ".join(parts) if parts else "0"
        return f"<{body} + O(q^{expo(self.cutoff)})>"

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_terms(cls, D, order, coeffs):
        return cls(D, order, coeffs)

    @classmethod
    def from_dict(cls, terms: dict, cutoff) -> "PuiseuxSeries":
        """Build a series from {exponent: coefficient} with exponents and
        cutoff given as Fractions or ints (exponent values, not numerators)."""
        terms = {Fraction(e): c for e, c in terms.items() if not coeff_is_zero(c)}
        cutoff = Fraction(cutoff)
        D = cutoff.denominator
        for e in terms:
            D = D * e.denominator // gcd(D, e.denominator)
        cut = int(cutoff * D)
        if not terms:
            return cls(D, cut, [])
        lo = min(int(e * D) for e in terms)
        coeffs = [0] * (cut - lo)
        for e, c in terms.items():
            i = int(e * D) - lo
            if i < len(coeffs):
                coeffs[i] = c
        return cls(D, lo, coeffs)

    @classmethod
    def one(cls, prec: int) -> "PuiseuxSeries":
        return cls(1, 0, [1] + [0] * (prec - 1))

    @classmethod
    def constant(cls, c, prec: int) -> "PuiseuxSeries":
        return cls(1, 0, [c] + [0] * (prec - 1))

    @classmethod
    def q_power(cls, e, prec: int) -> "PuiseuxSeries":
        """q**e known for `prec` grid coefficients starting at e."""
        e = Fraction(e)
        return cls(e.denominator, e.numerator, [1] + [0] * (prec - 1))

    # -- grid handling -----------------------------------------------------

    @classmethod
    def _raw(cls, D: int, order: int, coeffs: tuple) -> "PuiseuxSeries":
        # bypass normalization; caller guarantees the invariants
        obj = object.__new__(cls)
        object.__setattr__(obj, "D", D)
        object.__setattr__(obj, "order", order)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    def lift_grid(self, newD: int) -> "PuiseuxSeries":
        """Same series on a finer grid (newD a multiple of D); the in-between
        coefficients are known zeros.  Representation-level: the result is
        deliberately not re-reduced to the minimal grid."""
        if newD == self.D:
            return self
        assert newD % self.D == 0
        s = newD // self.D
        if not self.coeffs:
            return PuiseuxSeries._raw(newD, self.order * s, ())
        coeffs = [0] * (len(self.coeffs) * s)
        for i, c in enumerate(self.coeffs):
            coeffs[i * s] = c
        return PuiseuxSeries._raw(newD, self.order * s, tuple(coeffs))

    def _unify(self, other):
        D = self.D * other.D // gcd(self.D, other.D)
        return self.lift_grid(D), other.lift_grid(D)

    def truncate(self, cutoff_exponent) -> "PuiseuxSeries":
        """Forget coefficients at exponents >= cutoff_exponent."""
        num = Fraction(cutoff_exponent) * self.D
        new_cut = _ceil_div(num.numerator, num.denominator)
        if new_cut >= self.cutoff:
            return self
        if new_cut <= self.order:
            if self.coeffs:
                raise PrecisionExhausted("truncation leaves no known coefficient")
            return PuiseuxSeries(self.D, min(new_cut, self.order), [])
        return PuiseuxSeries(self.D, self.order, self.coeffs[: new_cut - self.order])

    # -- ring operations ---------------------------------------------------

    def __neg__(self):
        return PuiseuxSeries(self.D, self.order, [-c for c in self.coeffs])

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            # exact scalars know every coefficient; cover our window
            if coeff_is_zero(other):
                return self
            cut = _ceil_div(self.cutoff, self.D)
            if cut <= 0:
                return self  # the constant term lies beyond our knowledge
            return self + PuiseuxSeries(1, 0, [other] + [0] * (cut - 1))
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        a, b = self._unify(other)
        lo = min(a.order, b.order)
        hi = min(a.cutoff, b.cutoff)
        out = [0] * (hi - lo)
        for i, c in enumerate(a.coeffs):
            n = a.order + i
            if lo <= n < hi:
                out[n - lo] = c
        for i, c in enumerate(b.coeffs):
            n = b.order + i
            if lo <= n < hi:
                out[n - lo] = out[n - lo] + c
        return PuiseuxSeries(a.D, lo, out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            if coeff_is_zero(other):
                return PuiseuxSeries(self.D, self.cutoff, [])
            return PuiseuxSeries(self.D, self.order, [c * other for c in self.coeffs])
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        a, b = self._unify(other)
        lo = a.order + b.order
        hi = min(a.cutoff + b.order, b.cutoff + a.order)
        if a.is_zero() or b.is_zero():
            return PuiseuxSeries(a.D, hi, [])
        out = [0] * (hi - lo)
        width = hi - lo
        for i, x in enumerate(a.coeffs):
            if coeff_is_zero(x):
                continue
            jmax = min(len(b.coeffs), width - i)
            for j in range(jmax):
                y = b.coeffs[j]
                if not coeff_is_zero(y):
                    out[i + j] = out[i + j] + x * y
        return PuiseuxSeries(a.D, lo, out)

    __rmul__ = __mul__

    def reciprocal(self) -> "PuiseuxSeries":
        if not self.coeffs:
            raise NonUnitLeading("cannot invert a series with no nonzero known term")
        a = self.coeffs
        inv0 = _coeff_inv(a[0])
        out = [inv0] + [0] * (len(a) - 1)
        for k in range(1, len(a)):
            s = 0
            for i in range(1, k + 1):
                if i < len(a) and not coeff_is_zero(a[i]) and not coeff_is_zero(out[k - i]):
                    s = s + a[i] * out[k - i]
            out[k] = -inv0 * s if not coeff_is_zero(s) else 0
        return PuiseuxSeries(self.D, -self.order, out)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Cyclo)):
            return self * _coeff_inv(other)
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.reciprocal() ** (-k)
        if k == 0:
            return PuiseuxSeries.one(max(self.precision, 1))
        base, out = self, None
        while k:
            if k & 1:
                out = base if out is None else out * base
            k >>= 1
            if k:
                base = base * base
        return out

    # -- the operators the Hecke machinery needs ---------------------------

    def theta(self) -> "PuiseuxSeries":
        """Apply (1/2 pi i) d/dtau: the q^(m/D) coefficient is scaled by m/D."""
        out = []
        for i, c in enumerate(self.coeffs):
            n = self.order + i
            if coeff_is_zero(c) or n == 0:
                out.append(0)
            elif n % self.D == 0:
                out.append(c * (n // self.D))
            else:
                out.append(c * Fraction(n, self.D))
        return PuiseuxSeries(self.D, self.order, out)

    def log_derivative(self) -> "PuiseuxSeries":
        """Theta(f)/f.  For f = c q^h (1 + O(q)) this starts at the constant h."""
        if not self.coeffs:
            raise NonUnitLeading("log-derivative of the zero series")
        return self.theta() / self

    def rescale_exponents(self, a) -> "PuiseuxSeries":
        """Substitute q -> q**a for a positive rational a (exponent map e -> a*e)."""
        a = Fraction(a)
        if a <= 0:
            raise ValueError("exponent rescale factor must be positive")
        P, Q = a.numerator, a.denominator
        newD = self.D * Q
        if not self.coeffs:
            return PuiseuxSeries(newD, self.order * P, [])
        out = [0] * ((len(self.coeffs) - 1) * P + 1 + (P - 1))
        for i, c in enumerate(self.coeffs):
            out[i * P] = c
        return PuiseuxSeries(newD, self.order * P, out)

    def twist(self, j: int, n: int) -> "PuiseuxSeries":
        """Multiply the coefficient at grid numerator m by zeta_n**(j*m)."""
        if j % n == 0:
            return self
        roots = [Cyclo.zeta(n, r) for r in range(n)]
        out = []
        for i, c in enumerate(self.coeffs):
            if coeff_is_zero(c):
                out.append(0)
            else:
                z = roots[(j * (self.order + i)) % n]
                out.append(c if z == 1 else z * c)
        return PuiseuxSeries(self.D, self.order, out)

    def integral_projection(self) -> "PuiseuxSeries":
        """Certify the series lies in Q[[q]][q^-1] and return it on grid D=1.

        Raises NotIntegralSeries if a non-integral exponent carries a nonzero
        coefficient or a coefficient has irrational cyclotomic content.
        """
        out = {}
        for i, c in enumerate(self.coeffs):
            if coeff_is_zero(c):
                continue
            n = self.order + i
            if n % self.D != 0:
                raise NotIntegralSeries(
                    f"nonzero coefficient at exponent {n}/{self.D}")
            r = coeff_rational(c)
            if r is None:
                raise NotIntegralSeries(
                    f"irrational coefficient {c!r} at exponent {n // self.D}")
            out[n // self.D] = r
        new_cut = _ceil_div(self.cutoff, self.D)
        if not out:
            return PuiseuxSeries(1, new_cut, [])
        lo = min(out)
        coeffs = [0] * (new_cut - lo)
        for e, c in out.items():
            coeffs[e - lo] = c
        return PuiseuxSeries(1, lo, coeffs)

    # -- comparisons for tests ----------------------------------------------

    def agrees_with(self, other: "PuiseuxSeries", through=None) -> bool:
        """True when both series have the same coefficients on the overlap of
        their knowledge windows (optionally only up to exponent `through`,
        inclusive)."""
        a, b = self._unify(other)
        hi = min(a.cutoff, b.cutoff)
        if through is not None:
            t = Fraction(through) * a.D
            hi = min(hi, math.floor(t) + 1)
        lo = min(a.order, b.order)
        for n in range(lo, hi):
            ca = a.coeffs[n - a.order] if 0 <= n - a.order < len(a.coeffs) else 0
            cb = b.coeffs[n - b.order] if 0 <= n - b.order < len(b.coeffs) else 0
            if not (ca == cb):
                return False
        return True

    def equal_through(self, other: "PuiseuxSeries", through) -> bool:
        """Exact coefficient equality for every exponent <= `through`.

        Unlike :meth:`agrees_with`, this demands that both windows actually
        cover the range, raising PrecisionExhausted otherwise."""
        a, b = self._unify(other)
        hi = math.floor(Fraction(through) * a.D) + 1
        if a.cutoff < hi or b.cutoff < hi:
            raise PrecisionExhausted(
                f"comparison through q^{through} needs more precision "
                f"(cutoffs {Fraction(a.cutoff, a.D)}, {Fraction(b.cutoff, b.D)})")
        lo = min(a.order, b.order)
        for n in range(lo, hi):
            ca = a.coeffs[n - a.order] if 0 <= n - a.order < len(a.coeffs) else 0
            cb = b.coeffs[n - b.order] if 0 <= n - b.order < len(b.coeffs) else 0
            if not (ca == cb):
                return False
        return True

    # -- JSON wire format -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "D": self.D,
            "order": self.order,
            "precision": self.precision,
            "coeffs": [_coeff_json(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PuiseuxSeries":
        coeffs = [_coeff_unjson(c) for c in data["coeffs"]]
        assert len(coeffs) == data["precision"]
        return cls(data["D"], data["order"], coeffs)


def _rat_str(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _rat_unstr(s: str):
    return _as_rational(Fraction(s))


def _coeff_json(c):
    if isinstance(c, Cyclo):
        return {"zeta_order": c.order, "coeffs": [_rat_str(x) for x in c.coords]}
    return _rat_str(c)


def _coeff_unjson(c):
    if isinstance(c, dict):
        return Cyclo(c["zeta_order"], [_rat_unstr(x) for x in c["coeffs"]])
    return _rat_unstr(c)


def series_arith(a: PuiseuxSeries, b: PuiseuxSeries, op: str, k: int | None = None) -> PuiseuxSeries:
    """Named entry point for the four ring operations and integer powers."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "pow":
        if k is None:
            raise ValueError("pow needs an integer exponent")
        return a ** k
    raise ValueError(f"unknown series operation {op!r}")


def theta(f: PuiseuxSeries) -> PuiseuxSeries:
    return f.theta()


def log_derivative(f: PuiseuxSeries) -> PuiseuxSeries:
    return f.log_derivative()


def rescale_exponents(f: PuiseuxSeries, a) -> PuiseuxSeries:
    return f.rescale_exponents(a)


def twist(f: PuiseuxSeries, j: int, n: int) -> PuiseuxSeries:
    return f.twist(j, n)


def integral_projection(f: PuiseuxSeries) -> PuiseuxSeries:
    return f.integral_projection()
