"""Hecke operators on q-expansions: the additive weight-k representation
and the multiplicative representation on the group of meromorphic forms.

Two independent routes compute the additive operator:

* ``hecke_additive_formula`` applies the coefficient formula
  c(m) -> n^(1-k/2) sum_{0<d|(m,n)} d^(k-1) c(mn/d^2) directly
  (d runs over all divisors of n when m = 0);
* ``hecke_additive_cosets`` slashes f over the upper-triangular coset
  representatives and projects the result back to an integral series.

They agree on their common domain, which the tests exercise.

The multiplicative operator multiplies the translates f((a tau + b)/d)
over the same representatives *without* the det^(k/2)/d^k factors.  Those
factors are constant for upper-triangular matrices, so the two possible
normalizations differ by a fixed rational scalar; the bare product is the
one for which E4 maps to E12 - (36882000/691) Delta with constant term 1,
and it makes every scalar coset T(q,q) act as the exact identity.  All
products are computed factor-by-factor with windows trimmed to the
requested output precision, then certified integral and rational.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .algebra import AlgebraElement, double_coset_reps, left_coset_reps
from .errors import (NonUnitLeading, PrecisionExhausted, UnsupportedParameter,
                     UnsupportedWeightParity)
from .forms import FormExpression, OpaqueSeries
from .series import PuiseuxSeries


def sigma1(n: int) -> int:
    return sum(d for d in range(1, n + 1) if n % d == 0)


# ---------------------------------------------------------------------------
# additive operator
# ---------------------------------------------------------------------------

def hecke_additive_formula(f: PuiseuxSeries, k: int, n: int,
                           normalization: str = "normalized") -> PuiseuxSeries:
    """The coefficient formula for f|_k T(n) on integral expansions.

    `normalization`: "normalized" keeps the n^(1-k/2) prefactor (the
    convention matching the slash-sum route and the weight-0 divisor-sum
    identities); "classical" drops it, giving the plain sum of
    d^(k-1) c(mn/d^2) that most coefficient tables use.
    """
    if k % 2 != 0:
        raise UnsupportedWeightParity(f"odd weight {k}")
    if f.D != 1:
        raise UnsupportedParameter("coefficient formula needs an integral expansion")
    if f.cutoff <= 0:
        raise PrecisionExhausted("input knows no coefficients at q^0 or beyond")
    if normalization not in ("normalized", "classical"):
        raise ValueError(f"unknown normalization {normalization!r}")
    factor = Fraction(n) ** (1 - k // 2) if normalization == "normalized" else Fraction(1)
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    lo = n * f.order if f.order < 0 else -(-f.order // n)
    hi = -(-f.cutoff // n)  # first m with c(mn) unknown
    out = []
    for m in range(lo, hi):
        g = gcd(abs(m), n)  # gcd(0, n) = n handles the m = 0 convention
        s = Fraction(0)
        for d in divisors:
            if g % d == 0:
                s += Fraction(d) ** (k - 1) * f.coefficient(m * n // (d * d))
        out.append(factor * s)
    return PuiseuxSeries(1, lo, out)


def _slash_upper(f: PuiseuxSeries, rep, k: int, bare: bool) -> PuiseuxSeries:
    """f|_k (a b; 0 d), i.e. a twist, an exponent rescale, and (unless bare)
    the constant automorphy factor det^(k/2) d^(-k)."""
    a, b, c, d = rep
    assert c == 0 and a > 0 and d > 0
    g = f.twist(b, d * f.D).rescale_exponents(Fraction(a, d))
    if not bare:
        g = g * Fraction((a * d) ** (k // 2), d ** k)
    return g


def hecke_additive_cosets(f: PuiseuxSeries, k: int, n: int, N: int) -> PuiseuxSeries:
    """f|_k T(n) as a sum of slashes over coset representatives of level N.

    Restricted to parameter sets where all representatives are upper
    triangular: gcd(n, N) = 1, or n = p | N prime.  The summed series is
    certified to be an integral rational expansion.
    """
    if k % 2 != 0:
        raise UnsupportedWeightParity(f"odd weight {k}")
    reps = left_coset_reps(N, n)
    total = None
    for rep in reps:
        term = _slash_upper(f, rep, k, bare=False)
        total = term if total is None else total + term
    return total.integral_projection()


# ---------------------------------------------------------------------------
# multiplicative operator
# ---------------------------------------------------------------------------

def expression_order(expr: FormExpression) -> Fraction:
    """Leading q-exponent of the expression, computed symbolically."""
    order = Fraction(0)
    for atom, e in expr.atoms:
        order += e * _atom_order(atom)
    if expr.shift and order > 0:
        order = Fraction(0)
    return order


def _atom_order(atom) -> Fraction:
    from . import forms
    if isinstance(atom, forms.Eisenstein):
        return Fraction(0)
    if isinstance(atom, forms.DeltaShift):
        return Fraction(atom.m)
    if isinstance(atom, forms.JMinus):
        return Fraction(-1)
    if isinstance(atom, forms.EtaQuotient):
        return sum(Fraction(m * r, 24) for m, r in atom.spec.exponents)
    if isinstance(atom, forms.OpaqueSeries):
        return atom.series.leading_exponent()
    raise TypeError(f"unknown atom {atom!r}")


def _slash_product(f: PuiseuxSeries, reps, prec: int) -> PuiseuxSeries:
    """Product of bare slash translates, trimmed so the result keeps `prec`
    coefficients past its leading exponent."""
    factors = [_slash_upper(f, rep, 0, bare=True) for rep in reps]
    orders = [g.leading_exponent() for g in factors]
    final_cut = sum(orders) + prec
    out = None
    tail = sum(orders)
    for g, o in zip(factors, orders):
        tail -= o
        out = g if out is None else out * g
        out = out.truncate(final_cut - tail)
    return out


def hecke_multiplicative(f: FormExpression, n: int, N: int,
                         prec: int = 30) -> FormExpression:
    """f|_* T(n): the product of slash translates over the determinant-n
    coset representatives, returned as an opaque expansion of certified
    weight k * |I| at level N with `prec` known coefficients."""
    if not (gcd(n, N) == 1 or (N % n == 0 and _is_prime(n))):
        raise UnsupportedParameter(
            f"multiplicative T({n}) at level {N} needs gcd(n, N) = 1 or n = p | N")
    reps = left_coset_reps(N, n)
    k = f.weight
    order = expression_order(f)
    guard = 8
    budget = len(reps) * prec + int(abs(order) * n) + guard
    series = f.qexp(budget)
    if series.is_zero():
        raise NonUnitLeading("multiplicative Hecke image of the zero series")
    image = _slash_product(series, reps, prec).integral_projection()
    return FormExpression.of(OpaqueSeries(image, k * len(reps), N))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


# ---------------------------------------------------------------------------
# action of general algebra elements
# ---------------------------------------------------------------------------

def apply_element(f: FormExpression, u: AlgebraElement, mode: str,
                  prec: int = 30) -> FormExpression:
    """Apply a formal sum of double cosets: additively (sum of slash-sums)
    or multiplicatively (product over terms with multiplicity exponents)."""
    if mode not in ("additive", "multiplicative"):
        raise ValueError(f"unknown mode {mode!r}")
    k = f.weight
    N = u.N
    if mode == "additive":
        budget = max((a * d for (a, d), _ in u.terms), default=1) * prec + 8
        series = f.qexp(budget)
        total = None
        for (a, d), mult in u.terms:
            reps = double_coset_reps(a, d, N)
            for rep in reps:
                term = _slash_upper(series, rep, k, bare=False)
                term = term if mult == 1 else term * mult
                total = term if total is None else total + term
        return FormExpression.of(OpaqueSeries(total.integral_projection(), k, N))

    order = expression_order(f)
    out = None
    weight = 0
    for (a, d), mult in u.terms:
        reps = double_coset_reps(a, d, N)
        weight += k * len(reps) * mult
        budget = len(reps) * (prec + 4) + int(abs(order) * a * d) + 8
        series = f.qexp(budget)
        piece = _slash_product(series, reps, prec + 4).integral_projection()
        piece = piece ** mult
        out = piece if out is None else out * piece
    return FormExpression.of(OpaqueSeries(out, weight, N))
