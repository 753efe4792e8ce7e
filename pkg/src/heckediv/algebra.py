"""The abstract Hecke algebra R_0(N).

Double cosets Gamma_0(N) alpha Gamma_0(N) for alpha in Delta_N (positive
determinant, upper-left entry coprime to N, lower-left divisible by N) are
labelled by their elementary divisors (a, d) with a | d, ad = det, and
(a, N) = 1; matrices are plain 4-tuples (a, b, c, d).

Multiplication enumerates products of left-coset representatives, groups
them by left coset (via an exact canonical key: Hermite form of the row
lattice plus the P^1(Z/N) class of the unimodular part), labels each group
by elementary divisors and counts multiplicities.  The count per left coset
inside one double coset is asserted constant, which is exactly the
well-definedness of the structure constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import DeterminantMismatch, NotInDeltaN, UnsupportedParameter

Mat = tuple[int, int, int, int]


def mat_mul(x: Mat, y: Mat) -> Mat:
    a, b, c, d = x
    e, f, g, h = y
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def mat_det(x: Mat) -> int:
    return x[0] * x[3] - x[1] * x[2]


def mat_content(x: Mat) -> int:
    return gcd(gcd(abs(x[0]), abs(x[1])), gcd(abs(x[2]), abs(x[3])))


def in_delta_n(x: Mat, N: int) -> bool:
    return mat_det(x) > 0 and gcd(x[0], N) == 1 and x[2] % N == 0


# ---------------------------------------------------------------------------
# canonical keys for cosets
# ---------------------------------------------------------------------------

def hnf2(x: Mat) -> Mat:
    """Hermite form (a b; 0 d), a > 0, 0 <= b < d, of the row lattice of x."""
    a, b, c, d = x
    det = mat_det(x)
    assert det > 0
    # gcd of the first column with Bezout rows
    r1, r2 = (a, b), (c, d)
    while r2[0]:
        q = r1[0] // r2[0]
        r1, r2 = r2, (r1[0] - q * r2[0], r1[1] - q * r2[1])
    aa = r1[0]
    if aa < 0:
        aa, r1 = -aa, (-r1[0], -r1[1])
    dd = det // aa
    if dd < 0:
        dd = -dd
    bb = r1[1] % dd
    return (aa, bb, 0, dd)


@lru_cache(maxsize=None)
def _units(N: int) -> tuple[int, ...]:
    return tuple(u for u in range(1, N + 1) if gcd(u, N) == 1)


def p1_label(c: int, d: int, N: int) -> tuple[int, int]:
    """Canonical representative of (c : d) in P^1(Z/N)."""
    if N == 1:
        return (0, 0)
    c %= N
    d %= N
    best = None
    for u in _units(N):
        cand = ((u * c) % N, (u * d) % N)
        if best is None or cand < best:
            best = cand
    return best


def left_coset_key(x: Mat, N: int):
    """Exact invariant of the left coset Gamma_0(N) x."""
    h = hnf2(x)
    # x = s h with s in SL_2(Z); s = x h^{-1} * (1/det h) stays integral
    det = h[0] * h[3]
    a, b, c, d = x
    ha, hb, _, hd = h
    # h^{-1} = (hd, -hb; 0, ha) / det
    s = (a * hd, -a * hb + b * ha, c * hd, -c * hb + d * ha)
    assert all(v % det == 0 for v in s)
    s = tuple(v // det for v in s)
    return (h, p1_label(s[2], s[3], N))


def same_left_coset(alpha: Mat, beta: Mat, N: int) -> bool:
    """Gamma_0(N) alpha == Gamma_0(N) beta, tested exactly via
    alpha beta^{-1} in Gamma_0(N)."""
    if mat_det(alpha) != mat_det(beta):
        raise DeterminantMismatch(
            f"determinants differ: {mat_det(alpha)} vs {mat_det(beta)}")
    det = mat_det(beta)
    e, f, g, h = beta
    adj = (h, -f, -g, e)
    m = mat_mul(alpha, adj)
    if any(v % det for v in m):
        return False
    q = tuple(v // det for v in m)
    return q[2] % N == 0  # det(q) = 1 automatically


# ---------------------------------------------------------------------------
# coset representatives
# ---------------------------------------------------------------------------

def _upper_reps(N: int, n: int) -> list[Mat]:
    # complete system for Gamma_0(N) \ {alpha in Delta_N : det alpha = n}
    reps = []
    for d in range(1, n + 1):
        if n % d == 0:
            a = n // d
            if gcd(a, N) == 1:
                reps.extend((a, b, 0, d) for b in range(d))
    return reps


def left_coset_reps(N: int, n: int) -> list[Mat]:
    """Left-coset representatives of the determinant-n layer of Delta_N.

    For gcd(n, N) = 1 these are all (a b; 0 d) with ad = n, 0 <= b < d
    (count sigma_1(n)); for a prime p | N only the p matrices (1 j; 0 p)
    survive the (a, N) = 1 condition.
    """
    if n < 1:
        raise UnsupportedParameter("Hecke parameter must be positive")
    if gcd(n, N) > 1 and not _is_prime(n):
        raise UnsupportedParameter(
            f"composite parameter {n} shares a factor with the level {N}")
    return _upper_reps(N, n)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


def double_coset_label(alpha: Mat, N: int) -> tuple[int, int]:
    """Elementary-divisor label (a, d) of Gamma_0(N) alpha Gamma_0(N)."""
    if not in_delta_n(alpha, N):
        raise NotInDeltaN(f"{alpha} is not in Delta_{N}")
    g = mat_content(alpha)
    return (g, mat_det(alpha) // g)


def double_coset_reps(a: int, d: int, N: int) -> list[Mat]:
    """Left-coset representatives of the single double coset T(a, d)."""
    if gcd(a, N) != 1 or d % a != 0:
        raise UnsupportedParameter(f"({a},{d}) is not a valid label at level {N}")
    n = a * d
    return [m for m in _upper_reps(N, n) if mat_content(m) == a]


# ---------------------------------------------------------------------------
# the algebra
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AlgebraElement:
    """Formal integer combination of double cosets T(a, d) at level N."""
    N: int
    terms: tuple[tuple[tuple[int, int], int], ...]  # ((a, d), multiplicity)

    @staticmethod
    def make(N: int, terms: dict[tuple[int, int], int]) -> "AlgebraElement":
        clean = {}
        for (a, d), m in terms.items():
            if m == 0:
                continue
            if a <= 0 or d % a != 0 or gcd(a, N) != 1:
                raise UnsupportedParameter(
                    f"label ({a},{d}) violates a | d, (a,N)=1 at level {N}")
            clean[(a, d)] = m
        return AlgebraElement(N, tuple(sorted(clean.items())))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        assert self.N == other.N
        acc = dict(self.terms)
        for k, m in other.terms:
            acc[k] = acc.get(k, 0) + m
        return AlgebraElement.make(self.N, acc)

    def __rmul__(self, k: int) -> "AlgebraElement":
        if isinstance(k, int):
            return AlgebraElement.make(self.N, {lab: k * m for lab, m in self.terms})
        return NotImplemented

    def to_json(self) -> dict:
        return {"N": self.N,
                "terms": [{"a": a, "d": d, "mult": m} for (a, d), m in self.terms]}

    @staticmethod
    def from_json(data: dict) -> "AlgebraElement":
        return AlgebraElement.make(
            data["N"], {(t["a"], t["d"]): t["mult"] for t in data["terms"]})


def t_ad(a: int, d: int, N: int) -> AlgebraElement:
    return AlgebraElement.make(N, {(a, d): 1})


def t_n(n: int, N: int) -> AlgebraElement:
    """T(n) = sum of T(a, d) over ad = n, a | d, (a, N) = 1."""
    terms = {}
    for a in range(1, n + 1):
        if n % a == 0:
            d = n // a
            if a <= d and d % a == 0 and gcd(a, N) == 1:
                terms[(a, d)] = 1
    return AlgebraElement.make(N, terms)


def identity(N: int) -> AlgebraElement:
    return t_ad(1, 1, N)


def _multiply_cosets(lab1, lab2, N) -> dict[tuple[int, int], int]:
    """Structure constants of T(lab1) * T(lab2) by coset enumeration."""
    reps1 = double_coset_reps(*lab1, N)
    reps2 = double_coset_reps(*lab2, N)
    groups: dict = {}
    for x in reps1:
        for y in reps2:
            p = mat_mul(x, y)
            key = left_coset_key(p, N)
            if key in groups:
                groups[key][1] += 1
            else:
                groups[key] = [double_coset_label(p, N), 1]
    counts: dict[tuple[int, int], list[int]] = {}
    for label, cnt in groups.values():
        counts.setdefault(label, []).append(cnt)
    out = {}
    for label, cnts in counts.items():
        assert all(c == cnts[0] for c in cnts), \
            f"inconsistent multiplicities for {label}: {cnts}"
        out[label] = cnts[0]
    return out


def algebra_multiply(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """Product in R_0(N) with multiplicities m(u v; w)."""
    if u.N != v.N:
        raise UnsupportedParameter("elements live at different levels")
    N = u.N
    acc: dict[tuple[int, int], int] = {}
    for lab1, m1 in u.terms:
        for lab2, m2 in v.terms:
            for lab, mult in _multiply_cosets(lab1, lab2, N).items():
                acc[lab] = acc.get(lab, 0) + m1 * m2 * mult
    return AlgebraElement.make(N, acc)
