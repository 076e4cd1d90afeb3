"""Dense univariate polynomials with integer coefficients.

``Polynomial.coeffs[k]`` is the coefficient of ``x**k``. Root isolation uses
Sturm sequences over the rationals, so every answer is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd, isqrt
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]

ISOLATION_WIDTH = Fraction(1, 1024)


class PolynomialError(ValueError):
    pass


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[int, ...] = ()

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = tuple(coeffs)
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def constant(cls, c: int) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> Polynomial:
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        """Highest nonzero index; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: Polynomial | int) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: Polynomial | int) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: int) -> Polynomial:
        return (-self) + other

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise PolynomialError("negative exponent")
        result, base = Polynomial((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: int) -> Polynomial:
        return Polynomial(c * x for x in self.coeffs)

    def shift(self, k: int = 1) -> Polynomial:
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return Polynomial((0,) * k + self.coeffs)

    def derivative(self) -> Polynomial:
        return Polynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def __call__(self, t: Number) -> Number:
        return evaluate(self, t)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)})"


def _coerce(other):
    if isinstance(other, Polynomial):
        return other
    if isinstance(other, int):
        return Polynomial((other,))
    return NotImplemented


X = Polynomial((0, 1))
ONE = Polynomial((1,))


# --- arithmetic helpers ---------------------------------------------------------

def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_scale(p: Polynomial, c: int) -> Polynomial:
    return p.scale(c)


def poly_sub_const(p: Polynomial, c: int) -> Polynomial:
    return p - c


def binomial_power(k: int) -> Polynomial:
    """``(1 + x)**k`` built directly from binomial coefficients."""
    if k < 0:
        raise PolynomialError("exponent must be non-negative")
    return Polynomial(comb(k, i) for i in range(k + 1))


def evaluate(p: Polynomial, t: Number) -> Number:
    """Horner evaluation; exact for ``int`` and ``Fraction`` arguments."""
    acc: Number = 0
    for c in reversed(p.coeffs):
        acc = acc * t + c
    if isinstance(acc, Fraction) and acc.denominator == 1:
        return acc.numerator
    return acc


def format_poly(p: Polynomial, var: str = "x") -> str:
    """Lowest degree first, e.g. ``1 + 3x + x^2``."""
    if not p.coeffs:
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            term = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            term = mono if mag == 1 else f"{mag}{mono}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(("+ " if c > 0 else "- ") + term)
    return " ".join(parts)


# --- coefficient shape --------------------------------------------------------

def _check_nonnegative(p: Polynomial) -> None:
    if any(c < 0 for c in p.coeffs):
        raise PolynomialError(f"coefficient sequence has a negative entry: {list(p.coeffs)}")


def unimodal_mode(p: Polynomial) -> int | None:
    """Index of a mode if the coefficients are unimodal, else ``None``.

    Plateaus are allowed; the sequence fails only when a strict rise follows a
    strict fall.
    """
    _check_nonnegative(p)
    c = p.coeffs
    if not c:
        return 0
    k = 0
    while k + 1 < len(c) and c[k] <= c[k + 1]:
        k += 1
    for i in range(k, len(c) - 1):
        if c[i] < c[i + 1]:
            return None
    return k


def is_unimodal(p: Polynomial) -> bool:
    return unimodal_mode(p) is not None


def is_log_concave(p: Polynomial) -> bool:
    _check_nonnegative(p)
    c = p.coeffs
    return all(c[i] * c[i] >= c[i - 1] * c[i + 1] for i in range(1, len(c) - 1))


# --- exact gcd and Sturm machinery --------------------------------------------

def _primitive(coeffs: Sequence[Number]) -> list[int]:
    """Clear denominators and divide by the content, keeping the sign of every entry."""
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return []
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints]


def _rem(a: Sequence[int], b: Sequence[int]) -> list[Fraction]:
    r = [Fraction(c) for c in a]
    lead = Fraction(b[-1])
    db = len(b) - 1
    while len(r) - 1 >= db and r:
        q = r[-1] / lead
        shift = len(r) - 1 - db
        for i, c in enumerate(b):
            r[shift + i] -= q * c
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def _exact_div(a: Sequence[int], b: Sequence[int]) -> list[Fraction]:
    r = [Fraction(c) for c in a]
    db = len(b) - 1
    q = [Fraction(0)] * (len(a) - db)
    for shift in range(len(a) - 1 - db, -1, -1):
        coef = r[shift + db] / b[-1]
        q[shift] = coef
        for i, c in enumerate(b):
            r[shift + i] -= coef * c
    if any(r):
        raise PolynomialError("division is not exact")
    return q


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic-up-to-content gcd: primitive, positive leading coefficient."""
    a, b = _primitive(p.coeffs), _primitive(q.coeffs)
    while b:
        a, b = b, _primitive(_rem(a, b))
    if a and a[-1] < 0:
        a = [-c for c in a]
    return Polynomial(a)


def squarefree_part(p: Polynomial) -> Polynomial:
    if not p:
        raise PolynomialError("zero polynomial")
    g = poly_gcd(p, p.derivative())
    q = _primitive(_exact_div(p.coeffs, g.coeffs)) if g.degree > 0 else _primitive(p.coeffs)
    return Polynomial(q)


def sturm_sequence(p: Polynomial) -> list[Polynomial]:
    """Sturm chain ``p, p', -rem(p, p'), ...`` with positive content normalization."""
    if not p:
        raise PolynomialError("zero polynomial")
    chain = [list(p.coeffs)]
    d = p.derivative()
    if d:
        chain.append(list(d.coeffs))
    while len(chain) > 1 and len(chain[-1]) > 1:
        r = _rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append(_primitive([-c for c in r]))
    return [Polynomial(c) for c in chain]


def _sign_at(p: Polynomial, t: Fraction) -> int:
    # sign of p(a/b) via the integer form sum c_i a^i b^(d-i), b > 0
    a, b = t.numerator, t.denominator
    acc = 0
    bpow = 1
    for c in reversed(p.coeffs):
        acc = acc * a + c * bpow
        bpow *= b
    return (acc > 0) - (acc < 0)


def _sign_at_infinity(p: Polynomial, positive: bool) -> int:
    lead = p.coeffs[-1]
    s = (lead > 0) - (lead < 0)
    return s if positive or p.degree % 2 == 0 else -s


def _variations(signs: Iterable[int]) -> int:
    prev = 0
    count = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def sign_variations(chain: Sequence[Polynomial], t: Fraction | None, positive: bool = True) -> int:
    """Sign changes of the chain at ``t``; ``t=None`` means +inf or -inf by ``positive``."""
    if t is None:
        return _variations(_sign_at_infinity(q, positive) for q in chain)
    return _variations(_sign_at(q, Fraction(t)) for q in chain)


def count_real_roots(p: Polynomial, lo: Number | None = None, hi: Number | None = None) -> int:
    """Distinct real roots in ``(lo, hi]``; ``None`` bounds mean infinity."""
    chain = sturm_sequence(squarefree_part(p))
    v_lo = sign_variations(chain, None if lo is None else Fraction(lo), positive=False)
    v_hi = sign_variations(chain, None if hi is None else Fraction(hi), positive=True)
    return v_lo - v_hi


def root_bound(p: Polynomial) -> Fraction:
    """Cauchy bound: every real root lies in ``(-B, B)``."""
    lead = abs(p.coeffs[-1])
    return 1 + max((Fraction(abs(c), lead) for c in p.coeffs[:-1]), default=Fraction(0))


@dataclass
class RootReport:
    count: int
    intervals: list[tuple[Fraction, Fraction]] = field(default_factory=list)
    exact_roots: list[Fraction] = field(default_factory=list)

    def __post_init__(self):
        if self.count != len(self.intervals):
            raise PolynomialError("root count does not match interval list")

    def interval_inside(self, index: int, lo: Number, hi: Number) -> bool:
        """Whether the ``index``-th isolating interval ``(a, b]`` lies in the open ``(lo, hi)``.

        When the root is exact, membership is decided on the root itself.
        """
        a, b = self.intervals[index]
        if b in self.exact_roots:
            return lo < b < hi
        return lo <= a and b < hi


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def _rational_root_in(q: Polynomial, lo: Fraction, hi: Fraction, dens: list[int]) -> Fraction | None:
    for den in dens:
        start = -((-lo.numerator * den) // lo.denominator)
        stop = (hi.numerator * den) // hi.denominator
        for num in range(start, stop + 1):
            r = Fraction(num, den)
            if lo < r <= hi and _sign_at(q, r) == 0:
                return r
    return None


def real_roots(p: Polynomial, width: Fraction = ISOLATION_WIDTH) -> RootReport:
    """Isolate every distinct real root in a half-open rational interval ``(lo, hi]``.

    Intervals are sorted, pairwise disjoint, of width at most ``width``, and have
    ``p(lo) != 0``. Rational roots are located exactly; for those ``hi`` is the root.
    """
    if not p:
        raise PolynomialError("zero polynomial has no isolated roots")
    q = squarefree_part(p)
    if q.degree <= 0:
        return RootReport(0)
    chain = sturm_sequence(q)

    def var(t: Fraction) -> int:
        return sign_variations(chain, t)

    bound = root_bound(q)
    pending = [(-bound, bound, var(-bound), var(bound))]
    isolated = []
    while pending:
        lo, hi, vlo, vhi = pending.pop()
        n_roots = vlo - vhi
        if n_roots == 0:
            continue
        if n_roots == 1 and hi - lo <= width and _sign_at(q, lo) != 0:
            isolated.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        vmid = var(mid)
        pending.append((lo, mid, vlo, vmid))
        pending.append((mid, hi, vmid, vhi))
    isolated.sort()

    dens = _divisors(q.coeffs[-1])
    intervals, exact = [], []
    for lo, hi in isolated:
        r = _rational_root_in(q, lo, hi, dens)
        if r is not None:
            exact.append(r)
            hi = r
        intervals.append((lo, hi))
    return RootReport(len(intervals), intervals, exact)


def real_root_count_with_multiplicity(p: Polynomial) -> int:
    # roots of g_j = gcd(g_{j-1}, g_{j-1}') are the roots of p of multiplicity > j
    if not p:
        raise PolynomialError("zero polynomial")
    total = 0
    g = p
    while g.degree > 0:
        total += count_real_roots(g)
        g = poly_gcd(g, g.derivative())
    return total


def is_real_rooted(p: Polynomial) -> bool:
    """All roots real, counted with multiplicity."""
    return real_root_count_with_multiplicity(p) == p.degree
