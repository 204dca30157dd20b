"""Straight-case quasi-polynomial systems in two positive variables.

A system of two real-exponent power-sum equations is "straight" when one
equation is a trinomial: dividing by its right member and exponentiating
a linear change of variables turns it into a line a1*x + a2*y = 1 in the
positive quadrant, and the other equation restricts to a function of one
variable on that line. This module reduces such systems, counts roots of
the restriction by an adaptive scan (honest about its certification
status), and provides the standard upper-bound formulas: 2^n - 2 for a
trinomial paired with an n-nomial, and the Khovanskii bound
d1*d2*(d1+d2+1)^k * 2^(k(k-1)/2) for general systems with k exponential
expressions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .numerics import RootRecord, bisect_sign_change

__all__ = [
    "BivariateSignomial",
    "AffineConstraint",
    "LineCount",
    "straight_bound",
    "khovanskii_bound",
    "restrict_to_line",
    "count_on_line",
    "euler_line_system",
]


@dataclass(frozen=True)
class BivariateSignomial:
    """sum of coeff * x**xe * y**ye terms on x > 0, y > 0."""

    terms: tuple[tuple[float, float, float], ...]

    @classmethod
    def from_triples(cls, triples):
        merged: dict[tuple[float, float], float] = {}
        for c, xe, ye in triples:
            c = float(c)
            if c == 0.0:
                continue
            key = (float(xe), float(ye))
            merged[key] = merged.get(key, 0.0) + c
        terms = tuple(
            (c, xe, ye) for (xe, ye), c in sorted(merged.items()) if c != 0.0
        )
        return cls(terms)

    def evaluate(self, x, y):
        if x <= 0.0 or y <= 0.0:
            raise ValueError("bivariate signomials are defined on x > 0, y > 0")
        return math.fsum(c * x ** xe * y ** ye for c, xe, ye in self.terms)

    def to_triples(self):
        return [list(t) for t in self.terms]


@dataclass(frozen=True)
class AffineConstraint:
    """The line a1*x + a2*y = 1; a2 != 0 so it defines y as a function of x."""

    a1: float
    a2: float

    def __post_init__(self):
        if self.a2 == 0.0:
            raise ValueError("a2 must be nonzero")

    def y_of(self, x):
        return (1.0 - self.a1 * x) / self.a2


def straight_bound(n: int) -> int:
    """Root-count bound 2^n - 2 for a trinomial paired with an n-nomial."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return 2 ** n - 2


def khovanskii_bound(d1: int, d2: int, k: int) -> int:
    """Khovanskii's bound d1*d2*(d1+d2+1)^k * 2^(k(k-1)/2) on isolated roots."""
    if d1 < 1 or d2 < 1:
        raise ValueError("degrees must be >= 1")
    if k < 0:
        raise ValueError("k must be >= 0")
    return d1 * d2 * (d1 + d2 + 1) ** k * 2 ** (k * (k - 1) // 2)


def restrict_to_line(f: BivariateSignomial, c: AffineConstraint):
    """Restriction of f to the admissible piece of the line a1*x + a2*y = 1.

    Returns (callable, (xlo, xhi)) with the open admissible interval
    {x > 0, y(x) > 0}; raises ValueError when that set is empty.
    """
    if c.a2 > 0.0:
        # y > 0 <=> a1*x < 1
        xlo, xhi = 0.0, (1.0 / c.a1 if c.a1 > 0.0 else math.inf)
    else:
        # y > 0 <=> a1*x > 1
        if c.a1 <= 0.0:
            raise ValueError("empty admissible domain: a1 <= 0 with a2 < 0")
        xlo, xhi = 1.0 / c.a1, math.inf
    if not xlo < xhi:
        raise ValueError("empty admissible domain")

    def restriction(x):
        return f.evaluate(x, c.y_of(x))

    return restriction, (xlo, xhi)


@dataclass(frozen=True)
class LineCount:
    """Scan result: count certified exact only under an external cap.

    The restriction of a bivariate signomial to a line is not itself a
    signomial, so the derivative-chain certificate does not apply; the
    scan count is a lower bound that is exact when it reaches a bound the
    caller knows analytically (the cap). note records which case holds.
    """

    count: int
    roots: tuple[RootRecord, ...]
    certified: bool
    note: str


_SCAN_POINTS = 10_000


def _probe_grid(xlo, xhi):
    if math.isinf(xhi):
        lo = max(xlo, 1e-8)
        lg_lo, lg_hi = math.log(lo), math.log(1e8)
        n = _SCAN_POINTS
        return [math.exp(lg_lo + (lg_hi - lg_lo) * i / (n - 1)) for i in range(n)]
    # Bounded interval: uniform interior plus geometric refinement into both ends.
    n = _SCAN_POINTS - 2 * 60
    width = xhi - xlo
    pts = [xlo + width * (i + 0.5) / n for i in range(n)]
    for k in range(1, 61):
        frac = 0.5 ** k * 1e-3
        pts.append(xlo + width * frac)
        pts.append(xhi - width * frac)
    return sorted(pts)


def count_on_line(f: BivariateSignomial, c: AffineConstraint, tol=1e-12,
                  cap=None) -> LineCount:
    """Count sign changes of the restriction on an adaptive probe grid.

    Sign changes are refined by bisection to relative width tol. The count
    is a lower bound on the number of roots; it is reported as certified
    exactly when it equals a caller-supplied cap.
    """
    restriction, (xlo, xhi) = restrict_to_line(f, c)
    pts = _probe_grid(xlo, xhi)
    signs = []
    for x in pts:
        # end refinements can collapse onto the boundary in floats
        if not (xlo < x < xhi) or c.y_of(x) <= 0.0:
            continue
        v = restriction(x)
        if math.isnan(v):
            continue
        signs.append((x, 0 if v == 0.0 else (1 if v > 0.0 else -1)))
    roots = []
    prev_x = prev_s = None
    for x, s in signs:
        if s == 0:
            roots.append(RootRecord(lo=x, hi=x, value=x, degenerate=True))
            prev_x, prev_s = x, None
            continue
        if prev_s is not None and s != prev_s:
            def sign_fn(t):
                v = restriction(t)
                return 0 if v == 0.0 else (1 if v > 0.0 else -1)
            value, lo, hi, hit_zero = bisect_sign_change(sign_fn, prev_x, x, prev_s, tol)
            roots.append(RootRecord(lo=lo, hi=hi, value=value, degenerate=hit_zero))
        prev_x, prev_s = x, s
    roots.sort(key=lambda r: r.value)
    count = len(roots)
    if cap is not None and count == cap:
        return LineCount(count, tuple(roots), True,
                         f"count reached the supplied cap {cap}; exact")
    return LineCount(count, tuple(roots), False,
                     f"adaptive scan with {_SCAN_POINTS} probes; certified lower bound only")


def euler_line_system(m1, m2, m3, b):
    """The three-body balance equation as a straight quasi-polynomial system.

    First equation: t = 1 + s, normalized to the constraint -s + t = 1.
    Second equation: the six-term bivariate signomial in (s, t) whose
    restriction to the line is the cell balance function of (m1, m2, m3).
    """
    f = BivariateSignomial.from_triples([
        (m2 + m3, b, 0.0),
        (m1 + m3, 0.0, b),
        (m3, b + 1.0, 0.0),
        (-m3, 0.0, b + 1.0),
        (-m1, 0.0, 1.0),
        (-m2, 1.0, 0.0),
    ])
    return f, AffineConstraint(a1=-1.0, a2=1.0)
