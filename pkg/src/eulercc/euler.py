"""Collinear central configurations of three bodies: counting and isolation.

Positions are normalized so the cell's left, middle, and right particles
sit at 0, 1, and 1+s with shape parameter s > 0. The balance function

    g(s) = (m2+m3) s^b + (m1+m3)(1+s)^b + m3 (s^(b+1) - (1+s)^(b+1))
           - m1 (1+s) - m2 s

vanishes exactly at the central configurations of the cell; b = -2 is the
gravitational case, b = -1 the point-vortex case. The counting pipeline
walks a derivative chain: the second derivative transforms under
y = s/(1+s) into a genuine four-term signomial H on (0, 1), whose roots
are isolated by the certified signomial engine; the sign-constant pieces
of g'' then locate the roots of g', and those in turn the roots of g.
Signs at the open ends 0+ and +infinity are certified by expanding g into
its exact generalized power series at 0 (binomial coefficients, explicit
tail bound) and probing until the leading term dominates; the end at
+infinity reduces to the end at 0 through the reflection identity
g_{m1,m2,m3}(1/s) = -s^(-b-1) g_{m3,m2,m1}(s).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .numerics import (
    BOUNDARY_ZERO_REL,
    DEFAULT_REL_TOL,
    DEGENERACY_REL,
    Tail,
    ToleranceError,
    certified_sign_near_zero,
    isolate_between,
    sum_sign,
    sum_value,
)
from .signomial import Endpoint, Signomial, count_and_isolate, normalize

__all__ = [
    "INFINITE",
    "MassTriple",
    "Exponent",
    "CellCount",
    "ConfigurationSolution",
    "abc_terms",
    "eval_g",
    "eval_g_prime",
    "eval_h",
    "h_signomial",
    "degenerate_family",
    "endpoint_sign_g",
    "cell_mass_view",
    "count_cell",
    "count_all",
    "celli_identity_residual",
]

# Cell counts are ints, or this marker for the identically-vanishing families.
INFINITE = math.inf

# The force-law exponent is a plain real number.
Exponent = float

CELLS = (1, 2, 3)


@dataclass(frozen=True)
class MassTriple:
    """Masses (gravitational case) or vorticities (vortex case); any signs."""

    m1: float
    m2: float
    m3: float

    def as_tuple(self):
        return (self.m1, self.m2, self.m3)


def _masses(m) -> MassTriple:
    if isinstance(m, MassTriple):
        return m
    m1, m2, m3 = m
    return MassTriple(float(m1), float(m2), float(m3))


@dataclass(frozen=True)
class CellCount:
    """Per-cell configuration counts; INFINITE marks a degenerate family."""

    e1: float
    e2: float
    e3: float
    total: float

    @classmethod
    def of(cls, e1, e2, e3):
        total = INFINITE if INFINITE in (e1, e2, e3) else e1 + e2 + e3
        return cls(e1, e2, e3, total)

    @property
    def is_finite(self):
        return self.total != INFINITE


@dataclass(frozen=True)
class ConfigurationSolution:
    """One central configuration: cell, shape parameter, normalized positions.

    positions is (x1, x2, x3) with the cell's left/middle/right particles
    at 0, 1, 1+s. degenerate flags a root within threshold of a g' root.
    """

    cell: int
    s: float
    positions: tuple[float, float, float]
    degenerate: bool


def abc_terms(b, s):
    """The mass-coefficient functions (A, B, C) with g = m1*A + m2*B + m3*C."""
    if s <= 0.0:
        raise ValueError("abc_terms requires s > 0")
    u = 1.0 + s
    a = u * (u ** (b - 1.0) - 1.0)
    bb = s * (s ** (b - 1.0) - 1.0)
    c = s * u * (s ** (b - 1.0) - u ** (b - 1.0))
    return a, bb, c


def _g_triples(m: MassTriple, b, s):
    u = 1.0 + s
    return [
        (m.m2 + m.m3, b, s),
        (m.m1 + m.m3, b, u),
        (m.m3, b + 1.0, s),
        (-m.m3, b + 1.0, u),
        (-m.m1, 1.0, u),
        (-m.m2, 1.0, s),
    ]


def _gp_triples(m: MassTriple, b, s):
    u = 1.0 + s
    return [
        (b * (m.m2 + m.m3), b - 1.0, s),
        (b * (m.m1 + m.m3), b - 1.0, u),
        ((b + 1.0) * m.m3, b, s),
        (-(b + 1.0) * m.m3, b, u),
        (-(m.m1 + m.m2), 0.0, 1.0),
    ]


def eval_g(m, b, s) -> float:
    """The configuration balance function g at shape parameter s > 0."""
    if s <= 0.0:
        raise ValueError("eval_g requires s > 0")
    return sum_value(_g_triples(_masses(m), b, s))


def eval_g_prime(m, b, s) -> float:
    """d/ds of the balance function; at s=1 with m1=m3=1 this is 2b - 2^b + m2(b-1)."""
    if s <= 0.0:
        raise ValueError("eval_g_prime requires s > 0")
    return sum_value(_gp_triples(_masses(m), b, s))


def eval_h(m, b, y) -> float:
    """The transformed second-derivative kernel h on 0 < y < 1.

    g''(s) = (1-y)^(1-b) * b(b-1) * h(y) with s = y/(1-y); h(1) = 0 always.
    """
    if not 0.0 < y < 1.0:
        raise ValueError("eval_h requires 0 < y < 1")
    if b == 1.0:
        raise ValueError("eval_h is undefined at b = 1")
    m = _masses(m)
    w = 2.0 * m.m3 / (b - 1.0)
    return sum_value([
        (-(m.m2 - w), b - 1.0, y),
        (m.m2 + m.m3, b - 2.0, y),
        (-(m.m1 + m.m3), 1.0, y),
        (m.m1 - w, 0.0, 1.0),
    ])


def h_signomial(m, b) -> Signomial:
    """b(b-1)*h as a signomial in y (exponents b-1, b-2, 1, 0), normalized.

    Empty exactly on the degenerate families; exponent collisions at
    b in {2, 3} merge exactly. Rejected at b in {0, 1} where the prefactor
    kills all information (callers special-case those).
    """
    if b == 0.0 or b == 1.0:
        raise ValueError("h_signomial is undefined at b in {0, 1}")
    m = _masses(m)
    bb = b * (b - 1.0)
    return normalize([
        (-bb * m.m2 + 2.0 * b * m.m3, b - 1.0),
        (bb * (m.m2 + m.m3), b - 2.0),
        (-bb * (m.m1 + m.m3), 1.0),
        (bb * m.m1 - 2.0 * b * m.m3, 0.0),
    ])


def degenerate_family(m, b):
    """The case tag 'i'..'v' when g vanishes identically on the cell, else None."""
    m = _masses(m)
    if m.m1 == 0.0 and m.m2 == 0.0 and m.m3 == 0.0:
        return "i"
    if b == 0.0 and m.m1 == -m.m2 and m.m3 == m.m1:
        return "ii"
    if b == 1.0:
        return "iii"
    if b == 2.0 and m.m2 == 0.0 and m.m1 == m.m3:
        return "iv"
    if b == 3.0 and m.m1 == m.m2 and m.m2 == m.m3:
        return "v"
    return None


# --- exact series of g at s -> 0 and its certified leading sign ---------------


@dataclass(frozen=True)
class _Series:
    signomial: Signomial
    tail: Tail


def _series_order(b):
    big = max(abs(b), abs(b + 1.0))
    return max(14, 2 * int(math.ceil(big)) + 6), big


def _zero_series_g(m: MassTriple, b) -> _Series:
    """g(s) = (m2+m3) s^b + m3 s^(b+1) + sum_k c_k s^k exactly for 0 < s < 1.

    The c_k come from the binomial expansions of (1+s)^b and (1+s)^(b+1)
    and from the affine terms; the tail bound controls the truncated part.
    """
    order, big = _series_order(b)
    pairs = [(m.m2 + m.m3, b), (m.m3, b + 1.0)]
    # The k = 0 coefficient is identically zero; k = 1 and k = 2 are written in
    # the same canonical forms the endpoint cascade tests, so a combination
    # that is zero for the cascade is exactly zero here too (a naive binomial
    # evaluation leaves ~1e-16 residues in the structurally-zero slots, which
    # would masquerade as leading terms).
    pairs.append(((b - 1.0) * m.m1 - m.m2 - m.m3, 1.0))
    pairs.append((0.5 * b * (m.m1 * (b - 1.0) - 2.0 * m.m3), 2.0))
    cb = 1.0    # running C(b, k)
    cb1 = 1.0   # running C(b+1, k)
    for k in range(3):
        cb *= (b - k) / (k + 1.0)
        cb1 *= (b + 1.0 - k) / (k + 1.0)
    for k in range(3, order):
        pairs.append(((m.m1 + m.m3) * cb - m.m3 * cb1, float(k)))
        cb *= (b - k) / (k + 1.0)
        cb1 *= (b + 1.0 - k) / (k + 1.0)
    tail_coeff = abs(m.m1 + m.m3) * abs(cb) + abs(m.m3) * abs(cb1)
    ratio = 1.0 + (big + 1.0) / (order + 1.0)
    return _Series(normalize(pairs), Tail(tail_coeff, float(order), ratio))


def _differentiate_series(series: _Series) -> _Series:
    p = normalize(
        (t.coefficient * t.exponent, t.exponent - 1.0)
        for t in series.signomial.terms
    )
    t = series.tail
    return _Series(p, Tail(t.coeff * t.exponent, t.exponent - 1.0, t.ratio))


def _swap13(m: MassTriple) -> MassTriple:
    return MassTriple(m.m3, m.m2, m.m1)


def _inf_series_g(m: MassTriple, b) -> _Series:
    # g_m(1/u) = -u^(-b-1) * g_swap(u): a 0+-side series in u = 1/s.
    base = _zero_series_g(_swap13(m), b)
    p = normalize((-t.coefficient, t.exponent - b - 1.0) for t in base.signomial.terms)
    t = base.tail
    return _Series(p, Tail(t.coeff, t.exponent - b - 1.0, t.ratio))


def _inf_series_gp(m: MassTriple, b) -> _Series:
    # Differentiating the reflection identity:
    # g_m'(1/u) = sum c_k (e_k - b - 1) u^(e_k - b) over the swapped 0+-series.
    base = _zero_series_g(_swap13(m), b)
    p = normalize(
        (t.coefficient * (t.exponent - b - 1.0), t.exponent - b)
        for t in base.signomial.terms
    )
    t = base.tail
    order, big = _series_order(b)
    ratio = (1.0 + (big + 1.0) / order) * (1.0 + 1.0 / max(order - big - 1.0, 1.0))
    return _Series(p, Tail(t.coeff * (t.exponent + big + 1.0), t.exponent - b, ratio))


def _series_sign(series: _Series, hint=0.25):
    """(x0, sign) with the series sign certified constant on (0, x0]."""
    p = series.signomial
    if p.is_zero:
        raise ToleranceError("series vanished to working order; cannot certify a sign")
    t = series.tail
    start = min(hint, 0.25, 0.5 / t.ratio)
    return certified_sign_near_zero(p.pairs(), tail=t, start=start)


def _g_anchor_zero(m, b):
    return _series_sign(_zero_series_g(m, b))


def _g_anchor_inf(m, b):
    u0, sign = _series_sign(_inf_series_g(m, b))
    return 1.0 / u0, sign


def _gp_anchor_zero(m, b):
    return _series_sign(_differentiate_series(_zero_series_g(m, b)))


def _gp_anchor_inf(m, b):
    u0, sign = _series_sign(_inf_series_gp(m, b))
    return 1.0 / u0, sign


def _sign_of(x):
    return 0 if x == 0.0 else (1 if x > 0.0 else -1)


def endpoint_sign_g(m, b, endpoint) -> int:
    """Sign of g near 0+ or +infinity, by the leading/correction-term cascade.

    The two-level cascade is keyed on the b regime (b<0, 0<b<1, 1<b<2, 2<b);
    at the regime boundaries b in {0, 2}, and when both tabulated terms
    vanish, the sign comes from the certified series probe instead.
    Requires b != 1 and (m, b) outside the degenerate families.
    """
    m = _masses(m)
    if b == 1.0:
        raise ValueError("g vanishes identically at b = 1")
    if degenerate_family(m, b) is not None:
        raise ValueError("g vanishes identically for this degenerate family")
    if endpoint is Endpoint.ZERO_PLUS:
        if b != 0.0:
            if b < 1.0:
                lead = m.m2 + m.m3
                nxt = ((b - 1.0) * m.m1 - m.m2 - m.m3) if b > 0.0 else m.m3
            else:
                lead = (b - 1.0) * m.m1 - m.m2 - m.m3
                if b < 2.0:
                    nxt = m.m2 + m.m3
                elif b > 2.0:
                    nxt = m.m1 * (b - 1.0) - 2.0 * m.m3
                else:
                    nxt = 0.0
            if lead != 0.0:
                return _sign_of(lead)
            if nxt != 0.0:
                return _sign_of(nxt)
        return _g_anchor_zero(m, b)[1]
    if endpoint is Endpoint.INFINITY:
        if b != 0.0:
            if b < 1.0:
                lead = -(m.m1 + m.m2)
                nxt = -((b - 1.0) * m.m3 - m.m2 - m.m1) if b > 0.0 else -m.m1
            else:
                lead = -((b - 1.0) * m.m3 - m.m2 - m.m1)
                if b < 2.0:
                    nxt = -(m.m1 + m.m2)
                elif b > 2.0:
                    nxt = -(m.m3 * (b - 1.0) - 2.0 * m.m1)
                else:
                    nxt = 0.0
            if lead != 0.0:
                return _sign_of(lead)
            if nxt != 0.0:
                return _sign_of(nxt)
        return _g_anchor_inf(m, b)[1]
    raise ValueError(f"unknown endpoint {endpoint!r}")


# --- cells ---------------------------------------------------------------------


def cell_mass_view(m, cell) -> MassTriple:
    """Masses reindexed as (left, middle, right) so the cell becomes s > 0.

    Counting roots of g on s > 0 for the returned triple equals the count
    for the requested cell; by reflection the left/right choice is
    immaterial.
    """
    m = _masses(m)
    if cell == 2:
        return m
    if cell == 3:
        return MassTriple(m.m1, m.m3, m.m2)
    if cell == 1:
        return MassTriple(m.m2, m.m1, m.m3)
    raise ValueError("cell must be 1, 2 or 3")


def _solution(cell, s, degenerate) -> ConfigurationSolution:
    if cell == 2:
        pos = (0.0, 1.0, 1.0 + s)
    elif cell == 1:
        pos = (1.0, 0.0, 1.0 + s)
    else:
        pos = (0.0, 1.0 + s, 1.0)
    return ConfigurationSolution(cell=cell, s=s, positions=pos, degenerate=degenerate)


def _affine_roots(mv: MassTriple, b):
    """Roots of g when the curvature kernel vanishes identically.

    Outside the degenerate families this happens exactly on the b = 0
    plane, the b = 2 plane m1 + m2 = m3, and the b = -1 line m1 = m2 = -m3,
    where g(s) = alpha + beta*s with exactly computable coefficients.
    """
    beta = (b - 1.0) * mv.m1 - mv.m2 - mv.m3
    if b == 0.0:
        alpha = mv.m2 + mv.m3
        beta += mv.m3
    elif b == -1.0:
        alpha = mv.m3
    elif b == 2.0:
        alpha = 0.0
    else:
        raise ToleranceError("curvature kernel vanished on an unexpected parameter set")
    if beta == 0.0:
        if alpha == 0.0:
            raise ToleranceError("identically-zero balance outside a known family")
        return []
    s = -alpha / beta
    return [(s, False)] if s > 0.0 else []


def _cell_roots(mv: MassTriple, b, h, tol):
    """Roots of g on s > 0 for the (left, middle, right) triple mv, b not in {0, 1}."""
    # Stage 1: sign changes of g'' as breakpoints, via the signomial engine
    # on (0, 1) in y (the forced boundary zero at y = 1 is excluded).
    _, h_roots = count_and_isolate(h, 0.0, 1.0, tol)
    curvature_breaks = sorted(r.value / (1.0 - r.value) for r in h_roots)

    def h_sign_at_s(s):
        y = s / (1.0 + s)
        return sum_sign([(t.coefficient, t.exponent, y) for t in h.terms], DEGENERACY_REL)

    def gp_sign(s, zero_rel):
        return sum_sign(_gp_triples(mv, b, s), zero_rel)

    # Breakpoint values are compared against evaluation noise; the looser
    # degeneracy threshold applies only when flagging roots via the chain.
    gp_left = _gp_anchor_zero(mv, b)
    gp_right = _gp_anchor_inf(mv, b)
    interior = [(s, gp_sign(s, BOUNDARY_ZERO_REL), s * (1.0 - tol), s * (1.0 + tol))
                for s in curvature_breaks]
    gp_roots = isolate_between(
        lambda s: gp_sign(s, 0.0),
        gp_left, gp_right, interior,
        rel_tol=tol, chain_sign_fn=h_sign_at_s,
    )

    # Stage 2: g is strictly monotone between g' roots.
    def g_sign(s, zero_rel):
        return sum_sign(_g_triples(mv, b, s), zero_rel)

    g_left = _g_anchor_zero(mv, b)
    g_right = _g_anchor_inf(mv, b)
    interior = [(r.value, g_sign(r.value, BOUNDARY_ZERO_REL), r.lo, r.hi) for r in gp_roots]
    return isolate_between(
        lambda s: g_sign(s, 0.0),
        g_left, g_right, interior,
        rel_tol=tol, chain_sign_fn=lambda s: gp_sign(s, DEGENERACY_REL),
    )


def count_cell(m, b, cell=2, tol=DEFAULT_REL_TOL):
    """Certified count and solutions for one cell.

    Returns (count, solutions); count is INFINITE (with no enumerable
    solutions) exactly on the degenerate families of the cell's mass view.
    """
    m = _masses(m)
    if cell not in CELLS:
        raise ValueError("cell must be 1, 2 or 3")
    mv = cell_mass_view(m, cell)
    if degenerate_family(mv, b) is not None:
        return INFINITE, []
    if b == 0.0:
        pairs = _affine_roots(mv, b)
    else:
        h = h_signomial(mv, b)
        if h.is_zero:
            pairs = _affine_roots(mv, b)
        else:
            pairs = [(r.value, r.degenerate) for r in _cell_roots(mv, b, h, tol)]
    return len(pairs), [_solution(cell, s, deg) for s, deg in pairs]


def count_all(m, b, tol=DEFAULT_REL_TOL):
    """Counts for all three cells. Returns (CellCount, solutions)."""
    m = _masses(m)
    counts = {}
    solutions = []
    for cell in CELLS:
        n, sols = count_cell(m, b, cell, tol)
        counts[cell] = n
        solutions.extend(sols)
    solutions.sort(key=lambda sol: (sol.cell, sol.s))
    return CellCount.of(counts[1], counts[2], counts[3]), solutions


def celli_identity_residual(m, sol: ConfigurationSolution) -> float:
    """m1*x1 + m2*x2 + m3*x3 for a solution; near zero when m1+m2+m3 = 0."""
    m = _masses(m)
    if m.m1 + m.m2 + m.m3 != 0.0:
        raise ValueError("residual identity requires m1 + m2 + m3 = 0")
    x1, x2, x3 = sol.positions
    return math.fsum((m.m1 * x1, m.m2 * x2, m.m3 * x3))
