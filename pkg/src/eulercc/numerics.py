"""Low-level numeric kernels shared by the root-counting modules.

Every "is this zero" question is asked relative to the sum of term
magnitudes at the evaluation point, never against an absolute epsilon:
the functions handled here mix wildly different exponents, so absolute
thresholds are meaningless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

# Relative threshold below which a function value at a breakpoint is treated
# as a zero of the function itself (degenerate-root detection).
DEGENERACY_REL = 1e-8

# Tighter threshold for user-supplied finite interval endpoints: a value this
# far down in the noise is an exact boundary zero, not a countable root.
BOUNDARY_ZERO_REL = 1e-12

# Default relative width at which bisection stops.
DEFAULT_REL_TOL = 1e-12

# |exponent * log(base)| beyond which float powers may overflow and the
# log-rescaled path is used instead.
_LOG_SAFE = 660.0

_MP_DPS = 60


class ToleranceError(RuntimeError):
    """A sign could not be certified within the configured evaluation precision."""


def _log_abs(x):
    return math.log(abs(x))


def _is_safe(terms):
    for c, e, base in terms:
        if c != 0.0 and abs(e * math.log(base)) > _LOG_SAFE:
            return False
    return True


def sum_value(terms):
    """Value of sum(c * base**e) over (c, e, base) triples, all bases > 0.

    Uses exact float summation (fsum); falls back to mpmath when the float
    range is exceeded, so the returned value may be +/-inf for results that
    genuinely overflow doubles.
    """
    terms = [t for t in terms if t[0] != 0.0]
    if not terms:
        return 0.0
    if _is_safe(terms):
        return math.fsum(c * base ** e for c, e, base in terms)
    with mpmath.workdps(_MP_DPS):
        tot = mpmath.fsum(mpmath.mpf(c) * mpmath.power(base, e) for c, e, base in terms)
        return float(tot)


def sum_sign(terms, zero_rel=DEGENERACY_REL):
    """Sign in {-1, 0, 1} of sum(c * base**e), zero when below zero_rel * scale.

    scale is the sum of term magnitudes at the point. Three tiers: plain
    fsum when exponents are safely in float range, a log-rescaled sum when
    they are not, and mpmath when the rescaled sum cannot resolve the sign.
    """
    terms = [t for t in terms if t[0] != 0.0]
    if not terms:
        return 0
    if _is_safe(terms):
        vals = [c * base ** e for c, e, base in terms]
        value = math.fsum(vals)
        scale = math.fsum(abs(v) for v in vals)
        if abs(value) <= zero_rel * scale:
            return 0
        return 1 if value > 0.0 else -1
    # Log-rescaled: divide everything by the largest term magnitude.
    logs = [(_log_abs(c) + e * math.log(base), 1.0 if c > 0 else -1.0) for c, e, base in terms]
    top = max(lg for lg, _ in logs)
    value = math.fsum(sg * math.exp(lg - top) for lg, sg in logs)
    scale = math.fsum(math.exp(lg - top) for lg, _ in logs)
    # The rescaling itself costs ~1e-13 relative accuracy; below that, escalate.
    if abs(value) > max(zero_rel, 1e-11) * scale:
        return 1 if value > 0.0 else -1
    with mpmath.workdps(_MP_DPS):
        vals = [mpmath.mpf(c) * mpmath.power(base, e) for c, e, base in terms]
        value = mpmath.fsum(vals)
        scale = mpmath.fsum(abs(v) for v in vals)
        if scale == 0 or abs(value) <= mpmath.mpf(zero_rel) * scale:
            return 0
        return 1 if value > 0 else -1


@dataclass(frozen=True)
class Tail:
    """Bound on a truncated series remainder: |R(x)| <= coeff * x**exponent / (1 - ratio*x)."""

    coeff: float
    exponent: float
    ratio: float


_PROBE_FLOOR = 1e-280
_SHRINK = 0.0625
_MARGIN = 0.5
_PAIR_MARGIN_LOG = 3.0


def _tail_rel(tail, lead_log, e0, lx):
    # log of tail bound relative to the leading term magnitude at x = e**lx
    if tail is None or tail.coeff == 0.0:
        return None
    x = math.exp(lx)
    if tail.ratio * x >= 0.9:
        return math.inf
    return (math.log(tail.coeff) - lead_log + (tail.exponent - e0) * lx
            - math.log(1.0 - tail.ratio * x))


def certified_sign_near_zero(pairs, tail=None, start=0.25):
    """(x0, sign) with the sign of sum(c x^e) certified constant on (0, x0].

    pairs must be sorted by strictly increasing exponent with nonzero
    coefficients; tail optionally bounds a truncated remainder. Two phases:

    1. magnitude domination of the leading term, whose ratios to all other
       contributions only shrink as x decreases;
    2. when the two lowest exponents are too close for (1), the leading
       pair w(x) = c0 x^e0 + c1 x^e1 is handled exactly: it has at most one
       positive root at x* = (|c0|/|c1|)^(1/(e1-e0)), is monotone on either
       side, and keeps the sign of c0 below x*. Probing below x* until the
       remaining terms are dominated by the pair's certified minimum
       magnitude yields the anchor.

    Raises ToleranceError when neither phase certifies above the probe
    floor (three or more exponents would have to cluster at the bottom of
    the spectrum, which the callers' functions never produce).
    """
    if not pairs:
        raise ToleranceError("cannot certify the sign of an empty sum")
    c0, e0 = pairs[0]
    sign0 = 1 if c0 > 0.0 else -1
    lead_log = math.log(abs(c0))
    rest = [(math.log(abs(c)) - lead_log, e - e0) for c, e in pairs[1:]]

    def rest_rel_log(lx):
        parts = [lc + de * lx for lc, de in rest]
        t = _tail_rel(tail, lead_log, e0, lx)
        if t is not None:
            parts.append(t)
        if not parts:
            return -math.inf
        top = max(parts)
        if top == math.inf:
            return math.inf
        return top + math.log(math.fsum(math.exp(v - top) for v in parts))

    floor_log = math.log(_PROBE_FLOOR)
    shrink_log = math.log(_SHRINK)

    # Phase 1: quick single-term domination.
    x = min(start, 0.25)
    phase1 = 10 if len(pairs) > 1 else 10 ** 6
    for _ in range(phase1):
        if x < _PROBE_FLOOR:
            raise ToleranceError("tail bound refused to shrink below the leading term")
        if rest_rel_log(math.log(x)) < math.log(_MARGIN):
            return x, sign0
        x *= _SHRINK

    # Phase 2: exact treatment of the leading pair w = c0 x^e0 + c1 x^e1.
    # Relative to c0 x^e0 the pair is rel(x) = 1 + (c1/c0) x^eps: monotone,
    # with at most one root. The certified zone is [zone_floor, x0] chosen a
    # safe log-margin away from that root; when the root falls below the
    # representable floor the zone sits above it and carries the opposite of
    # the 0+ limit sign (structure below the floor is out of numeric scope).
    c1, e1 = pairs[1]
    eps = e1 - e0
    pair_log = math.log(abs(c1)) - lead_log
    cap_log = math.log(min(start, 0.25))
    zone_floor_log = floor_log
    zone_sign = sign0
    if (c0 > 0.0) != (c1 > 0.0):
        root_log = -pair_log / eps
        if root_log - _PAIR_MARGIN_LOG >= floor_log:
            cap_log = min(cap_log, root_log - _PAIR_MARGIN_LOG)
        else:
            zone_floor_log = max(floor_log, root_log + _PAIR_MARGIN_LOG)
            zone_sign = -sign0
    if cap_log < zone_floor_log:
        raise ToleranceError("no representable probe range below the leading-pair root")
    remote = [(math.log(abs(c)) - lead_log, e - e0) for c, e in pairs[2:]]

    def remote_rel_log(lx):
        parts = [lc + de * lx for lc, de in remote]
        t = _tail_rel(tail, lead_log, e0, lx)
        if t is not None:
            parts.append(t)
        if not parts:
            return -math.inf
        top = max(parts)
        if top == math.inf:
            return math.inf
        return top + math.log(math.fsum(math.exp(v - top) for v in parts))

    def rel_abs(lx):
        return abs(1.0 + math.copysign(math.exp(pair_log + eps * lx), c0 * c1))

    floor_rel = rel_abs(zone_floor_log)
    lx = cap_log
    while lx >= zone_floor_log:
        # |rel| is monotone with no root inside [zone_floor, x], so it is
        # bounded below by its value at the two ends
        w_rel_min = min(1.0, floor_rel, rel_abs(lx))
        if w_rel_min > 0.0 and remote_rel_log(lx) < math.log(_MARGIN) + math.log(w_rel_min):
            return math.exp(lx), zone_sign
        lx += shrink_log
    raise ToleranceError("no probe point dominated by the leading terms")


def certified_sign_near_inf(pairs, tail=None, start=4.0):
    """(x1, sign) with the sign of sum(c x^e) certified constant on [x1, inf).

    Realized by reflecting x -> 1/x onto the 0+ case; tail, when given,
    must already be expressed in the reflected variable.
    """
    reflected = [(c, -e) for c, e in reversed(list(pairs))]
    u0, sign = certified_sign_near_zero(reflected, tail=tail, start=1.0 / start)
    return 1.0 / u0, sign


@dataclass(frozen=True)
class RootRecord:
    """An isolated root: bracketing interval, refined value, degeneracy flag.

    For degenerate=False the function changes sign across [lo, hi]; for
    degenerate=True the root sits where the bracketing derivative-chain
    function is itself below the degeneracy threshold, so the bracket is
    only a location estimate.
    """

    lo: float
    hi: float
    value: float
    degenerate: bool


def bisect_sign_change(sign_fn, lo, hi, sign_lo, rel_tol=DEFAULT_REL_TOL, max_iter=3000):
    """Refine a certified sign change of sign_fn on [lo, hi], 0 < lo < hi.

    Returns (value, lo, hi, hit_zero). Uses geometric midpoints while the
    bracket spans more than a factor of 8, so brackets reaching toward 0 or
    infinity converge in O(log log-range) steps.
    """
    hit_zero = False
    for _ in range(max_iter):
        if hi - lo <= rel_tol * hi:
            return 0.5 * (lo + hi), lo, hi, hit_zero
        if hi > 8.0 * lo:
            mid = math.exp(0.5 * (math.log(lo) + math.log(hi)))
        else:
            mid = 0.5 * (lo + hi)
        if not (lo < mid < hi):  # bracket exhausted float resolution
            return mid, lo, hi, hit_zero
        s = sign_fn(mid)
        if s == 0:
            return mid, lo, hi, True
        if s == sign_lo:
            lo = mid
        else:
            hi = mid
    raise ToleranceError("bisection failed to converge within iteration budget")


def isolate_between(sign_fn, left, right, interior, rel_tol=DEFAULT_REL_TOL,
                    chain_sign_fn=None):
    """Isolate roots given monotone pieces delimited by certified breakpoints.

    left and right are (x, sign) anchors whose signs are certified constant
    beyond them (toward 0+ and +infinity respectively, or exact boundary
    values); interior is a sorted iterable of (x, sign, lo, hi) breakpoints
    between which the target function is strictly monotone. A breakpoint
    sign of 0 is itself a root of the target (within threshold) and is
    recorded once, flagged degenerate; anchors with sign 0 are boundary
    zeros and are not recorded. chain_sign_fn, when given, evaluates the
    sign of the derivative-chain function with the degeneracy threshold and
    decides the degenerate flag of bisection roots.
    """
    xl, sl = left
    xr, sr = right
    pts = [(xl, sl, None, None)]
    pts.extend(p for p in interior if xl < p[0] < xr)
    pts.append((xr, sr, None, None))
    if xl >= xr:
        # Certified constant-sign zones overlap: no room for any root.
        if sl != 0 and sr != 0 and sl != sr:
            raise ToleranceError("conflicting certified signs on overlapping zones")
        return []
    out = []
    for x, s, blo, bhi in pts[1:-1]:
        if s == 0:
            lo = blo if blo is not None else x * (1.0 - rel_tol)
            hi = bhi if bhi is not None else x * (1.0 + rel_tol)
            out.append(RootRecord(lo=lo, hi=hi, value=x, degenerate=True))
    for (xa, sa, _, _), (xb, sb, _, _) in zip(pts, pts[1:]):
        if sa == 0 or sb == 0 or sa == sb:
            continue
        value, lo, hi, hit_zero = bisect_sign_change(sign_fn, xa, xb, sa, rel_tol)
        # A mid-point landing exactly on zero says nothing about degeneracy;
        # only the derivative-chain magnitude at the root does.
        if chain_sign_fn is not None:
            degenerate = chain_sign_fn(value) == 0
        else:
            degenerate = hit_zero
        out.append(RootRecord(lo=lo, hi=hi, value=value, degenerate=degenerate))
    out.sort(key=lambda r: r.value)
    return out
