"""Low-level numerical kernels with two interchangeable backends.

The default backend compiles the scalar hot loops with numba (lazily, with an
on-disk cache); a pure-numpy vectorized fallback is selected when numba is not
importable or when the environment variable ``OSCTUN_DISABLE_NUMBA`` is set to
1/true/yes.  Both backends are always importable (when numba exists) under
``*_numba`` / ``*_numpy`` names so tests and benchmarks can compare them; the
unsuffixed names are the active aliases.

Everything here operates on raw float64 scalars/arrays and performs no input
validation; the public modules own the contracts.

Kernels:
- hermite_values(n, x):       oscillator eigenfunction psi_n on an x array,
                              power-of-2 scaled three-term recurrence
- airy_values(t):             (Ai, Ai', err_estimate, method) on a t array,
                              dd-compensated Maclaurin series below T_SWITCH,
                              optimally truncated asymptotic expansion above
- invert_zeta_values(zeta):   x - 1 solving zeta(x) = zeta, series seed plus
                              safeguarded Newton on the 3/2-power form
- zeta_from_e(e), f_from_e(e): forward turning-point map and its f ratio,
                              series near e = x - 1 = 0, direct form elsewhere
"""

import math
import os

import numpy as np

try:
    import numba
except ImportError:
    numba = None

HAVE_NUMBA = numba is not None
NUMBA_DISABLED = os.environ.get("OSCTUN_DISABLE_NUMBA", "").strip().lower() in (
    "1", "true", "yes", "on")
USE_NUMBA = HAVE_NUMBA and not NUMBA_DISABLED
BACKEND = "numba" if USE_NUMBA else "numpy"

# ---------------------------------------------------------------------------
# constants

SQRT2 = math.sqrt(2.0)
SQRT_PI = math.sqrt(math.pi)
LN_PI = math.log(math.pi)
INV_LN2 = 1.0 / math.log(2.0)
TWO_13 = 2.0 ** (1.0 / 3.0)        # 2^(1/3)
TWO_M13 = 2.0 ** (-1.0 / 3.0)
TWO_M23 = 2.0 ** (-2.0 / 3.0)      # f at the turning point

# recurrence renormalization thresholds; +-600 keeps mantissa*mantissa safe
_RESCALE_HI = 2.0 ** 600
_RESCALE_LO = 2.0 ** -600

# Airy branch switch; the dd series holds <= 5e-15 relative through t ~ 9.5
# while the asymptotic optimal truncation reaches ~2e-15 at t = 9 (z = 18)
T_SWITCH = 9.0
AIRY_SERIES = 0    # method codes
AIRY_ASYMPTOTIC = 1
_MAX_TERMS = 200

# Ai(0) = 3^(-2/3)/Gamma(2/3) and Ai'(0) = -3^(-1/3)/Gamma(1/3) as hi/lo
# pairs; the series combination Ai = Ai(0) F + Ai'(0) G cancels ~16 digits at
# t ~ 9, so the constants must carry ~32
AI0_HI = 0.3550280538878172
AI0_LO = 2.05233632436212e-17
AIP0_HI = -0.2588194037928068
AIP0_LO = 2.522243111610832e-17

_SPLITTER = 134217729.0  # 2^27 + 1, Dekker splitting

# u_k, v_k coefficients of the large-t expansions of Ai, Ai'
_ASY_U = np.empty(26)
_ASY_V = np.empty(26)
_ASY_U[0] = 1.0
_ASY_V[0] = 1.0
for _k in range(1, 26):
    _ASY_U[_k] = _ASY_U[_k - 1] * ((6 * _k - 5) * (6 * _k - 3) * (6 * _k - 1)) / (
        (2 * _k - 1) * 216.0 * _k)
    _ASY_V[_k] = -_ASY_U[_k] * (6 * _k + 1) / (6 * _k - 1.0)
del _k

# zeta(1+e) = 2^(1/3) e (c0 + c1 e + ...); exact rationals from series
# reversion of (3/4)(x sqrt(x^2-1) - arccosh x) = zeta^(3/2)
ZETA_SERIES_C = np.array([
    1.0,
    1.0 / 10.0,
    -2.0 / 175.0,
    37.0 / 15750.0,
    -1849.0 / 3031875.0,
    71237.0 / 394143750.0,
    -3627836.0 / 62077640625.0,
    30316679.0 / 1507599843750.0,
    -39984347342.0 / 5514046428515625.0,
])

# f(1+e) = 2^(-2/3) (f0 + f1 e + ...), f = zeta/(x^2-1)
F_SERIES_C = np.array([
    1.0,
    -2.0 / 5.0,
    33.0 / 175.0,
    -724.0 / 7875.0,
    137521.0 / 3031875.0,
    -914.0 / 40625.0,
    694697869.0 / 62077640625.0,
    -29418551056.0 / 5276599453125.0,
    5110402859806.0 / 1838015476171875.0,
])

# inverse map e(w) = w (b0 + b1 w + ...), w = 2^(-1/3) zeta
INV_SERIES_B = np.array([
    1.0,
    -1.0 / 10.0,
    11.0 / 350.0,
    -823.0 / 63000.0,
    150653.0 / 24255000.0,
    -3362377.0 / 1051050000.0,
    156912407.0 / 90294750000.0,
    -132463501789.0 / 135080946000000.0,
])

# regime boundaries; seams verified to ~3e-15 relative
DELTA_ZETA_SERIES = 1e-3   # forward map: series for e < delta, direct beyond
DELTA_F_SERIES = 0.05      # f ratio: wider zone, no cancellation in either form
ZETA_INV_SERIES = 0.02     # inverse: series alone is at roundoff below this

_NEWTON_RTOL = 1e-14       # on the 3/2-power residual; ~6.7e-15 in zeta
_NEWTON_MAX = 100


# ---------------------------------------------------------------------------
# error-free transforms; elementwise, so they take floats or ndarrays alike

def two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def quick_two_sum(a, b):
    s = a + b
    return s, b - (s - a)


def two_prod(a, b):
    p = a * b
    aa = _SPLITTER * a
    ahi = aa - (aa - a)
    alo = a - ahi
    bb = _SPLITTER * b
    bhi = bb - (bb - b)
    blo = b - bhi
    return p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo


def dd_add(ah, al, bh, bl):
    s, e = two_sum(ah, bh)
    return quick_two_sum(s, e + al + bl)


def dd_mul(ah, al, bh, bl):
    p, e = two_prod(ah, bh)
    return quick_two_sum(p, e + ah * bl + al * bh)


def dd_mul_d(ah, al, b):
    p, e = two_prod(ah, b)
    return quick_two_sum(p, e + al * b)


def dd_div_d(ah, al, b):
    q1 = ah / b
    p, e = two_prod(q1, b)
    s, e2 = two_sum(ah, -p)
    return quick_two_sum(q1, (s + (e2 + al - e)) / b)


# ---------------------------------------------------------------------------
# elementwise turning-point map pieces (shared by both backends)

def zeta_series_factor(e):
    """Horner sum of the zeta series in e; zeta = 2^(1/3) * e * factor."""
    acc = e * 0.0 + ZETA_SERIES_C[8]
    for i in range(7, -1, -1):
        acc = acc * e + ZETA_SERIES_C[i]
    return acc


def f_series_factor(e):
    """Horner sum of the f series in e; f = 2^(-2/3) * factor."""
    acc = e * 0.0 + F_SERIES_C[8]
    for i in range(7, -1, -1):
        acc = acc * e + F_SERIES_C[i]
    return acc


def inv_series_e(zeta):
    """Series inverse e(zeta); full precision only for zeta <~ 0.02."""
    w = TWO_M13 * zeta
    acc = w * 0.0 + INV_SERIES_B[7]
    for i in range(6, -1, -1):
        acc = acc * w + INV_SERIES_B[i]
    return w * acc


def g_of_e(e):
    """(3/4)(x sqrt(x^2-1) - arccosh x) at x = 1+e, i.e. zeta^(3/2).

    Written in e so x^2-1 = e(2+e) carries no cancellation; arccosh through
    log1p for the same reason.  Accurate for e >~ 1e-3 (series covers below).
    """
    r = np.sqrt(e * (2.0 + e))
    return 0.75 * ((1.0 + e) * r - np.log1p(e + r))


# ---------------------------------------------------------------------------
# numpy backend

def hermite_values_numpy(n, x):
    """psi_n at each x via the normalized recurrence on a scaled mantissa.

    The mantissa pair renormalizes through a power-of-2 exponent offset, so no
    intermediate overflows or underflows for any n, x a float64 can hold; one
    ldexp at the end restores the true magnitude (which may itself underflow
    to 0, the correct answer there).
    """
    x = np.asarray(x, dtype=np.float64)
    log2_psi0 = (-0.25 * LN_PI - 0.5 * x * x) * INV_LN2
    e_off = np.floor(log2_psi0)
    m0 = np.exp2(log2_psi0 - e_off)
    ioff = e_off.astype(np.int64)
    if n == 0:
        return np.ldexp(m0, ioff)
    m1 = SQRT2 * x * m0
    if n > 1:
        ks = np.arange(2, n + 1, dtype=np.float64)
        c1 = np.sqrt(2.0 / ks)
        c2 = np.sqrt((ks - 1.0) / ks)
        for i in range(ks.shape[0]):
            m2 = c1[i] * x * m1 - c2[i] * m0
            m0 = m1
            m1 = m2
            a1 = np.abs(m1)
            big = a1 > _RESCALE_HI
            if big.any():
                m0 = np.where(big, m0 * _RESCALE_LO, m0)
                m1 = np.where(big, m1 * _RESCALE_LO, m1)
                ioff = np.where(big, ioff + 600, ioff)
            small = (a1 < _RESCALE_LO) & (np.abs(m0) < _RESCALE_LO)
            if small.any():
                m0 = np.where(small, m0 * _RESCALE_HI, m0)
                m1 = np.where(small, m1 * _RESCALE_HI, m1)
                ioff = np.where(small, ioff - 600, ioff)
    return np.ldexp(m1, ioff)


def _airy_series_np(t):
    # F, G Maclaurin sums and their derivative sums, all in double-double;
    # the t^3 power also stays in dd so high terms do not drift
    t3h, t3l = two_prod(t, t)
    t3h, t3l = dd_mul_d(t3h, t3l, t)
    fh = np.ones_like(t)
    fl = np.zeros_like(t)
    gh = t.copy()
    gl = np.zeros_like(t)
    fth = np.ones_like(t)
    ftl = np.zeros_like(t)
    gth = t.copy()
    gtl = np.zeros_like(t)
    mag = 1.0 + np.abs(t)
    for k in range(_MAX_TERMS):
        fth, ftl = dd_mul(fth, ftl, t3h, t3l)
        fth, ftl = dd_div_d(fth, ftl, (3.0 * k + 2.0) * (3.0 * k + 3.0))
        fh, fl = dd_add(fh, fl, fth, ftl)
        gth, gtl = dd_mul(gth, gtl, t3h, t3l)
        gth, gtl = dd_div_d(gth, gtl, (3.0 * k + 3.0) * (3.0 * k + 4.0))
        gh, gl = dd_add(gh, gl, gth, gtl)
        mag = mag + np.abs(fth) + np.abs(gth)
        done = (np.abs(fth) < 1e-35 * np.abs(fh)) & (
            np.abs(gth) < 1e-35 * np.maximum(np.abs(gh), 1e-300))
        if done.all():
            break
    fph, fpl = two_prod(t, t)
    fph, fpl = dd_div_d(fph, fpl, 2.0)
    fpth, fptl = fph, fpl
    k = 1
    while k < _MAX_TERMS:
        nh, nl = dd_mul(fpth, fptl, t3h, t3l)
        nh, nl = dd_mul_d(nh, nl, float(k + 1))
        nh, nl = dd_div_d(nh, nl, float(k) * (3.0 * k + 2.0) * (3.0 * k + 3.0))
        fpth, fptl = nh, nl
        fph, fpl = dd_add(fph, fpl, fpth, fptl)
        if (np.abs(fpth) < 1e-35 * np.maximum(np.abs(fph), 1e-300)).all():
            break
        k += 1
    gph = np.ones_like(t)
    gpl = np.zeros_like(t)
    gpth = np.ones_like(t)
    gptl = np.zeros_like(t)
    k = 0
    while k < _MAX_TERMS:
        nh, nl = dd_mul(gpth, gptl, t3h, t3l)
        nh, nl = dd_div_d(nh, nl, (3.0 * k + 1.0) * (3.0 * k + 3.0))
        gpth, gptl = nh, nl
        gph, gpl = dd_add(gph, gpl, gpth, gptl)
        if (np.abs(gpth) < 1e-35 * np.maximum(np.abs(gph), 1e-300)).all():
            break
        k += 1
    ah, al = dd_mul(fh, fl, AI0_HI, AI0_LO)
    bh, bl = dd_mul(gh, gl, AIP0_HI, AIP0_LO)
    aih, _ = dd_add(ah, al, bh, bl)
    ah, al = dd_mul(fph, fpl, AI0_HI, AI0_LO)
    bh, bl = dd_mul(gph, gpl, AIP0_HI, AIP0_LO)
    aiph, _ = dd_add(ah, al, bh, bl)
    err = 2.5e-16 * np.abs(aih) + 1e-31 * mag
    return aih, aiph, err


def _airy_asym_np(t):
    st = np.sqrt(t)
    z = (2.0 / 3.0) * t * st
    s_ai = np.ones_like(t)
    s_aip = np.ones_like(t)
    zk = np.ones_like(t)
    prev = np.full_like(t, 1e308)
    dropped = np.zeros_like(t)
    active = np.ones(t.shape, dtype=bool)
    sign = -1.0
    for k in range(1, 21):
        zk = zk * z
        term = _ASY_U[k] / zk
        stop = active & (np.abs(term) >= np.abs(prev))
        dropped = np.where(stop, np.abs(term), dropped)
        active = active & ~stop
        s_ai = np.where(active, s_ai + sign * term, s_ai)
        s_aip = np.where(active, s_aip + sign * (_ASY_V[k] / zk), s_aip)
        dropped = np.where(active, np.abs(term), dropped)
        prev = term
        sign = -sign
    q = t ** 0.25
    ez = np.exp(-z)
    pref = ez / (2.0 * SQRT_PI * q)
    ai = pref * s_ai
    aip = -q * ez / (2.0 * SQRT_PI) * s_aip
    # first dropped term plus an exp(-z) argument-rounding envelope
    err = np.abs(ai) * ((z + 6.0) * 3e-16) + pref * dropped
    return ai, aip, err


def airy_values_numpy(t):
    t = np.asarray(t, dtype=np.float64)
    ai = np.empty_like(t)
    aip = np.empty_like(t)
    err = np.empty_like(t)
    ser = t <= T_SWITCH
    if ser.any():
        a, ap, e = _airy_series_np(t[ser])
        ai[ser] = a
        aip[ser] = ap
        err[ser] = e
    asym = ~ser
    if asym.any():
        a, ap, e = _airy_asym_np(t[asym])
        ai[asym] = a
        aip[asym] = ap
        err[asym] = e
    method = np.where(ser, AIRY_SERIES, AIRY_ASYMPTOTIC).astype(np.int8)
    return ai, aip, err, method


def invert_zeta_values_numpy(zeta):
    """x - 1 solving the forward map = zeta, per element.

    Returns (e, ok); ok is False when any element hit the iteration cap
    (does not happen for finite nonnegative input, kept for the contract).
    """
    zeta = np.asarray(zeta, dtype=np.float64)
    e = inv_series_e(zeta)
    big = zeta > 1.2
    if big.any():
        w_all = zeta * np.sqrt(zeta)
        e = np.where(big, np.sqrt(4.0 * w_all / 3.0) - 1.0, e)
    active = zeta > ZETA_INV_SERIES
    if not active.any():
        return e, True
    w = zeta * np.sqrt(zeta)
    lo = np.zeros_like(e)
    hi = 2.0 * e + 1.0
    for _ in range(60):
        grow = active & (g_of_e(hi) < w)
        if not grow.any():
            break
        hi = np.where(grow, hi * 2.0, hi)
    for _ in range(_NEWTON_MAX):
        if not active.any():
            break
        g = g_of_e(e)
        resid = g - w
        under = g < w
        lo = np.where(active & under, np.maximum(lo, e), lo)
        hi = np.where(active & ~under, np.minimum(hi, e), hi)
        conv = np.abs(resid) <= _NEWTON_RTOL * w
        active = active & ~conv
        dg = 1.5 * np.sqrt(e * (2.0 + e))
        step = resid / np.where(dg > 0.0, dg, 1.0)
        enew = e - step
        outside = (enew <= lo) | (enew >= hi)
        enew = np.where(outside, 0.5 * (lo + hi), enew)
        # Fixed point: the update cannot move e, so the residual is
        # roundoff-limited and the iterate is accepted (scalar core does
        # the same).
        active = active & (enew != e)
        e = np.where(active, enew, e)
    return e, not active.any()


def zeta_from_e(e):
    """Forward map zeta(1+e) on an array; series under the seam, else direct."""
    e = np.asarray(e, dtype=np.float64)
    ser = TWO_13 * e * zeta_series_factor(e)
    direct = g_of_e(e) ** (2.0 / 3.0)
    return np.where(e < DELTA_ZETA_SERIES, ser, direct)


def f_from_e(e):
    """f = zeta/(x^2-1) at x = 1+e on an array; continuous limit 2^(-2/3) at 0."""
    e = np.asarray(e, dtype=np.float64)
    ser = TWO_M23 * f_series_factor(e)
    small = e < DELTA_F_SERIES
    denom = np.where(small, 1.0, e * (2.0 + e))
    direct = g_of_e(e) ** (2.0 / 3.0) / denom
    return np.where(small, ser, direct)


# ---------------------------------------------------------------------------
# numba backend: scalar cores compiled lazily, cached on disk

if USE_NUMBA:
    _nj = numba.njit(cache=True)

    # Rebind the shared elementwise helpers to compiled dispatchers.  The
    # composite bodies resolve these globals lazily at first-call compile
    # time, so the whole chain must point at dispatchers before then; the
    # vectorized backend keeps working since the same dispatchers accept
    # array arguments.
    two_sum = _nj(two_sum)
    quick_two_sum = _nj(quick_two_sum)
    two_prod = _nj(two_prod)
    dd_add = _nj(dd_add)
    dd_mul = _nj(dd_mul)
    dd_mul_d = _nj(dd_mul_d)
    dd_div_d = _nj(dd_div_d)
    zeta_series_factor = _nj(zeta_series_factor)
    f_series_factor = _nj(f_series_factor)
    inv_series_e = _nj(inv_series_e)

    _two_sum = two_sum
    _quick_two_sum = quick_two_sum
    _two_prod = two_prod
    _dd_add = dd_add
    _dd_mul = dd_mul
    _dd_mul_d = dd_mul_d
    _dd_div_d = dd_div_d
    _zeta_series_factor = zeta_series_factor
    _f_series_factor = f_series_factor
    _inv_series_e = inv_series_e

    @_nj
    def _g_of_e_s(e):
        r = math.sqrt(e * (2.0 + e))
        return 0.75 * ((1.0 + e) * r - math.log1p(e + r))

    @_nj
    def _hermite_scalar(n, x):
        log2_psi0 = (-0.25 * LN_PI - 0.5 * x * x) * INV_LN2
        e_off = math.floor(log2_psi0)
        m0 = 2.0 ** (log2_psi0 - e_off)
        ioff = int(e_off)
        if n == 0:
            return math.ldexp(m0, ioff)
        m1 = SQRT2 * x * m0
        for k in range(2, n + 1):
            m2 = math.sqrt(2.0 / k) * x * m1 - math.sqrt((k - 1.0) / k) * m0
            m0 = m1
            m1 = m2
            a1 = abs(m1)
            if a1 > _RESCALE_HI:
                m0 *= _RESCALE_LO
                m1 *= _RESCALE_LO
                ioff += 600
            elif a1 < _RESCALE_LO and abs(m0) < _RESCALE_LO:
                m0 *= _RESCALE_HI
                m1 *= _RESCALE_HI
                ioff -= 600
        return math.ldexp(m1, ioff)

    @_nj
    def hermite_values_numba(n, x):
        out = np.empty_like(x)
        for i in range(x.shape[0]):
            out[i] = _hermite_scalar(n, x[i])
        return out

    @_nj
    def _airy_series_s(t):
        t3h, t3l = _two_prod(t, t)
        t3h, t3l = _dd_mul_d(t3h, t3l, t)
        fh, fl = 1.0, 0.0
        gh, gl = t, 0.0
        fth, ftl = 1.0, 0.0
        gth, gtl = t, 0.0
        mag = 1.0 + abs(t)
        for k in range(_MAX_TERMS):
            fth, ftl = _dd_mul(fth, ftl, t3h, t3l)
            fth, ftl = _dd_div_d(fth, ftl, (3.0 * k + 2.0) * (3.0 * k + 3.0))
            fh, fl = _dd_add(fh, fl, fth, ftl)
            gth, gtl = _dd_mul(gth, gtl, t3h, t3l)
            gth, gtl = _dd_div_d(gth, gtl, (3.0 * k + 3.0) * (3.0 * k + 4.0))
            gh, gl = _dd_add(gh, gl, gth, gtl)
            mag += abs(fth) + abs(gth)
            if abs(fth) < 1e-35 * abs(fh) and abs(gth) < 1e-35 * max(abs(gh), 1e-300):
                break
        fph, fpl = _two_prod(t, t)
        fph, fpl = _dd_div_d(fph, fpl, 2.0)
        fpth, fptl = fph, fpl
        k = 1
        while k < _MAX_TERMS:
            nh, nl = _dd_mul(fpth, fptl, t3h, t3l)
            nh, nl = _dd_mul_d(nh, nl, float(k + 1))
            nh, nl = _dd_div_d(nh, nl, float(k) * (3.0 * k + 2.0) * (3.0 * k + 3.0))
            fpth, fptl = nh, nl
            fph, fpl = _dd_add(fph, fpl, fpth, fptl)
            if abs(fpth) < 1e-35 * max(abs(fph), 1e-300):
                break
            k += 1
        gph, gpl = 1.0, 0.0
        gpth, gptl = 1.0, 0.0
        k = 0
        while k < _MAX_TERMS:
            nh, nl = _dd_mul(gpth, gptl, t3h, t3l)
            nh, nl = _dd_div_d(nh, nl, (3.0 * k + 1.0) * (3.0 * k + 3.0))
            gpth, gptl = nh, nl
            gph, gpl = _dd_add(gph, gpl, gpth, gptl)
            if abs(gpth) < 1e-35 * max(abs(gph), 1e-300):
                break
            k += 1
        ah, al = _dd_mul(fh, fl, AI0_HI, AI0_LO)
        bh, bl = _dd_mul(gh, gl, AIP0_HI, AIP0_LO)
        aih, _ = _dd_add(ah, al, bh, bl)
        ah, al = _dd_mul(fph, fpl, AI0_HI, AI0_LO)
        bh, bl = _dd_mul(gph, gpl, AIP0_HI, AIP0_LO)
        aiph, _ = _dd_add(ah, al, bh, bl)
        err = 2.5e-16 * abs(aih) + 1e-31 * mag
        return aih, aiph, err

    @_nj
    def _airy_asym_s(t):
        st = math.sqrt(t)
        z = (2.0 / 3.0) * t * st
        s_ai = 1.0
        s_aip = 1.0
        zk = 1.0
        prev = 1e308
        dropped = 0.0
        sign = -1.0
        for k in range(1, 21):
            zk *= z
            term = _ASY_U[k] / zk
            if abs(term) >= abs(prev):
                dropped = abs(term)
                break
            s_ai += sign * term
            s_aip += sign * (_ASY_V[k] / zk)
            dropped = abs(term)
            prev = term
            sign = -sign
        q = t ** 0.25
        ez = math.exp(-z)
        pref = ez / (2.0 * SQRT_PI * q)
        ai = pref * s_ai
        aip = -q * ez / (2.0 * SQRT_PI) * s_aip
        err = abs(ai) * ((z + 6.0) * 3e-16) + pref * dropped
        return ai, aip, err

    @_nj
    def airy_values_numba(t):
        ai = np.empty_like(t)
        aip = np.empty_like(t)
        err = np.empty_like(t)
        method = np.empty(t.shape[0], dtype=np.int8)
        for i in range(t.shape[0]):
            ti = t[i]
            if ti <= T_SWITCH:
                a, ap, e = _airy_series_s(ti)
                method[i] = AIRY_SERIES
            else:
                a, ap, e = _airy_asym_s(ti)
                method[i] = AIRY_ASYMPTOTIC
            ai[i] = a
            aip[i] = ap
            err[i] = e
        return ai, aip, err, method

    @_nj
    def _invert_zeta_scalar(zeta):
        if zeta <= ZETA_INV_SERIES:
            return _inv_series_e(zeta)
        w = zeta * math.sqrt(zeta)
        if zeta <= 1.2:
            e = _inv_series_e(zeta)
        else:
            e = math.sqrt(4.0 * w / 3.0) - 1.0
        lo = 0.0
        hi = 2.0 * e + 1.0
        for _ in range(60):
            if _g_of_e_s(hi) >= w:
                break
            hi *= 2.0
        for _ in range(_NEWTON_MAX):
            g = _g_of_e_s(e)
            resid = g - w
            if g < w:
                if e > lo:
                    lo = e
            else:
                if e < hi:
                    hi = e
            if abs(resid) <= _NEWTON_RTOL * w:
                return e
            dg = 1.5 * math.sqrt(e * (2.0 + e))
            enew = e - resid / dg
            if enew <= lo or enew >= hi:
                enew = 0.5 * (lo + hi)
            if enew == e:
                return e
            e = enew
        return math.nan

    @_nj
    def invert_zeta_kernel_numba(zeta):
        out = np.empty_like(zeta)
        for i in range(zeta.shape[0]):
            out[i] = _invert_zeta_scalar(zeta[i])
        return out

    def invert_zeta_values_numba(zeta):
        zeta = np.asarray(zeta, dtype=np.float64)
        e = invert_zeta_kernel_numba(np.ascontiguousarray(zeta))
        return e, not np.isnan(e).any()

else:
    hermite_values_numba = None
    airy_values_numba = None
    invert_zeta_values_numba = None


def _hermite_active(n, x):
    x = np.ascontiguousarray(x, dtype=np.float64)
    return hermite_values_numba(n, x)


def _airy_active(t):
    t = np.ascontiguousarray(t, dtype=np.float64)
    return airy_values_numba(t)


if USE_NUMBA:
    hermite_values = _hermite_active
    airy_values = _airy_active
    invert_zeta_values = invert_zeta_values_numba
else:
    hermite_values = hermite_values_numpy
    airy_values = airy_values_numpy
    invert_zeta_values = invert_zeta_values_numpy
