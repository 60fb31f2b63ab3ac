#!/usr/bin/env python3
"""Generate a table of imaginary parts of the first K nontrivial zeta zeros.

Output format matches the classic Odlyzko "zeros1" tables: one decimal height
per line.  The first N_EXACT zeros are computed with mpmath.zetazero (slow,
certified); the rest come from a vectorized Riemann-Siegel Z(t) evaluation
(main sum plus Gabcke correction terms C0..C2) with bisection refinement.

Completeness is verified against mpmath.zetazero anchors: the count of sign
changes between consecutive anchor heights must equal the index difference,
otherwise the segment is rescanned with a finer grid.

Accuracy: the Riemann-Siegel remainder after C2 is |R| <= 0.011 (t/2pi)^{-7/4}
(Gabcke 1979), i.e. < 3e-6 for t > 800.  Heights are printed with 9 decimals,
so entries for n > N_EXACT are good to ~1e-5 absolute at worst; the small-j
zeros that decide the minimal lambda-gap are mpmath-exact.
"""

import argparse
import sys
import time

import numpy as np
import mpmath
from numpy.polynomial.chebyshev import Chebyshev
from scipy.special import loggamma

K_DEFAULT = 100000
N_EXACT = 500  # first zeros done with mpmath.zetazero


def theta(t):
    """Riemann-Siegel theta via the exact loggamma expression (vectorized)."""
    z = 0.25 + 0.5j * np.asarray(t, dtype=np.float64)
    return np.imag(loggamma(z)) - np.asarray(t) * 0.5 * np.log(np.pi)


def build_correction_splines():
    """Gabcke C0, C1, C2 on p in [0,1] as Chebyshev series of Psi.

    Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p) is entire (removable
    singularities at p = 1/4, 3/4), so its Chebyshev coefficients decay
    super-geometrically and derivatives of the series are stable.  Samples are
    taken with mpmath at 40 digits: the direct double-precision expression for
    Psi and especially its high derivatives loses all accuracy near the
    removable singularities.
    """
    mpmath.mp.dps = 40
    deg = 96
    k = np.arange(deg + 1)
    xk = np.cos(np.pi * (k + 0.5) / (deg + 1))  # Chebyshev-Gauss nodes on [-1,1]
    vals = np.empty(deg + 1)
    sixteenth = mpmath.mpf(1) / 16
    for i, x in enumerate(xk):
        pp = (mpmath.mpf(x) + 1) / 2
        num = mpmath.cos(2 * mpmath.pi * (pp * pp - pp - sixteenth))
        den = mpmath.cos(2 * mpmath.pi * pp)
        vals[i] = float(num / den)
    # interpolation coefficients via the discrete orthogonality of T_j at the nodes
    coef = np.empty(deg + 1)
    tkj = np.cos(np.pi * np.outer(k + 0.5, k) / (deg + 1))  # tkj[i,j] = T_j(x_i)
    for j in range(deg + 1):
        coef[j] = 2.0 / (deg + 1) * np.dot(vals, tkj[:, j])
    coef[0] *= 0.5
    psi = Chebyshev(coef, domain=[0.0, 1.0])
    c0 = psi
    c1 = -psi.deriv(3) / (96 * np.pi**2)
    c2 = psi.deriv(6) / (18432 * np.pi**4) + psi.deriv(2) / (64 * np.pi**2)
    return c0, c1, c2


class RiemannSiegelZ:
    def __init__(self):
        self.c0, self.c1, self.c2 = build_correction_splines()
        nmax = 4096
        self.logn = np.log(np.arange(1, nmax + 1))
        self.rsqn = 1.0 / np.sqrt(np.arange(1, nmax + 1))

    def __call__(self, t):
        """Vectorized Z(t); all entries of t must share the same nu."""
        t = np.asarray(t, dtype=np.float64)
        a = np.sqrt(t / (2 * np.pi))
        nu = int(np.floor(a[0]))
        if not (np.floor(a) == nu).all():
            raise ValueError("mixed main-sum lengths in one batch")
        th = theta(t)
        # main sum: sum_{n<=nu} cos(theta - t ln n)/sqrt(n)
        phase = th[:, None] - t[:, None] * self.logn[None, :nu]
        main = 2.0 * (np.cos(phase) * self.rsqn[None, :nu]).sum(axis=1)
        # correction
        p = a - nu
        x = a ** -0.5  # (t/2pi)^{-1/4}
        corr = self.c0(p) + self.c1(p) * x**2 + self.c2(p) * x**4
        sign = 1.0 if (nu % 2 == 1) else -1.0
        return main + sign * x * corr

    def eval_any(self, t, chunk=200_000):
        """Z(t) for arbitrary sorted t, batching runs of equal nu."""
        t = np.asarray(t, dtype=np.float64)
        out = np.empty_like(t)
        nu = np.floor(np.sqrt(t / (2 * np.pi))).astype(np.int64)
        start = 0
        n = len(t)
        while start < n:
            stop = start
            while stop < n and nu[stop] == nu[start] and stop - start < chunk:
                stop += 1
            out[start:stop] = self(t[start:stop])
            start = stop
        return out


def scan_sign_changes(zfun, lo, hi, step):
    """Bracket every sign change of Z on [lo, hi] with the given grid step."""
    m = int(np.ceil((hi - lo) / step)) + 1
    brackets = []
    grid_lo = lo
    block = 400_000
    prev_t = prev_z = None
    while grid_lo < hi:
        grid_hi = min(grid_lo + block * step, hi)
        ts = np.arange(grid_lo, grid_hi + step * 0.5, step)
        ts[-1] = min(ts[-1], hi)
        zs = zfun.eval_any(ts)
        if prev_t is not None:
            ts = np.concatenate(([prev_t], ts))
            zs = np.concatenate(([prev_z], zs))
        flip = np.nonzero(np.signbit(zs[:-1]) != np.signbit(zs[1:]))[0]
        for i in flip:
            brackets.append((ts[i], ts[i + 1]))
        prev_t, prev_z = ts[-1], zs[-1]
        grid_lo = grid_hi + step
    return brackets


def bisect_all(zfun, brackets, iters=48):
    lo = np.array([b[0] for b in brackets])
    hi = np.array([b[1] for b in brackets])
    flo = zfun.eval_any(lo.copy())
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        order = np.argsort(mid)
        fmid = np.empty_like(mid)
        fmid[order] = zfun.eval_any(mid[order])
        left = np.signbit(flo) != np.signbit(fmid)
        hi = np.where(left, mid, hi)
        lo = np.where(left, lo, mid)
        flo = np.where(left, flo, fmid)
    return 0.5 * (lo + hi)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=K_DEFAULT)
    ap.add_argument("--out", default="zeta_zeros.txt")
    ap.add_argument("--step", type=float, default=0.01)
    args = ap.parse_args()

    t0 = time.time()
    mpmath.mp.dps = 20

    print("exact zeros 1..%d via mpmath" % N_EXACT, flush=True)
    exact = [mpmath.zetazero(n).imag for n in range(1, N_EXACT + 1)]
    exact_f = [float(x) for x in exact]
    print("  done in %.1fs" % (time.time() - t0), flush=True)

    # anchor indices with mpmath-certified heights; counts are verified
    # segment by segment between them
    anchors = [N_EXACT]
    step_idx = 2000
    while anchors[-1] + step_idx < args.count:
        anchors.append(anchors[-1] + step_idx)
        step_idx = min(step_idx * 2, 20000)
    anchors.append(args.count)
    anchor_t = {}
    for n in anchors:
        anchor_t[n] = float(mpmath.zetazero(n).imag)
        print("  anchor %d -> %.9f (%.1fs)" % (n, anchor_t[n], time.time() - t0), flush=True)

    zfun = RiemannSiegelZ()
    heights = exact_f[:]
    for lo_idx, hi_idx in zip(anchors[:-1], anchors[1:]):
        want = hi_idx - lo_idx
        lo_t, hi_t = anchor_t[lo_idx], anchor_t[hi_idx]
        step = args.step
        for attempt in range(6):
            # pad so the endpoint zeros themselves are captured exactly once
            brackets = scan_sign_changes(zfun, lo_t + 1e-6, hi_t + 1e-6, step)
            if len(brackets) == want:
                break
            print("  segment (%d,%d]: found %d, want %d; refining grid" %
                  (lo_idx, hi_idx, len(brackets), want), flush=True)
            step /= 4
        else:
            print("FATAL: segment (%d,%d] count mismatch" % (lo_idx, hi_idx))
            sys.exit(1)
        zs = bisect_all(zfun, brackets)
        heights.extend(zs.tolist())
        print("  segment (%d,%d] ok (%.1fs)" % (lo_idx, hi_idx, time.time() - t0), flush=True)

    assert len(heights) == args.count
    diffs = np.diff(np.array(heights))
    assert (diffs > 0).all(), "non-monotone output"
    print("min consecutive t-gap: %.6f at index %d" % (diffs.min(), int(diffs.argmin()) + 1))

    with open(args.out, "w") as fh:
        for h in heights:
            fh.write("%.9f\n" % h)
    print("wrote %d heights to %s in %.1fs" % (len(heights), args.out, time.time() - t0))


if __name__ == "__main__":
    main()
