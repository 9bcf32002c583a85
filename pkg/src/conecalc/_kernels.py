"""Float kernels for maximizing a form on the unit sphere.

Two interchangeable backends implement the same projected gradient ascent:
a numba ``@njit`` loop and a vectorized numpy version.  Numba is used when
it imports and ``CONECALC_DISABLE_NUMBA`` is unset (or ``0``).
"""
from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

_DISABLED = os.environ.get("CONECALC_DISABLE_NUMBA", "0").lower() not in ("", "0", "false", "no")
HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and not _DISABLED


# sufficient-increase factor; without it the step can lock onto a value that
# just reflects the iterate across the maximum
ARMIJO = 0.1


def default_backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


def _njit(fn):
    return numba.njit(cache=True)(fn) if HAVE_NUMBA else fn


# numpy ---------------------------------------------------------------------

def value_grad_numpy(exps: np.ndarray, coeffs: np.ndarray, X: np.ndarray):
    """Values ``(S,)`` and gradients ``(S, n)`` of the polynomial at rows of ``X``."""
    S, n = X.shape
    d = int(exps.max()) if exps.size else 0
    pw = np.ones((S, n, d + 1))
    for e in range(1, d + 1):
        pw[:, :, e] = pw[:, :, e - 1] * X
    cols = np.arange(n)
    # factors[s, t, i] = x_{s,i} ** exps[t, i]
    factors = pw[:, cols[None, :], exps]
    vals = factors.prod(axis=2) @ coeffs
    grads = np.empty((S, n))
    for i in range(n):
        lowered = exps[:, i] - 1
        mask = lowered >= 0
        f_i = factors.copy()
        f_i[:, :, i] = np.where(mask[None, :], pw[:, i, np.maximum(lowered, 0)], 0.0)
        grads[:, i] = f_i.prod(axis=2) @ (coeffs * exps[:, i])
    return vals, grads


def ascend_numpy(exps, coeffs, X0, iters, step0):
    X = X0 / np.linalg.norm(X0, axis=1, keepdims=True)
    val, g = value_grad_numpy(exps, coeffs, X)
    step = np.full(X.shape[0], step0)
    for _ in range(iters):
        pg = g - (g * X).sum(axis=1, keepdims=True) * X
        Y = X + step[:, None] * pg
        Y /= np.linalg.norm(Y, axis=1, keepdims=True)
        vy, gy = value_grad_numpy(exps, coeffs, Y)
        better = vy > val + ARMIJO * step * (pg * pg).sum(axis=1)
        X = np.where(better[:, None], Y, X)
        g = np.where(better[:, None], gy, g)
        val = np.where(better, vy, val)
        step = np.where(better, step * 2.0, step * 0.5)
    return val, X


# numba ---------------------------------------------------------------------

@_njit
def _value_grad_point(exps, coeffs, x, pw, grad):
    n = x.shape[0]
    d = pw.shape[1] - 1
    for i in range(n):
        pw[i, 0] = 1.0
        for e in range(1, d + 1):
            pw[i, e] = pw[i, e - 1] * x[i]
    for i in range(n):
        grad[i] = 0.0
    val = 0.0
    for t in range(exps.shape[0]):
        c = coeffs[t]
        mono = c
        for i in range(n):
            mono *= pw[i, exps[t, i]]
        val += mono
        for i in range(n):
            a = exps[t, i]
            if a > 0:
                part = c * a * pw[i, a - 1]
                for j in range(n):
                    if j != i:
                        part *= pw[j, exps[t, j]]
                grad[i] += part
    return val


@_njit
def _ascend_loop(exps, coeffs, X0, iters, step0):
    S, n = X0.shape
    d = 0
    for t in range(exps.shape[0]):
        for i in range(n):
            if exps[t, i] > d:
                d = exps[t, i]
    pw = np.empty((n, d + 1))
    g = np.empty(n)
    gy = np.empty(n)
    x = np.empty(n)
    y = np.empty(n)
    vals = np.empty(S)
    Xout = np.empty((S, n))
    for s in range(S):
        nrm = 0.0
        for i in range(n):
            nrm += X0[s, i] * X0[s, i]
        nrm = np.sqrt(nrm)
        for i in range(n):
            x[i] = X0[s, i] / nrm
        val = _value_grad_point(exps, coeffs, x, pw, g)
        step = step0
        for _ in range(iters):
            dot = 0.0
            for i in range(n):
                dot += g[i] * x[i]
            nrm = 0.0
            pg2 = 0.0
            for i in range(n):
                p = g[i] - dot * x[i]
                pg2 += p * p
                y[i] = x[i] + step * p
                nrm += y[i] * y[i]
            nrm = np.sqrt(nrm)
            for i in range(n):
                y[i] /= nrm
            vy = _value_grad_point(exps, coeffs, y, pw, gy)
            if vy > val + ARMIJO * step * pg2:
                val = vy
                for i in range(n):
                    x[i] = y[i]
                    g[i] = gy[i]
                step *= 2.0
            else:
                step *= 0.5
        vals[s] = val
        for i in range(n):
            Xout[s, i] = x[i]
    return vals, Xout


def ascend(exps, coeffs, X0, iters=200, step0=None, backend=None):
    """Projected gradient ascent of ``sum coeffs * x**exps`` on the sphere.

    Each row of ``X0`` is an independent start.  Accepted steps double the
    step size, rejected ones halve it; a step is accepted only on sufficient
    increase, so returned values never decrease from the starting values.  Returns ``(values, points)``.
    """
    exps = np.ascontiguousarray(exps, dtype=np.int64)
    coeffs = np.ascontiguousarray(coeffs, dtype=np.float64)
    X0 = np.ascontiguousarray(X0, dtype=np.float64)
    if step0 is None:
        deg = int(exps.sum(axis=1).max()) if exps.size else 1
        step0 = 1.0 / max(1.0, deg * float(np.abs(coeffs).sum()))
    backend = backend or default_backend()
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not installed")
        return _ascend_loop(exps, coeffs, X0, iters, float(step0))
    if backend == "numpy":
        return ascend_numpy(exps, coeffs, X0, iters, float(step0))
    raise ValueError(f"unknown backend {backend!r}")
