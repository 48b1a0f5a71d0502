"""Cyclic Jacobi eigensolver kernels, with and without numba.

The sweep loops are the only hot scalar code in the package; everything else
is small-matrix BLAS.  When numba is importable the loop kernels are jitted
(nopython, IEEE semantics, no fastmath).  Setting ``OPENTROPY_NO_NUMBA=1``
in the environment selects the vectorized pure-numpy lane instead; both
lanes implement the same rotation sequence and are timed against each other
in ``benchmarks/bench_eig.py``.

Kernel contract: the input array is overwritten; returns
``(diag, vectors, sweeps, offnorm)`` where ``offnorm`` is the final
off-diagonal Frobenius norm.  Eigenvalues are unsorted.
"""

import os

import numpy as np

_ENV_FLAG = "OPENTROPY_NO_NUMBA"


def _env_disabled() -> bool:
    return os.environ.get(_ENV_FLAG, "").strip().lower() in ("1", "true", "yes", "on")


try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba installed
    _HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


def _offnorm_real(a, n):
    off = 0.0
    for p in range(n - 1):
        for q in range(p + 1, n):
            off += 2.0 * a[p, q] * a[p, q]
    return np.sqrt(off)


def _sweep_real(a, v, n):
    for p in range(n - 1):
        for q in range(p + 1, n):
            apq = a[p, q]
            if apq == 0.0:
                continue
            tau = (a[q, q] - a[p, p]) / (2.0 * apq)
            if tau >= 0.0:
                t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
            else:
                t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            for i in range(n):
                aip = a[i, p]
                aiq = a[i, q]
                a[i, p] = c * aip - s * aiq
                a[i, q] = s * aip + c * aiq
            for i in range(n):
                api = a[p, i]
                aqi = a[q, i]
                a[p, i] = c * api - s * aqi
                a[q, i] = s * api + c * aqi
            for i in range(n):
                vip = v[i, p]
                viq = v[i, q]
                v[i, p] = c * vip - s * viq
                v[i, q] = s * vip + c * viq


def _jacobi_real_loops(a, thresh, max_sweeps):
    n = a.shape[0]
    v = np.eye(n)
    sweeps = 0
    off = _offnorm_real(a, n)
    while off > thresh and sweeps < max_sweeps:
        _sweep_real(a, v, n)
        sweeps += 1
        off = _offnorm_real(a, n)
    w = np.empty(n)
    for i in range(n):
        w[i] = a[i, i]
    return w, v, sweeps, off


def _offnorm_herm(a, n):
    off = 0.0
    for p in range(n - 1):
        for q in range(p + 1, n):
            off += 2.0 * (a[p, q] * np.conj(a[p, q])).real
    return np.sqrt(off)


def _sweep_herm(a, v, n):
    for p in range(n - 1):
        for q in range(p + 1, n):
            apq = a[p, q]
            r = abs(apq)
            if r == 0.0:
                continue
            phase = apq / r
            tau = (a[q, q].real - a[p, p].real) / (2.0 * r)
            if tau >= 0.0:
                t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
            else:
                t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            # unitary block [[c, s], [-s*conj(phase), c*conj(phase)]]
            uqp = -s * np.conj(phase)
            uqq = c * np.conj(phase)
            for i in range(n):
                aip = a[i, p]
                aiq = a[i, q]
                a[i, p] = aip * c + aiq * uqp
                a[i, q] = aip * s + aiq * uqq
            for i in range(n):
                api = a[p, i]
                aqi = a[q, i]
                a[p, i] = c * api + np.conj(uqp) * aqi
                a[q, i] = s * api + np.conj(uqq) * aqi
            for i in range(n):
                vip = v[i, p]
                viq = v[i, q]
                v[i, p] = vip * c + viq * uqp
                v[i, q] = vip * s + viq * uqq


def _jacobi_herm_loops(a, thresh, max_sweeps):
    n = a.shape[0]
    v = np.zeros((n, n), dtype=np.complex128)
    for i in range(n):
        v[i, i] = 1.0 + 0.0j
    sweeps = 0
    off = _offnorm_herm(a, n)
    while off > thresh and sweeps < max_sweeps:
        _sweep_herm(a, v, n)
        sweeps += 1
        off = _offnorm_herm(a, n)
    w = np.empty(n)
    for i in range(n):
        w[i] = a[i, i].real
    return w, v, sweeps, off


def jacobi_real_numpy(a, thresh, max_sweeps):
    """Pure-numpy lane: same rotation sequence, vectorized row/col updates."""
    n = a.shape[0]
    v = np.eye(n)
    sweeps = 0

    def off(m):
        o = m - np.diag(np.diagonal(m))
        return float(np.sqrt(np.sum(o * o)))

    current = off(a)
    while current > thresh and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                ap = c * a[:, p] - s * a[:, q]
                aq = s * a[:, p] + c * a[:, q]
                a[:, p] = ap
                a[:, q] = aq
                rp = c * a[p, :] - s * a[q, :]
                rq = s * a[p, :] + c * a[q, :]
                a[p, :] = rp
                a[q, :] = rq
                vp = c * v[:, p] - s * v[:, q]
                vq = s * v[:, p] + c * v[:, q]
                v[:, p] = vp
                v[:, q] = vq
        sweeps += 1
        current = off(a)
    return np.diagonal(a).copy(), v, sweeps, current


def jacobi_herm_numpy(a, thresh, max_sweeps):
    """Pure-numpy lane for Hermitian input."""
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    sweeps = 0

    def off(m):
        o = m - np.diag(np.diagonal(m))
        return float(np.sqrt(np.sum((o * o.conj()).real)))

    current = off(a)
    while current > thresh and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r == 0.0:
                    continue
                phase = apq / r
                tau = (a[q, q].real - a[p, p].real) / (2.0 * r)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # unitary block [[c, s], [-s*conj(phase), c*conj(phase)]]
                uqp = -s * np.conj(phase)
                uqq = c * np.conj(phase)
                ap = c * a[:, p] + uqp * a[:, q]
                aq = s * a[:, p] + uqq * a[:, q]
                a[:, p] = ap
                a[:, q] = aq
                rp = c * a[p, :] + np.conj(uqp) * a[q, :]
                rq = s * a[p, :] + np.conj(uqq) * a[q, :]
                a[p, :] = rp
                a[q, :] = rq
                vp = c * v[:, p] + uqp * v[:, q]
                vq = s * v[:, p] + uqq * v[:, q]
                v[:, p] = vp
                v[:, q] = vq
        sweeps += 1
        current = off(a)
    return np.diagonal(a).real.copy(), v, sweeps, current


if _HAVE_NUMBA:
    _offnorm_real = njit(cache=True)(_offnorm_real)
    _sweep_real = njit(cache=True)(_sweep_real)
    _offnorm_herm = njit(cache=True)(_offnorm_herm)
    _sweep_herm = njit(cache=True)(_sweep_herm)
    jacobi_real_numba = njit(cache=True)(_jacobi_real_loops)
    jacobi_herm_numba = njit(cache=True)(_jacobi_herm_loops)
else:
    jacobi_real_numba = None
    jacobi_herm_numba = None

ACCELERATED = _HAVE_NUMBA and not _env_disabled()

if ACCELERATED:
    jacobi_real = jacobi_real_numba
    jacobi_herm = jacobi_herm_numba
else:
    jacobi_real = jacobi_real_numpy
    jacobi_herm = jacobi_herm_numpy
