# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled dense eigen kernels: cyclic Jacobi, balancing, Householder-Hessenberg, Francis QR.

Mirrors ``_fallback`` exactly; the selection happens in ``digraph_spectra.eigen._backend``.
"""

import numpy as np

from libc.math cimport fabs, sqrt, hypot, copysign

from ._errors import ConvergenceError

cdef double EPS = np.finfo(float).eps
cdef double RADIX = 2.0


def jacobi_eigh(a_in, int max_sweeps=60):
    cdef double[:, ::1] a = np.array(a_in, dtype=np.float64, order="C")
    cdef Py_ssize_t n = a.shape[0]
    V_arr = np.eye(n)
    cdef double[:, ::1] V = V_arr
    cdef Py_ssize_t p, q, k
    cdef int sweep
    cdef bint rotated
    cdef double apq, app, aqq, theta, t, c, s, x, y
    for sweep in range(1, max_sweeps + 1):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                app = a[p, p]
                aqq = a[q, q]
                if fabs(apq) <= EPS * sqrt(fabs(app * aqq)) or apq == 0.0:
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                rotated = True
                theta = (aqq - app) / (2.0 * apq)
                t = copysign(1.0, theta) / (fabs(theta) + hypot(theta, 1.0))
                c = 1.0 / hypot(t, 1.0)
                s = t * c
                for k in range(n):
                    x = a[k, p]
                    y = a[k, q]
                    a[k, p] = c * x - s * y
                    a[k, q] = s * x + c * y
                for k in range(n):
                    x = a[p, k]
                    y = a[q, k]
                    a[p, k] = c * x - s * y
                    a[q, k] = s * x + c * y
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    x = V[k, p]
                    y = V[k, q]
                    V[k, p] = c * x - s * y
                    V[k, q] = s * x + c * y
        if not rotated:
            w = np.empty(n)
            for k in range(n):
                w[k] = a[k, k]
            return w, V_arr, sweep
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps", iterations=max_sweeps)


def balance(double[:, ::1] a):
    cdef Py_ssize_t n = a.shape[0]
    scale_arr = np.ones(n)
    cdef double[::1] scale = scale_arr
    cdef bint done = False
    cdef Py_ssize_t i, j
    cdef double c, r, g, f, s
    while not done:
        done = True
        for i in range(n):
            c = 0.0
            r = 0.0
            for j in range(n):
                if j != i:
                    c += fabs(a[j, i])
                    r += fabs(a[i, j])
            if c != 0.0 and r != 0.0:
                g = r / RADIX
                f = 1.0
                s = c + r
                while c < g:
                    f *= RADIX
                    c *= RADIX * RADIX
                g = r * RADIX
                while c > g:
                    f /= RADIX
                    c /= RADIX * RADIX
                if (c + r) / f < 0.95 * s:
                    done = False
                    scale[i] *= f
                    for j in range(n):
                        a[i, j] /= f
                    for j in range(n):
                        a[j, i] *= f
    return scale_arr


def hessenberg(double[:, ::1] a):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t k, i, j, len_
    cdef double alpha, vnorm2, beta, acc
    v_arr = np.empty(n)
    cdef double[::1] v = v_arr
    for k in range(n - 2):
        alpha = 0.0
        for i in range(k + 1, n):
            v[i] = a[i, k]
            alpha += v[i] * v[i]
        alpha = sqrt(alpha)
        if alpha == 0.0:
            continue
        if v[k + 1] > 0:
            alpha = -alpha
        v[k + 1] -= alpha
        vnorm2 = 0.0
        for i in range(k + 1, n):
            vnorm2 += v[i] * v[i]
        if vnorm2 == 0.0:
            continue
        beta = 2.0 / vnorm2
        for j in range(k, n):
            acc = 0.0
            for i in range(k + 1, n):
                acc += v[i] * a[i, j]
            acc *= beta
            for i in range(k + 1, n):
                a[i, j] -= acc * v[i]
        for i in range(n):
            acc = 0.0
            for j in range(k + 1, n):
                acc += a[i, j] * v[j]
            acc *= beta
            for j in range(k + 1, n):
                a[i, j] -= acc * v[j]
        for i in range(k + 2, n):
            a[i, k] = 0.0
        a[k + 1, k] = alpha


def hqr(h, long max_iter):
    cdef double[:, ::1] a = np.array(h, dtype=np.float64, order="C")
    cdef Py_ssize_t n = a.shape[0]
    wr_arr = np.zeros(n)
    wi_arr = np.zeros(n)
    cdef double[::1] wr = wr_arr
    cdef double[::1] wi = wi_arr
    cdef Py_ssize_t nn, m, l, k, j, i, mmin
    cdef long its, total = 0
    cdef double z = 0, y = 0, x = 0, w = 0, v = 0, u = 0, t = 0, s = 0, r = 0, q = 0, p = 0
    cdef double anorm = 0.0, pp
    for i in range(n):
        for j in range(i - 1 if i > 0 else 0, n):
            anorm += fabs(a[i, j])
    nn = n - 1
    while nn >= 0:
        its = 0
        while True:
            l = nn
            while l > 0:
                s = fabs(a[l - 1, l - 1]) + fabs(a[l, l])
                if s == 0.0:
                    s = anorm
                if fabs(a[l, l - 1]) <= EPS * s:
                    a[l, l - 1] = 0.0
                    break
                l -= 1
            x = a[nn, nn]
            if l == nn:
                wr[nn] = x + t
                wi[nn] = 0.0
                nn -= 1
            else:
                y = a[nn - 1, nn - 1]
                w = a[nn, nn - 1] * a[nn - 1, nn]
                if l == nn - 1:
                    p = 0.5 * (y - x)
                    q = p * p + w
                    z = sqrt(fabs(q))
                    x += t
                    if q >= 0.0:
                        z = p + copysign(z, p)
                        wr[nn - 1] = x + z
                        wr[nn] = x + z
                        if z != 0.0:
                            wr[nn] = x - w / z
                        wi[nn - 1] = 0.0
                        wi[nn] = 0.0
                    else:
                        wr[nn - 1] = x + p
                        wr[nn] = x + p
                        wi[nn - 1] = z
                        wi[nn] = -z
                    nn -= 2
                else:
                    if total >= max_iter:
                        raise ConvergenceError(
                            f"QR iteration cap {max_iter} exceeded on block [{l}, {nn}]",
                            block=(l, nn),
                            iterations=total,
                        )
                    if its > 0 and its % 10 == 0:
                        t += x
                        for i in range(nn + 1):
                            a[i, i] -= x
                        s = fabs(a[nn, nn - 1]) + fabs(a[nn - 1, nn - 2])
                        x = 0.75 * s
                        y = x
                        w = -0.4375 * s * s
                    its += 1
                    total += 1
                    m = nn - 2
                    while m >= l:
                        z = a[m, m]
                        r = x - z
                        s = y - z
                        p = (r * s - w) / a[m + 1, m] + a[m, m + 1]
                        q = a[m + 1, m + 1] - z - r - s
                        r = a[m + 2, m + 1]
                        s = fabs(p) + fabs(q) + fabs(r)
                        p /= s
                        q /= s
                        r /= s
                        if m == l:
                            break
                        u = fabs(a[m, m - 1]) * (fabs(q) + fabs(r))
                        v = fabs(p) * (fabs(a[m - 1, m - 1]) + fabs(z) + fabs(a[m + 1, m + 1]))
                        if u <= EPS * v:
                            break
                        m -= 1
                    for i in range(m, nn - 1):
                        a[i + 2, i] = 0.0
                        if i != m:
                            a[i + 2, i - 1] = 0.0
                    for k in range(m, nn):
                        if k != m:
                            p = a[k, k - 1]
                            q = a[k + 1, k - 1]
                            r = 0.0
                            if k + 1 != nn:
                                r = a[k + 2, k - 1]
                            x = fabs(p) + fabs(q) + fabs(r)
                            if x != 0.0:
                                p /= x
                                q /= x
                                r /= x
                        s = copysign(sqrt(p * p + q * q + r * r), p)
                        if s != 0.0:
                            if k == m:
                                if l != m:
                                    a[k, k - 1] = -a[k, k - 1]
                            else:
                                a[k, k - 1] = -s * x
                            p += s
                            x = p / s
                            y = q / s
                            z = r / s
                            q /= p
                            r /= p
                            for j in range(k, nn + 1):
                                pp = a[k, j] + q * a[k + 1, j]
                                if k + 1 != nn:
                                    pp += r * a[k + 2, j]
                                    a[k + 2, j] -= pp * z
                                a[k + 1, j] -= pp * y
                                a[k, j] -= pp * x
                            mmin = nn if nn < k + 3 else k + 3
                            for i in range(l, mmin + 1):
                                pp = x * a[i, k] + y * a[i, k + 1]
                                if k + 1 != nn:
                                    pp += z * a[i, k + 2]
                                    a[i, k + 2] -= pp * r
                                a[i, k + 1] -= pp * q
                                a[i, k] -= pp
            if not (l < nn - 1):
                break
    return wr_arr, wi_arr
