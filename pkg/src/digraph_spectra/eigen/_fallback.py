"""Pure-Python versions of the dense eigen kernels.

Same signatures and results as the compiled ``_kernels`` module; used when the
extension is not built or when ``DIGRAPH_SPECTRA_PURE=1``.
"""

import math

import numpy as np

from ._errors import ConvergenceError

EPS = np.finfo(float).eps
RADIX = 2.0


def jacobi_eigh(a, max_sweeps=60):
    """Cyclic Jacobi on a symmetric matrix.

    Returns ``(w, V, sweeps)`` with unsorted eigenvalues ``w`` and orthonormal
    eigenvectors in the columns of ``V``.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    V = np.eye(n)
    for sweep in range(1, max_sweeps + 1):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                app = a[p, p]
                aqq = a[q, q]
                if abs(apq) <= EPS * math.sqrt(abs(app * aqq)) or apq == 0.0:
                    a[p, q] = a[q, p] = 0.0
                    continue
                rotated = True
                theta = (aqq - app) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                cp = a[:, p].copy()
                cq = a[:, q]
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                rp = a[p, :].copy()
                rq = a[q, :]
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
                vp = V[:, p].copy()
                vq = V[:, q]
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
        if not rotated:
            return np.diag(a).copy(), V, sweep
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps", iterations=max_sweeps)


def balance(a):
    """Diagonal similarity scaling (radix 2) in place; returns the scale vector."""
    n = a.shape[0]
    scale = np.ones(n)
    done = False
    while not done:
        done = True
        for i in range(n):
            c = float(np.abs(a[:, i]).sum() - abs(a[i, i]))
            r = float(np.abs(a[i, :]).sum() - abs(a[i, i]))
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
                    a[i, :] /= f
                    a[:, i] *= f
    return scale


def hessenberg(a):
    """Householder reduction to upper Hessenberg form, in place."""
    n = a.shape[0]
    for k in range(n - 2):
        x = a[k + 1 :, k].copy()
        alpha = float(np.linalg.norm(x))
        if alpha == 0.0:
            continue
        if x[0] > 0:
            alpha = -alpha
        x[0] -= alpha
        vnorm2 = float(x @ x)
        if vnorm2 == 0.0:
            continue
        beta = 2.0 / vnorm2
        a[k + 1 :, k:] -= beta * np.outer(x, x @ a[k + 1 :, k:])
        a[:, k + 1 :] -= beta * np.outer(a[:, k + 1 :] @ x, x)
        a[k + 2 :, k] = 0.0
        a[k + 1, k] = alpha


def hqr(h, max_iter):
    """Francis double-shift QR on an upper Hessenberg matrix.

    Returns ``(wr, wi)``.  ``max_iter`` caps the total number of QR sweeps.
    """
    n = h.shape[0]
    a = [list(map(float, row)) for row in h]
    wr = [0.0] * n
    wi = [0.0] * n
    anorm = 0.0
    for i in range(n):
        for j in range(max(i - 1, 0), n):
            anorm += abs(a[i][j])
    nn = n - 1
    t = 0.0
    total = 0
    p = q = r = s = w = x = y = z = 0.0
    while nn >= 0:
        its = 0
        while True:
            l = nn
            while l > 0:
                s = abs(a[l - 1][l - 1]) + abs(a[l][l])
                if s == 0.0:
                    s = anorm
                if abs(a[l][l - 1]) <= EPS * s:
                    a[l][l - 1] = 0.0
                    break
                l -= 1
            x = a[nn][nn]
            if l == nn:
                wr[nn] = x + t
                wi[nn] = 0.0
                nn -= 1
            else:
                y = a[nn - 1][nn - 1]
                w = a[nn][nn - 1] * a[nn - 1][nn]
                if l == nn - 1:
                    p = 0.5 * (y - x)
                    q = p * p + w
                    z = math.sqrt(abs(q))
                    x += t
                    if q >= 0.0:
                        z = p + math.copysign(z, p)
                        wr[nn - 1] = wr[nn] = x + z
                        if z != 0.0:
                            wr[nn] = x - w / z
                        wi[nn - 1] = wi[nn] = 0.0
                    else:
                        wr[nn - 1] = wr[nn] = x + p
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
                        # exceptional shift
                        t += x
                        for i in range(nn + 1):
                            a[i][i] -= x
                        s = abs(a[nn][nn - 1]) + abs(a[nn - 1][nn - 2])
                        x = y = 0.75 * s
                        w = -0.4375 * s * s
                    its += 1
                    total += 1
                    m = nn - 2
                    while m >= l:
                        z = a[m][m]
                        r = x - z
                        s = y - z
                        p = (r * s - w) / a[m + 1][m] + a[m][m + 1]
                        q = a[m + 1][m + 1] - z - r - s
                        r = a[m + 2][m + 1]
                        s = abs(p) + abs(q) + abs(r)
                        p /= s
                        q /= s
                        r /= s
                        if m == l:
                            break
                        u = abs(a[m][m - 1]) * (abs(q) + abs(r))
                        v = abs(p) * (abs(a[m - 1][m - 1]) + abs(z) + abs(a[m + 1][m + 1]))
                        if u <= EPS * v:
                            break
                        m -= 1
                    for i in range(m, nn - 1):
                        a[i + 2][i] = 0.0
                        if i != m:
                            a[i + 2][i - 1] = 0.0
                    for k in range(m, nn):
                        if k != m:
                            p = a[k][k - 1]
                            q = a[k + 1][k - 1]
                            r = 0.0
                            if k + 1 != nn:
                                r = a[k + 2][k - 1]
                            x = abs(p) + abs(q) + abs(r)
                            if x != 0.0:
                                p /= x
                                q /= x
                                r /= x
                        s = math.copysign(math.sqrt(p * p + q * q + r * r), p)
                        if s != 0.0:
                            if k == m:
                                if l != m:
                                    a[k][k - 1] = -a[k][k - 1]
                            else:
                                a[k][k - 1] = -s * x
                            p += s
                            x = p / s
                            y = q / s
                            z = r / s
                            q /= p
                            r /= p
                            rk, rk1 = a[k], a[k + 1]
                            if k + 1 != nn:
                                rk2 = a[k + 2]
                                for j in range(k, nn + 1):
                                    pp = rk[j] + q * rk1[j] + r * rk2[j]
                                    rk2[j] -= pp * z
                                    rk1[j] -= pp * y
                                    rk[j] -= pp * x
                            else:
                                for j in range(k, nn + 1):
                                    pp = rk[j] + q * rk1[j]
                                    rk1[j] -= pp * y
                                    rk[j] -= pp * x
                            mmin = nn if nn < k + 3 else k + 3
                            for i in range(l, mmin + 1):
                                ai = a[i]
                                pp = x * ai[k] + y * ai[k + 1]
                                if k + 1 != nn:
                                    pp += z * ai[k + 2]
                                    ai[k + 2] -= pp * r
                                ai[k + 1] -= pp * q
                                ai[k] -= pp
            if not (l < nn - 1):
                break
    return np.array(wr), np.array(wi)
