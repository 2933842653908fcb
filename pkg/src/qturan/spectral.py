"""Spectral computations: signless-Laplacian and adjacency radii, Perron
vectors, Rayleigh quotients, eigenequation residuals, degree powers.

Primary route is power iteration on the nonnegative matrix itself; the
fallback and test oracle is an in-repo dense symmetric eigensolver
(Householder tridiagonalization followed by implicit QL with shifts), so no
external eigenroutine is load-bearing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Tuple

import numpy as np

from .graphs import Graph

POWER_ITERATION_CAP = 10 ** 6
_STAGNATION_WINDOW = 2048


@dataclass(frozen=True)
class Tolerance:
    """Numeric tolerances: ``eig_tol`` for eigensolves, ``cmp_tol`` for
    classifying inequality slack."""

    eig_tol: float = 1e-10
    cmp_tol: float = 1e-9

    def __post_init__(self):
        if not (self.eig_tol > 0 and self.cmp_tol > 0):
            raise ValueError("tolerances must be strictly positive")


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class SpectralResult:
    """Largest eigenvalue with a nonnegative unit eigenvector.

    ``residual`` is the max eigenequation defect; ``method`` records whether
    power iteration converged or the dense solver was used.
    """

    radius: float
    vector: Tuple[float, ...]
    residual: float
    iterations: int
    method: str


class SpectralError(RuntimeError):
    pass


# -- dense symmetric eigensolver (in-repo oracle) ----------------------------


def _tridiagonalize(a: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Householder reduction of a symmetric matrix to tridiagonal form.

    Returns (d, e, z): diagonal, subdiagonal (length n-1), and the
    accumulated orthogonal transform with a = z @ T @ z.T.
    """
    n = a.shape[0]
    t = np.array(a, dtype=float)
    z = np.eye(n)
    for k in range(n - 2):
        x = t[k + 1:, k].copy()
        nx = math.sqrt(float(x @ x))
        if nx == 0.0:
            continue
        alpha = -nx if x[0] >= 0 else nx
        v = x
        v[0] -= alpha
        nv = math.sqrt(float(v @ v))
        if nv == 0.0:
            continue
        v /= nv
        # T <- H T H with H = I - 2 v v^T acting on rows/cols k+1:
        t[k + 1:, k:] -= 2.0 * np.outer(v, v @ t[k + 1:, k:])
        t[:, k + 1:] -= 2.0 * np.outer(t[:, k + 1:] @ v, v)
        z[:, k + 1:] -= 2.0 * np.outer(z[:, k + 1:] @ v, v)
    d = np.diag(t).copy()
    e = np.diag(t, -1).copy()
    return d, e, z


def _ql_implicit(d: np.ndarray, e: np.ndarray, z: np.ndarray, max_sweeps: int = 60) -> None:
    """Implicit QL with Wilkinson-style shifts on a tridiagonal (d, e).

    On return ``d`` holds the eigenvalues and the columns of ``z`` the
    corresponding eigenvectors. ``e`` is destroyed.
    """
    n = d.size
    if n == 1:
        return
    eps = np.finfo(float).eps
    e = np.append(e, 0.0)
    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= eps * dd:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > max_sweeps:
                raise SpectralError("QL iteration failed to converge")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                fcol = z[:, i + 1].copy()
                z[:, i + 1] = s * z[:, i] + c * fcol
                z[:, i] = c * z[:, i] - s * fcol
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0


def symmetric_eigen(a: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """All eigenvalues (ascending) and eigenvectors of a symmetric matrix."""
    d, e, z = _tridiagonalize(a)
    _ql_implicit(d, e, z)
    idx = np.argsort(d, kind="stable")
    return d[idx], z[:, idx]


# -- power iteration ---------------------------------------------------------


def _power_largest(
    mat: np.ndarray, eig_tol: float, shift: float = 0.0
) -> Tuple[float, np.ndarray, int, bool]:
    """Power iteration for the largest eigenvalue of a nonnegative symmetric
    matrix; ``shift`` is added during iteration (and removed from the
    reported eigenvalue) to break plus/minus ties for adjacency matrices.

    Returns (eigenvalue, unit vector, iterations, converged). The start
    vector is the degree sequence (row sums) plus a uniform 1e-3.
    """
    n = mat.shape[0]
    work = mat + shift * np.eye(n) if shift else mat
    x = mat.sum(axis=1) + 1e-3
    x /= math.sqrt(float(x @ x))
    last_window = math.inf
    for it in range(1, POWER_ITERATION_CAP + 1):
        y = work @ x
        lam = float(x @ y)
        res = float(np.max(np.abs(y - lam * x)))
        if res <= eig_tol:
            return lam - shift, x, it, True
        ny = math.sqrt(float(y @ y))
        if ny == 0.0:
            return lam - shift, x, it, True
        x = y / ny
        if it % _STAGNATION_WINDOW == 0:
            # bail out early when the defect is no longer shrinking fast
            # enough to reach eig_tol in reasonable time
            if res > 0.5 * last_window:
                return lam - shift, x, it, False
            last_window = res
    y = work @ x
    lam = float(x @ y)
    return lam - shift, x, POWER_ITERATION_CAP, False


def _dense_largest(mat: np.ndarray) -> Tuple[float, np.ndarray]:
    vals, vecs = symmetric_eigen(mat)
    lam = float(vals[-1])
    v = vecs[:, -1].copy()
    j = int(np.argmax(np.abs(v)))
    if v[j] < 0:
        v = -v
    np.clip(v, 0.0, None, out=v)
    v /= math.sqrt(float(v @ v))
    return lam, v


def _component_matrix(g: Graph, comp: Sequence[int], mode: str) -> np.ndarray:
    k = len(comp)
    idx = {v: i for i, v in enumerate(comp)}
    a = np.zeros((k, k))
    for v in comp:
        m = g.rows[v]
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            a[idx[v], idx[w]] = 1.0
    if mode == "q":
        a += np.diag(a.sum(axis=1))
    return a


def _residual(mat: np.ndarray, lam: float, x: np.ndarray) -> float:
    return float(np.max(np.abs(mat @ x - lam * x)))


def _solve_radius(g: Graph, mode: str, eig_tol: float) -> SpectralResult:
    if g.n == 0:
        raise ValueError("spectral radius undefined for the empty vertex set")
    best = None  # (radius, comp, vec, iters, dense_used, residual)
    total_iters = 0
    any_dense = False
    for comp in g.components():
        k = len(comp)
        if k == 1:
            cand = (0.0, comp, np.array([1.0]), 0, False, 0.0)
        else:
            mat = _component_matrix(g, comp, mode)
            shift = 0.0
            if mode == "a":
                # adjacency matrices of bipartite components have a -radius
                # eigenvalue; a positive shift restores strict dominance
                shift = float(np.max(mat.sum(axis=1))) + 1.0
            lam, x, iters, ok = _power_largest(mat, eig_tol, shift)
            total_iters += iters
            if not ok:
                lam, x = _dense_largest(mat)
                any_dense = True
            res = _residual(mat, lam, x)
            if res > max(eig_tol, 1e-7):
                raise SpectralError(
                    f"eigensolve failed: residual {res:.3e} on component of order {k}"
                )
            cand = (lam, comp, x, iters, not ok, res)
        if best is None or cand[0] > best[0]:
            best = cand
    lam, comp, x, _, _, res = best
    vec = [0.0] * g.n
    for i, v in enumerate(comp):
        vec[v] = max(float(x[i]), 0.0)
    return SpectralResult(
        radius=lam,
        vector=tuple(vec),
        residual=res,
        iterations=total_iters,
        method="dense" if any_dense else "power",
    )


@lru_cache(maxsize=1 << 18)
def _solve_cached(g: Graph, mode: str, eig_tol: float) -> SpectralResult:
    return _solve_radius(g, mode, eig_tol)


def q_radius(g: Graph, tol: Optional[Tolerance] = None) -> SpectralResult:
    """Largest eigenvalue of Q(G) = D(G) + A(G) with its Perron vector."""
    tol = tol or DEFAULT_TOL
    return _solve_cached(g, "q", tol.eig_tol)


def adjacency_radius(g: Graph, tol: Optional[Tolerance] = None) -> SpectralResult:
    """Largest adjacency eigenvalue with a nonnegative unit eigenvector."""
    tol = tol or DEFAULT_TOL
    return _solve_cached(g, "a", tol.eig_tol)


def q_value(g: Graph, tol: Optional[Tolerance] = None) -> float:
    return q_radius(g, tol).radius


def lambda_value(g: Graph, tol: Optional[Tolerance] = None) -> float:
    return adjacency_radius(g, tol).radius


def rayleigh_q(g: Graph, x: Sequence[float]) -> float:
    """Quadratic form of Q at a unit vector: sum over edges of (x_i+x_j)^2."""
    if len(x) != g.n:
        raise ValueError(f"vector length {len(x)} != order {g.n}")
    nrm = math.sqrt(sum(xi * xi for xi in x))
    if abs(nrm - 1.0) > 1e-9:
        raise ValueError(f"vector must have unit norm, got {nrm!r}")
    total = 0.0
    for i, j in g.edges():
        total += (x[i] + x[j]) ** 2
    return total


def eigen_residual(g: Graph, result: SpectralResult) -> float:
    """Max over vertices of |(q - d(u)) x_u - sum of x over N(u)|."""
    if len(result.vector) != g.n:
        raise ValueError("vector length mismatch")
    q = result.radius
    x = result.vector
    worst = 0.0
    for u in range(g.n):
        s = 0.0
        m = g.rows[u]
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            s += x[w]
        worst = max(worst, abs((q - g.degree(u)) * x[u] - s))
    return worst


def degree_power(g: Graph, p: float) -> float:
    """Sum of degree^p over the vertices; equals 2m at p = 1."""
    if p < 1:
        raise ValueError(f"degree power requires p >= 1, got {p}")
    return float(sum(d ** p for d in g.degrees()))
