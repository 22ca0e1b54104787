"""Positive maps on M_n(C): constructors, application, Choi matrices.

A map is stored as its n^2 x n^2 superoperator acting on row-major
vectorizations, vec(A)[i*n + j] = A[i, j].  With this convention
vec(|x><x|) = x (x) xbar, so kernel-pair families translate literally
into x (x) xbar (x) y.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

import numpy as np

from .antisym import AntisymmetricUnitary, certify_antisymmetric_unitary, u0
from .errors import BadDimension, DimensionMismatch, DimensionTooSmall, OddDimension
from .numlin import as_cmatrix, make_rng


def vec(m) -> np.ndarray:
    """Row-major vectorization."""
    return as_cmatrix(m).ravel()


def unvec(v) -> np.ndarray:
    """Inverse of vec for square matrices."""
    arr = np.asarray(v, dtype=np.complex128).ravel()
    n = round(arr.size ** 0.5)
    if n * n != arr.size:
        raise DimensionMismatch(f"length {arr.size} is not a perfect square")
    return arr.reshape(n, n)


@dataclass(frozen=True, eq=False)
class MapRep:
    """Linear map on M_n(C) held as a superoperator.

    superop columns follow the vec convention: column i*n+j is
    vec(Phi(E_ij)) for the matrix unit E_ij.
    """

    n: int
    superop: np.ndarray
    name: str

    def __post_init__(self):
        if self.n < 1:
            raise BadDimension(f"n must be >= 1, got {self.n}")
        if self.superop.shape != (self.n * self.n, self.n * self.n):
            raise DimensionMismatch(
                f"superop shape {self.superop.shape} for n={self.n}")

    def apply(self, x) -> np.ndarray:
        x = as_cmatrix(x, square=True)
        if x.shape[0] != self.n:
            raise DimensionMismatch(f"expected {self.n}x{self.n}, got {x.shape}")
        return unvec(self.superop @ vec(x))


def map_from_action(n: int, action, name: str) -> MapRep:
    """Build the superoperator of X -> action(X) by columns over matrix units."""
    if n < 1:
        raise BadDimension(f"n must be >= 1, got {n}")
    s = np.zeros((n * n, n * n), dtype=np.complex128)
    for i in range(n):
        for j in range(n):
            e = np.zeros((n, n), dtype=np.complex128)
            e[i, j] = 1.0
            s[:, i * n + j] = np.asarray(action(e), dtype=np.complex128).ravel()
    return MapRep(n=n, superop=s, name=name)


def identity_map(n: int) -> MapRep:
    return MapRep(n=n, superop=np.eye(n * n, dtype=np.complex128),
                  name=f"identity_{n}")


def transpose_map(n: int) -> MapRep:
    """tau(X) = X^T."""
    if n < 2:
        raise BadDimension(f"transpose map defined here for n >= 2, got {n}")
    return map_from_action(n, lambda x: x.T, f"transpose_{n}")


def reduction_map(n: int) -> MapRep:
    """R_n(X) = I Tr(X) - X; unital only at n = 2."""
    if n < 2:
        raise BadDimension(f"reduction map defined here for n >= 2, got {n}")
    eye = np.eye(n, dtype=np.complex128)
    return map_from_action(n, lambda x: eye * np.trace(x) - x, f"reduction_{n}")


def trace_map(n: int) -> MapRep:
    """X -> Tr(X) I / n; the fully depolarizing map, maximally reducible."""
    if n < 1:
        raise BadDimension(f"n must be >= 1, got {n}")
    eye = np.eye(n, dtype=np.complex128)
    return map_from_action(n, lambda x: eye * (np.trace(x) / n), f"trace_{n}")


def breuer_hall(u) -> MapRep:
    """Phi_U(X) = (I Tr X - X - U X^T U^dag) / (n - 2) for antisymmetric unitary U.

    Unital and trace-preserving; the kernel of Phi_U(P_x) is span{x, U xbar}
    for every unit x.  n = 2 is rejected (normalization 1/(n-2) degenerates).
    """
    if not isinstance(u, AntisymmetricUnitary):
        u = certify_antisymmetric_unitary(u)
    n = u.n
    if n % 2 == 1:  # unreachable after certification; keep the contract explicit
        raise OddDimension(f"even dimension required, got {n}")
    if n < 4:
        raise DimensionTooSmall(f"normalization 1/(n-2) needs n >= 4, got {n}")
    m = u.matrix
    eye = np.eye(n, dtype=np.complex128)
    udag = m.conj().T

    def action(x):
        return (eye * np.trace(x) - x - m @ x.T @ udag) / (n - 2)

    return map_from_action(n, action, f"breuer_hall_{n}")


def robertson_map() -> MapRep:
    """The n=4 map (I Tr X - X - U0 X^T U0^dag)/2; equals breuer_hall(u0(4))."""
    return dataclasses.replace(breuer_hall(u0(4)), name="robertson")


def robertson_block_form(x) -> np.ndarray:
    """Apply the n=4 map through its 2x2-block shape instead of the superop.

    Writing X in 2x2 blocks [[A, B], [C, D]], the map evaluates to
    (1/2) [[I tr D, -(B + r(C))], [-(C + r(B)), I tr A]] with
    r(Y) = I tr Y - Y.  Serves as an independent cross-check of
    robertson_map, which must agree within 1e-12.
    """
    x = as_cmatrix(x, square=True)
    if x.shape != (4, 4):
        raise BadDimension(f"expected 4x4, got {x.shape}")
    a, b = x[:2, :2], x[:2, 2:]
    c, d = x[2:, :2], x[2:, 2:]
    eye = np.eye(2, dtype=np.complex128)

    def r(y):
        return eye * np.trace(y) - y

    out = np.empty((4, 4), dtype=np.complex128)
    out[:2, :2] = eye * np.trace(d)
    out[:2, 2:] = -(b + r(c))
    out[2:, :2] = -(c + r(b))
    out[2:, 2:] = eye * np.trace(a)
    return 0.5 * out


def choi(phi: MapRep) -> np.ndarray:
    """Choi matrix C = sum_ij E_ij (x) Phi(E_ij), via index reshuffle."""
    n = phi.n
    return (phi.superop.reshape(n, n, n, n)
            .transpose(2, 0, 3, 1)
            .reshape(n * n, n * n))


def superop_from_choi(c) -> np.ndarray:
    """Inverse reshuffle: recover the superoperator from a Choi matrix."""
    c = as_cmatrix(c, square=True)
    n = round(c.shape[0] ** 0.5)
    if n * n != c.shape[0]:
        raise DimensionMismatch(f"Choi side {c.shape[0]} is not a perfect square")
    return (c.reshape(n, n, n, n)
            .transpose(1, 3, 0, 2)
            .reshape(n * n, n * n))


def map_from_choi(c, name: str) -> MapRep:
    s = superop_from_choi(c)
    n = round(s.shape[0] ** 0.5)
    return MapRep(n=n, superop=s, name=name)


def apply_via_choi(c, x) -> np.ndarray:
    """Phi(X)[k,l] = sum_ij X[i,j] C[(i,k),(j,l)]; contraction route."""
    c = as_cmatrix(c, square=True)
    x = as_cmatrix(x, square=True)
    n = x.shape[0]
    if c.shape[0] != n * n:
        raise DimensionMismatch(f"Choi side {c.shape[0]} does not match n={n}")
    c4 = c.reshape(n, n, n, n)
    return np.einsum("ij,ikjl->kl", x, c4)


@dataclass(frozen=True)
class PositivitySample:
    """Sampled minimum of <y|Phi(P_x)|y> over random unit pairs."""

    min_value: float
    x: np.ndarray
    y: np.ndarray
    trials: int
    seed: int


def positivity_sample_test(phi: MapRep, trials: int, seed: int) -> PositivitySample:
    """Monte-Carlo necessary check of positivity.

    A sampled value below -tol_kernel certifies that Phi is not positive;
    a nonnegative minimum is only evidence.  Draws the x batch first, then
    the y batch, so results are reproducible for a fixed seed.
    """
    if trials < 1:
        raise BadDimension(f"trials must be >= 1, got {trials}")
    n = phi.n
    rng = make_rng(seed)

    def unit_rows(count):
        z = rng.standard_normal((count, n)) + 1j * rng.standard_normal((count, n))
        return z / np.linalg.norm(z, axis=1, keepdims=True)

    xs = unit_rows(trials)
    ys = unit_rows(trials)
    # row t of px is vec(P_{x_t}); of wy is kron(ybar_t, y_t)
    px = (xs[:, :, None] * xs.conj()[:, None, :]).reshape(trials, n * n)
    wy = (ys.conj()[:, :, None] * ys[:, None, :]).reshape(trials, n * n)
    vals = np.einsum("tp,tp->t", wy, px @ phi.superop.T).real
    k = int(np.argmin(vals))
    return PositivitySample(min_value=float(vals[k]), x=xs[k].copy(),
                            y=ys[k].copy(), trials=trials, seed=seed)
