"""Shared numerical linear algebra: tolerances, ranks, nullspaces, spans, RNG.

All routines work on complex128 ndarrays.  Rank decisions are made two
ways on purpose: a batch SVD rank for one-shot questions, and an
incremental Gram-Schmidt accumulator for streaming span growth.  Tests
cross-check one against the other so a silent threshold bug in either
route gets caught.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict

import numpy as np


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds used across the toolkit.

    rank : relative singular-value cutoff (fraction of the largest value)
    kernel : absolute eigenvalue cutoff when harvesting kernels of PSD matrices
    herm : max-abs deviation allowed when certifying hermiticity
    """

    rank: float = 1e-9
    kernel: float = 1e-10
    herm: float = 1e-12

    def as_dict(self) -> dict:
        return asdict(self)


DEFAULT_TOLS = Tolerances()


def as_cmatrix(a, square: bool = False) -> np.ndarray:
    """Coerce to a 2-d complex128 array, validating shape."""
    from .errors import DimensionMismatch

    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise DimensionMismatch(f"expected a 2-d array, got ndim={m.ndim}")
    if square and m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    return m


def hermitian_eig(m, tol_herm: float = DEFAULT_TOLS.herm):
    """Eigendecomposition of a Hermitian matrix, certifying hermiticity first.

    Returns (w, v) as np.linalg.eigh does (ascending eigenvalues).
    Raises NotHermitian if max|m - m^dag| exceeds tol_herm.
    """
    from .errors import NotHermitian

    m = as_cmatrix(m, square=True)
    dev = np.abs(m - m.conj().T).max() if m.size else 0.0
    if dev > tol_herm:
        raise NotHermitian(f"deviation {dev:.3e} exceeds tol {tol_herm:.1e}")
    return np.linalg.eigh((m + m.conj().T) / 2.0)


def nullspace(m, tol: float = DEFAULT_TOLS.rank) -> np.ndarray:
    """Orthonormal basis of ker(m) as columns, via SVD.

    Singular values <= tol * max(s) count as zero.  A zero (or empty)
    matrix returns the identity basis of its column space.
    """
    m = as_cmatrix(m)
    rows, cols = m.shape
    if cols == 0:
        return np.zeros((0, 0), dtype=np.complex128)
    if rows == 0 or not np.any(m):
        return np.eye(cols, dtype=np.complex128)
    _, s, vh = np.linalg.svd(m)
    rank = int(np.sum(s > tol * s[0]))
    return vh[rank:].conj().T


def family_rank(vectors, tol: float = DEFAULT_TOLS.rank) -> int:
    """Rank of a family of vectors (rows or a sequence), SVD route."""
    from .errors import EmptyFamily

    arr = np.asarray(vectors, dtype=np.complex128)
    if arr.ndim == 1:
        arr = arr[None, :]
    if arr.ndim != 2 or arr.shape[0] == 0:
        raise EmptyFamily("family_rank needs at least one vector")
    s = np.linalg.svd(arr, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.sum(s > tol * s[0]))


class SpanAccumulator:
    """Incrementally grown orthonormal basis of a span.

    try_add projects the candidate onto the orthogonal complement of the
    current basis (twice, for numerical stability) and keeps the residual
    iff its norm stays above tol relative to the candidate's norm.
    """

    def __init__(self, ambient_dim: int, tol: float = DEFAULT_TOLS.rank):
        from .errors import BadDimension

        if ambient_dim < 1:
            raise BadDimension(f"ambient_dim must be >= 1, got {ambient_dim}")
        self.ambient_dim = int(ambient_dim)
        self.tol = float(tol)
        self._basis = np.zeros((0, self.ambient_dim), dtype=np.complex128)

    @property
    def dim(self) -> int:
        return self._basis.shape[0]

    @property
    def basis(self) -> np.ndarray:
        """Current orthonormal basis, one vector per row (copy)."""
        return self._basis.copy()

    def copy(self) -> "SpanAccumulator":
        other = SpanAccumulator(self.ambient_dim, self.tol)
        other._basis = self._basis.copy()
        return other

    def try_add(self, v) -> bool:
        """Add v's new direction if any; return True iff dim grew."""
        from .errors import DimensionMismatch

        r = np.asarray(v, dtype=np.complex128).ravel()
        if r.shape != (self.ambient_dim,):
            raise DimensionMismatch(
                f"vector of length {r.size} in ambient dim {self.ambient_dim}")
        scale = np.linalg.norm(r)
        if scale == 0.0 or self.dim == self.ambient_dim:
            return False
        for _ in range(2):  # reorthogonalize: one pass leaks for near-parallel input
            r = r - self._basis.T @ (self._basis.conj() @ r)
        rnorm = np.linalg.norm(r)
        if rnorm <= self.tol * scale:
            return False
        self._basis = np.vstack([self._basis, r / rnorm])
        return True


def span_try_add(acc: SpanAccumulator, v):
    """Pure flavor of SpanAccumulator.try_add: returns (new_acc, added)."""
    out = acc.copy()
    added = out.try_add(v)
    return out, added


def make_rng(seed: int | None) -> np.random.Generator:
    """PCG64 generator; the single RNG entry point for reproducibility."""
    return np.random.Generator(np.random.PCG64(seed))


def random_unit_vector(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-uniform unit vector in C^n (normalized complex Gaussian)."""
    from .errors import BadDimension

    if n < 1:
        raise BadDimension(f"n must be >= 1, got {n}")
    z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    nz = np.linalg.norm(z)
    while nz == 0.0:  # pragma: no cover - probability zero
        z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        nz = np.linalg.norm(z)
    return z / nz


def random_haar_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-distributed unitary: QR of a Ginibre matrix with phase fix."""
    from .errors import BadDimension

    if n < 1:
        raise BadDimension(f"n must be >= 1, got {n}")
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))
