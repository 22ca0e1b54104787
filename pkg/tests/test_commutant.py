import numpy as np
import pytest

from posmaps import (
    breuer_hall,
    commutant_of_range,
    identity_map,
    is_irreducible,
    make_rng,
    map_from_action,
    random_antisymmetric_unitary,
    random_haar_unitary,
    robertson_map,
    trace_map,
)


def pinch_map(n):
    # range is the diagonal algebra, whose commutant is again the diagonal
    # algebra: dimension n, so never irreducible for n >= 2
    return map_from_action(n, lambda x: np.diag(np.diag(x)), f"pinch_{n}")


class TestCommutant:
    def test_identity_map_irreducible(self):
        res = commutant_of_range(identity_map(3))
        assert res.dim == 1
        assert res.contains_identity
        b = res.basis[:, 0]
        vi = np.eye(3).ravel() / np.sqrt(3)
        assert abs(abs(np.vdot(vi, b)) - 1.0) <= 1e-12

    def test_trace_map_full_commutant(self):
        # range is C I, so everything commutes
        assert commutant_of_range(trace_map(3)).dim == 9
        assert commutant_of_range(trace_map(4)).dim == 16

    def test_robertson_one_dimensional(self):
        res = commutant_of_range(robertson_map())
        assert res.dim == 1
        mats = res.matrices()
        assert len(mats) == 1
        off = mats[0] - np.trace(mats[0]) / 4 * np.eye(4)
        assert np.abs(off).max() <= 1e-10

    def test_pinch_reducible(self):
        res = commutant_of_range(pinch_map(2))
        assert res.dim == 2
        assert not is_irreducible(pinch_map(2))
        # every commutant element is diagonal here
        for m in res.matrices():
            assert np.abs(m - np.diag(np.diag(m))).max() <= 1e-10

    def test_custom_basis_invariance(self):
        rng = make_rng(0)
        phi = robertson_map()
        basis = [rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
                 for _ in range(16)]
        res = commutant_of_range(phi, basis=basis)
        assert res.dim == commutant_of_range(phi).dim == 1

    def test_breuer_hall_random_irreducible(self):
        rng = make_rng(1)
        for n in (4, 6):
            phi = breuer_hall(random_antisymmetric_unitary(rng, n))
            assert is_irreducible(phi)

    def test_verdict_covariant_under_conjugation(self):
        # Psi(X) = W Phi(W^dag X W) W^dag has the same commutant dimension
        rng = make_rng(2)
        phi = robertson_map()
        w = random_haar_unitary(rng, 4)
        psi = map_from_action(
            4, lambda x: w @ phi.apply(w.conj().T @ x @ w) @ w.conj().T, "conj")
        assert is_irreducible(psi) == is_irreducible(phi) is True

        pin = pinch_map(2)
        w2 = random_haar_unitary(rng, 2)
        pin_c = map_from_action(
            2, lambda x: w2 @ pin.apply(w2.conj().T @ x @ w2) @ w2.conj().T, "conj")
        assert commutant_of_range(pin_c).dim == commutant_of_range(pin).dim == 2

    def test_basis_orthonormal(self):
        res = commutant_of_range(trace_map(3))
        g = res.basis.conj().T @ res.basis
        assert np.abs(g - np.eye(res.dim)).max() <= 1e-12
