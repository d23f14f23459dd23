"""Geometry of the unitary group: tangent projection, Riemannian gradients, polar retraction,
the Riemannian Hessian at critical points and the critical-point classification."""

"""Gradient convention: grad f(U) = HUρ₀ − U·sym(U†HUρ₀) = ½[H, Uρ₀U†]U. The directional
derivative of f along a tangent ξ equals 2·Re⟨grad, ξ⟩_F.

"""

"""
# File: manifold.py
# Creation date: 19-10-2026
# Python v3.12.1
"""

from dataclasses import dataclass
import enum
import logging
from typing import List
from typing import Optional
from typing import Sequence

import numpy as np

from analysis import linalg
from analysis.hamiltonian import CircuitState
from analysis.hamiltonian import SpectralData
from analysis.hamiltonian import excited_weight
from checks import check_data
from checks.exceptions import IndexOutOfRangeError
from checks.exceptions import NonUnitaryBaseError
from preparation import log_decorator


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TangentVector:
    """Tangent vector ξ = ΩU at the unitary base point U."""

    base: np.ndarray
    direction: np.ndarray

    def tangency_defect(self) -> float:
        """‖ξ†U + U†ξ‖_F, zero for an exact tangent vector."""
        cross = linalg.dagger(self.direction) @ self.base
        return float(np.linalg.norm(cross + linalg.dagger(cross)))

    def norm_sq(self) -> float:
        return float(np.vdot(self.direction, self.direction).real)

    def scaled(self, factor: float) -> "TangentVector":
        return TangentVector(base=self.base, direction=factor * self.direction)


class CriticalKind(enum.Enum):
    GLOBAL_MINIMUM = "GlobalMinimum"
    STRICT_SADDLE = "StrictSaddle"


@dataclass(frozen=True)
class CriticalPoint:
    """Critical point Û_k with Û_k|φ₀⟩ = |ψ_k⟩.

    The witness is a skew-Hermitian direction with negative Hessian value; only
    strict saddles carry one.
    """

    k: int
    unitary: np.ndarray
    kind: CriticalKind
    energy: float
    witness: Optional[np.ndarray] = None
    witness_value: Optional[float] = None


def _project(U: np.ndarray, A: np.ndarray) -> np.ndarray:
    return A - U @ linalg.sym(linalg.dagger(U) @ A)


def project_tangent(U: np.ndarray, A: np.ndarray) -> TangentVector:
    """Orthogonal projection ξ = A − U·sym(U†A) onto the tangent space at U.

    Args:
        U (np.ndarray): unitary base point.
        A (np.ndarray): ambient direction.

    Raises:
        NonUnitaryBaseError: if U is not unitary within 1e-8.

    Returns:
        TangentVector: the projected direction.
    """
    check_data.check_unitary(U, "U", NonUnitaryBaseError)
    return TangentVector(base=U, direction=_project(U, A))


def _single_gradient(H: np.ndarray, phi0: np.ndarray, U: np.ndarray) -> np.ndarray:
    # HUρ₀ is the rank-one matrix (HUφ₀)φ₀†
    euclidean = np.outer(H @ (U @ phi0), phi0.conj())
    return _project(U, euclidean)


def riemannian_gradient_single(
    H: np.ndarray, phi0: np.ndarray, U: np.ndarray
) -> TangentVector:
    """Riemannian gradient of f(U) = ⟨φ₀|U†HU|φ₀⟩.

    Args:
        H (np.ndarray): Hermitian Hamiltonian.
        phi0 (np.ndarray): reference state.
        U (np.ndarray): unitary.

    Returns:
        TangentVector: HUρ₀ − U·sym(U†HUρ₀) at U.
    """
    dim = check_data.check_hermitian(H, "H")
    check_data.check_state(phi0, dim, "phi0")
    check_data.check_unitary(U, "U", NonUnitaryBaseError)
    return TangentVector(base=U, direction=_single_gradient(H, phi0, U))


def layer_gradients(
    H: np.ndarray, phi0: np.ndarray, layers: Sequence[np.ndarray]
) -> List[np.ndarray]:
    """Riemannian gradient directions of all layers, without validation.

    With prefix L_h = U₁⋯U_{h−1} and suffix state r_h = U_{h+1}⋯U_Nφ₀ the Euclidean
    gradient of layer h is the rank-one matrix (L_h†Hφ)(r_h)†, φ the circuit output.
    """
    n_layers = len(layers)
    suffix = [phi0] * (n_layers + 1)
    for h in range(n_layers - 1, -1, -1):
        suffix[h] = layers[h] @ suffix[h + 1]
    h_phi = H @ suffix[0]

    gradients = []
    prefix_h_phi = h_phi
    for h, U in enumerate(layers):
        euclidean = np.outer(prefix_h_phi, suffix[h + 1].conj())
        gradients.append(_project(U, euclidean))
        prefix_h_phi = linalg.dagger(U) @ prefix_h_phi
    return gradients


def riemannian_gradient_layer(
    H: np.ndarray, phi0: np.ndarray, layers: CircuitState, h: int
) -> TangentVector:
    """Riemannian gradient of the product objective with respect to layer h.

    Args:
        H (np.ndarray): Hermitian Hamiltonian.
        phi0 (np.ndarray): reference state.
        layers (CircuitState): the circuit U₁…U_N.
        h (int): layer index, 1 ≤ h ≤ N.

    Raises:
        IndexOutOfRangeError: if h is outside 1..N.

    Returns:
        TangentVector: the projected gradient at U_h.
    """
    if not 1 <= h <= layers.n_layers:
        raise IndexOutOfRangeError(f"Layer index {h} outside 1..{layers.n_layers}.")
    dim = check_data.check_hermitian(H, "H")
    check_data.check_state(phi0, dim, "phi0")
    for index, U in enumerate(layers.layers, start=1):
        check_data.check_same_dim(check_data.check_square(U), dim, f"layer {index}")
        check_data.check_unitary(U, f"layer {index}", NonUnitaryBaseError)
    gradients = layer_gradients(H, phi0, layers.layers)
    return TangentVector(base=layers.layers[h - 1], direction=gradients[h - 1])


def riemannian_gradients(
    H: np.ndarray, phi0: np.ndarray, layers: CircuitState
) -> List[TangentVector]:
    """Gradients of every layer at once."""
    return [
        TangentVector(base=U, direction=g)
        for U, g in zip(layers.layers, layer_gradients(H, phi0, layers.layers))
    ]


def gradient_norm_sq(gradients: Sequence[np.ndarray]) -> float:
    """Σ_h ‖grad_h‖²_F."""
    return float(sum(np.vdot(g, g).real for g in gradients))


def _retract(U: np.ndarray, xi: np.ndarray) -> np.ndarray:
    # (U+ξ)†(U+ξ) = I + ξ†ξ for tangent ξ, always positive definite
    gram = np.eye(U.shape[0]) + linalg.dagger(xi) @ xi
    return (U + xi) @ linalg.inverse_sqrt_hpd(gram)


def retract(tv: TangentVector) -> np.ndarray:
    """Polar retraction (U+ξ)((U+ξ)†(U+ξ))^{-1/2}.

    Args:
        tv (TangentVector): base point and tangent direction.

    Returns:
        np.ndarray: the unitary result.
    """
    return _retract(tv.base, tv.direction)


def hessian_bilinear(spec: SpectralData, k: int, Omega: np.ndarray) -> float:
    """Riemannian Hessian value 2Σ_l (E_l − E_k)|Ω_lk|² at the critical point Û_k.

    Args:
        spec (SpectralData): spectrum of H.
        k (int): eigenlevel index.
        Omega (np.ndarray): skew-Hermitian direction in the computational basis.

    Returns:
        float: the bilinear form.
    """
    dim = check_data.check_skew_hermitian(Omega)
    check_data.check_same_dim(dim, spec.dim, "Omega")
    if not 0 <= k < spec.dim:
        raise IndexOutOfRangeError(f"Level index {k} outside 0..{spec.dim - 1}.")
    V = spec.eigvecs
    column_k = linalg.dagger(V) @ (Omega @ V[:, k])
    return float(2.0 * np.sum((spec.energies - spec.energies[k]) * np.abs(column_k) ** 2))


def hessian_commutator_form(
    H: np.ndarray, U: np.ndarray, phi0: np.ndarray, Omega: np.ndarray
) -> float:
    """⟨ΩU, ½([H,[Ω,ρ̂]] + [[H,Ω],ρ̂])U⟩_F with ρ̂ = Uρ₀U†, the Hessian at a critical point U."""
    phi = U @ phi0
    rho = np.outer(phi, phi.conj())

    def comm(A, B):
        return A @ B - B @ A

    hess = 0.5 * (comm(H, comm(Omega, rho)) + comm(comm(H, Omega), rho)) @ U
    return float(np.vdot(Omega @ U, hess).real)


def completion_unitary(phi0: np.ndarray, psi: np.ndarray) -> np.ndarray:
    """A unitary mapping φ₀ to ψ, built from a phase and one Householder reflection.

    Args:
        phi0 (np.ndarray): unit source state.
        psi (np.ndarray): unit target state.

    Returns:
        np.ndarray: unitary W with Wφ₀ = ψ.
    """
    dim = phi0.shape[0]
    overlap = np.vdot(phi0, psi)
    phase = overlap / abs(overlap) if abs(overlap) > 1e-14 else 1.0
    aligned = psi / phase
    v = phi0 - aligned
    norm_sq = np.vdot(v, v).real
    reflection = np.eye(dim, dtype=complex)
    if norm_sq > 1e-28:
        reflection -= 2.0 * np.outer(v, v.conj()) / norm_sq
    return phase * reflection


@log_decorator.log_factory(__name__)
def classify_critical_points(spec: SpectralData, phi0: np.ndarray) -> List[CriticalPoint]:
    """All D critical points Û_k of f, classified as global minimum or strict saddle.

    Args:
        spec (SpectralData): spectrum of H.
        phi0 (np.ndarray): reference state.

    Returns:
        List[CriticalPoint]: one entry per eigenlevel, k ascending.
    """
    check_data.check_state(phi0, spec.dim, "phi0")
    V = spec.eigvecs
    points = []
    for k in range(spec.dim):
        unitary = completion_unitary(phi0, V[:, k])
        if k < spec.s:
            points.append(
                CriticalPoint(
                    k=k,
                    unitary=unitary,
                    kind=CriticalKind.GLOBAL_MINIMUM,
                    energy=float(spec.energies[k]),
                )
            )
            continue
        omega_eig = np.zeros((spec.dim, spec.dim), dtype=complex)
        omega_eig[0, k] = 1.0
        omega_eig[k, 0] = -1.0
        witness = V @ omega_eig @ linalg.dagger(V)
        points.append(
            CriticalPoint(
                k=k,
                unitary=unitary,
                kind=CriticalKind.STRICT_SADDLE,
                energy=float(spec.energies[k]),
                witness=witness,
                witness_value=hessian_bilinear(spec, k, witness),
            )
        )
    logger.info(
        f"{spec.dim} critical points: {spec.s} global minima, {spec.dim - spec.s} strict saddles."
    )
    return points


def gradient_lower_bound(spec: SpectralData, phi: np.ndarray) -> float:
    """(Δ₁²/4)·p(1−p) with p the excited weight of φ, a lower bound on ‖grad‖²_F.

    Args:
        spec (SpectralData): spectrum of H.
        phi (np.ndarray): unit state φ = Uφ₀.

    Returns:
        float: the bound.
    """
    check_data.check_state(phi, spec.dim, "phi")
    p = excited_weight(spec, phi)
    return spec.gap**2 / 4.0 * p * (1.0 - p)
