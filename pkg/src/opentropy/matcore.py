"""Dense self-adjoint matrices, spectral calculus, and the Loewner order.

Everything downstream (perspectives, entropies, bound chains) reduces to the
four operations here: eigendecomposition, functional calculus, positive
semidefiniteness of a difference, and the Jordan-product identity check.
All values are immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

import dataclasses
from typing import Callable

import numpy as np

from ._accel import jacobi_herm, jacobi_real

# Self-adjointness admission tolerance (relative to max(1, Frobenius norm)).
HERMITICITY_TOL = 1e-13
# Jacobi sweep target: off-diagonal Frobenius norm <= SWEEP_TOL * ||M||_F.
SWEEP_TOL = 1e-13
MAX_SWEEPS = 64
# Default Loewner comparison tolerance (relative, scale-aware).
DEFAULT_LOEWNER_TOL = 1e-8

# Open-interval domain for functions defined on the positive half line.
POSITIVE = (0.0, np.inf)


class OperatorError(ValueError):
    """Base class for domain and shape violations raised by this package."""


class DimensionError(OperatorError):
    """Operands disagree in dimension or scalar field."""


class SelfAdjointError(OperatorError):
    """Input matrix is not self-adjoint within tolerance."""


class SpectrumError(OperatorError):
    """An eigenvalue lies outside the domain of the requested function."""


class ConvergenceError(OperatorError):
    """The Jacobi sweep limit was reached before the off-diagonal target."""


def _resym(arr: np.ndarray) -> np.ndarray:
    return (arr + arr.conj().T) / 2.0


@dataclasses.dataclass(frozen=True, eq=False)
class SymMatrix:
    """A dense self-adjoint matrix over the reals or the complex numbers.

    Construction validates self-adjointness (max entrywise asymmetry must
    not exceed ``1e-13 * max(1, ||M||_F)``), then stores the exactly
    Hermitian average ``(M + M*) / 2`` as a read-only float64/complex128
    array.  The scalar field is carried by the dtype.
    """

    data: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.data)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise DimensionError(f"expected a square matrix, got shape {arr.shape}")
        dtype = np.complex128 if np.iscomplexobj(arr) else np.float64
        arr = np.array(arr, dtype=dtype, order="C")
        scale = max(1.0, float(np.linalg.norm(arr)))
        asym = float(np.max(np.abs(arr - arr.conj().T)))
        if asym > HERMITICITY_TOL * scale:
            raise SelfAdjointError(
                f"matrix is not self-adjoint: max asymmetry {asym:.3e} "
                f"exceeds {HERMITICITY_TOL:.0e} * {scale:.3e}"
            )
        arr = _resym(arr)
        arr.flags.writeable = False
        object.__setattr__(self, "data", arr)

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    @property
    def field(self) -> str:
        return "complex" if np.iscomplexobj(self.data) else "real"

    @property
    def fro(self) -> float:
        return float(np.linalg.norm(self.data))

    @classmethod
    def identity(cls, dim: int, field: str = "real") -> "SymMatrix":
        dtype = np.complex128 if field == "complex" else np.float64
        return cls(np.eye(dim, dtype=dtype))

    @classmethod
    def diagonal(cls, values, field: str = "real") -> "SymMatrix":
        dtype = np.complex128 if field == "complex" else np.float64
        return cls(np.diag(np.asarray(values, dtype=dtype)))

    def _same_shape(self, other: "SymMatrix") -> None:
        if self.dim != other.dim or self.field != other.field:
            raise DimensionError(
                f"operands disagree: {self.dim}x{self.dim} {self.field} vs "
                f"{other.dim}x{other.dim} {other.field}"
            )

    def __add__(self, other: "SymMatrix") -> "SymMatrix":
        self._same_shape(other)
        return SymMatrix(self.data + other.data)

    def __sub__(self, other: "SymMatrix") -> "SymMatrix":
        self._same_shape(other)
        return SymMatrix(self.data - other.data)

    def __neg__(self) -> "SymMatrix":
        return SymMatrix(-self.data)

    def __mul__(self, scalar: float) -> "SymMatrix":
        return SymMatrix(self.data * float(scalar))

    __rmul__ = __mul__


@dataclasses.dataclass(frozen=True, eq=False)
class EigenPair:
    """Ascending eigenvalues and an orthonormal eigenvector matrix."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def rebuild(self, values) -> np.ndarray:
        """Assemble ``U diag(values) U*`` (re-symmetrized) as a raw array."""
        u = self.eigenvectors
        vals = np.asarray(values, dtype=np.float64)
        return _resym((u * vals) @ u.conj().T)


def sym_eig(m: SymMatrix) -> EigenPair:
    """Eigendecompose a self-adjoint matrix by cyclic Jacobi rotations.

    Sweeps run until the off-diagonal Frobenius norm drops below
    ``1e-13 * ||M||_F`` (at most 64 sweeps).  Eigenvalues are sorted
    ascending; each eigenvector is normalized so its largest-magnitude
    component is real and positive, which makes the output a pure function
    of the input bits.

    Raises
    ------
    ConvergenceError
        If the sweep limit is reached first (not observed at desk scale).
    """
    if not isinstance(m, SymMatrix):
        m = SymMatrix(m)
    work = np.array(m.data)  # kernel overwrites
    thresh = SWEEP_TOL * float(np.linalg.norm(work))
    if m.field == "complex":
        w, v, _, off = jacobi_herm(work, thresh, MAX_SWEEPS)
    else:
        w, v, _, off = jacobi_real(work, thresh, MAX_SWEEPS)
    if off > thresh:
        raise ConvergenceError(
            f"Jacobi sweeps did not converge: off-diagonal norm {off:.3e} "
            f"above target {thresh:.3e} after {MAX_SWEEPS} sweeps"
        )
    order = np.argsort(w, kind="stable")
    w = np.ascontiguousarray(w[order])
    v = np.ascontiguousarray(v[:, order])
    for col in range(v.shape[1]):
        lead = int(np.argmax(np.abs(v[:, col])))
        pivot = v[lead, col]
        mag = abs(pivot)
        if mag > 0.0:
            v[:, col] = v[:, col] * (np.conj(pivot) / mag)
    if m.field == "real":
        v = v.real if np.iscomplexobj(v) else v
    w.flags.writeable = False
    v.flags.writeable = False
    return EigenPair(eigenvalues=w, eigenvectors=v)


def _check_domain(eigenvalues: np.ndarray, domain, name: str) -> None:
    if domain is None:
        return
    lo, hi = domain
    for val in eigenvalues:
        if not (lo < val < hi):
            raise SpectrumError(
                f"eigenvalue {val!r} outside the open domain ({lo}, {hi}) "
                f"of {name or 'the scalar function'}"
            )


def apply_fn(
    m: SymMatrix,
    fn: Callable[[np.ndarray], np.ndarray],
    domain: tuple[float, float] | None = None,
    name: str = "",
) -> SymMatrix:
    """Functional calculus: ``f(M) = U f(diag) U*`` from the spectral form.

    Parameters
    ----------
    m : SymMatrix
        Self-adjoint input.
    fn : callable
        Vectorized real function evaluated on the eigenvalue vector.
    domain : (lo, hi), optional
        Open interval every eigenvalue must lie in; violations raise
        ``SpectrumError`` naming the offending eigenvalue.  Use
        ``matcore.POSITIVE`` for log, roots and real powers.
    """
    pair = sym_eig(m)
    _check_domain(pair.eigenvalues, domain, name or getattr(fn, "name", ""))
    return SymMatrix(pair.rebuild(fn(pair.eigenvalues)))


def mat_pow(m: SymMatrix, exponent: float) -> SymMatrix:
    """Real matrix power of a strictly positive matrix."""
    return apply_fn(m, lambda x: np.power(x, exponent), domain=POSITIVE,
                    name=f"x**{exponent}")


@dataclasses.dataclass(frozen=True)
class OrderVerdict:
    """Outcome of a Loewner comparison ``A <= B``.

    ``margin`` is the smallest eigenvalue of ``B - A``; the comparison
    holds when ``margin >= -tol * max(1, ||A||_F, ||B||_F)``.
    """

    holds: bool
    margin: float
    scale: float
    tol: float

    def __bool__(self) -> bool:
        return self.holds


def loewner_leq(a: SymMatrix, b: SymMatrix,
                tol: float = DEFAULT_LOEWNER_TOL) -> OrderVerdict:
    """Decide ``A <= B`` in the Loewner order, with a signed margin."""
    a._same_shape(b)
    diff = b - a
    margin = float(sym_eig(diff).eigenvalues[0])
    scale = max(1.0, a.fro, b.fro)
    return OrderVerdict(holds=margin >= -tol * scale, margin=margin,
                        scale=scale, tol=tol)


def jordan_check(a: SymMatrix, b: SymMatrix) -> float:
    """Residual of ``ABA = 2(A o B) o A - A^2 o B``, ``X o Y = (XY+YX)/2``.

    Both inputs must be real symmetric; returns the Frobenius norm of the
    difference of the two sides, which stays below
    ``1e-10 * (1 + ||A||_F^2 ||B||_F)`` in floating point.
    """
    if a.field != "real" or b.field != "real":
        raise OperatorError("the Jordan identity check is defined for real "
                            "symmetric matrices")
    a._same_shape(b)
    x, y = a.data, b.data

    def jprod(p, q):
        return (p @ q + q @ p) / 2.0

    lhs = x @ y @ x
    rhs = 2.0 * jprod(jprod(x, y), x) - jprod(x @ x, y)
    return float(np.linalg.norm(lhs - rhs))
