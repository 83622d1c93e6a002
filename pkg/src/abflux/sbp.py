"""Sixth-order SBP operators on a bounded line and periodic stencils.

The bounded-line operators use the diagonal-norm (6,3) family from
``sbp_tables``: interior rows are the classical sixth-order central
stencils, the six closure rows at each end are third-order.  The norm
matrix H makes the discrete integration-by-parts identity

    H @ D1 + (H @ D1).T = B = diag(-1, 0, ..., 0, 1)

hold to machine epsilon, and the second derivative decomposes as
D2 = H^{-1} (-M + B S) with M symmetric positive semidefinite.  Both
properties are what the energy estimates of the evolution module rest on.

Periodic directions need no closures: the central stencils are SBP with
H = h*I by antisymmetry/symmetry of the circulant.

Boundary blocks follow the mirrored-index convention: a left block entry
L[i][j] contributes to A[i, j], the matching right block entry R[i][j]
contributes to A[n-1-i, n-1-j].  Odd operators (D1) have R = -L, even
operators (D2) have R = L.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from . import sbp_tables as tables
from .errors import ParameterError

BLOCK_ROWS = 6
BLOCK_COLS = 9
STENCIL_HALF = 3


@dataclass(frozen=True)
class SbpOperators:
    """First/second derivative operators and norm data for one bounded coordinate.

    ``norm_weights`` is the diagonal of H and includes the factor h.
    ``boundary_derivative`` holds the one-sided first-derivative rows
    (length-5 coefficient vectors, scaled by 1/h): element 0 acts on the
    first five nodes, element 1 on the last five (in natural node order).
    ``d2_interior`` and ``d2_block`` expose the raw banded representation
    consumed by the stencil kernels; ``d1``/``d2`` are sparse matrices for
    generic use.
    """

    n: int
    h: float
    norm_weights: np.ndarray
    d1: sp.csr_matrix
    d2: sp.csr_matrix
    boundary_derivative: tuple[np.ndarray, np.ndarray]
    d2_interior: np.ndarray   # offsets -3..+3, scaled 1/h^2
    d2_block: np.ndarray      # 6x9 left closure block, scaled 1/h^2 (right = mirror)


@dataclass(frozen=True)
class PeriodicStencils:
    """Sixth-order circulant first/second derivatives on a periodic coordinate."""

    n: int
    h: float
    d1: sp.csr_matrix
    d2: sp.csr_matrix
    d1_stencil: np.ndarray  # offsets -3..+3, scaled 1/h
    d2_stencil: np.ndarray  # offsets -3..+3, scaled 1/h^2


@dataclass(frozen=True)
class SatPenalty:
    """Dirichlet penalty data for one wall of the radial line.

    The evolution operator adds, per theta column,

        out[rows[k]] += coeffs[k] * (u[wall] - target)

    which is H^{-1} (s e^T + tau e e^T)(u - g) at the inner end and
    H^{-1} (-s_N e^T + tau e e^T)(u - g) at the outer end.  Together with
    the B S rows already inside D2 this makes the penalized operator
    exactly self-adjoint in the H inner product, so the semidiscrete
    evolution conserves the norm.  Positivity needs the borrowing bound
    M >= borrow*h*s s^T, giving tau >= 1/(borrow*h); both ends reduce to
    the same coefficient vector.
    """

    side: str                 # "inner" | "outer"
    target: float
    rows: np.ndarray          # row indices receiving the penalty
    coeffs: np.ndarray        # same length as rows
    tau: float

    def apply(self, u, out):
        """Accumulate the penalty contribution of field ``u`` into ``out``."""
        wall = u[0] if self.side == "inner" else u[-1]
        if self.target != 0.0:
            wall = wall - self.target
        for r, c in zip(self.rows, self.coeffs):
            out[r] += c * wall


def _norm_diagonal(n: int, h: float) -> np.ndarray:
    w = np.ones(n)
    hb = np.asarray(tables.HNORM_BOUNDARY)
    w[:BLOCK_ROWS] = hb
    w[-BLOCK_ROWS:] = hb[::-1]
    return w * h


def _banded_with_blocks(n, interior, left_block, odd, scale):
    """Assemble interior stencil plus closure blocks into a CSR matrix."""
    A = sp.lil_matrix((n, n))
    for i in range(BLOCK_ROWS, n - BLOCK_ROWS):
        for off in range(-STENCIL_HALF, STENCIL_HALF + 1):
            c = interior[off + STENCIL_HALF]
            if c != 0.0:
                A[i, i + off] = c
    sign = -1.0 if odd else 1.0
    for i in range(BLOCK_ROWS):
        for j in range(BLOCK_COLS):
            v = left_block[i][j]
            if v != 0.0:
                A[i, j] = v
                A[n - 1 - i, n - 1 - j] = sign * v
    return sp.csr_matrix(A * scale)


def _d2_left_block() -> np.ndarray:
    """Rows 0..5 of D2 (unscaled, h=1): H^{-1}(-M + B S) restricted to the closure."""
    hb = np.asarray(tables.HNORM_BOUNDARY)
    M = np.zeros((BLOCK_ROWS, BLOCK_COLS))
    for i in range(BLOCK_ROWS):
        for j in range(BLOCK_ROWS):
            M[i, j] = tables.M_BLOCK[i][j]
    for i, j, v in tables.M_BLOCK_TAIL:
        M[i, j] = v
    block = -M
    block[0, :5] -= np.asarray(tables.D1_ONESIDED)  # (B S)[0,:] = -s
    return block / hb[:, None]


def build_sbp(n: int, h: float) -> SbpOperators:
    """Construct the sixth-order SBP operator set on n nodes with spacing h."""
    if n < tables.MIN_POINTS_BOUNDED:
        raise ParameterError(f"SBP closure needs n >= {tables.MIN_POINTS_BOUNDED}, got {n}")
    if not h > 0:
        raise ParameterError("grid spacing must be positive")

    d1_left = np.asarray(tables.D1_LEFT_BLOCK)
    d1 = _banded_with_blocks(n, tables.D1_INTERIOR, d1_left, odd=True, scale=1.0 / h)

    d2_left = _d2_left_block()
    d2 = _banded_with_blocks(n, tables.D2_INTERIOR, d2_left, odd=False, scale=1.0 / h**2)

    s = np.asarray(tables.D1_ONESIDED) / h
    return SbpOperators(
        n=n,
        h=h,
        norm_weights=_norm_diagonal(n, h),
        d1=d1,
        d2=d2,
        boundary_derivative=(s, -s[::-1]),
        d2_interior=np.asarray(tables.D2_INTERIOR) / h**2,
        d2_block=d2_left / h**2,
    )


def build_periodic(n: int, h: float) -> PeriodicStencils:
    """Construct circulant sixth-order stencils on n periodic nodes."""
    if n < tables.MIN_POINTS_PERIODIC:
        raise ParameterError(f"periodic stencils need n >= {tables.MIN_POINTS_PERIODIC}, got {n}")
    if not h > 0:
        raise ParameterError("grid spacing must be positive")

    d1_st = np.asarray(tables.PERIODIC_D1) / h
    d2_st = np.asarray(tables.PERIODIC_D2) / h**2

    def circulant(stencil):
        A = sp.lil_matrix((n, n))
        for i in range(n):
            for off in range(-STENCIL_HALF, STENCIL_HALF + 1):
                c = stencil[off + STENCIL_HALF]
                if c != 0.0:
                    A[i, (i + off) % n] = c
        return sp.csr_matrix(A)

    return PeriodicStencils(n=n, h=h, d1=circulant(d1_st), d2=circulant(d2_st),
                            d1_stencil=d1_st, d2_stencil=d2_st)


def sat_dirichlet(ops: SbpOperators, side: str, target: float = 0.0) -> SatPenalty:
    """Dirichlet penalty for one end of the radial line (see SatPenalty)."""
    if side not in ("inner", "outer"):
        raise ParameterError(f"side must be 'inner' or 'outer', got {side!r}")

    h = ops.h
    tau = 1.0 / (tables.SAT_BORROW * h)
    hb = np.asarray(tables.HNORM_BOUNDARY)
    s = np.asarray(tables.D1_ONESIDED) / h
    m = len(s)

    coeffs = s / (hb[:m] * h)
    coeffs[0] += tau / (hb[0] * h)
    rows = np.arange(m) if side == "inner" else ops.n - 1 - np.arange(m)
    return SatPenalty(side=side, target=target, rows=rows, coeffs=coeffs, tau=tau)
