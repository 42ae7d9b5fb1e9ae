"""Square-matrix backend: the identical pipeline with the matrix product.

Matrix powers are flattened row-major into vectors and fed through the same
incremental null-space search as multivector powers; the spectral assembly
then substitutes matrix powers for the dummy indeterminate.  Entries are
exact rationals on the structural path; exact complex rationals are supported
so the 2x2 spinor representation's complex minimal polynomial stays exact.

Also hosts the fixed 8x8 real representation of Cl(4,2): six generator
matrices satisfying the anticommutation relations with signature (4,2), and
the linear extension mapping any Cl(4,2) multivector to its matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath as mp

from .errors import SignatureMismatchError
from .funcs import FunctionSpec
from .ga import Multivector, Signature, blade_order, _mask_indices
from .minpoly import MinPolyResult, minimal_poly_generic
from .mvfunc import _assemble, _realness_tolerance
from .poly import Poly
from .roots import extract_roots
from .scalars import DEFAULT_DPS, to_mpc, working
from .spectral import build_spectral_basis


@dataclass(frozen=True)
class ExactMatrix:
    entries: tuple  # tuple of row tuples, square

    def __post_init__(self):
        m = len(self.entries)
        if m < 1 or any(len(row) != m for row in self.entries):
            raise ValueError("matrix must be square with dimension >= 1")

    @property
    def dim(self) -> int:
        return len(self.entries)

    @staticmethod
    def from_rows(rows) -> "ExactMatrix":
        return ExactMatrix(tuple(tuple(Fraction(x) for x in row) for row in rows))

    @staticmethod
    def identity(m: int) -> "ExactMatrix":
        return ExactMatrix(
            tuple(
                tuple(Fraction(1 if i == j else 0) for j in range(m))
                for i in range(m)
            )
        )

    @staticmethod
    def zero(m: int) -> "ExactMatrix":
        return ExactMatrix(tuple((Fraction(0),) * m for _ in range(m)))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(tuple(tuple(-a for a in row) for row in self.entries))

    def scale(self, c) -> "ExactMatrix":
        return ExactMatrix(tuple(tuple(c * a for a in row) for row in self.entries))

    def __mul__(self, other: "ExactMatrix") -> "ExactMatrix":
        m = self.dim
        cols = list(zip(*other.entries))
        return ExactMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.entries
            )
        )

    def coefficient_list(self) -> list:
        """Row-major flattening, the vector the null-space search sees."""
        return [x for row in self.entries for x in row]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)


def matrix_minimal_poly(m: ExactMatrix) -> MinPolyResult:
    return minimal_poly_generic(
        m, ExactMatrix.identity(m.dim), m.dim, lambda x: x.coefficient_list()
    )


@dataclass
class MatrixFunctionResult:
    value: list  # list of rows of mpc
    real_form: list | None
    max_imag_residual: object
    diagnostics: dict = field(default_factory=dict)


def matrix_function(
    m: ExactMatrix, f: FunctionSpec, precision: int = DEFAULT_DPS
) -> MatrixFunctionResult:
    """f(M) by minimal polynomial, roots, spectral basis, and matrix powers."""
    with working(precision):
        mu = matrix_minimal_poly(m).mu
        roots = extract_roots(mu, precision)
        basis = build_spectral_basis(mu, roots, precision)
        pipe = _MatrixPipeline(mu, roots, basis, m)
        f.reset_instrumentation()
        total = _assemble(pipe, f, precision)
        powers = [ExactMatrix.identity(m.dim)]
        for _ in range(max(total.degree, 0)):
            powers.append(powers[-1] * m)
        dim = m.dim
        value = [[mp.mpc(0) for _ in range(dim)] for _ in range(dim)]
        for k, c in enumerate(total.coeffs):
            if c == 0:
                continue
            ck = to_mpc(c)
            pk = powers[k].entries
            for i in range(dim):
                for j in range(dim):
                    value[i][j] += ck * to_mpc(pk[i][j])
        residual = max(abs(mp.im(x)) for row in value for x in row)
        magnitude = max(abs(mp.re(x)) for row in value for x in row)
        real_form = None
        if residual < _realness_tolerance(precision) * (1 + magnitude):
            real_form = [[mp.re(x) for x in row] for row in value]
        return MatrixFunctionResult(
            value=value,
            real_form=real_form,
            max_imag_residual=residual,
            diagnostics={
                "function": f.name,
                "precision": precision,
                "minimal_degree": mu.degree,
                "derivative_orders": sorted({t for _, t in f.calls}),
            },
        )


@dataclass
class _MatrixPipeline:
    mu: Poly
    roots: object
    basis: object
    matrix: ExactMatrix


# -- the fixed Cl(4,2) 8x8 real representation -----------------------------

_CL42_GENERATOR_ROWS = (
    (
        (0, 1, 0, 0, 0, 0, 0, 0),
        (1, 0, 0, 0, 0, 0, 0, 0),
        (0, 0, 0, -1, 0, 0, 0, 0),
        (0, 0, -1, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, 0, 1, 0, 0),
        (0, 0, 0, 0, 1, 0, 0, 0),
        (0, 0, 0, 0, 0, 0, 0, -1),
        (0, 0, 0, 0, 0, 0, -1, 0),
    ),
    (
        (0, 0, 0, 0, 0, 0, 0, -1),
        (0, 0, 0, 0, 0, 0, -1, 0),
        (0, 0, 0, 0, 0, -1, 0, 0),
        (0, 0, 0, 0, -1, 0, 0, 0),
        (0, 0, 0, -1, 0, 0, 0, 0),
        (0, 0, -1, 0, 0, 0, 0, 0),
        (0, -1, 0, 0, 0, 0, 0, 0),
        (-1, 0, 0, 0, 0, 0, 0, 0),
    ),
    (
        (0, 0, 0, -1, 0, 0, 0, 0),
        (0, 0, -1, 0, 0, 0, 0, 0),
        (0, -1, 0, 0, 0, 0, 0, 0),
        (-1, 0, 0, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, 0, 0, 0, 1),
        (0, 0, 0, 0, 0, 0, 1, 0),
        (0, 0, 0, 0, 0, 1, 0, 0),
        (0, 0, 0, 0, 1, 0, 0, 0),
    ),
    (
        (1, 0, 0, 0, 0, 0, 0, 0),
        (0, -1, 0, 0, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0, 0, 0),
        (0, 0, 0, -1, 0, 0, 0, 0),
        (0, 0, 0, 0, 1, 0, 0, 0),
        (0, 0, 0, 0, 0, -1, 0, 0),
        (0, 0, 0, 0, 0, 0, 1, 0),
        (0, 0, 0, 0, 0, 0, 0, -1),
    ),
    (
        (0, 0, 0, 1, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0, 0, 0),
        (0, -1, 0, 0, 0, 0, 0, 0),
        (-1, 0, 0, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, 0, 0, 0, 1),
        (0, 0, 0, 0, 0, 0, 1, 0),
        (0, 0, 0, 0, 0, -1, 0, 0),
        (0, 0, 0, 0, -1, 0, 0, 0),
    ),
    (
        (0, 1, 0, 0, 0, 0, 0, 0),
        (-1, 0, 0, 0, 0, 0, 0, 0),
        (0, 0, 0, 1, 0, 0, 0, 0),
        (0, 0, -1, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, 0, 1, 0, 0),
        (0, 0, 0, 0, -1, 0, 0, 0),
        (0, 0, 0, 0, 0, 0, 0, 1),
        (0, 0, 0, 0, 0, 0, -1, 0),
    ),
)

CL42 = Signature(4, 2)


@lru_cache(maxsize=1)
def cl42_generators() -> tuple[ExactMatrix, ...]:
    """The six 8x8 real generator matrices of Cl(4,2)."""
    return tuple(ExactMatrix.from_rows(rows) for rows in _CL42_GENERATOR_ROWS)


@lru_cache(maxsize=1)
def _cl42_blade_reps() -> tuple[ExactMatrix, ...]:
    gens = cl42_generators()
    reps = []
    for mask in blade_order(CL42):
        acc = ExactMatrix.identity(8)
        for idx in _mask_indices(mask):
            acc = acc * gens[idx - 1]
        reps.append(acc)
    return tuple(reps)


def rep_of(a: Multivector) -> ExactMatrix:
    """8x8 real matrix of a Cl(4,2) multivector (linear extension over the
    blade representations)."""
    if a.sig != CL42:
        raise SignatureMismatchError("rep_of requires signature (4,2)")
    acc = ExactMatrix.zero(8)
    for coeff, rep in zip(a.coeffs, _cl42_blade_reps()):
        if coeff != 0:
            acc = acc + rep.scale(coeff)
    return acc
