"""Ensemble specifications and moment matching against GUE and GOE."""

import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, model_validator

from ..exceptions import ParameterError
from .atoms import AtomDistribution, atom_moments

_MOMENT_TOL = 1e-12


class SymmetryClass(str, Enum):
    """Hermitian (beta = 2) or real symmetric (beta = 1) Wigner matrices."""
    HERMITIAN = "hermitian"
    SYMMETRIC = "symmetric"

    @property
    def beta(self) -> int:
        return 2 if self is SymmetryClass.HERMITIAN else 1


class EnsembleSpec(BaseModel):
    """Wigner ensemble: symmetry class plus off-diagonal and diagonal atom laws."""
    symmetry_class: SymmetryClass
    off_diagonal: AtomDistribution
    diagonal: AtomDistribution
    name: str

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _normalization(self) -> "EnsembleSpec":
        if self.diagonal.complex_valued:
            raise ValueError("diagonal atoms must be real")

        if self.symmetry_class == SymmetryClass.HERMITIAN:
            expected_off, expected_diag = 1.0, 1.0
        else:
            if self.off_diagonal.complex_valued:
                raise ValueError("real symmetric ensembles need real off-diagonal atoms")
            expected_off, expected_diag = 1.0, 2.0

        if not math.isclose(self.off_diagonal.total_variance, expected_off, rel_tol=1e-9):
            raise ValueError(
                f"off-diagonal variance must be {expected_off}, "
                f"got {self.off_diagonal.total_variance}"
            )
        if not math.isclose(self.diagonal.total_variance, expected_diag, rel_tol=1e-9):
            raise ValueError(
                f"diagonal variance must be {expected_diag}, "
                f"got {self.diagonal.total_variance}"
            )
        return self

    @property
    def beta(self) -> int:
        return self.symmetry_class.beta

    @property
    def is_complex(self) -> bool:
        return self.off_diagonal.complex_valued


GUE = EnsembleSpec(
    symmetry_class=SymmetryClass.HERMITIAN,
    off_diagonal=AtomDistribution.gaussian_complex(),
    diagonal=AtomDistribution.gaussian_real(1.0),
    name="gue",
)

GOE = EnsembleSpec(
    symmetry_class=SymmetryClass.SYMMETRIC,
    off_diagonal=AtomDistribution.gaussian_real(1.0),
    diagonal=AtomDistribution.gaussian_real(2.0),
    name="goe",
)

MATCHED = EnsembleSpec(
    symmetry_class=SymmetryClass.HERMITIAN,
    off_diagonal=AtomDistribution.three_point(1 / math.sqrt(2), complex_valued=True),
    diagonal=AtomDistribution.three_point(1.0),
    name="matched",
)

RADEMACHER = EnsembleSpec(
    symmetry_class=SymmetryClass.HERMITIAN,
    off_diagonal=AtomDistribution.rademacher(1 / math.sqrt(2), complex_valued=True),
    diagonal=AtomDistribution.rademacher(1.0),
    name="rademacher",
)

MATCHED_REAL = EnsembleSpec(
    symmetry_class=SymmetryClass.SYMMETRIC,
    off_diagonal=AtomDistribution.three_point(1.0),
    diagonal=AtomDistribution.three_point(math.sqrt(2.0)),
    name="matched-real",
)

RADEMACHER_REAL = EnsembleSpec(
    symmetry_class=SymmetryClass.SYMMETRIC,
    off_diagonal=AtomDistribution.rademacher(1.0),
    diagonal=AtomDistribution.rademacher(math.sqrt(2.0)),
    name="rademacher-real",
)


def _agree(a: float, b: float) -> bool:
    return math.isclose(a, b, rel_tol=_MOMENT_TOL, abs_tol=_MOMENT_TOL)


def _check_order(k: int) -> None:
    if k not in (2, 3, 4):
        raise ParameterError("k", k, "matching order must be 2, 3 or 4")


def _moments_agree(atom: AtomDistribution, reference: AtomDistribution, k: int) -> bool:
    ours, theirs = atom_moments(atom), atom_moments(reference)
    return all(_agree(ours[j], theirs[j]) for j in range(k))


def matches_gue_to_order(spec: EnsembleSpec, k: int) -> bool:
    """Whether ``spec`` matches GUE entry moments to order ``k`` off the diagonal.

    Real and imaginary parts of the off-diagonal entries are independent, so
    matching reduces to comparing component moments with those of a real
    Gaussian of variance 1/2. The diagonal is compared to order 2 against
    a standard real Gaussian.
    """
    _check_order(k)
    if spec.symmetry_class != SymmetryClass.HERMITIAN or not spec.is_complex:
        return False
    return (_moments_agree(spec.off_diagonal, GUE.off_diagonal, k)
            and _moments_agree(spec.diagonal, GUE.diagonal, 2))


def matches_goe_to_order(spec: EnsembleSpec, k: int) -> bool:
    """Whether a real symmetric ``spec`` matches GOE entry moments to order ``k``.

    Off-diagonal entries are compared with N(0, 1) and diagonal entries
    with N(0, 2), both to order ``k``.
    """
    _check_order(k)
    if spec.symmetry_class != SymmetryClass.SYMMETRIC:
        return False
    return (_moments_agree(spec.off_diagonal, GOE.off_diagonal, k)
            and _moments_agree(spec.diagonal, GOE.diagonal, k))


def matches_gaussian_to_order(spec: EnsembleSpec, k: int) -> bool:
    """GUE matching for Hermitian specs, GOE matching for real symmetric ones."""
    if spec.symmetry_class == SymmetryClass.HERMITIAN:
        return matches_gue_to_order(spec, k)
    return matches_goe_to_order(spec, k)
