"""Tests for atom laws, ensemble specifications and samplers."""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from src.ensembles import (
    GOE,
    GUE,
    MATCHED,
    MATCHED_REAL,
    PRESETS,
    RADEMACHER,
    RADEMACHER_REAL,
    AtomDistribution,
    AtomKind,
    EnsembleSpec,
    SymmetryClass,
    atom_moments,
    matches_gaussian_to_order,
    matches_goe_to_order,
    matches_gue_to_order,
    principal_submatrix,
    sample_beta_hermite,
    sample_dense,
    sample_tridiagonal_gaussian,
    stream_label,
    substream,
)
from src.exceptions import ParameterError, SizeError
from src.linalg import ScaleTag


@pytest.mark.unit
class TestAtomDistribution:
    """Test atom laws and their exact moments."""

    def test_gaussian_complex_components(self):
        """Complex Gaussian atoms have components of variance 1/2."""
        atom = AtomDistribution.gaussian_complex()
        assert atom.complex_valued
        assert atom_moments(atom) == (0.0, 0.5, 0.0, 0.75)
        assert atom.total_variance == pytest.approx(1.0)

    def test_complex_kind_forces_complex_flag(self):
        """Constructing by kind alone still yields a complex atom."""
        atom = AtomDistribution(kind=AtomKind.GAUSSIAN_COMPLEX)
        assert atom.complex_valued

    def test_three_point_matches_gaussian_moments(self):
        """The three-point law has Gaussian moments up to order four."""
        m = atom_moments(AtomDistribution.three_point(2.0))
        g = atom_moments(AtomDistribution.gaussian_real(4.0))
        for ours, gaussian in zip(m, g):
            assert ours == pytest.approx(gaussian, abs=1e-12)

    def test_rademacher_fourth_moment(self):
        """Rademacher has fourth moment scale^4, below the Gaussian 3 scale^4."""
        m = atom_moments(AtomDistribution.rademacher(1.0))
        assert m == (0.0, 1.0, 0.0, 1.0)

    def test_nonpositive_variance_rejected(self):
        """Variance and scale must be positive."""
        with pytest.raises(ValidationError):
            AtomDistribution.gaussian_real(0.0)
        with pytest.raises(ValidationError):
            AtomDistribution.three_point(-1.0)

    def test_draw_support(self, rng):
        """Three-point draws take values in {-sqrt3 a, 0, sqrt3 a}."""
        values = AtomDistribution.three_point(0.5).draw(rng, 2000)
        support = np.array([-math.sqrt(3) * 0.5, 0.0, math.sqrt(3) * 0.5])
        assert np.all(np.min(np.abs(values[:, None] - support[None, :]), axis=1) < 1e-15)
        # P(0) = 2/3
        assert np.mean(values == 0.0) == pytest.approx(2 / 3, abs=0.05)

    def test_draw_complex_dtype(self, rng):
        """Complex atoms draw complex arrays."""
        values = AtomDistribution.rademacher(1 / math.sqrt(2), complex_valued=True).draw(rng, 10)
        assert np.iscomplexobj(values)
        assert np.allclose(np.abs(values) ** 2, 1.0)

    def test_empirical_variance(self, rng):
        """Sample variance of Gaussian atoms is close to the nominal one."""
        values = AtomDistribution.gaussian_real(2.0).draw(rng, 20000)
        assert np.var(values) == pytest.approx(2.0, rel=0.05)


@pytest.mark.unit
class TestEnsembleSpec:
    """Test ensemble normalization and moment matching."""

    def test_presets(self):
        """Presets are registered by name with the right symmetry class."""
        assert set(PRESETS) == {"gue", "goe", "matched", "rademacher", "matched-real", "rademacher-real"}
        assert MATCHED_REAL.beta == 1 and not MATCHED_REAL.is_complex
        assert GUE.beta == 2 and GUE.is_complex
        assert GOE.beta == 1 and not GOE.is_complex
        assert SymmetryClass.SYMMETRIC.beta == 1

    def test_wrong_off_diagonal_variance(self):
        """Hermitian off-diagonal atoms need E|Z|^2 = 1."""
        with pytest.raises(ValidationError):
            EnsembleSpec(
                symmetry_class=SymmetryClass.HERMITIAN,
                off_diagonal=AtomDistribution.rademacher(1.0, complex_valued=True),
                diagonal=AtomDistribution.gaussian_real(1.0),
                name="bad",
            )

    def test_goe_diagonal_variance_two(self):
        """Real symmetric ensembles need diagonal variance 2."""
        with pytest.raises(ValidationError):
            EnsembleSpec(
                symmetry_class=SymmetryClass.SYMMETRIC,
                off_diagonal=AtomDistribution.gaussian_real(1.0),
                diagonal=AtomDistribution.gaussian_real(1.0),
                name="bad",
            )

    def test_symmetric_rejects_complex_entries(self):
        """Real symmetric ensembles cannot have complex off-diagonal atoms."""
        with pytest.raises(ValidationError):
            EnsembleSpec(
                symmetry_class=SymmetryClass.SYMMETRIC,
                off_diagonal=AtomDistribution.gaussian_complex(),
                diagonal=AtomDistribution.gaussian_real(2.0),
                name="bad",
            )

    def test_matched_ensemble_matches_to_four(self):
        """The three-point ensemble matches GUE to order 4."""
        assert matches_gue_to_order(MATCHED, 4)
        assert matches_gue_to_order(GUE, 4)

    def test_rademacher_matches_only_to_three(self):
        """Rademacher agrees with GUE to order 3 but not 4."""
        assert matches_gue_to_order(RADEMACHER, 2)
        assert matches_gue_to_order(RADEMACHER, 3)
        assert not matches_gue_to_order(RADEMACHER, 4)

    def test_real_ensemble_never_matches(self):
        """Real symmetric ensembles do not match GUE."""
        assert not matches_gue_to_order(GOE, 2)

    def test_invalid_order(self):
        """Only orders 2, 3, 4 are supported."""
        with pytest.raises(ParameterError):
            matches_gue_to_order(GUE, 5)

    def test_real_matched_moments(self):
        """Real three-point atoms reproduce N(0, 1) off and N(0, 2) on the diagonal to order 4."""
        assert atom_moments(MATCHED_REAL.off_diagonal) == pytest.approx((0.0, 1.0, 0.0, 3.0))
        assert atom_moments(MATCHED_REAL.diagonal) == pytest.approx((0.0, 2.0, 0.0, 12.0))

    def test_real_matched_matches_goe_to_four(self):
        """The real three-point ensemble matches GOE, not GUE."""
        assert matches_goe_to_order(MATCHED_REAL, 4)
        assert matches_goe_to_order(GOE, 4)
        assert not matches_gue_to_order(MATCHED_REAL, 2)
        assert not matches_goe_to_order(MATCHED, 2)

    def test_real_rademacher_matches_only_to_three(self):
        """Real Rademacher agrees with GOE to order 3 but not 4."""
        assert matches_goe_to_order(RADEMACHER_REAL, 3)
        assert not matches_goe_to_order(RADEMACHER_REAL, 4)

    @pytest.mark.parametrize("spec, expected", [
        (MATCHED, True), (MATCHED_REAL, True), (RADEMACHER, False), (RADEMACHER_REAL, False),
    ])
    def test_matches_gaussian_by_symmetry_class(self, spec, expected):
        """Each spec is compared with the Gaussian ensemble of its own class."""
        assert matches_gaussian_to_order(spec, 4) is expected

    def test_goe_invalid_order(self):
        with pytest.raises(ParameterError):
            matches_goe_to_order(GOE, 1)


@pytest.mark.unit
class TestSampling:
    """Test dense and tridiagonal samplers."""

    @pytest.mark.parametrize("spec", [GUE, GOE, MATCHED, RADEMACHER, MATCHED_REAL, RADEMACHER_REAL])
    def test_dense_is_hermitian(self, spec, rng):
        """Dense samples equal their conjugate transpose."""
        sample = sample_dense(spec, 7, rng)
        assert sample.entries.shape == (7, 7)
        assert np.array_equal(sample.entries, sample.entries.conj().T)
        assert np.all(np.imag(np.diag(sample.entries)) == 0.0)
        assert np.iscomplexobj(sample.entries) == spec.is_complex

    def test_dense_rejects_bad_size(self, rng):
        """Sizes must be positive integers."""
        with pytest.raises(ParameterError):
            sample_dense(GUE, 0, rng)

    def test_principal_submatrix(self, rng):
        """The submatrix is the leading block."""
        sample = sample_dense(GOE, 5, rng)
        sub = principal_submatrix(sample)
        assert sub.n == 4
        assert np.array_equal(sub.entries, sample.entries[:4, :4])

    def test_principal_submatrix_of_scalar(self, rng):
        """A 1 x 1 sample has no principal submatrix."""
        with pytest.raises(SizeError):
            principal_submatrix(sample_dense(GUE, 1, rng))

    def test_beta_hermite_shape(self, rng):
        """The beta-Hermite model has n diagonal and n-1 off-diagonal entries."""
        T = sample_beta_hermite(4.0, 6, rng)
        assert T.n == 6
        assert T.offdiag.shape == (5,)
        assert T.scale_tag == ScaleTag.MN
        assert np.all(T.offdiag >= 0.0)

    def test_beta_hermite_single_entry(self, rng):
        """n = 1 gives a 1 x 1 matrix."""
        assert sample_beta_hermite(2.0, 1, rng).n == 1

    def test_beta_must_be_positive(self, rng):
        """beta <= 0 is rejected."""
        with pytest.raises(ParameterError):
            sample_beta_hermite(0.0, 4, rng)

    def test_tridiagonal_gaussian_beta(self, rng):
        """The Gaussian fast path supports beta 1 and 2 only."""
        with pytest.raises(ParameterError):
            sample_tridiagonal_gaussian(4, 5, rng)

    def test_trace_of_squares_matches_dense(self, rng):
        """E tr M^2 = n^2 for the GUE normalization in both samplers."""
        n, reps = 8, 400
        dense = np.mean([np.sum(np.abs(sample_dense(GUE, n, rng).entries) ** 2) for _ in range(reps)])
        tri = []
        for _ in range(reps):
            T = sample_tridiagonal_gaussian(2, n, rng)
            tri.append(np.sum(T.diag ** 2) + 2 * np.sum(T.offdiag ** 2))
        assert dense == pytest.approx(n * n, rel=0.05)
        assert np.mean(tri) == pytest.approx(n * n, rel=0.05)


@pytest.mark.unit
class TestStreams:
    """Test reproducible substreams."""

    def test_same_key_same_stream(self):
        """Equal (seed, block, group) give identical draws."""
        a = substream(11, 3, 1).random(5)
        b = substream(11, 3, 1).random(5)
        assert np.array_equal(a, b)

    def test_distinct_keys_distinct_streams(self):
        """Different blocks or groups give different draws."""
        base = substream(11, 3, 1).random(5)
        assert not np.array_equal(base, substream(11, 4, 1).random(5))
        assert not np.array_equal(base, substream(11, 3, 2).random(5))

    def test_stream_label(self):
        """Labels read seed/group/block/offset."""
        assert stream_label(5, 1, 2, 3) == "5/1/2/3"
