import numpy as np
import pytest
from hypothesis import given, strategies as st

from rabikit.core import DegenerateParameterError, ThreeLevelParams, build_hamiltonian


def params_strategy(max_ratio=0.2):
    @st.composite
    def build(draw):
        alpha = draw(st.sampled_from([-1.0, 1.0])) * draw(
            st.floats(0.3, 1.5, allow_nan=False)
        )
        return ThreeLevelParams(
            g=draw(st.floats(0.0, max_ratio)) * abs(alpha),
            delta=draw(st.floats(-max_ratio, max_ratio)) * abs(alpha),
            alpha=alpha,
            k=draw(st.floats(0.0, 2.5)),
        )

    return build()


def test_zero_drive_is_diagonal():
    h = build_hamiltonian(ThreeLevelParams(g=0.0, delta=0.01, alpha=0.5, k=1.0))
    assert np.allclose(h, np.diag([0.0, -0.01, 0.48]))


def test_direct_substitution():
    h = build_hamiltonian(ThreeLevelParams(g=0.02, delta=0.0, alpha=0.5, k=2.0))
    assert h[0, 1] == h[1, 0] == pytest.approx(0.01)
    assert h[1, 2] == h[2, 1] == pytest.approx(0.02)
    assert np.allclose(np.diag(h), [0.0, 0.0, 0.5])


@given(params_strategy())
def test_structure(params):
    h = build_hamiltonian(params)
    assert h[0, 2] == 0.0 and h[2, 0] == 0.0
    assert np.array_equal(h, h.conj().T)  # Hermitian exactly
    assert np.all(h.imag == 0.0)  # real symmetric under zero drive phase
    assert np.trace(h).real == pytest.approx(-3.0 * params.delta + params.alpha, rel=1e-12)


def test_rejects_zero_alpha():
    with pytest.raises(DegenerateParameterError):
        ThreeLevelParams(g=0.01, delta=0.0, alpha=0.0, k=1.0)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(g=-0.01, delta=0.0, alpha=0.5, k=1.0),
        dict(g=0.01, delta=0.0, alpha=0.5, k=-1.0),
        dict(g=float("nan"), delta=0.0, alpha=0.5, k=1.0),
        dict(g=0.01, delta=float("inf"), alpha=0.5, k=1.0),
    ],
)
def test_rejects_invalid_fields(kwargs):
    with pytest.raises(ValueError):
        ThreeLevelParams(**kwargs)


def test_regime_flag():
    assert ThreeLevelParams(g=0.1, delta=-0.1, alpha=0.5, k=1.0).in_validated_regime
    assert ThreeLevelParams(g=0.1, delta=0.1, alpha=-0.5, k=1.0).in_validated_regime
    assert not ThreeLevelParams(g=0.11, delta=0.0, alpha=0.5, k=1.0).in_validated_regime
    assert not ThreeLevelParams(g=0.0, delta=0.2, alpha=0.5, k=1.0).in_validated_regime
    # boundary counts as inside
    assert ThreeLevelParams(g=0.1, delta=0.0, alpha=0.5, k=1.0).in_validated_regime


def test_params_are_immutable():
    params = ThreeLevelParams(g=0.01, delta=0.0, alpha=0.5, k=1.0)
    with pytest.raises(AttributeError):
        params.g = 0.02
