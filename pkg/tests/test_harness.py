import numpy as np
import pytest

from cliffsym import gamma_rep as gr
from cliffsym.harness import CHECK_NAMES, CheckSpec, run_theorem_suite, sample_sp4_matrix

EXACT = ("gamma_anticommutation", "gamma_hermiticity", "i_gamma_real", "blade_gram_identity", "J_structure")


@pytest.fixture(scope="module")
def report():
    return run_theorem_suite(seed=42, tol=1e-9)


def test_suite_passes(report):
    assert report.passed, report.to_text()
    assert [c.spec.name for c in report.checks] == list(CHECK_NAMES)
    for name in EXACT:
        assert report[name].max_residual == 0.0


def test_suite_deterministic(report):
    again = run_theorem_suite(seed=42, tol=1e-9)
    assert again.to_json() == report.to_json()
    assert "elapsed" not in report.to_json()
    assert "elapsed" in report.to_json(timing=True)


def test_text_report(report):
    text = report.to_text()
    assert text.splitlines()[-1] == "overall: PASS"
    assert len(text.splitlines()) == len(CHECK_NAMES) + 1


def _corrupt_gamma2():
    g = np.array(gr.GAMMA2)
    g[0, 2] = -g[0, 2]
    return gr.MAJORANA.with_generator(2, g)


def test_fault_injection_gamma2():
    rep = run_theorem_suite(seed=42, tol=1e-9, table=_corrupt_gamma2())
    assert not rep.passed
    failed = set(rep.failed())
    assert {"gamma_anticommutation", "homomorphism", "dagger_compatibility"} <= failed


@pytest.mark.parametrize("a", range(4))
@pytest.mark.parametrize("entry", [(0, 0), (1, 3), (2, 0), (3, 3)])
def test_any_single_sign_flip_is_detected(a, entry):
    g = np.array(gr.MAJORANA.generators[a])
    if g[entry] == 0:
        g[entry] = 1j  # a zero has no sign; poison it instead
    else:
        g[entry] = -g[entry]
    rep = run_theorem_suite(seed=1, tol=1e-9, trials=5, table=gr.MAJORANA.with_generator(a, g))
    assert not rep.passed


def test_exceptions_become_failures(monkeypatch):
    import cliffsym.harness as h

    def boom(**_):
        raise RuntimeError("broken")

    checks = [(n, boom if n == "J_structure" else f, *rest) for n, f, *rest in h._CHECKS]
    monkeypatch.setattr(h, "_CHECKS", checks)
    rep = h.run_theorem_suite(seed=0, trials=2)
    assert not rep["J_structure"].passed
    assert "RuntimeError" in rep["J_structure"].detail


def test_informational_check_not_in_verdict(report):
    assert report["sp_group_product_closure"].spec.informational
    assert report["sp_group_product_closure"].passed


def test_only_filter():
    rep = run_theorem_suite(only=("J_structure", "dimension_count"))
    assert [c.spec.name for c in rep.checks] == ["J_structure", "dimension_count"]


def test_check_spec_validation():
    with pytest.raises(ValueError):
        CheckSpec("x", "randomized", 1e-9, "", trials=0)
    with pytest.raises(ValueError):
        CheckSpec("x", "exhaustive", -1.0, "")
    with pytest.raises(ValueError):
        run_theorem_suite(tol=0)


# -- sp(4,R) sampler ---------------------------------------------------------

def test_sample_sp4_matrix():
    m = sample_sp4_matrix(7)
    assert gr.is_sp_algebra(m, 1e-12)
    s = -gr.J @ m
    assert np.allclose(s, s.T, atol=0)
    assert np.array_equal(sample_sp4_matrix(7), m)


def test_sp4_from_identity():
    m = gr.J @ np.eye(4)
    assert np.array_equal(m, gr.J)
    assert np.array_equal(m.T @ gr.J + gr.J @ m, np.zeros((4, 4)))


def test_sp4_parameter_count():
    # a symmetric 4x4 matrix has 10 free entries, matching the sp basis
    samples = np.stack([(-gr.J @ sample_sp4_matrix(s)).real.ravel() for s in range(30)])
    assert np.linalg.matrix_rank(samples) == 10
