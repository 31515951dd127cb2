from fractions import Fraction

import pytest

import flagspec


def cp2():
    return flagspec.build_flag(flagspec.build_root_system("A", 2), [1])


def test_root_data():
    a2 = flagspec.build_root_system("A", 2)
    assert a2.cartan == [[2, -1], [-1, 2]]
    assert a2.positive_roots == [[1, 0], [0, 1], [1, 1]]
    assert flagspec.weyl_vector(a2) == [1, 1]
    assert flagspec.coroot_pairing(a2, [2, 2], [1, 1]) == 4
    g2 = flagspec.build_root_system("G", 2)
    assert g2.symmetrizer == [Fraction(1, 3), 1]


def test_weyl_group():
    a2 = flagspec.build_root_system("A", 2)
    word, dominant, length = flagspec.to_dominant(a2, [-2, 1])
    assert (word, dominant, length) == ([2, 1], [1, 1], 2)
    assert flagspec.weyl_dimension(a2, [1, 1]) == 8
    e8 = flagspec.build_root_system("E", 8)
    assert flagspec.weyl_dimension(e8, [3] * 8) == 2 ** 240
    report = flagspec.bwb_classify(flagspec.build_root_system("A", 1), [-5])
    assert report["degree"] == 1 and report["dimension"] == 4


def test_flag_data():
    x = cp2()
    assert x.dim_c == 2
    assert x.delta_p == [3, 0]
    assert flagspec.fano_index(x) == 3
    assert x.radical_roots == [[1, 0], [1, 1]]
    omega = flagspec.KahlerClass([1], pi_units=True)
    s = flagspec.scalar_curvature(x, omega)
    assert (s.value, s.pi_power) == (24, 0)
    assert flagspec.ke_class(x, "24") == omega


def test_spectra():
    x = cp2()
    spec = flagspec.weitzenboeck_spectrum(x, [1], flagspec.KahlerClass([1]))
    assert spec.entries == [(4, 1), (6, 2), (8, 1)]
    assert spec.pi_power == 1 and spec.total == 4
    theta = flagspec.theta_spectrum(x, flagspec.KahlerClass([3]), flagspec.KahlerClass([1]))
    assert theta.imaginary and theta.entries == [(-6, 1), (0, 2), (6, 1)]
    value, vacuous = flagspec.dirac_lower_bound(x, [-1], flagspec.ke_class(x, "24"))
    assert (value.value, value.pi_power, vacuous) == (4, 0, False)
    h = flagspec.harmonic_spinors(x, [-3])
    assert h["harmonic"] and h["degree"] == 2 and h["index"] == 1


def test_rationals_and_errors():
    x = cp2()
    spec = flagspec.weitzenboeck_spectrum(x, [1], flagspec.KahlerClass(["1/2"]))
    assert spec.min == 8
    with pytest.raises(flagspec.FlagspecError, match="not-spinc"):
        flagspec.harmonic_spinors(x, [0])
    with pytest.raises(ValueError, match="not-kahler"):
        flagspec.weitzenboeck_min(x, [1], flagspec.KahlerClass([-1]))
    with pytest.raises(flagspec.FlagspecError):
        flagspec.KahlerClass([0.5])


def test_job_runner_matches_cli_document():
    doc = flagspec.run("scan", "A", 2, [1], q_range=(-3, 3))
    assert doc["schema_version"] == flagspec.SCHEMA_VERSION
    rows = doc["result"]["rows"]
    assert [r["q"] for r in rows] == [-3, -1, 1, 3]
    assert [r["bound"]["rational"] for r in rows] == ["0", "4", "4", "0"]
    e8 = flagspec.run("spectrum", "E", 8, range(1, 9), line_bundle=[2] * 8, kahler=[1] * 8, max_distinct=1)
    assert e8["result"]["spectrum"]["total"] == str(2 ** 120)
