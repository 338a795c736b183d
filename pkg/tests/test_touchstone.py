"""Touchstone parsing, S/Z conversion, coupling extraction, reports."""

import math
import random
from importlib import resources

import numpy as np
import pytest

from uavwpt.errors import (
    ConversionError,
    ExtractionError,
    ReportKeyError,
    TouchstoneFormatError,
)
from uavwpt.touchstone import (
    ImpedanceMatrix,
    TwoPortSample,
    compare_report,
    coupling_from_z,
    parse_touchstone,
    report_csv,
    s_to_z,
    serialize_touchstone,
    z_to_s,
)

FIXTURES = resources.files("uavwpt.data").joinpath("fixtures")


def read_fixture(name):
    return FIXTURES.joinpath(name).read_text()


def random_passive_sample(rng, freq):
    """Random reciprocal, strictly passive S-matrix (max singular value < 1)."""
    s = np.array(
        [
            [complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(2)]
            for _ in range(2)
        ]
    )
    s = 0.5 * (s + s.T)  # reciprocity: s12 = s21
    s *= 0.9 / max(np.linalg.svd(s, compute_uv=False)[0], 1e-9)
    return TwoPortSample(freq, s[0, 0], s[1, 0], s[0, 1], s[1, 1])


class TestParser:
    def test_minimal_ri_file(self):
        text = "# MHz S RI R 50\n6.78 0.1 0.2 0.3 0.4 0.3 0.4 0.5 0.6\n"
        (sample,) = parse_touchstone(text)
        assert sample.frequency == pytest.approx(6.78e6)
        assert sample.s11 == complex(0.1, 0.2)
        assert sample.s21 == complex(0.3, 0.4)
        assert sample.z0 == 50.0

    def test_default_option_values(self):
        # bare '#' implies GHz, MA, 50 ohm
        text = "#\n1.0 0.5 0.0 0.1 90 0.1 90 0.5 180\n"
        (sample,) = parse_touchstone(text)
        assert sample.frequency == pytest.approx(1e9)
        assert sample.s11 == pytest.approx(complex(0.5, 0.0))
        assert sample.s21 == pytest.approx(complex(0.0, 0.1))
        assert sample.s22 == pytest.approx(complex(-0.5, 0.0))

    def test_db_format(self):
        text = "# Hz S DB R 50\n100 -6.0205999132796 0 -20 90 -20 90 0 0\n"
        (sample,) = parse_touchstone(text)
        assert abs(sample.s11) == pytest.approx(0.5, rel=1e-9)
        assert sample.s21 == pytest.approx(complex(0.0, 0.1), abs=1e-12)

    def test_comments_ignored(self):
        text = "! header comment\n# MHz S RI R 50\n1 0 0 0 0 0 0 0 0 ! trailing\n"
        assert len(parse_touchstone(text)) == 1

    def test_fixture_files_parse(self):
        for name in (
            "openair_dz50.s2p",
            "openair_dz100.s2p",
            "openair_dz100_ma.s2p",
            "openair_dz100_db.s2p",
        ):
            (sample,) = parse_touchstone(read_fixture(name))
            assert sample.frequency == pytest.approx(6.78e6)

    def test_format_variants_agree(self):
        (ri,) = parse_touchstone(read_fixture("openair_dz100.s2p"))
        (ma,) = parse_touchstone(read_fixture("openair_dz100_ma.s2p"))
        (db,) = parse_touchstone(read_fixture("openair_dz100_db.s2p"))
        for a, b in ((ri.s11, ma.s11), (ri.s11, db.s11), (ri.s21, ma.s21), (ri.s21, db.s21)):
            assert a == pytest.approx(b, rel=1e-12)

    def test_v2_rejected(self):
        with pytest.raises(TouchstoneFormatError, match="v2"):
            parse_touchstone("[Version] 2.0\n# MHz S RI R 50\n")

    def test_wrong_column_count(self):
        with pytest.raises(TouchstoneFormatError, match="line 2"):
            parse_touchstone("# MHz S RI R 50\n1 0 0 0 0\n")

    def test_missing_option_line(self):
        with pytest.raises(TouchstoneFormatError):
            parse_touchstone("1 0 0 0 0 0 0 0 0\n")
        with pytest.raises(TouchstoneFormatError):
            parse_touchstone("")

    def test_non_monotone_frequency(self):
        text = "# Hz S RI R 50\n2 0 0 0 0 0 0 0 0\n1 0 0 0 0 0 0 0 0\n"
        with pytest.raises(TouchstoneFormatError, match="increasing"):
            parse_touchstone(text)

    def test_non_s_parameters_rejected(self):
        with pytest.raises(TouchstoneFormatError):
            parse_touchstone("# MHz Y RI R 50\n")

    def test_round_trip_fixpoint(self):
        text = read_fixture("openair_dz50.s2p")
        samples = parse_touchstone(text)
        text2 = serialize_touchstone(samples, unit="MHz", fmt="RI")
        samples2 = parse_touchstone(text2)
        assert serialize_touchstone(samples2, unit="MHz", fmt="RI") == text2


class TestConversion:
    def test_matched_load_is_z0(self):
        # S = 0 -> Z = z0 I
        sample = TwoPortSample(1e6, 0, 0, 0, 0, z0=50.0)
        zm = s_to_z(sample)
        assert zm.z11 == pytest.approx(50.0)
        assert zm.z12 == pytest.approx(0.0)

    def test_s_z_s_identity_randomized(self):
        rng = random.Random(3)
        for _ in range(300):
            sample = random_passive_sample(rng, 1e6)
            zm = s_to_z(sample)
            s11, s21, s12, s22 = z_to_s(zm, sample.z0)
            assert s11 == pytest.approx(sample.s11, abs=1e-12)
            assert s21 == pytest.approx(sample.s21, abs=1e-12)
            assert s12 == pytest.approx(sample.s12, abs=1e-12)
            assert s22 == pytest.approx(sample.s22, abs=1e-12)

    def test_singular_conversion(self):
        sample = TwoPortSample(1e6, 1.0, 0.0, 0.0, 1.0)
        with pytest.raises(ConversionError):
            s_to_z(sample)

    def test_reciprocity_warning(self):
        with pytest.warns(UserWarning, match="reciprocity"):
            ImpedanceMatrix(1 + 1j, 2j, 3j, 1 + 1j)


class TestCouplingExtraction:
    def test_known_inductive_two_port(self):
        f = 6.78e6
        w = 2 * math.pi * f
        l1, l2, k = 2e-6, 3e-6, 0.1
        m = k * math.sqrt(l1 * l2)
        zm = ImpedanceMatrix(
            complex(0.1, w * l1), complex(0, w * m), complex(0, w * m), complex(1, w * l2)
        )
        ext = coupling_from_z(zm, f)
        assert ext.k == pytest.approx(k, rel=1e-12)
        assert ext.l1 == pytest.approx(l1, rel=1e-12)
        assert ext.l2 == pytest.approx(l2, rel=1e-12)
        assert ext.m == pytest.approx(m, rel=1e-12)

    def test_fixture_coupling_values(self):
        expected = {50: 0.107, 100: 0.042, 150: 0.018, 200: 0.010}
        for dz, k in expected.items():
            (sample,) = parse_touchstone(read_fixture(f"openair_dz{dz}.s2p"))
            ext = coupling_from_z(s_to_z(sample), sample.frequency)
            assert ext.k == pytest.approx(k, abs=1e-12)

    def test_capacitive_port_rejected(self):
        zm = ImpedanceMatrix(complex(1, -10), 1j, 1j, complex(1, 10))
        with pytest.raises(ExtractionError):
            coupling_from_z(zm, 1e6)


class TestReports:
    def test_compare_and_csv(self):
        analytic = [(50.0, 0.111), (100.0, 0.040)]
        measured = [(100.0, 0.042), (50.0, 0.107)]
        rows = compare_report(analytic, measured)
        assert [r.dz for r in rows] == [50.0, 100.0]
        assert rows[0].abs_dev == pytest.approx(0.004)
        assert rows[1].rel_dev == pytest.approx(0.002 / 0.042)
        csv_text = report_csv(rows)
        lines = csv_text.strip().split("\n")
        assert lines[0] == "dz_mm,k_analytic,k_measured,abs_dev,rel_dev"
        assert len(lines) == 3
        # numeric cells round-trip at full precision
        cells = lines[1].split(",")
        assert float(cells[1]) == rows[0].k_analytic

    def test_key_mismatch(self):
        with pytest.raises(ReportKeyError) as exc_info:
            compare_report([(50.0, 0.1)], [(60.0, 0.1)])
        assert set(exc_info.value.missing_keys) == {50.0, 60.0}
