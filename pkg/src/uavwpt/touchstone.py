"""Two-port S-parameter ingestion and coupling extraction.

Parses Touchstone v1 ``.s2p`` files (the common VNA export; v2 is rejected
with a clear message), converts S to Z, extracts coupling factors from the
imaginary parts of the impedance matrix, and builds analytic-vs-measured
comparison tables.
"""

import cmath
import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple

from .errors import ConversionError, ExtractionError, ReportKeyError, TouchstoneFormatError

__all__ = [
    "TwoPortSample",
    "ImpedanceMatrix",
    "parse_touchstone",
    "serialize_touchstone",
    "s_to_z",
    "z_to_s",
    "coupling_from_z",
    "compare_report",
    "report_csv",
]

_FREQ_UNITS = {"HZ": 1.0, "KHZ": 1e3, "MHZ": 1e6, "GHZ": 1e9}

RECIPROCITY_WARN_THRESHOLD = 0.01


@dataclass(frozen=True)
class TwoPortSample:
    """One frequency point of a two-port measurement."""

    frequency: float
    s11: complex
    s21: complex
    s12: complex
    s22: complex
    z0: float = 50.0

    def __post_init__(self):
        if self.frequency <= 0:
            raise TouchstoneFormatError(f"frequency must be > 0, got {self.frequency}")
        if self.z0 <= 0:
            raise TouchstoneFormatError(f"reference impedance must be > 0, got {self.z0}")


@dataclass(frozen=True)
class ImpedanceMatrix:
    z11: complex
    z12: complex
    z21: complex
    z22: complex

    def __post_init__(self):
        # passive reciprocal devices should have z12 ~ z21; measurement
        # noise beyond 1% is flagged but the sample stays usable
        scale = max(abs(self.z12), abs(self.z21))
        if scale > 0 and abs(self.z12 - self.z21) / scale > RECIPROCITY_WARN_THRESHOLD:
            warnings.warn(
                f"reciprocity violated beyond 1%: z12={self.z12}, z21={self.z21}",
                stacklevel=3,
            )


def _pair_to_complex(x, y, fmt):
    if fmt == "RI":
        return complex(x, y)
    if fmt == "MA":
        return cmath.rect(x, math.radians(y))
    # DB: magnitude in dB, angle in degrees
    return cmath.rect(10.0 ** (x / 20.0), math.radians(y))


def parse_touchstone(text):
    """Parse a Touchstone v1 two-port file into a list of samples.

    Honors the option line ``# <unit> S <RI|MA|DB> R <z0>``; skips ``!``
    comments; expects 9-column data rows in port order S11 S21 S12 S22
    with strictly increasing frequency.
    """
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    option = None
    samples = []
    last_freq = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("!", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            raise TouchstoneFormatError(
                "Touchstone v2 keywords are not supported; export v1", lineno
            )
        if line.startswith("#"):
            if option is not None:
                continue  # per spec v1, later option lines are ignored
            option = _parse_option_line(line, lineno)
            continue
        if option is None:
            raise TouchstoneFormatError("data before option line (missing '#' line)", lineno)
        fields = line.split()
        if len(fields) != 9:
            raise TouchstoneFormatError(
                f"expected 9 columns (freq + 4 complex pairs), got {len(fields)}", lineno
            )
        try:
            values = [float(v) for v in fields]
        except ValueError as exc:
            raise TouchstoneFormatError(f"non-numeric value: {exc}", lineno) from None
        unit_scale, fmt, z0 = option
        freq = values[0] * unit_scale
        if last_freq is not None and freq <= last_freq:
            raise TouchstoneFormatError("frequencies must be strictly increasing", lineno)
        last_freq = freq
        s11 = _pair_to_complex(values[1], values[2], fmt)
        s21 = _pair_to_complex(values[3], values[4], fmt)
        s12 = _pair_to_complex(values[5], values[6], fmt)
        s22 = _pair_to_complex(values[7], values[8], fmt)
        samples.append(TwoPortSample(freq, s11, s21, s12, s22, z0))
    if option is None:
        raise TouchstoneFormatError("missing option line ('# <unit> S <fmt> R <z0>')")
    return samples


def _parse_option_line(line, lineno):
    tokens = line[1:].split()
    unit_scale = 1e9  # Touchstone default unit is GHz
    fmt = "MA"
    z0 = 50.0
    i = 0
    while i < len(tokens):
        tok = tokens[i].upper()
        if tok in _FREQ_UNITS:
            unit_scale = _FREQ_UNITS[tok]
        elif tok == "S":
            pass
        elif tok in ("RI", "MA", "DB"):
            fmt = tok
        elif tok == "R":
            if i + 1 >= len(tokens):
                raise TouchstoneFormatError("'R' without impedance value", lineno)
            z0 = float(tokens[i + 1])
            i += 1
        elif tok in ("Y", "Z", "H", "G"):
            raise TouchstoneFormatError(f"only S-parameter files supported, got '{tok}'", lineno)
        else:
            raise TouchstoneFormatError(f"unrecognized option token '{tokens[i]}'", lineno)
        i += 1
    return unit_scale, fmt, z0


def serialize_touchstone(samples, unit="MHz", fmt="RI"):
    """Render samples back to Touchstone v1 text (full float precision)."""
    if not samples:
        raise TouchstoneFormatError("nothing to serialize")
    scale = _FREQ_UNITS[unit.upper()]
    z0 = samples[0].z0

    def enc(c):
        if fmt == "RI":
            return c.real, c.imag
        mag, ang = abs(c), math.degrees(cmath.phase(c))
        if fmt == "MA":
            return mag, ang
        return (20.0 * math.log10(mag) if mag > 0 else -math.inf), ang

    lines = [f"# {unit} S {fmt} R {z0:g}"]
    for s in samples:
        row = [s.frequency / scale]
        for c in (s.s11, s.s21, s.s12, s.s22):
            row.extend(enc(c))
        lines.append(" ".join(repr(v) for v in row))
    return "\n".join(lines) + "\n"


def s_to_z(sample):
    """Z = z0 (I + S)(I - S)^-1 for one two-port sample."""
    a11, a12 = 1.0 - sample.s11, -sample.s12
    a21, a22 = -sample.s21, 1.0 - sample.s22
    det = a11 * a22 - a12 * a21
    if abs(det) < 1e-14:
        raise ConversionError("(I - S) is singular; Z-matrix undefined")
    b11, b12 = 1.0 + sample.s11, sample.s12
    b21, b22 = sample.s21, 1.0 + sample.s22
    # Z = z0 * B * A^-1 with A = I - S, B = I + S
    inv11, inv12 = a22 / det, -a12 / det
    inv21, inv22 = -a21 / det, a11 / det
    z0 = sample.z0
    return ImpedanceMatrix(
        z0 * (b11 * inv11 + b12 * inv21),
        z0 * (b11 * inv12 + b12 * inv22),
        z0 * (b21 * inv11 + b22 * inv21),
        z0 * (b21 * inv12 + b22 * inv22),
    )


def z_to_s(zm, z0=50.0):
    """Inverse transform: S = (Z - z0 I)(Z + z0 I)^-1 as (s11, s21, s12, s22)."""
    a11, a12 = zm.z11 + z0, zm.z12
    a21, a22 = zm.z21, zm.z22 + z0
    det = a11 * a22 - a12 * a21
    if abs(det) == 0:
        raise ConversionError("(Z + z0 I) is singular")
    b11, b12 = zm.z11 - z0, zm.z12
    b21, b22 = zm.z21, zm.z22 - z0
    inv11, inv12 = a22 / det, -a12 / det
    inv21, inv22 = -a21 / det, a11 / det
    return (
        b11 * inv11 + b12 * inv21,
        b21 * inv11 + b22 * inv21,
        b11 * inv12 + b12 * inv22,
        b21 * inv12 + b22 * inv22,
    )


class CouplingExtraction(NamedTuple):
    k: float
    l1: float
    l2: float
    m: float


def coupling_from_z(zm, frequency):
    """Extract (k, L1, L2, M) from an inductive two-port impedance matrix.

    L1 = Im(z11)/w, L2 = Im(z22)/w, M = Im(z12)/w and k = M / sqrt(L1 L2);
    the angular frequency cancels in k. Ports measured beyond their
    self-resonance (capacitive Im <= 0) cannot be extracted.
    """
    if frequency <= 0:
        raise ExtractionError("frequency must be > 0")
    x11, x22, x12 = zm.z11.imag, zm.z22.imag, zm.z12.imag
    if x11 <= 0 or x22 <= 0:
        raise ExtractionError(
            f"port not inductive at this frequency: Im(z11)={x11}, Im(z22)={x22}"
        )
    w = 2.0 * math.pi * frequency
    return CouplingExtraction(x12 / math.sqrt(x11 * x22), x11 / w, x22 / w, x12 / w)


class ComparisonRow(NamedTuple):
    dz: float
    k_analytic: float
    k_measured: float
    abs_dev: float
    rel_dev: float


def compare_report(analytic, measured):
    """Join (dz, k) series into deviation rows, ordered by dz.

    Both inputs are iterables of (dz, k) pairs keyed on identical dz
    values; a key mismatch raises :class:`ReportKeyError` listing the
    missing keys.
    """
    a = dict(analytic)
    m = dict(measured)
    missing = sorted(set(a) ^ set(m))
    if missing:
        raise ReportKeyError(f"series keys differ; unmatched: {missing}", missing)
    rows = []
    for dz in sorted(a):
        dev = abs(a[dz] - m[dz])
        rel = dev / abs(m[dz]) if m[dz] != 0 else math.inf
        rows.append(ComparisonRow(dz, a[dz], m[dz], dev, rel))
    return rows


def report_csv(rows):
    """CSV text for a comparison report ('.' decimal separator, LF endings)."""
    lines = ["dz_mm,k_analytic,k_measured,abs_dev,rel_dev"]
    for r in rows:
        lines.append(
            ",".join(repr(v) for v in (r.dz, r.k_analytic, r.k_measured, r.abs_dev, r.rel_dev))
        )
    return "\n".join(lines) + "\n"
