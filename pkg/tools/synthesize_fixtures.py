"""Regenerate the bundled two-port fixture files.

Each fixture encodes the series impedance model of the measured coil pair
at 6.78 MHz (transmit 0.1 + j84 ohm, receive 1 + j143 ohm) with the
open-air measured coupling factor at one vertical distance, converted to
S-parameters at 50 ohm. One file per distance in RI format, plus MA/DB
format variants of the 100 mm point for parser coverage.

Run from the repository root:  python tools/synthesize_fixtures.py
"""

import math
import pathlib

from uavwpt.touchstone import ImpedanceMatrix, TwoPortSample, serialize_touchstone, z_to_s

FREQUENCY = 6.78e6
R1, X1 = 0.1, 84.0
R2, X2 = 1.0, 143.0

# open-air measured coupling factors by vertical distance (mm)
MEASURED_K = {50: 0.107, 100: 0.042, 150: 0.018, 200: 0.010}

OUT_DIR = pathlib.Path(__file__).resolve().parent.parent / "src/uavwpt/data/fixtures"


def fixture_sample(k):
    w = 2.0 * math.pi * FREQUENCY
    l1, l2 = X1 / w, X2 / w
    xm = w * k * math.sqrt(l1 * l2)
    zm = ImpedanceMatrix(complex(R1, X1), complex(0, xm), complex(0, xm), complex(R2, X2))
    s11, s21, s12, s22 = z_to_s(zm)
    return TwoPortSample(FREQUENCY, s11, s21, s12, s22)


def main():
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    for dz, k in MEASURED_K.items():
        sample = fixture_sample(k)
        path = OUT_DIR / f"openair_dz{dz}.s2p"
        path.write_text(
            f"! synthetic two-port fixture: open-air coil pair at dz = {dz} mm\n"
            + serialize_touchstone([sample], unit="MHz", fmt="RI")
        )
        print(f"wrote {path}")
    for fmt in ("MA", "DB"):
        sample = fixture_sample(MEASURED_K[100])
        path = OUT_DIR / f"openair_dz100_{fmt.lower()}.s2p"
        path.write_text(
            f"! format-variant fixture ({fmt}) of the dz = 100 mm point\n"
            + serialize_touchstone([sample], unit="MHz", fmt=fmt)
        )
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
