"""Planar coil model: concentric circular windings.

A spiral (or PCB) coil is approximated by concentric circular filaments in
one plane. Per-winding self-inductance uses the classic round-wire loop
formula with a skin-effect correction; winding-pair mutual inductance uses
the coaxial-filament closed form in terms of complete elliptic integrals.
All quantities are strict SI (m, H, Hz, S/m); unit conversion happens only
at the CLI boundary.
"""

import math
from dataclasses import dataclass, field

from .errors import GeometryError, SingularityError, WptError
from .numerics import elliptic_e, elliptic_k

__all__ = [
    "MU0",
    "COPPER_CONDUCTIVITY",
    "ISM_FREQUENCY",
    "CALIBRATED_WIRE_RADIUS",
    "WireSpec",
    "PlanarCoil",
    "OperatingPoint",
    "skin_factor",
    "winding_self_inductance",
    "coaxial_mutual_inductance",
    "coil_self_inductance",
    "effective_inductance",
    "concentric_coil",
]

MU0 = 4e-7 * math.pi  # vacuum permeability, H/m
COPPER_CONDUCTIVITY = 5.8e7  # S/m
ISM_FREQUENCY = 6.78e6  # Hz, license-free band used throughout

# Effective round-wire radius for the analytical coil study. The source
# data never states the conductor radius; this value was fitted once so
# that the two-winding transmit coil (radii 76.5/74.5 mm) evaluates to
# its published 1.587 uH self-inductance at 6.78 MHz, and is reused by
# every reproduction of that dataset.
CALIBRATED_WIRE_RADIUS = 7.912937356807359e-04  # m


@dataclass(frozen=True)
class WireSpec:
    """Round conductor: radius (m), conductivity (S/m), relative permeability."""

    radius_a: float
    conductivity_sigma: float = COPPER_CONDUCTIVITY
    relative_permeability_mur: float = 1.0

    def __post_init__(self):
        if self.radius_a <= 0:
            raise WptError("wire radius must be > 0")
        if self.conductivity_sigma <= 0:
            raise WptError("conductivity must be > 0")
        if self.relative_permeability_mur <= 0:
            raise WptError("relative permeability must be > 0")


@dataclass(frozen=True)
class OperatingPoint:
    """Operating frequency (Hz)."""

    frequency_f: float = ISM_FREQUENCY

    def __post_init__(self):
        if self.frequency_f <= 0:
            raise WptError("frequency must be > 0")

    @property
    def omega(self):
        return 2.0 * math.pi * self.frequency_f


@dataclass(frozen=True)
class PlanarCoil:
    """Concentric circular windings in one plane, radii strictly decreasing (m)."""

    winding_radii: tuple
    wire: WireSpec = field(default_factory=lambda: WireSpec(CALIBRATED_WIRE_RADIUS))
    label: str = ""

    def __post_init__(self):
        radii = tuple(float(r) for r in self.winding_radii)
        object.__setattr__(self, "winding_radii", radii)
        if not radii:
            raise GeometryError("coil needs at least one winding")
        if any(r <= 0 for r in radii):
            raise GeometryError("all winding radii must be > 0")
        if any(a <= b for a, b in zip(radii, radii[1:])):
            raise GeometryError("winding radii must be strictly decreasing")


def concentric_coil(outer_radius, windings, pitch=1e-3, wire=None, label=""):
    """Build a coil of ``windings`` concentric circles stepping inward by ``pitch``."""
    if windings < 1:
        raise GeometryError("windings must be >= 1")
    radii = tuple(outer_radius - i * pitch for i in range(windings))
    if wire is None:
        wire = WireSpec(CALIBRATED_WIRE_RADIUS)
    return PlanarCoil(radii, wire, label)


def skin_factor(wire, op):
    """Current-distribution factor Y in (0, 1].

    Y = 1 / (1 + a * sqrt(mu * sigma * omega / 8)) with mu = mu0 * mur.
    Tends to 1 for uniform current (low sigma*omega) and to 0 when the
    current is confined to the conductor surface.
    """
    mu = MU0 * wire.relative_permeability_mur
    return 1.0 / (1.0 + wire.radius_a * math.sqrt(mu * wire.conductivity_sigma * op.omega / 8.0))


def winding_self_inductance(r, wire, op):
    """Self-inductance (H) of one circular winding of radius ``r``.

    L = mu * r * (ln(8 r / a) - 2 + Y / 4). Invalid for r <= a.
    """
    if r <= wire.radius_a:
        raise GeometryError(f"winding radius {r} must exceed wire radius {wire.radius_a}")
    mu = MU0 * wire.relative_permeability_mur
    y = skin_factor(wire, op)
    return mu * r * (math.log(8.0 * r / wire.radius_a) - 2.0 + 0.25 * y)


def coaxial_mutual_inductance(r_i, r_j, d):
    """Mutual inductance (H) between coaxial circular filaments.

    M = mu0 * sqrt(r_i r_j) * [(2/s - s) K(s) - (2/s) E(s)],
    s = sqrt(4 r_i r_j / ((r_i + r_j)^2 + d^2)),
    with d the axial separation of the filament planes. Symmetric in
    (r_i, r_j); singular only for coincident filaments (d = 0, r_i = r_j).
    """
    if r_i <= 0 or r_j <= 0:
        raise GeometryError("filament radii must be > 0")
    if d < 0:
        raise GeometryError("axial distance must be >= 0")
    if d == 0 and r_i == r_j:
        raise SingularityError("coincident filaments: mutual inductance diverges")
    s = math.sqrt(4.0 * r_i * r_j / ((r_i + r_j) ** 2 + d * d))
    return MU0 * math.sqrt(r_i * r_j) * ((2.0 / s - s) * elliptic_k(s) - (2.0 / s) * elliptic_e(s))


def coil_self_inductance(coil, op=OperatingPoint()):
    """Total coil self-inductance: per-winding terms plus all in-plane
    winding-pair mutual terms (both orderings, d = 0)."""
    radii = coil.winding_radii
    total = sum(winding_self_inductance(r, coil.wire, op) for r in radii)
    for i, r_i in enumerate(radii):
        for j, r_j in enumerate(radii):
            if i != j:
                total += coaxial_mutual_inductance(r_i, r_j, 0.0)
    return total


def effective_inductance(l_isolated, k):
    """Inductance seen by a tank when its coil is coupled with factor ``k``.

    L_eff = L * (1 - k^2); equals L only at k = 0.
    """
    if not 0 <= k < 1:
        raise WptError(f"coupling factor must satisfy 0 <= k < 1, got {k}")
    if l_isolated <= 0:
        raise WptError("inductance must be > 0")
    return l_isolated * (1.0 - k * k)
