"""Named presets reproducing the prototype hardware and study setups.

Coil geometries, the measured circuit ESR set, GWP component inventories
and servicing-scenario lines. All presets are plain module-level objects
so the CLI (and users) can reference them by name.
"""

from .coils import CALIBRATED_WIRE_RADIUS, PlanarCoil, WireSpec, concentric_coil
from .errors import WptError
from .sustainability import GwpInventory, ServicingScenario

__all__ = [
    "COILS",
    "CIRCUIT_ESR",
    "INVENTORIES",
    "SCENARIOS",
    "coil_preset",
    "scenario_preset",
]

_WIRE = WireSpec(CALIBRATED_WIRE_RADIUS)

# Transmit coil mounted on the UAV: two windings at 76.5 / 74.5 mm.
DEFAULT_UAV_TX = PlanarCoil((76.5e-3, 74.5e-3), _WIRE, "default-uav")

# Receive-coil study set: outer diameter D, four windings, 2 mm radial
# pitch starting 1 mm inside D/2.


def _study_coil(diameter_mm, windings, label):
    return concentric_coil(
        diameter_mm * 1e-3 / 2.0 - 1e-3, windings, pitch=2e-3, wire=_WIRE, label=label
    )


COILS = {
    "default-uav": DEFAULT_UAV_TX,
    "d75w4": _study_coil(75.0, 4, "d75w4"),
    "d100w4": _study_coil(100.0, 4, "d100w4"),
    "d125w4": _study_coil(125.0, 4, "d125w4"),
    "d150w4": _study_coil(150.0, 4, "d150w4"),
    # winding-count sweep of the 100 mm coil
    "d100w2": _study_coil(100.0, 2, "d100w2"),
    "d100w3": _study_coil(100.0, 3, "d100w3"),
    "d100w5": _study_coil(100.0, 5, "d100w5"),
}

# measured prototype ESRs at 6.78 MHz: (R1 transmit, R2 receive, RS source)
CIRCUIT_ESR = (0.1, 1.0, 0.0)

# Manufacturing GWP inventories (kgCO2eq per node). The two node variants
# differ only in their battery.
_COMMON = {
    "pcb-coil": 0.793,
    "integrated-circuits": 0.298,
    "passives": 0.347,
    "pcb": 0.182,
}
INVENTORIES = {
    "node-low-power": GwpInventory({**_COMMON, "battery": 0.0363}),
    "node-medium-power": GwpInventory({**_COMMON, "battery": 0.787}),
}

# Time-averaged cumulative-GWP lines for the servicing strategies, each
# frozen as (value at t=0, value at t=15 yr).
_LINE_ENDPOINTS = {
    "uav-low": (4.696288, 6.819628185185185),
    "replace-battery-low": (3.0, 3.7710625),
    "replace-1yr-low": (3.0, 48.7710625),
    "replace-5yr-low": (3.0, 12.7710625),
    "uav-medium": (5.44624, 7.130013076923077),
    "replace-battery-medium": (3.0, 18.42125),
    "replace-1yr-medium": (3.0, 63.42124999999999),
    "replace-5yr-medium": (3.0, 27.42125),
}

SCENARIOS = {
    name: ServicingScenario.linear(name, start, (end - start) / 15.0)
    for name, (start, end) in _LINE_ENDPOINTS.items()
}
# short aliases defaulting to the low-power node variant
for _alias, _target in (
    ("uav", "uav-low"),
    ("replace-battery", "replace-battery-low"),
    ("replace-1yr", "replace-1yr-low"),
    ("replace-5yr", "replace-5yr-low"),
):
    SCENARIOS[_alias] = SCENARIOS[_target]


def coil_preset(name):
    try:
        return COILS[name]
    except KeyError:
        raise WptError(
            f"unknown coil preset {name!r}; available: {', '.join(sorted(COILS))}"
        ) from None


def scenario_preset(name):
    try:
        return SCENARIOS[name]
    except KeyError:
        raise WptError(
            f"unknown scenario preset {name!r}; available: {', '.join(sorted(SCENARIOS))}"
        ) from None
