"""Charging-mission modeling for the IoT node and the UAV.

Battery autonomy from leakage current, charge time from C-rate, measured
receive-side and end-to-end efficiency lookups (bundled datasets), the
per-mission UAV energy budget, and the end-of-charge / power-down
predicates of the charge controller.
"""

import csv
import math
import warnings
from dataclasses import dataclass
from importlib import resources

from .errors import ChargeRateError, DataRangeError, WptError

__all__ = [
    "BatteryCell",
    "MissionBudget",
    "INFINITE_AUTONOMY",
    "HOURS_PER_YEAR",
    "autonomy_from_leakage",
    "charge_time",
    "pru_efficiency",
    "system_efficiency",
    "mission_energy",
    "charge_complete",
    "power_down",
]

HOURS_PER_YEAR = 8766.0  # mean Gregorian year

# LTO coin cell used on the node: fast-charge capable, end-of-charge
# detected when the charge current drops below 200 mA while the cell
# voltage exceeds 2.6 V
INFINITE_AUTONOMY = math.inf


@dataclass(frozen=True)
class BatteryCell:
    """Rechargeable cell parameters (capacity in mAh, voltages in V).

    ``max_charge_rate`` is the highest safe charge rate in C (1/h);
    ``charge_done_current`` / ``charge_done_voltage`` parameterize the
    end-of-charge predicate.
    """

    capacity_mah: float
    nominal_voltage: float
    max_charge_rate: float = 10.0
    charge_done_current_ma: float = 200.0
    charge_done_voltage: float = 2.6

    def __post_init__(self):
        if self.capacity_mah < 0:
            raise WptError("capacity must be >= 0")
        if self.nominal_voltage <= 0:
            raise WptError("nominal voltage must be > 0")
        if self.max_charge_rate <= 0:
            raise WptError("max charge rate must be > 0")


LTO_CELL = BatteryCell(capacity_mah=60.0, nominal_voltage=2.4, max_charge_rate=10.0)


@dataclass(frozen=True)
class MissionBudget:
    """Energy accounting for one recharge mission (all Wh, duration h).

    ``energy_drawn_from_uav`` is the transmit-side electrical energy for
    the transfer alone; ``hover_energy`` is the airframe cost of hovering
    for the charge duration and is reported separately.
    """

    energy_transferred: float
    energy_drawn_from_uav: float
    hover_energy: float
    charge_duration: float


def autonomy_from_leakage(cell, leakage_ua):
    """Standby lifetime in years: capacity divided by leakage current.

    Returns the :data:`INFINITE_AUTONOMY` sentinel for zero leakage.
    """
    if leakage_ua < 0:
        raise WptError("leakage current must be >= 0")
    if leakage_ua == 0:
        return INFINITE_AUTONOMY
    hours = cell.capacity_mah * 1e3 / leakage_ua
    return hours / HOURS_PER_YEAR


def charge_time(cell, rate_c):
    """Ideal constant-current charge duration in minutes at ``rate_c`` (C).

    Raises :class:`ChargeRateError` above the cell's rated maximum.
    """
    if rate_c <= 0:
        raise WptError("charge rate must be > 0")
    if rate_c > cell.max_charge_rate:
        raise ChargeRateError(
            f"rate {rate_c} C exceeds cell maximum {cell.max_charge_rate} C"
        )
    return 60.0 / rate_c


def _load_csv(name, columns):
    text = resources.files("uavwpt.data").joinpath(name).read_text()
    rows = []
    for rec in csv.DictReader(
        line for line in text.splitlines() if not line.startswith("#")
    ):
        rows.append(tuple(float(rec[c]) for c in columns))
    return rows


def _pru_table():
    rows = _load_csv("pru_efficiency.csv", ("vin_V", "iout_A", "eff"))
    table = {}
    for vin, iout, eff in rows:
        table[(vin, iout)] = eff
    vins = sorted({v for v, _ in table})
    iouts = sorted({i for _, i in table})
    return vins, iouts, table


def _system_table():
    return _load_csv("system_efficiency.csv", ("dz_mm", "eff", "vinv_V"))


_PRU_CACHE = None
_SYSTEM_CACHE = None


def _pru_data():
    global _PRU_CACHE
    if _PRU_CACHE is None:
        _PRU_CACHE = _pru_table()
    return _PRU_CACHE


def _system_data():
    global _SYSTEM_CACHE
    if _SYSTEM_CACHE is None:
        _SYSTEM_CACHE = _system_table()
    return _SYSTEM_CACHE


def _bracket(axis, x):
    """Neighboring sample indices (i, j) and interpolation weight for x."""
    if x <= axis[0]:
        return 0, 0, 0.0
    if x >= axis[-1]:
        return len(axis) - 1, len(axis) - 1, 0.0
    for j in range(1, len(axis)):
        if x <= axis[j]:
            i = j - 1
            return i, j, (x - axis[i]) / (axis[j] - axis[i])
    raise AssertionError("unreachable")


def pru_efficiency(vin, iout):
    """Receive-side power-unit efficiency, bilinearly interpolated.

    The measured grid covers 8-21 V input and 0.2-0.8 A output; queries
    outside it are clamped to the boundary with a warning.
    """
    vins, iouts, table = _pru_data()
    if not vins[0] <= vin <= vins[-1] or not iouts[0] <= iout <= iouts[-1]:
        warnings.warn(
            f"({vin} V, {iout} A) outside measured grid "
            f"[{vins[0]},{vins[-1]}] V x [{iouts[0]},{iouts[-1]}] A; clamping",
            stacklevel=2,
        )
    vi, vj, tv = _bracket(vins, vin)
    ii, ij, ti = _bracket(iouts, iout)
    e00 = table[(vins[vi], iouts[ii])]
    e01 = table[(vins[vi], iouts[ij])]
    e10 = table[(vins[vj], iouts[ii])]
    e11 = table[(vins[vj], iouts[ij])]
    lo = e00 * (1 - ti) + e01 * ti
    hi = e10 * (1 - ti) + e11 * ti
    return lo * (1 - tv) + hi * tv


def system_efficiency(dz_mm):
    """End-to-end measured efficiency and inverter input voltage at ``dz_mm``.

    Linear interpolation over the bundled static-measurement series;
    refuses to extrapolate outside the measured 50-100 mm range.
    """
    rows = _system_data()
    axis = [r[0] for r in rows]
    if not axis[0] <= dz_mm <= axis[-1]:
        raise DataRangeError(
            f"dz = {dz_mm} mm outside measured range [{axis[0]}, {axis[-1]}] mm"
        )
    i, j, t = _bracket(axis, dz_mm)
    eff = rows[i][1] * (1 - t) + rows[j][1] * t
    vinv = rows[i][2] * (1 - t) + rows[j][2] * t
    return eff, vinv


def mission_energy(cell, dz_mm, hover_power_w, rate_c):
    """Energy budget of one UAV recharge mission.

    ``energy_transferred`` is the ideal cell charge (capacity x nominal
    voltage); ``energy_drawn_from_uav`` divides it by the measured
    end-to-end efficiency at ``dz_mm``; hover cost is the user-supplied
    hover power times the charge duration.
    """
    if hover_power_w < 0:
        raise WptError("hover power must be >= 0")
    duration_h = charge_time(cell, rate_c) / 60.0
    transferred = cell.capacity_mah * 1e-3 * cell.nominal_voltage
    if transferred == 0.0:
        return MissionBudget(0.0, 0.0, 0.0, duration_h)
    eff, _ = system_efficiency(dz_mm)
    return MissionBudget(
        transferred, transferred / eff, hover_power_w * duration_h, duration_h
    )


def charge_complete(cell, trace, hold_s=10.0):
    """End-of-charge predicate over a sampled charge trace.

    ``trace`` is an iterable of (t_s, current_ma, voltage_v) samples with
    strictly increasing time. True once the condition (current below the
    done threshold AND voltage above the done threshold) has held for
    longer than ``hold_s`` seconds.
    """
    start = None
    last_t = None
    for t, current_ma, voltage in trace:
        if last_t is not None and t <= last_t:
            raise WptError("trace timestamps must be strictly increasing")
        last_t = t
        if current_ma < cell.charge_done_current_ma and voltage > cell.charge_done_voltage:
            if start is None:
                start = t
            elif t - start > hold_s:
                return True
        else:
            start = None
    return False


def power_down(input_voltage, threshold_v=1.0):
    """Receiver power-down predicate: supply has collapsed below ``threshold_v``."""
    return input_voltage < threshold_v
