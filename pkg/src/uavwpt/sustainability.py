"""Lifetime carbon accounting for IoT-node servicing strategies.

Global-warming-potential (GWP, kgCO2eq) component inventories, cumulative
impact curves for servicing scenarios (drone-serviced versus periodic
node/battery replacement), and breakeven-time computation between two
strategies.
"""

import math
from dataclasses import dataclass

from .errors import WptError
from .numerics import Tolerance, find_crossing

__all__ = [
    "GwpInventory",
    "ServicingScenario",
    "ScenarioCurve",
    "inventory_total",
    "cumulative_gwp",
    "sample_curve",
    "breakeven",
    "scenario_table",
    "NO_CROSSING",
]

# distinct no-crossing sentinel (breakeven returns it instead of a time)
NO_CROSSING = None


@dataclass(frozen=True)
class GwpInventory:
    """Per-component manufacturing GWP of one device (label -> kgCO2eq)."""

    components: dict

    def __post_init__(self):
        for label, value in self.components.items():
            if value < 0:
                raise WptError(f"negative GWP for component {label!r}")


def inventory_total(inventory):
    """Exact sum of the component contributions."""
    return sum(inventory.components.values())


@dataclass(frozen=True)
class ServicingScenario:
    """Cumulative-GWP model of one servicing strategy.

    Two mutually exclusive parameterizations:

    * linear: ``initial_gwp + annual_rate * t`` — the time-averaged
      accrual used for strategy comparison plots;
    * periodic: ``base_gwp + per_event_gwp * floor(t / replacement_period)``
      — explicit step-wise replacement events.

    Construct via :meth:`linear` or :meth:`periodic`.
    """

    label: str
    initial_gwp: float = 0.0
    annual_rate: float = 0.0
    replacement_period: float = 0.0
    per_event_gwp: float = 0.0
    base_gwp: float = 0.0
    form: str = "linear"

    def __post_init__(self):
        if self.form not in ("linear", "periodic"):
            raise WptError("form must be 'linear' or 'periodic'")
        if self.form == "linear":
            if self.initial_gwp < 0 or self.annual_rate < 0:
                raise WptError("linear scenario needs initial >= 0 and rate >= 0")
        else:
            if self.replacement_period <= 0:
                raise WptError("replacement period must be > 0")
            if self.per_event_gwp < 0 or self.base_gwp < 0:
                raise WptError("periodic scenario GWP terms must be >= 0")

    @classmethod
    def linear(cls, label, initial_gwp, annual_rate):
        return cls(label=label, initial_gwp=initial_gwp, annual_rate=annual_rate)

    @classmethod
    def periodic(cls, label, base_gwp, per_event_gwp, replacement_period):
        return cls(
            label=label,
            base_gwp=base_gwp,
            per_event_gwp=per_event_gwp,
            replacement_period=replacement_period,
            form="periodic",
        )


def cumulative_gwp(scenario, t):
    """Cumulative GWP (kgCO2eq) of ``scenario`` after ``t`` years."""
    if t < 0:
        raise WptError("time must be >= 0")
    if scenario.form == "linear":
        return scenario.initial_gwp + scenario.annual_rate * t
    events = math.floor(t / scenario.replacement_period)
    return scenario.base_gwp + scenario.per_event_gwp * events


@dataclass(frozen=True)
class ScenarioCurve:
    """Sampled cumulative-GWP curve: ordered (t_years, gwp) points."""

    label: str
    samples: tuple

    def __post_init__(self):
        ts = [t for t, _ in self.samples]
        gs = [g for _, g in self.samples]
        if any(b <= a for a, b in zip(ts, ts[1:])):
            raise WptError("curve times must be strictly increasing")
        if any(b < a for a, b in zip(gs, gs[1:])):
            raise WptError("cumulative GWP cannot decrease")


def sample_curve(scenario, horizon, step):
    """Sample a scenario into a :class:`ScenarioCurve` on [0, horizon]."""
    if step <= 0:
        raise WptError("step must be > 0")
    pts = []
    n = int(math.floor(horizon / step + 1e-9))
    for i in range(n + 1):
        t = min(i * step, horizon)
        pts.append((t, cumulative_gwp(scenario, t)))
    return ScenarioCurve(scenario.label, tuple(pts))


def breakeven(a, b, horizon=15.0):
    """Earliest time in (0, horizon] where scenario ``a`` stops costing
    more than scenario ``b``.

    Meaningful when ``a`` starts above ``b`` (high-upfront strategy versus
    recurring one). Returns :data:`NO_CROSSING` if the curves never meet
    within the horizon.
    """
    if horizon <= 0:
        raise WptError("horizon must be > 0")

    def gap(t):
        return cumulative_gwp(a, t) - cumulative_gwp(b, t)

    if gap(0.0) <= 0:
        return 0.0
    # scan a fine grid for the first sign change, then refine by bisection
    n = 4096
    prev_t = 0.0
    for i in range(1, n + 1):
        t = horizon * i / n
        if gap(t) <= 0:
            return find_crossing(gap, prev_t, t, Tolerance(absolute=1e-10, relative=0.0))
        prev_t = t
    return NO_CROSSING


def scenario_table(scenarios, horizon, step):
    """Tabulate cumulative GWP: one row per time step, one column per scenario.

    Returns (header, rows) with header ``['t_years', label, ...]`` and
    rows of floats, scenario order preserved.
    """
    if step <= 0:
        raise WptError("step must be > 0")
    if horizon < 0:
        raise WptError("horizon must be >= 0")
    header = ["t_years"] + [s.label for s in scenarios]
    rows = []
    t = 0.0
    i = 0
    while t <= horizon + 1e-9:
        t = min(t, horizon)
        rows.append([t] + [cumulative_gwp(s, t) for s in scenarios])
        i += 1
        t = i * step
    return header, rows
