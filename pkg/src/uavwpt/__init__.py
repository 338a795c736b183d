"""Design and analysis toolkit for UAV-borne resonant wireless charging
of IoT nodes: coil inductance and coupling under misalignment, tuned-link
efficiency and loading, measured-data ingestion, mission energy budgets
and lifetime carbon-footprint comparisons."""

from .coils import (
    CALIBRATED_WIRE_RADIUS,
    COPPER_CONDUCTIVITY,
    ISM_FREQUENCY,
    MU0,
    OperatingPoint,
    PlanarCoil,
    WireSpec,
    coaxial_mutual_inductance,
    coil_self_inductance,
    concentric_coil,
    effective_inductance,
    skin_factor,
    winding_self_inductance,
)
from .coupling import (
    LoopDiscretization,
    Pose,
    coupling_factor,
    coupling_vs_distance,
    misalignment_grid,
    neumann_mutual,
)
from .errors import (
    BracketingError,
    ChargeRateError,
    ConversionError,
    DataRangeError,
    ExtractionError,
    GeometryError,
    InfeasibleError,
    NumericalError,
    PhysicalityError,
    ReportKeyError,
    SingularityError,
    TouchstoneFormatError,
    WptError,
)
from .link import (
    LinkCircuit,
    LinkSolution,
    TankCircuit,
    detuning_report,
    link_efficiency,
    max_efficiency_map,
    max_link_efficiency,
    optimal_load,
    quality_factors,
    required_source_voltage,
    resonant_capacitor,
    series_tuned_link,
    snap_to_e12,
    solve_link,
)
from .mission import (
    BatteryCell,
    MissionBudget,
    autonomy_from_leakage,
    charge_complete,
    charge_time,
    mission_energy,
    power_down,
    pru_efficiency,
    system_efficiency,
)
from .numerics import Tolerance, elliptic_e, elliptic_k, find_crossing, integrate
from .sustainability import (
    GwpInventory,
    ScenarioCurve,
    ServicingScenario,
    breakeven,
    cumulative_gwp,
    inventory_total,
    sample_curve,
    scenario_table,
)
from .touchstone import (
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

__version__ = "0.1.0"
