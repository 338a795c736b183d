"""Coupling factor between two planar coils under misalignment.

Two evaluation paths:

* coaxial: closed-form filament mutual inductance per winding pair (fast,
  exact for perfectly aligned coils);
* general: the double line integral M = (mu0 / 4 pi) oint oint
  dl1 . dl2 / |x1 - x2| over discretized filaments, valid for lateral and
  angular misalignment and sign-carrying for reversed orientation.

Grid sweeps are deterministic and embarrassingly parallel.
"""

import math
from dataclasses import dataclass

import numpy as np

from .coils import (
    MU0,
    OperatingPoint,
    coaxial_mutual_inductance,
    coil_self_inductance,
    effective_inductance,
)
from .errors import GeometryError, PhysicalityError, SingularityError, WptError

__all__ = [
    "Pose",
    "LoopDiscretization",
    "neumann_mutual",
    "coupling_factor",
    "coupling_vs_distance",
    "misalignment_grid",
]


@dataclass(frozen=True)
class Pose:
    """Receiver placement relative to the transmitter coil center.

    ``dx``/``dy`` are lateral offsets, ``dz`` the vertical separation (m);
    ``tilt_deg`` rotates the receiver plane about its own x-axis
    (its own diameter), applied at the receiver center.
    """

    dx: float = 0.0
    dy: float = 0.0
    dz: float = 0.0
    tilt_deg: float = 0.0


@dataclass(frozen=True)
class LoopDiscretization:
    """Segments per winding for the filament double integral."""

    segments_per_turn: int = 720

    def __post_init__(self):
        if self.segments_per_turn < 36:
            raise WptError("segments_per_turn must be >= 36")


def _loop_segments(radius, n):
    """Midpoints and tangent vectors (length-weighted) of a discretized circle."""
    theta = (np.arange(n) + 0.5) * (2.0 * math.pi / n)
    pts = np.stack(
        [radius * np.cos(theta), radius * np.sin(theta), np.zeros(n)], axis=1
    )
    dl = np.stack([-np.sin(theta), np.cos(theta), np.zeros(n)], axis=1) * (
        2.0 * math.pi * radius / n
    )
    return pts, dl


def _pose_transform(pts, dl, pose):
    t = math.radians(pose.tilt_deg)
    if t != 0.0:
        rot = np.array(
            [
                [1.0, 0.0, 0.0],
                [0.0, math.cos(t), -math.sin(t)],
                [0.0, math.sin(t), math.cos(t)],
            ]
        )
        pts = pts @ rot.T
        dl = dl @ rot.T
    return pts + np.array([pose.dx, pose.dy, pose.dz]), dl


def neumann_mutual(tx, rx, pose, disc=LoopDiscretization()):
    """Mutual inductance (H) between two coils in an arbitrary pose.

    Midpoint-rule evaluation of the filament double integral, summed over
    all transmitter/receiver winding pairs. Sign-carrying: a receiver
    flipped by 180 degrees yields the negated coaxial value. Raises
    :class:`SingularityError` if any filament pair comes closer than the
    wire radius.
    """
    n = disc.segments_per_turn
    guard = max(tx.wire.radius_a, rx.wire.radius_a)
    rx_loops = []
    for r in rx.winding_radii:
        pts, dl = _loop_segments(r, n)
        rx_loops.append(_pose_transform(pts, dl, pose))
    total = 0.0
    for r_t in tx.winding_radii:
        pts1, dl1 = _loop_segments(r_t, n)
        for pts2, dl2 in rx_loops:
            diff = pts1[:, None, :] - pts2[None, :, :]
            dist = np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
            if dist.min() < guard:
                raise SingularityError(
                    "filaments intersect or nearly touch under this pose"
                )
            total += np.sum((dl1 @ dl2.T) / dist)
    return MU0 / (4.0 * math.pi) * total


def coupling_factor(l1, l2, m):
    """k = M / sqrt(L1 * L2); must satisfy |k| < 1 for passive coils."""
    if l1 <= 0 or l2 <= 0:
        raise WptError("self-inductances must be > 0")
    k = m / math.sqrt(l1 * l2)
    if abs(k) >= 1.0:
        raise PhysicalityError(f"|M| >= sqrt(L1 L2): k = {k}")
    return k


def _coaxial_coil_mutual(tx, rx, dz):
    return sum(
        coaxial_mutual_inductance(r_t, r_r, dz)
        for r_t in tx.winding_radii
        for r_r in rx.winding_radii
    )


def coupling_vs_distance(tx, rx, dz_list, op=OperatingPoint()):
    """Coaxial sweep: per distance, (dz, k, receiver effective inductance).

    The effective inductance is the isolated receiver self-inductance
    scaled by (1 - k^2), reproducing the distance-dependent detuning of
    the receiver tank.
    """
    if not dz_list:
        raise WptError("dz_list must be non-empty")
    if any(dz <= 0 for dz in dz_list):
        raise GeometryError("all coil-to-coil distances must be > 0")
    l1 = coil_self_inductance(tx, op)
    l2 = coil_self_inductance(rx, op)
    out = []
    for dz in dz_list:
        k = coupling_factor(l1, l2, _coaxial_coil_mutual(tx, rx, dz))
        out.append((dz, k, effective_inductance(l2, k)))
    return out


def misalignment_grid(
    tx,
    rx,
    dz_list,
    lateral_list=None,
    tilt_list=None,
    disc=LoopDiscretization(),
    op=OperatingPoint(),
):
    """Coupling-factor grid over vertical distance x (lateral | angular) offset.

    Exactly one of ``lateral_list`` (m) or ``tilt_list`` (degrees) must be
    given. Returns a (len(dz_list), len(offsets)) array of k evaluated via
    the filament double integral.
    """
    if (lateral_list is None) == (tilt_list is None):
        raise WptError("provide exactly one of lateral_list or tilt_list")
    l1 = coil_self_inductance(tx, op)
    l2 = coil_self_inductance(rx, op)
    offsets = lateral_list if lateral_list is not None else tilt_list
    grid = np.empty((len(dz_list), len(offsets)))
    for i, dz in enumerate(dz_list):
        for j, off in enumerate(offsets):
            if lateral_list is not None:
                pose = Pose(dx=off, dz=dz)
            else:
                pose = Pose(dz=dz, tilt_deg=off)
            m = neumann_mutual(tx, rx, pose, disc)
            grid[i, j] = coupling_factor(l1, l2, m)
    return grid
