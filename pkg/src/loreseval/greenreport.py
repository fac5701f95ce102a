"""Energy and emissions accounting for training runs.

Energy is estimated from the card's maximum power draw scaled by an
assumed utilization fraction: kWh = watts x utilization x hours / 1000.
Emissions are kWh x grid carbon intensity (kgCO2 per kWh); a
carbon-neutral region has intensity 0.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_UTILIZATION = 0.8

UTILIZATION_NOTE = (
    "utilization is an assumed fraction of max power, not a measured draw"
)


class GreenReportError(Exception):
    pass


class InvalidProfile(GreenReportError):
    """Power/utilization/runtime values outside their valid ranges."""


class NegativeInput(GreenReportError):
    """Energy and carbon intensity must be non-negative."""


@dataclass(frozen=True)
class GpuProfile:
    """Static power profile of one accelerator."""

    name: str
    max_power_watts: float
    utilization: float = DEFAULT_UTILIZATION

    def __post_init__(self):
        if self.max_power_watts <= 0:
            raise InvalidProfile(f"max_power_watts must be > 0, got {self.max_power_watts}")
        if not 0 < self.utilization <= 1:
            raise InvalidProfile(f"utilization must be in (0, 1], got {self.utilization}")


@dataclass(frozen=True)
class RunRecord:
    """One training run: wall-clock hours and the region's carbon
    intensity in kgCO2 per kWh."""

    system_id: str
    runtime_hours: float
    region_carbon_intensity: float = 0.0

    def __post_init__(self):
        if self.runtime_hours <= 0:
            raise InvalidProfile(f"runtime_hours must be > 0, got {self.runtime_hours}")
        if self.region_carbon_intensity < 0:
            raise NegativeInput(
                f"carbon intensity must be >= 0, got {self.region_carbon_intensity}"
            )


@dataclass(frozen=True)
class EnergyReport:
    """Computed energy/emissions with the inputs echoed back."""

    kwh: float
    kg_co2: float
    gpu: GpuProfile
    run: RunRecord
    note: str = UTILIZATION_NOTE

    def to_dict(self) -> dict:
        return {
            "system_id": self.run.system_id,
            "gpu": self.gpu.name,
            "max_power_watts": self.gpu.max_power_watts,
            "utilization": self.gpu.utilization,
            "runtime_hours": self.run.runtime_hours,
            "carbon_intensity": self.run.region_carbon_intensity,
            "kwh": self.kwh,
            "kg_co2": self.kg_co2,
            "note": self.note,
        }


def energy_kwh(profile: GpuProfile, runtime_hours: float) -> float:
    """Estimated kWh for a run; linear in power, utilization and time."""
    if runtime_hours <= 0:
        raise InvalidProfile(f"runtime_hours must be > 0, got {runtime_hours}")
    return profile.max_power_watts * profile.utilization * runtime_hours / 1000.0


def emissions_kg(kwh: float, intensity: float) -> float:
    """kgCO2 for the given energy at the given grid intensity."""
    if kwh < 0 or intensity < 0:
        raise NegativeInput(f"kwh and intensity must be >= 0, got {kwh}, {intensity}")
    return kwh * intensity


def build_report(profile: GpuProfile, run: RunRecord) -> EnergyReport:
    """Energy and emissions for one run."""
    kwh = energy_kwh(profile, run.runtime_hours)
    return EnergyReport(
        kwh=kwh,
        kg_co2=emissions_kg(kwh, run.region_carbon_intensity),
        gpu=profile,
        run=run,
    )
