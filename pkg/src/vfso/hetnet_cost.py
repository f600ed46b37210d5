"""Deployment layout and total cost of ownership for four backhaul technologies.

A heterogeneous network snapshot is drawn as two independent uniform point
sets (macro and small cells) over a rectangular urban area — a binomial
point process, i.e. a Poisson process conditioned on the counts. The same
snapshot then feeds four costings:

* RF non-LOS point-to-multipoint: hubs at 1:4 hub:module ratio, licensed
  spectrum priced per MHz per capita, pole lease and power per site.
* Fiber: every small cell trenched to its nearest macro hub; cable and
  trenching dominate.
* Terrestrial FSO: one link per line-of-sight cell, multiple hops for the
  (randomly chosen) non-LOS half.
* Vertical FSO: a fleet of flying platforms priced by airframe plus
  per-flight-hour operations.

TCO over y years is CAPEX + y * OPEX. Every cost is carried as explicit
line items (label, unit cost, quantity) so totals are auditable: totals are
literally the sum of their items.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np


@dataclass(frozen=True)
class Area:
    width_m: float
    height_m: float

    def __post_init__(self) -> None:
        if self.width_m <= 0 or self.height_m <= 0:
            raise ValueError(f"area sides must be positive, got {self.width_m} x {self.height_m}")


DEFAULT_AREA = Area(width_m=5000.0, height_m=5000.0)


@dataclass(frozen=True)
class HetNetLayout:
    """One deployment snapshot: macro and small cell coordinates in meters."""

    area: Area
    macro_positions: np.ndarray
    small_positions: np.ndarray
    rng_seed: int


def generate_layout(
    n_macro: int, n_small: int, area: Area = DEFAULT_AREA, seed: int = 0
) -> HetNetLayout:
    """Draw macro and small cell positions uniformly over the area.

    Positions are independent and identically distributed; the same seed
    always reproduces the same coordinates.
    """
    if n_macro <= 0 or n_small <= 0:
        raise ValueError(f"cell counts must be positive, got {n_macro} macro / {n_small} small")
    rng = np.random.default_rng(seed)
    extent = np.array([area.width_m, area.height_m])
    macro = rng.uniform(0.0, 1.0, size=(n_macro, 2)) * extent
    small = rng.uniform(0.0, 1.0, size=(n_small, 2)) * extent
    return HetNetLayout(area=area, macro_positions=macro, small_positions=small, rng_seed=seed)


def nearest_macro_distances(layout: HetNetLayout) -> np.ndarray:
    """Euclidean distance from each small cell to its nearest macro, in m."""
    diff = layout.small_positions[:, None, :] - layout.macro_positions[None, :, :]
    return np.sqrt((diff**2).sum(axis=-1)).min(axis=1)


# --- Technology cost parameters (defaults are North-American list prices) ---


@dataclass(frozen=True)
class RfNlosCostParams:
    hub_unit_cost: float = 4000.0
    hub_install_cost: float = 270.0
    module_unit_cost: float = 2000.0
    module_install_cost: float = 140.0
    modules_per_hub: int = 4
    spectrum_mhz: float = 40.0
    spectrum_cost_per_mhz_per_capita: float = 0.007
    population: int = 250_000
    pole_lease_per_site_year: float = 1250.0
    power_maintenance_per_site_year: float = 375.0


@dataclass(frozen=True)
class FiberCostParams:
    cable_cost_per_m: float = 10.0
    install_cost_per_m: float = 200.0
    power_maintenance_per_link_year: float = 200.0
    # Street-routing multiplier on the Euclidean cell-to-hub distance.
    routing_factor: float = 1.0


@dataclass(frozen=True)
class TerrestrialFsoCostParams:
    equipment_cost_per_link: float = 15000.0
    planning_install_per_link: float = 5000.0
    power_maintenance_per_link_year: float = 8000.0
    nlos_fraction: float = 0.5
    nlos_hop_count: int = 2


@dataclass(frozen=True)
class VerticalFsoCostParams:
    n_platforms: int = 20
    platform_cost: float = 50000.0
    cost_per_flight_hour: float = 859.0
    # ~79% duty cycle; set to 8760 for uninterrupted 24/7 operation.
    flight_hours_per_year: float = 6925.0


@dataclass(frozen=True)
class CostParams:
    rf_nlos: RfNlosCostParams = field(default_factory=RfNlosCostParams)
    fiber: FiberCostParams = field(default_factory=FiberCostParams)
    terrestrial_fso: TerrestrialFsoCostParams = field(default_factory=TerrestrialFsoCostParams)
    vertical_fso: VerticalFsoCostParams = field(default_factory=VerticalFsoCostParams)


@dataclass(frozen=True)
class CostLineItem:
    label: str
    kind: str  # 'capex' or 'opex'
    unit_cost: float
    quantity: float

    @property
    def total(self) -> float:
        return self.unit_cost * self.quantity


@dataclass(frozen=True)
class TcoResult:
    """Itemised cost of one technology; totals are exact sums of the items."""

    technology: str
    line_items: tuple[CostLineItem, ...]
    capex: float
    opex_per_year: float

    def tco(self, years: float) -> float:
        return self.capex + years * self.opex_per_year


def _result(technology: str, items: Sequence[CostLineItem]) -> TcoResult:
    capex = sum(item.total for item in items if item.kind == "capex")
    opex = sum(item.total for item in items if item.kind == "opex")
    return TcoResult(
        technology=technology, line_items=tuple(items), capex=capex, opex_per_year=opex
    )


def cost_rf_nlos(layout: HetNetLayout, params: RfNlosCostParams = RfNlosCostParams()) -> TcoResult:
    """RF non-LOS point-to-multipoint costing.

    One hub serves modules_per_hub small cells; every deployed device
    (hub or remote module) occupies a leased, powered pole site.
    """
    n_small = len(layout.small_positions)
    n_hubs = -(-n_small // params.modules_per_hub)  # ceil division
    n_sites = n_hubs + n_small
    items = [
        CostLineItem("hub equipment", "capex", params.hub_unit_cost, n_hubs),
        CostLineItem("hub installation", "capex", params.hub_install_cost, n_hubs),
        CostLineItem("remote module equipment", "capex", params.module_unit_cost, n_small),
        CostLineItem("remote module installation", "capex", params.module_install_cost, n_small),
        CostLineItem(
            "spectrum license",
            "capex",
            params.spectrum_cost_per_mhz_per_capita,
            params.spectrum_mhz * params.population,
        ),
        CostLineItem("pole lease", "opex", params.pole_lease_per_site_year, n_sites),
        CostLineItem(
            "power and maintenance", "opex", params.power_maintenance_per_site_year, n_sites
        ),
    ]
    return _result("rf_nlos_ptm", items)


def cost_fiber(layout: HetNetLayout, params: FiberCostParams = FiberCostParams()) -> TcoResult:
    """Fiber costing: trench every small cell to its nearest macro hub."""
    n_links = len(layout.small_positions)
    trench_m = float(nearest_macro_distances(layout).sum()) * params.routing_factor
    items = [
        CostLineItem("fiber cable", "capex", params.cable_cost_per_m, trench_m),
        CostLineItem("trenching and installation", "capex", params.install_cost_per_m, trench_m),
        CostLineItem(
            "power and maintenance", "opex", params.power_maintenance_per_link_year, n_links
        ),
    ]
    return _result("fiber", items)


def nlos_cell_indices(
    layout: HetNetLayout, params: TerrestrialFsoCostParams = TerrestrialFsoCostParams()
) -> np.ndarray:
    """Indices of the small cells assumed to lack line of sight to their hub.

    A seeded draw of round(nlos_fraction * n_small) cells without
    replacement; the stream is derived from the layout seed so the same
    layout always yields the same subset.
    """
    if not 0 <= params.nlos_fraction <= 1:
        raise ValueError(f"nlos_fraction must be in [0, 1], got {params.nlos_fraction}")
    n_small = len(layout.small_positions)
    n_nlos = round(params.nlos_fraction * n_small)
    rng = np.random.default_rng([layout.rng_seed, 1])
    return np.sort(rng.choice(n_small, size=n_nlos, replace=False))


def cost_terrestrial_fso(
    layout: HetNetLayout, params: TerrestrialFsoCostParams = TerrestrialFsoCostParams()
) -> TcoResult:
    """Terrestrial FSO costing.

    Cells with line of sight to their hub need one link; the non-LOS subset
    (see nlos_cell_indices) needs nlos_hop_count chained links each.
    """
    if params.nlos_hop_count < 1:
        raise ValueError(f"nlos_hop_count must be >= 1, got {params.nlos_hop_count}")
    n_small = len(layout.small_positions)
    n_nlos = len(nlos_cell_indices(layout, params))
    n_links = (n_small - n_nlos) + n_nlos * params.nlos_hop_count
    items = [
        CostLineItem("FSO equipment", "capex", params.equipment_cost_per_link, n_links),
        CostLineItem(
            "planning and installation", "capex", params.planning_install_per_link, n_links
        ),
        CostLineItem(
            "power and maintenance", "opex", params.power_maintenance_per_link_year, n_links
        ),
    ]
    return _result("terrestrial_fso", items)


def cost_vertical_fso(
    layout: HetNetLayout, params: VerticalFsoCostParams = VerticalFsoCostParams()
) -> TcoResult:
    """Vertical FSO costing: platform fleet CAPEX plus flight-hour OPEX."""
    items = [
        CostLineItem("flying platform", "capex", params.platform_cost, params.n_platforms),
        CostLineItem(
            "flight operations",
            "opex",
            params.cost_per_flight_hour,
            params.n_platforms * params.flight_hours_per_year,
        ),
    ]
    return _result("vertical_fso", items)


def compare_tco(
    layout: HetNetLayout, params: CostParams = CostParams(), years: float = 1.0
) -> list[TcoResult]:
    """Cost all four technologies on one layout, cheapest first at `years`."""
    if years < 0:
        raise ValueError(f"years must be non-negative, got {years}")
    results = [
        cost_rf_nlos(layout, params.rf_nlos),
        cost_fiber(layout, params.fiber),
        cost_terrestrial_fso(layout, params.terrestrial_fso),
        cost_vertical_fso(layout, params.vertical_fso),
    ]
    return sorted(results, key=lambda r: r.tco(years))
