"""Low-crossing orders for set systems with (near-)linear shatter functions."""

from .engine import (
    LinearityCapExceeded,
    RunTrace,
    boosted,
    compute_order_linear,
    compute_order_poly,
    iteration_cap,
    poly_thresholds,
    with_unknown_c,
)
from .ordering import Order, OrderError, reconstruct
from .setsystem import (
    LinearityParams,
    Partition,
    SetSystem,
    SetSystemError,
    build,
    dual,
    near_twin_max_diff,
    restrict,
    twin_partition,
    uniform_sample,
)
from .verifier import (
    CrossingReport,
    certify,
    crossing_number,
    min_crossing_exhaustive,
    shatter_probe,
)

__all__ = [
    "LinearityCapExceeded", "RunTrace", "boosted", "compute_order_linear",
    "compute_order_poly", "iteration_cap", "poly_thresholds", "with_unknown_c",
    "Order", "OrderError", "reconstruct",
    "LinearityParams", "Partition", "SetSystem", "SetSystemError", "build",
    "dual", "near_twin_max_diff", "restrict", "twin_partition", "uniform_sample",
    "CrossingReport", "certify", "crossing_number", "min_crossing_exhaustive",
    "shatter_probe",
]
