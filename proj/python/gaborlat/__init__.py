"""Python bindings for the gaborlat toolkit."""

import json

from ._core import (
    GaborlatError,
    __version__,
    decide_onb,
    frft,
    gamma_weights,
    hermite,
    onb_certificate,
    product_progression_bound,
    tiles_by,
    upper_beurling_density,
    verify_eigen,
)
from ._core import run as _run


def run(command, config=None, seed=0):
    """Run a CLI command on a config dict and return the report as a dict."""
    return json.loads(_run(command, json.dumps(config or {}), seed))


__all__ = [
    "GaborlatError",
    "__version__",
    "decide_onb",
    "frft",
    "gamma_weights",
    "hermite",
    "onb_certificate",
    "product_progression_bound",
    "run",
    "tiles_by",
    "upper_beurling_density",
    "verify_eigen",
]
