"""Exact Spin^c Dirac spectra and harmonic spinors on flag varieties."""

import json as _json

from ._flagspec import *  # noqa: F401,F403
from ._flagspec import FlagspecError, __version__, run_job_json


def run(command, family, rank, nodes, *, line_bundle=None, theta=None, kahler=None,
        kahler_units="plain", scalar_target=None, q_range=None, max_distinct=1 << 20):
    """Runs a CLI-style job and returns the result document as a dict."""
    job = {
        "command": command,
        "type": family,
        "rank": rank,
        "nodes": list(nodes),
        "line_bundle": None if line_bundle is None else list(line_bundle),
        "theta": None if theta is None else [str(x) for x in theta],
        "kahler": None if kahler is None else [str(x) for x in kahler],
        "kahler_units": kahler_units,
        "scalar_target": scalar_target,
        "q_range": None if q_range is None else list(q_range),
        "max_distinct": str(max_distinct),
        "json": True,
    }
    return _json.loads(run_job_json(_json.dumps(job)))
