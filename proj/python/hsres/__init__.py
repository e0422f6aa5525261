"""Hilbert-Schmidt resolution of quantum probes.

Matrices are complex numpy arrays; state builders return ``(rho, trace_deficit)``.
"""

import json

from ._hsres import *  # noqa: F401,F403
from ._hsres import report_json


def run_suite(seed=1729, corrupt_lambda_sign=False):
    """Run the reproduction suite and return the report as a dict."""
    return json.loads(report_json(seed, corrupt_lambda_sign))
