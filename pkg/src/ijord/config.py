"""Shared runtime configuration: the cardinality bound for enumerations."""

import os

BOUND_ENV = "IJORD_BOUND"
DEFAULT_BOUND = 10**6


def cardinality_bound() -> int:
    raw = os.environ.get(BOUND_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_BOUND
    return int(raw)
