"""Sigma-permutable subgroup lattice analysis for small finite groups."""

import json

try:
    from siglat._siglat import (
        GroupSpec,
        OrderCapExceeded,
        ParseError,
        analyze_json,
        builtin_corpus,
        is_sigma_full,
        parse_group_json,
        sigma_permutable_orders,
        subgroup_orders,
        sweep_json,
        validate_partition,
    )
except ImportError:  # in-tree builds put the extension on sys.path directly
    from _siglat import (
        GroupSpec,
        OrderCapExceeded,
        ParseError,
        analyze_json,
        builtin_corpus,
        is_sigma_full,
        parse_group_json,
        sigma_permutable_orders,
        subgroup_orders,
        sweep_json,
        validate_partition,
    )

__all__ = [
    "GroupSpec",
    "OrderCapExceeded",
    "ParseError",
    "analyze",
    "builtin_corpus",
    "is_sigma_full",
    "parse_group_json",
    "sigma_permutable_orders",
    "subgroup_orders",
    "sweep",
    "validate_partition",
]


def analyze(spec, partition="sigma0", **kwargs):
    """Analyze one (group, partition) pair; returns the report as a dict."""
    return json.loads(analyze_json(spec, partition, **kwargs))


def sweep(partitions, jobs=1):
    """Analyze the builtin corpus; returns a list of report dicts."""
    return [json.loads(r) for r in sweep_json(partitions, jobs)]
