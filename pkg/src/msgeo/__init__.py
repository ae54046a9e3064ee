"""Exact Hausdorff and Gromov-Hausdorff computations on finite metric spaces."""

from .metric_core import (
    FiniteMetricSpace,
    Partition,
    PartitionStats,
    cov,
    diameter,
    enumerate_partitions,
    eps_min,
    from_matrix,
    from_points,
    get_tolerance,
    line,
    pack,
    partition_stats,
    scale,
    simplex,
    validate_space,
)

__version__ = "0.1.0"
