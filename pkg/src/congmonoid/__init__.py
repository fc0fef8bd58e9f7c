"""Non-negative solutions of ``x_1 + 2 x_2 + ... + (n-1) x_{n-1} = 0 (mod n)``:
indecomposable generators, the unit-group action, and a fast generator for
the level-1 indecomposables of high degree."""

from .arith import PartitionSpec, gcd, partition_count, partitions, totient, units_mod
from .errors import (
    BelowThreshold,
    MonoidError,
    NotInMonoid,
    OracleScaleExceeded,
    ResourceLimit,
    ScaleExceeded,
)
from .gen import level1_layer, mult1_from_partition, threshold
from .monoid import (
    IndecomposableSet,
    brute_force_im,
    enumerate_degree,
    extremals,
    indecomposables,
    is_indecomposable,
)
from .orbit import Orbit, UnitGroup, act, level, orbit_decomposition, orbit_of, unit_group
from .reduce import GeneralCongruence, general_indecomposables, lift, reduce, restricted_indecomposables
from .solution import (
    PartitionForm,
    Solution,
    add,
    from_partition_form,
    make_solution,
    subtract_checked,
    to_partition_form,
)

__version__ = "0.1.0"
