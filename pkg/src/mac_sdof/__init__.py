"""Secrecy degrees of freedom of the two-user MIMO multiple-access wiretap channel."""
from .certifier import (BoundStep, Certificate, RecursiveCover, build_cover, certify,
                        certify_from_channels, certify_grid, generic_ranks, outer_bound)
from .exceptions import (DimensionMismatch, InfeasibleAllocation, InvalidDims, InvalidSizes,
                         MacSdofError, SingularMatrix, ToleranceViolation)
from .gsvd import DimProfile, GsvdResult, gsvd, gsvd_defects, rank
from .rate_eval import (Custom, SignalingScheme, SweepResult, Target, allocate, leakage_cap,
                        legit_rate, sweep)
from .reduction import ParallelModel, degradation_sigma, enhancement_sigma, to_parallel
from .region import (DofPoint, DofRegion, RegionCase, case_halfspaces, classify_case,
                     contains, rectangle_hull, sdof_region, sdof_vertices)

__version__ = "0.1.0"
