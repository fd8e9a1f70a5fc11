"""Exact K-polystability of toric pairs, standard-coefficient boundaries and
log Cox data of rank-one toric orbifolds."""

from .errors import ToricError
from .exactlin import FinAbGroup, cokernel, det, hermite, smith, solve
from .fan import Fan, check_fan_map, fans_equal, normal_fan, projective_space_fan, validate
from .kstability import (condition2_rank1, construct_standard_boundary,
                         is_k_polystable)
from .logcox import (condition4, local_chart, log_class_group, rank1_report,
                     universal_cover)
from .polytope import (HPolytope, VPolytope, barycenter, conv, facets, polar_dual,
                       scale, translate, vertices, volume)
from .toricdiv import (StandardBoundary, ToricDivisor, canonical_divisor,
                       divisor_of_character, dual_vertices, find_ample, is_ample,
                       polytope_of)

__version__ = "0.1.0"
