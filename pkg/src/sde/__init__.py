"""Shifted differential equations: construction, search and root structure"""

from .equations import (Sde, SdeParams, build_system, feasible, find_sde, find_small_sde, search_parameters,
                        small_params, verify_sde)
from .roots import RootCover, check_multiplicity_ladder, check_root_divisibility, coefficient_root_cover
