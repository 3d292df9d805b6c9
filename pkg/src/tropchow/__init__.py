"""Tropical Chow hypersurfaces of weighted fans, with exact rational arithmetic."""

from .complexes import (
    Cell,
    QuotientVector,
    WeightedComplex,
    balancing_check,
    complex_equal,
    fan_from_rays,
    linear_combination,
    negate_complex,
    normalize,
)
from .minkowski import fink_skeleton, minkowski_sum, standard_plane
from .troplin import (
    PlueckerVector,
    is_tropical_pluecker,
    line_through_two_points,
    linear_space_as_complex,
    phi_vector,
    point_in_linear_space,
    translate_line,
)
from .chow import (
    chow_hypersurface,
    chow_support_member,
    gamma0,
    gamma_p,
    meets,
    phi,
    phi_complex,
    restrict_to_H_identity,
)
from .reconstruct import recover_multiplicities, separating_cones, support_outside_lambda
from .fixtures import list_fixtures, load_fixture

__version__ = "0.1.0"
