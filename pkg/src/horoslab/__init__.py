"""Rotational constant mean curvature surfaces between horospheres in hyperbolic space."""
from .errors import (ContourError, DegenerateAxisError, InvalidParameterError, NoCandidateError,
                     NotATangencyError, QuadratureError, StepTooLargeError)
from .geometry import (CylCoords, HalfSpacePoint, SlabSpec, apply_homothety, cyl_to_cartesian,
                       hyperbolic_distance, invert_through_unit_hemisphere, translate_horizontal)
from .measure import (AxisArc, CapArc, CircleArc, MeridianContour, ProfileArc, area_cartesian,
                      area_natural, dome_contour, free_area, mean_curvature_fd, sphere_contour,
                      tube_contour, volume_contour)
from .profile import (FamilyParams, ProfileSample, Regime, family, lambda_dot, lambda_of_s,
                      ode_residual, period, profile_point, profile_polyline, u_dot_squared,
                      u_squared)
from .solver import (Candidate, IsoPoint, dome_candidates, floating_spheres, solve,
                     sweep_profiles, tube_for_slab)
from .tangency import (Admissibility, Direction, FamilyKind, TangencyPoint,
                       admissible_tangencies, algebraic_roots, classify_family, direction_of,
                       slab_admissibility)

__version__ = "0.1.0"
