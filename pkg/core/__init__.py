"""
Kummer-type K3 Verification Toolkit - Core Module

This module provides exact arithmetic over GF(2^k) and the geometric and
combinatorial checks for supersingular K3 surfaces of Kummer type in
characteristic 2: the Weddle quartic, the Segre cubic, the congruence of
lines of order and class 2, the incidence configurations and the lattice
identities.

Public API:
-----------
Fields and Polynomials:
    - field_make: Build GF(2^k) from its degree and an optional modulus
    - FieldSpec, FieldElement: Field description and elements
    - MultiPoly, PolyMap: Sparse polynomials and polynomial maps
    - WeightedHypersurface: Equation in a weighted projective space

Projective Geometry:
    - ProjPoint, LineP3, PlaneP3: Normalised points, lines and planes
    - general_position6: No four of six points coplanar

Weddle Surface:
    - WeddleParams, WeddleSurface: Parameters and the curve inventory
    - kummer_incidence: The (16_6) of the 32 curves
    - hutchinson_orbits: Orbits of the Hutchinson involution

Segre Cubic:
    - phi_map: Parametrization by quadrics through five points
    - rep_generators, group_closure: The two S6 representations
    - weddle_via_polar: Weddle quartic as a pulled back polar quadric

Congruence of Lines:
    - CongruenceParams, congruence_points: The del Pezzo surface of rays
    - order_check, class_check: Two rays through points and in planes
    - normalize_quartic, cover_equation: Double cover equations
    - kummer_on_quadric: Sixteen vertices and conics on V(F2)

Configurations:
    - abstract_kummer: The Kummer (16_6)
    - rosenhain_enumerate, goepel_enumerate: Tetrads on the sixteen lines
    - symplectic_counts: Planes of the symplectic space F_2^4

Lattices:
    - GramLattice, smith_normal_form: Integer Gram matrices
    - shioda_tate_bound, index_identity, chern_count: Numerical identities

Suites:
    - run, SuiteOptions: Run named verification suites
    - SuiteReport, CheckRecord: Machine-readable results

Example:
--------
    from core import field_make, WeddleParams, WeddleSurface, kummer_incidence, abstract_kummer
    import numpy as np

    field = field_make(4)
    params = WeddleParams.random(field, np.random.default_rng(0))
    surface = WeddleSurface.build(params)
    inc = kummer_incidence(params, surface)
    assert inc == abstract_kummer()
"""

from .gf2k import field_make, field_arith, frobenius_sqrt, FieldSpec, FieldElement
from .mvpoly import MultiPoly, PolyMap, WeightedHypersurface, binary_separable, binary_splitting
from .projgeom import ProjPoint, LineP3, PlaneP3, general_position6
from .weddle import WeddleParams, WeddleSurface, kummer_incidence, hutchinson_orbits, singular_points_bruteforce
from .segre import phi_map, rep_generators, group_closure, weddle_via_polar, coble_char2
from .congruence import (
    CongruenceParams,
    congruence_points,
    order_check,
    class_check,
    normalize_quartic,
    cover_equation,
    sextic_cover,
    kummer_on_quadric,
)
from .configs import IncidenceStructure, abstract_kummer, rosenhain_enumerate, goepel_enumerate, symplectic_counts
from .lattice import GramLattice, smith_normal_form, shioda_tate_bound, index_identity, chern_count
from .report import CheckRecord, SuiteReport
from .suites import SuiteOptions, run

__all__ = [
    # Fields and polynomials
    'field_make',
    'field_arith',
    'frobenius_sqrt',
    'FieldSpec',
    'FieldElement',
    'MultiPoly',
    'PolyMap',
    'WeightedHypersurface',
    'binary_separable',
    'binary_splitting',
    # Projective geometry
    'ProjPoint',
    'LineP3',
    'PlaneP3',
    'general_position6',
    # Weddle surface
    'WeddleParams',
    'WeddleSurface',
    'kummer_incidence',
    'hutchinson_orbits',
    'singular_points_bruteforce',
    # Segre cubic
    'phi_map',
    'rep_generators',
    'group_closure',
    'weddle_via_polar',
    'coble_char2',
    # Congruence
    'CongruenceParams',
    'congruence_points',
    'order_check',
    'class_check',
    'normalize_quartic',
    'cover_equation',
    'sextic_cover',
    'kummer_on_quadric',
    # Configurations
    'IncidenceStructure',
    'abstract_kummer',
    'rosenhain_enumerate',
    'goepel_enumerate',
    'symplectic_counts',
    # Lattices
    'GramLattice',
    'smith_normal_form',
    'shioda_tate_bound',
    'index_identity',
    'chern_count',
    # Suites
    'CheckRecord',
    'SuiteReport',
    'SuiteOptions',
    'run',
]

__version__ = '1.0.0'
