"""
Workbench for finite-dimensional bound quiver algebras: the higher spherical and higher tetrahedral
algebras, their structural invariants, modules, and the tilting complex relating them.
"""
from typing import Final

from quivalg.algebra import FiniteAlgebra
from quivalg.analysis import (
    CartanMatrix,
    SymmetrizingForm,
    cartan,
    dimension,
    find_symmetrizing_form,
    gabriel_quiver,
    socle_dims,
    verify_identity
)
from quivalg.exceptions import *
from quivalg.field import FieldSpec, scalar_arith
from quivalg.homotopy import (
    ChainMap,
    EndomorphismAlgebra,
    HomSpace,
    ProjComplex,
    build_tilting_T,
    build_tilting_generators,
    endomorphism_algebra,
    euler_hom_dimension,
    hom_complexes,
    verify_spherical_presentation,
    verify_tilting
)
from quivalg.presets import (
    PresetParams,
    Presentation,
    load_preset,
    parse_presentation,
    serialize_presentation,
    spherical,
    tetrahedral
)
from quivalg.quiver import AlgebraElement, Path, Quiver, Relation
from quivalg.representations import (
    ModuleMap,
    Representation,
    modules_isomorphic,
    omega_orbit,
    projective,
    projective_cover,
    simple,
    syzygy
)
from quivalg.rewriting import QuotientAlgebra, build_algebra, complete, normal_form, verify_by_truncation
from quivalg.suites import VerificationReport, run_suite

__version__: Final = '0.1.0'

__all__: Final = (
    # Classes
    'AlgebraElement',
    'CartanMatrix',
    'ChainMap',
    'EndomorphismAlgebra',
    'FieldSpec',
    'FiniteAlgebra',
    'HomSpace',
    'ModuleMap',
    'Path',
    'PresetParams',
    'Presentation',
    'ProjComplex',
    'QuotientAlgebra',
    'Quiver',
    'Relation',
    'Representation',
    'SymmetrizingForm',
    'VerificationReport',

    # Functions
    'build_algebra',
    'build_tilting_T',
    'build_tilting_generators',
    'cartan',
    'complete',
    'dimension',
    'endomorphism_algebra',
    'euler_hom_dimension',
    'find_symmetrizing_form',
    'gabriel_quiver',
    'hom_complexes',
    'load_preset',
    'modules_isomorphic',
    'normal_form',
    'omega_orbit',
    'parse_presentation',
    'projective',
    'projective_cover',
    'run_suite',
    'scalar_arith',
    'serialize_presentation',
    'simple',
    'socle_dims',
    'spherical',
    'syzygy',
    'tetrahedral',
    'verify_by_truncation',
    'verify_identity',
    'verify_spherical_presentation',
    'verify_tilting'
)
