"""Exact enumeration of bicolor patterns of Z_2k under affine symmetry."""

__version__ = "0.1.0"

from .affine import (AffineElement, FiniteGroup, GroupSpec, aff_apply,
                     aff_compose, aff_inverse, build_group, klein_rectangle_spec,
                     units_of)
from .errors import DichotError, IntegrityError, ResourceLimitError
from .lattice import (Subgroup, SubgroupClass, SubgroupClassTraversal,
                      all_subgroups, closure, conjugacy_classes, lattice)
from .poly import Polynomial
