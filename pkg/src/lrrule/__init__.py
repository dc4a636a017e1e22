"""Littlewood-Richardson rule toolkit: tableaux, jeu de taquin, coplactic
operations, coefficient computation and a polynomial cross-check."""

from .errors import (DominanceError, IncompatibleWeightError, LRError, NotSemistandardError,
                     ParseError, PreconditionError, ResourceError, ShapeMismatchError)
from .jdt import dual_equivalent, inward_slide, outward_slide, phi, rectify, switch
from .coplactic import (coplactic_component, dominant_normal_form, lower_tab, raise_tab, rob,
                        rob_inverse)
from .lr import (SchurExpansion, kostka, lr_coefficient, pieri_row, schur_product,
                 skew_expand)
from .shapes import Cell, SkewShape, partition, product_shape
from .tableaux import (ChainTableau, SkewTableau, companion, enumerate_lr, enumerate_tableaux,
                       reading_word, weight)
from .textio import format_tableau, parse_partition, parse_skew_shape, parse_tableau

__version__ = "0.1.0"
