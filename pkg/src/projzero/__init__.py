"""Exact computation with ideals of projective dimension zero.

The engine computes varieties, Hilbert functions, normal forms, vanishing
ideals and separators over Q or GF(p) using projective multiplication
matrices and common-eigenvector extraction. Everything is exact; there is
no floating point anywhere.
"""

from .errors import (ArtinianQuotient, CapExceeded, DegreeTooLow,
                     DuplicatePoint, FieldTooSmall, FormSyntax,
                     GenericityFailure, InputError, NoSurjectionFound,
                     NotHomogeneous, ProjzeroError, RankDeficientBasis,
                     UnknownVariable, ZeroPoint)
from .fields import PrimeField, RationalField, parse_field_spec
from .linalg import (Matrix, char_poly, eigenspace, kernel, roots_in_field,
                     rref, solve_in_rowspace)
from .polyring import (Form, MonomialOrder, format_form, format_monomial,
                       monomials_of_degree, parse_form)
from .quotient import (DegreePiece, HilbertScan, IdealPresentation,
                       binomial_expansion, gb_degree_bound, hilbert_scan,
                       ideal_piece, initial_ideal_min_generators,
                       macaulay_growth, normal_form_by_degree)
from .points import (CMatrix, PointTriplet, ProjPointSet, bm_triplet,
                     c_matrix, eval_normal_form, normalize, nzd_sweep,
                     project_variables, refine_partitions, separators,
                     vanishing_ideal)
from .solver import (EigenPoint, SolutionReport, SolveOptions,
                     candidate_points, common_eigenvectors,
                     eigenpoints_from_matrices, filter_points, multiplicity,
                     solve)
from .triplet import (FastNormalForm, Triplet, TripletOptions, build_triplet,
                      fast_normal_form, find_surjective_linear,
                      l_combination, l_map_matrix, multiplication_matrix,
                      normalized_linear_forms, rebuild_at_next_degree)

__version__ = "0.1.0"
