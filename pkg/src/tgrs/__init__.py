"""Twisted generalized Reed-Solomon codes over odd-characteristic finite
fields: exact field/polynomial arithmetic, generator and closed-form check
matrices, MDS/NMDS classification by subset sums, self-duality verification,
and parameterized self-dual construction families."""

from .field import (FieldCtx, FieldElement, FieldError, element_of_order,
                    embed, field_of_order, field_spec, find_generator,
                    format_element, is_square, make_field, parse_element,
                    parse_field_spec, sqrt_in_field)
from .poly import Poly, gcd, is_squarefree, roots_in, splitting_degree
from .matrix import Matrix
from .code import (CaseTag, CodeSpecError, TgrsCode, code_from_spec,
                   lagrange_weights)
from .analysis import (BudgetExceeded, Classification, CodeReport,
                       SelfDualShapeError, StructuralDuality, build_report,
                       classify, dual_min_distance_oracle, k_minor_det,
                       min_distance_oracle, recover_lambda, self_dual_matrix,
                       self_dual_structural, subset_sum_witness)
from .constructions import (BuildResult, ConstructionError, build,
                            build_from_spec, build_t31, build_t33, build_t35,
                            build_t36)
from .examples import EXAMPLE_IDS, example_code, run_example

__version__ = "0.1.0"
