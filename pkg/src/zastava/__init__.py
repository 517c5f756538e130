"""zastava: exact equivariant volumes of quasi-map spaces.

Coefficients of the equivariant partition function Z are computed as
canonical rational functions of the torus parameters (a_1..a_r), the loop
parameter eps (affine case), and hbar (written h), through two independent
pipelines — Whittaker-vector norms in a lowest-weight module over the dual
algebra, and the unfolded quadratic Toda recursion — plus closed-form and
localization oracles for rank one.  Everything is exact; no floats anywhere.
"""

from .cartan import (
    CartanDatum,
    FormMatrix,
    build_cartan,
    contents_up_to,
    dualize,
    form_matrix,
    form_pairing,
    height,
    kostant_partition,
    null_vector,
    positive_roots,
)
from .errors import ResourceLimitError, UsageError
from .localization import (
    FixedPointDatum,
    fixed_point_from_obj,
    load_fixed_points,
    localized_integral,
    sl2_quasimap_fixed_point,
)
from .rationals import (
    ExactDivisionError,
    Matrix,
    PoleError,
    Polynomial,
    RationalFunction,
    SolveInconsistentError,
    parse_polynomial,
    parse_rational,
    poly_gcd,
    solve_consistent,
)
from .series import (
    SeriesTable,
    csv_table,
    j_function,
    parse_table,
    serialize_table,
    z_series_affine_toda,
    z_series_affine_whittaker,
    z_series_toda,
    z_series_whittaker,
)
from .sl2 import apply_sl2_word, closed_form_a, sl2_gram_value, sl2_verma_action
from .toda import TodaResidual, check_affine_toda, check_finite_toda, residual_report
from .verma import (
    LowestWeight,
    VermaModule,
    WeightSpaceModel,
    WhittakerComponent,
    affine_lowest_weight,
    affine_variables,
    dual_sign_component,
    finite_variables,
    standard_lowest_weight,
    words_for_content,
)

__version__ = "0.1.0"

__all__ = [
    "CartanDatum",
    "ExactDivisionError",
    "FixedPointDatum",
    "FormMatrix",
    "LowestWeight",
    "Matrix",
    "PoleError",
    "Polynomial",
    "RationalFunction",
    "ResourceLimitError",
    "SeriesTable",
    "SolveInconsistentError",
    "TodaResidual",
    "UsageError",
    "VermaModule",
    "WeightSpaceModel",
    "WhittakerComponent",
    "affine_lowest_weight",
    "affine_variables",
    "apply_sl2_word",
    "build_cartan",
    "check_affine_toda",
    "check_finite_toda",
    "closed_form_a",
    "contents_up_to",
    "csv_table",
    "dual_sign_component",
    "dualize",
    "finite_variables",
    "fixed_point_from_obj",
    "form_matrix",
    "form_pairing",
    "height",
    "j_function",
    "kostant_partition",
    "load_fixed_points",
    "localized_integral",
    "null_vector",
    "parse_polynomial",
    "parse_rational",
    "parse_table",
    "poly_gcd",
    "positive_roots",
    "residual_report",
    "serialize_table",
    "sl2_gram_value",
    "sl2_quasimap_fixed_point",
    "sl2_verma_action",
    "solve_consistent",
    "standard_lowest_weight",
    "words_for_content",
    "z_series_affine_toda",
    "z_series_affine_whittaker",
    "z_series_toda",
    "z_series_whittaker",
]
