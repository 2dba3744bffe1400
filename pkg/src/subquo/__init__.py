"""Exact Groebner bases for subquotients of free modules over polynomial rings."""

from .elements import (
    ModuleElement,
    PrimeField,
    QQ,
    RationalField,
    Ring,
    format_element,
    parse_element,
    parse_field,
)
from .errors import ContractViolation, InputError
from .flange import (
    FreeInjectiveMatrix,
    buchberger_flange,
    fi_normalize,
    free_presentation,
    is_groebner_form,
    matlis_transpose,
    monomial_division,
)
from .graded import (
    GradedMatrix,
    deg_join,
    deg_leq,
    deg_meet,
    degrees_in_box,
    element_degree,
    format_degree,
    graded_dimension,
    is_homogeneous,
    monomialize,
    normalize_shifts,
    parse_degree,
    presentation_dimension,
)
from .groebner import (
    buchberger,
    buchberger_transform,
    divide,
    express,
    is_groebner,
    minimal_groebner,
    minimal_transform,
    normal_form,
    reduce_groebner,
    s_polynomial,
    schreyer_syzygies,
)
from .homres import (
    Resolution,
    VectorDiagram,
    betti_numbers,
    free_resolution,
    homology_presentation,
    kernel_of_free_map,
    module_from_diagram,
    prune_minimize,
    verify_complex,
)
from .orders import (
    BaseOrder,
    ModuleOrder,
    SchreyerOrder,
    default_order,
    format_order,
    parse_order,
)
from .relative import (
    is_relative_gb,
    reduce_relative,
    relative_buchberger,
    relative_division,
    relative_schreyer,
)

__version__ = "1.0.0"

__all__ = [
    "BaseOrder",
    "ContractViolation",
    "FreeInjectiveMatrix",
    "GradedMatrix",
    "InputError",
    "ModuleElement",
    "ModuleOrder",
    "PrimeField",
    "QQ",
    "RationalField",
    "Resolution",
    "Ring",
    "SchreyerOrder",
    "VectorDiagram",
    "betti_numbers",
    "buchberger",
    "buchberger_flange",
    "buchberger_transform",
    "default_order",
    "deg_join",
    "deg_leq",
    "deg_meet",
    "degrees_in_box",
    "divide",
    "element_degree",
    "express",
    "fi_normalize",
    "format_degree",
    "format_element",
    "format_order",
    "free_presentation",
    "free_resolution",
    "graded_dimension",
    "homology_presentation",
    "is_groebner",
    "is_groebner_form",
    "is_homogeneous",
    "is_relative_gb",
    "kernel_of_free_map",
    "matlis_transpose",
    "minimal_groebner",
    "minimal_transform",
    "module_from_diagram",
    "monomial_division",
    "monomialize",
    "normal_form",
    "normalize_shifts",
    "parse_degree",
    "parse_element",
    "parse_field",
    "parse_order",
    "presentation_dimension",
    "prune_minimize",
    "reduce_groebner",
    "reduce_relative",
    "relative_buchberger",
    "relative_division",
    "relative_schreyer",
    "s_polynomial",
    "schreyer_syzygies",
    "verify_complex",
]
