"""
SchemeMate Constructions Package
Contains builders for the WFDF family, cyclotomic base schemes, switched schemes and small fixtures
"""

from .fields import GFTable, gf_table
from .diamond import (
    DiamondTable,
    WfdfSpec,
    Z3Space,
    count_diamond_tables,
    default_wfdf_spec,
    make_diamond,
    random_wfdf_spec,
)
from .wfdf import (
    WfdfBuilder,
    build_wfdf,
    check_imprimitive_fusions,
    parameter_level_proper,
    wfdf_parameters,
)
from .cover import CoverBuilder, CoverSpec, build_cyclotomic_base, e_classes
from .switching import SwitchBuilder, build_switched, switched_label_map
from .fixtures import (
    ExampleBuilder,
    ThinBuilder,
    blow_up,
    example_rainbow,
    iter_symmetric_homogeneous,
    symmetric_group_scheme,
    thin_cyclic_scheme,
    thin_group_scheme,
)

__all__ = [
    'GFTable', 'gf_table',
    'DiamondTable', 'WfdfSpec', 'Z3Space', 'count_diamond_tables', 'default_wfdf_spec',
    'make_diamond', 'random_wfdf_spec',
    'WfdfBuilder', 'build_wfdf', 'check_imprimitive_fusions', 'parameter_level_proper',
    'wfdf_parameters',
    'CoverBuilder', 'CoverSpec', 'build_cyclotomic_base', 'e_classes',
    'SwitchBuilder', 'build_switched', 'switched_label_map',
    'ExampleBuilder', 'ThinBuilder', 'blow_up', 'example_rainbow', 'iter_symmetric_homogeneous',
    'symmetric_group_scheme', 'thin_cyclic_scheme', 'thin_group_scheme',
]

__version__ = "1.0.0"
__author__ = "SchemeMate"
__description__ = "Constructions of coherent configurations and proper Jordan schemes"
