"""
Problems package: seeded experiment generators and the operators they use.
"""

from problems.operators import LinearOperator, CubicLinearOperator
from problems.normal_cone import NormalConeOperator, ZeroSetValuedOperator
from problems.generators import RandomSpec, gen_example1, gen_example2, generate, build_system, draw_instance_data
from problems.serialization import instance_document, system_from_document, save_instance, load_instance
