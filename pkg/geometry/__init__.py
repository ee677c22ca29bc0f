"""
Geometry package: halfspaces, polyhedra and the projections onto them.
"""

from geometry.halfspace import Halfspace, build_halfspace, project_halfspace
from geometry.polyhedron import Polyhedron, project_polyhedron, project_intersection
from geometry.hildreth import hildreth_project
from geometry.active_set import project_by_enumeration, polyhedron_oracle, intersection_oracle
