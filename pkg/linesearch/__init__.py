"""
Line-search package: the Armijo-type inner loop.
"""

from linesearch.armijo import LineSearchResult, armijo_search, DEFAULT_J_MAX
