"""
Exactness along an extension
============================

The low-degree sequence for a central line inside a three-dimensional
algebra, checked by rank arithmetic, then a split extension.
"""

from homleibniz.algebra import HomAction
from homleibniz.catalog import example_5_2_iii, sl2
from homleibniz.exactla import Subspace
from homleibniz.products import eight_term_check, extension, split_extension_from_action

g = example_5_2_iii()
line = Subspace.from_vectors(3, [[0, 0, 1]])
rep = eight_term_check(extension(g, line))
print(rep["dims"])
for node, data in rep["nodes"].items():
    print("  exact at", node, data["exact"])

# split: sl2 acting on itself by brackets
split = eight_term_check(split_extension_from_action(HomAction.by_bracket(sl2())))
print("split part:", split["split_sequence"])
