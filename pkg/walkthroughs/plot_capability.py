"""
Which algebras are capable?
===========================

An algebra is capable when its exterior center vanishes.
"""

from homleibniz.capability import capability_consistency_suite, center_report
from homleibniz.catalog import example_5_2_iii, heisenberg, sl2

for g in (example_5_2_iii(), heisenberg(2), sl2()):
    rep = center_report(g)
    print(g.name, "capable" if rep.capable else "not capable",
          "| dim Z =", rep.Z.dim, "dim Z_wedge =", rep.Z_wedge.dim)

# H(2) is the exception; its exterior center is the line of z
print(center_report(heisenberg(2)).Z_wedge.basis)

# every criterion whose hypotheses hold should agree with the verdict
suite = capability_consistency_suite(sl2())
for name, item in suite["items"].items():
    print("  %-28s %s" % (name, item["status"]))
