"""
Running suites and reading a report
===================================

"""

import json

from bannai_ito.cli import RunConfig, build_report, render_markdown
from bannai_ito.exactring import mpq
from bannai_ito.hyperoct import GroupAlgebraElement, reflection, transposition
from bannai_ito.realization import realize
from bannai_ito.suites import suites_for, verify_suite

print("suites for b3-clifford:", suites_for("b3-clifford"))

# a low degree bound keeps this quick; the command-line default is 6
report = build_report(RunConfig(realization="z2-scalar", degree=3, timings=False))
print(report["status"], report["summary"])
print(render_markdown(report)[:600])

# Change Q_13 by dropping a sign and the structure suite reports where it breaks
r = realize("b3-scalar")
E = lambda g: GroupAlgebraElement.of(g, r.ring.params)
R1, R2, R3 = (E(reflection(3, i)) for i in (1, 2, 3))
broken = r.with_q((1, 3), (R1 + R2 - R1 * R2 * R3) * E(transposition(3, 1, 3)) * mpq(1, 2))
bad = verify_suite("hyperoct-structure", broken, 3, timings=False)
first = bad.failures()[0]
print(first.label, json.dumps(first.witness))
