"""Structural checks and the diff of the Delta table against the reference.

Run: python3 demos/03_checks.py
"""

from hhbv.catalog import delta_table, table_mismatches
from hhbv.verify import run_all

for r in run_all(samples=16):
    status = "ok" if r["passed"] else f"{len(r['violations'])} violation(s)"
    print(f"{r['suite']:24} {r['checked']:>8} checked  {status}")

for label, subst in (("symbolic d", None), ("d = 0", 0)):
    bad = table_mismatches(delta_table(subst))
    print(f"\nDelta table, {label}: {len(bad)} mismatch(es)")
    for m in bad:
        print(f"  Delta({m['input']}): reference {m['reference']}, computed {m['computed']}")
