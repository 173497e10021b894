"""Completion that never terminates, and what the limits report instead."""
from pathlib import Path

from pathgb import Limits, buchberger
from pathgb.presentation import parse_presentation

HERE = Path(__file__).parent
pf = parse_presentation((HERE / "data" / "runaway.kan").read_text())

# y*x*y = x*y*x with x < y spawns y*x^k*y*x - ... for every k
for cap in (5, 10, 20):
    report = buchberger(pf.system(), Limits(max_rules=cap))
    print(cap, report.summary())

# the partial system is never marked complete, so nothing downstream trusts it
print("complete:", report.system.is_complete)
