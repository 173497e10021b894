"""Hom-set tables for a five-object category with one infinite hom-set."""
from pathlib import Path

from pathgb import buchberger, find_matches, format_polynomial, hom_table, is_groebner, normal_form, s_polynomial
from pathgb.cli import format_table
from pathgb.presentation import parse_presentation

HERE = Path(__file__).parent
pf = parse_presentation((HERE / "data" / "five.kan").read_text())
given = pf.system()

print("given relations form a Groebner basis:", is_groebner(given))

# overlaps whose S-polynomial does not reduce to zero
for m in find_matches(given):
    nf = normal_form(s_polynomial(given, m), given)
    if nf:
        print("stuck S-polynomial:", format_polynomial(nf, given.order))

report = buchberger(given)
print(report.summary())
for rule in report.system.format_rules():
    print("  ", rule)

# B2 -> B2 is infinite (b pumps); everything else is a short finite list
print(format_table(hom_table(report.system, max_len=4)))
