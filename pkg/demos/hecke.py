"""Completing the Hecke-type relations on three idempotents e1, e2, e3."""
from pathlib import Path

from pathgb import Finite, buchberger, finiteness, format_polynomial, irreducible_terms
from pathgb.presentation import parse_presentation
from pathgb.quiver import format_path

HERE = Path(__file__).parent
pf = parse_presentation((HERE / "data" / "hecke.kan").read_text())
given = pf.system()

for rule in given.format_rules():
    print("  ", rule)

# six relations are not yet confluent: one overlap leaves a stuck S-polynomial
report = buchberger(given)
print(report.summary())
for rule in report.added:
    print("added:", format_polynomial(rule.poly, report.system.order))

basis = report.system
verdict = finiteness(basis, "B", "B")
print("hom(B, B):", verdict)

# the automaton has no cycle, so the count bounds the longest normal form
words = irreducible_terms(basis, "B", "B", verdict.count if isinstance(verdict, Finite) else 6)
by_length = {}
for w in words:
    by_length.setdefault(len(w), []).append(format_path(w))
for n, ws in sorted(by_length.items()):
    print(n, " ".join(ws))

# 1 + 3 + 5 + 6 + 5 + 3 + 1 = 24 = 4!, the dimension of the Hecke algebra of S4
