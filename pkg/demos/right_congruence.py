"""A Kan extension as a right congruence: which Hecke elements are fixed by e2*e1."""
from pathlib import Path

from pathgb import TaggedTerm, act, congruent_mod_right, kan_extension
from pathgb.presentation import parse_presentation
from pathgb.quiver import format_path
from pathgb.textio import parse_polynomial

HERE = Path(__file__).parent
pf = parse_presentation((HERE / "data" / "hecke-q.kan").read_text())
res = kan_extension(pf.kan_presentation(), pf.order)

print("mixed basis:")
for rule in res.mixed.format_rules():
    print("  ", rule)

# A|e2*e1 = A|1 collapses further, to A|e1 = A|1 and A|e2 = A|1
print("tagged basis:", [str(t) for t in res.basis])

delta = pf.delta
one = TaggedTerm("A", delta.identity("B"))
for word in ["e1", "e2", "e3", "e3*e2*e1*e3", "e1*e2*e3"]:
    b = parse_polynomial(word, delta)
    print(f"A|1 . {word} =", act(res, one, b))

print("e1*e2*e3 ~ e2*e3:",
      congruent_mod_right(res, parse_polynomial("e1*e2*e3", delta), parse_polynomial("e2*e3", delta)))
print("e3 ~ 1:",
      congruent_mod_right(res, parse_polynomial("e3", delta), delta.identity("B")))
