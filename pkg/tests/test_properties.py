import random

from hypothesis import assume, given, settings, strategies as st

from pathgb import (
    Finite, Infinite, Limits, Ordering, PathPolynomial, RewriteSystem, buchberger, compare, compose,
    finiteness, irreducible_terms, is_irreducible, leading_term, monic, normal_form, parse_polynomial,
    reduce_once,
)
from pathgb.algebra import format_polynomial, mul
from pathgb.quiver import Path, enumerate_paths, identity

from cases import five_order, five_quiver, hecke_basis, hecke_order, hecke_quiver
from oracles import random_polynomial, random_presentation

FIVE = five_quiver()
FIVE_PATHS = enumerate_paths(FIVE, max_len=4)
HECKE_WORDS = st.lists(st.sampled_from(["e1", "e2", "e3"]), max_size=6)
coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def hecke_word(ws) -> Path:
    return Path("B", "B", tuple(ws))


@st.composite
def composable(draw, n):
    """n paths of the five-object quiver, each ending where the next starts."""
    out = [draw(st.sampled_from(FIVE_PATHS))]
    for _ in range(n - 1):
        nxt = [p for p in FIVE_PATHS if p.src == out[-1].tgt]
        out.append(draw(st.sampled_from(nxt)))
    return out


@st.composite
def hecke_polys(draw, max_terms=4):
    terms = draw(st.lists(st.tuples(HECKE_WORDS.map(hecke_word), coefficients), max_size=max_terms))
    return PathPolynomial("B", "B", terms)


@st.composite
def complete_presentations(draw):
    seed = draw(st.integers(0, 10**6))
    quiver, order, rels = random_presentation(random.Random(seed))
    rep = buchberger(RewriteSystem.from_polynomials(quiver, order, rels), Limits(40, 8, 20))
    assume(rep.complete)
    return rels, rep.system, random.Random(seed + 1)


@given(composable(3))
def test_composition_is_associative(ps):
    p, q, r = ps
    assert compose(compose(p, q), r) == compose(p, compose(q, r))
    assert compose(identity(p.src), p) == p == compose(p, identity(p.tgt))


@given(HECKE_WORDS, HECKE_WORDS, HECKE_WORDS, HECKE_WORDS)
def test_order_is_total_and_monotone(a, b, u, v):
    o = hecke_order()
    p, q = hecke_word(a), hecke_word(b)
    c = compare(o, p, q)
    assert (c is Ordering.EQUAL) == (p == q)
    assert compare(o, q, p) == Ordering(-c)
    upv = hecke_word(u + a + v)
    uqv = hecke_word(u + b + v)
    assert compare(o, upv, uqv) == c
    if len(u + v):
        assert compare(o, p, upv) is Ordering.LESS


@given(hecke_polys(), hecke_polys(), hecke_polys())
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f + g == g + f
    assert (f - f).is_zero()
    assert mul(mul(f, g), h) == mul(f, mul(g, h))
    assert mul(f, g + h) == mul(f, g) + mul(f, h)
    assert mul(f + g, h) == mul(f, h) + mul(g, h)
    one = PathPolynomial.from_path(identity("B"))
    assert mul(one, f) == f == mul(f, one)


@given(hecke_polys())
def test_monic_and_leading_term(f):
    assume(f)
    o = hecke_order()
    m = monic(f, o)
    assert monic(m, o) == m
    lt, k = leading_term(m, o)
    assert k == 1
    assert all(compare(o, p, lt) is not Ordering.GREATER for p in m.terms)


@given(hecke_polys(max_terms=5))
@settings(max_examples=60)
def test_reduction_invariants(f):
    sys = hecke_basis()
    nf = normal_form(f, sys)
    assert (nf.src, nf.tgt) == (f.src, f.tgt)
    assert is_irreducible(nf, sys)
    assert normal_form(nf, sys) == nf
    assert normal_form(f - nf, sys).is_zero()
    step = reduce_once(f, sys)
    if step is not None:
        assert normal_form(step, sys) == nf


@given(hecke_polys(max_terms=3), hecke_polys(max_terms=3))
@settings(max_examples=40)
def test_normal_form_is_linear(f, g):
    sys = hecke_basis()
    assert normal_form(f + g, sys) == normal_form(f, sys) + normal_form(g, sys)
    assert normal_form(3 * f, sys) == 3 * normal_form(f, sys)


@given(complete_presentations())
@settings(max_examples=30, deadline=None)
def test_confluence_on_random_bases(case):
    _, sys, rng = case
    for _ in range(10):
        f = random_polynomial(rng, sys.quiver)
        assert normal_form(f, sys) == normal_form(f, sys, rng=rng)


@given(complete_presentations())
@settings(max_examples=30, deadline=None)
def test_relations_reduce_to_zero(case):
    rels, sys, _ = case
    for r in rels:
        assert normal_form(r, sys).is_zero()


@given(complete_presentations())
@settings(max_examples=30, deadline=None)
def test_enumeration_matches_filtering(case):
    _, sys, _ = case
    want = {p for p in enumerate_paths(sys.quiver, max_len=5) if not sys.is_reducible_path(p)}
    assert set(irreducible_terms(sys, max_len=5)) == want
    for s in sys.quiver.objects:
        for t in sys.quiver.objects:
            v = finiteness(sys, s, t)
            if isinstance(v, Finite):
                assert len(irreducible_terms(sys, s, t, 40)) == v.count
            else:
                assert _pumpable(sys, s, t, v.witness)


def _pumpable(sys, s, t, w, reach=3):
    """Some u * w^k * v stays irreducible for k = 1..4, with short u and v."""
    if w.is_identity or w.src != w.tgt:
        return False
    heads = irreducible_terms(sys, s, w.src, reach)
    tails = irreducible_terms(sys, w.tgt, t, reach)
    for u in heads:
        for v in tails:
            if all(not sys.is_reducible_path(Path(s, t, u.arrows + w.arrows * k + v.arrows))
                   for k in range(1, 5)):
                return True
    return False


@given(st.integers(0, 10**6))
@settings(max_examples=50)
def test_text_round_trip(seed):
    rng = random.Random(seed)
    f = random_polynomial(rng, FIVE)
    text = format_polynomial(f, five_order())
    assert parse_polynomial(text, FIVE, f.src, f.tgt) == f
