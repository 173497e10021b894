import pytest

from pathgb import (
    DanglingEndpoint, DuplicateName, NotComposable, Ordering, Path, PathOrder, compare, compose,
    enumerate_paths, identity, make_quiver,
)
from pathgb.quiver import format_path, iter_paths

from cases import five_quiver, hecke_order, hecke_quiver


def test_one_object_three_loops():
    q = make_quiver(["B"], [("e1", "B", "B"), ("e2", "B", "B"), ("e3", "B", "B")])
    assert q == hecke_quiver()
    assert q.objects == ("B",)
    assert sorted(q.arrows) == ["e1", "e2", "e3"]


def test_lone_object():
    q = make_quiver(["B1"])
    assert q.objects == ("B1",) and not q.arrows


def test_dangling_endpoint():
    with pytest.raises(DanglingEndpoint):
        make_quiver(["B1", "B2"], [("a", "B1", "B3")])


def test_duplicate_names():
    with pytest.raises(DuplicateName):
        make_quiver(["B", "B"])
    with pytest.raises(DuplicateName):
        make_quiver(["B"], [("x", "B", "B"), ("x", "B", "B")])
    with pytest.raises(DuplicateName):
        make_quiver(["x"], [("x", "x", "x")])


def test_compose():
    q = five_quiver()
    ab = compose(q.arrow("a"), q.arrow("b"))
    assert ab.arrows == ("a", "b") and (ab.src, ab.tgt) == ("B1", "B2")
    assert compose(identity("B1"), q.arrow("a")) == q.arrow("a")
    assert compose(q.arrow("a"), identity("B2")) == q.arrow("a")
    with pytest.raises(NotComposable):
        compose(q.arrow("c"), q.arrow("a"))


def test_path_text():
    q = five_quiver()
    assert q.path("a*b*c") == Path("B1", "B3", ("a", "b", "c"))
    assert format_path(q.path("a*b*c")) == "a*b*c"
    assert str(identity("B2")) == "1(B2)"
    with pytest.raises(NotComposable):
        q.path("c*a")


def test_compare_degree_then_lex():
    o, q = hecke_order(), hecke_quiver()
    assert compare(o, q.path("e3*e2"), q.path("e2*e1*e2")) is Ordering.LESS
    assert compare(o, q.path("e2*e1*e2"), q.path("e1*e2*e1")) is Ordering.GREATER
    p = q.path("e1*e3")
    assert compare(o, p, p) is Ordering.EQUAL
    assert compare(o, identity("B"), q.arrow("e1")) is Ordering.LESS


def test_order_must_rank_every_arrow():
    q = hecke_quiver()
    with pytest.raises(Exception):
        PathOrder.deglex(["e1", "e2"], q)
    with pytest.raises(Exception):
        PathOrder.deglex(["e1", "e2", "e2"], q)


def test_order_description():
    assert hecke_order().describe() == "deglex e1 < e2 < e3"


def test_enumerate_hom_set():
    q = five_quiver()
    got = enumerate_paths(q, "B5", "B3", 2)
    assert {format_path(p) for p in got} == {"j", "f*g"}


def test_enumerate_identities_only():
    assert enumerate_paths(hecke_quiver(), "B", "B", 0) == [identity("B")]


def test_enumerate_counts_words():
    # 1 + 3 + 9
    assert len(enumerate_paths(hecke_quiver(), max_len=2)) == 13
    assert len(list(iter_paths(hecke_quiver(), "B", 3))) == 40


def test_enumerate_is_sorted():
    o = hecke_order()
    ps = enumerate_paths(hecke_quiver(), "B", "B", 3, o)
    assert [o.key(p) for p in ps] == sorted(o.key(p) for p in ps)
