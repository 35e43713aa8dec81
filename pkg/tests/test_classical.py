from itertools import product as cartesian

import pytest
from hypothesis import given, settings, strategies as st

from antipodes import classical as cl
from antipodes import graphs as gr
from antipodes.combinat import compositions_of, refinements
from antipodes.hopf import antipode_axiom_check, takeuchi_antipode, verify_involution
from antipodes.lincomb import LinComb, linear_extend

POLY = cl.PolynomialAlgebra()
SHUFFLE = cl.ShuffleAlgebra()
QSYM_M = cl.QSymMonomial()
QSYM_F = cl.QSymFundamental()
GRAPHS = cl.GraphAlgebra()

comps = st.integers(1, 5).flatmap(lambda n: st.sampled_from(compositions_of(n)))


def test_poly_coproduct():
    assert POLY.coproduct(2) == LinComb({(0, 2): 1, (1, 1): 2, (2, 0): 1})
    assert POLY.coproduct(0) == LinComb.term((0, 0))


def test_poly_involution_step():
    pi = ((5,), (3,), (2, 4, 9), (1, 6), (7, 8))
    assert cl.poly_involution_step(pi) == (
        (5,), (3,), (2,), (4, 9), (1, 6), (7, 8)
    )
    merged = ((2,), (4, 9), (1, 6))
    assert cl.poly_involution_step(merged) == ((2, 4, 9), (1, 6))
    fixed = ((4,), (3,), (2,), (1,))
    assert cl.poly_involution_step(fixed) == fixed


def test_shuffle_product_example():
    assert SHUFFLE.product("ab", "a") == LinComb({"aab": 2, "aba": 1})
    assert SHUFFLE.product("", "ab") == LinComb.term("ab")


def test_shuffle_coproduct():
    assert SHUFFLE.coproduct("abc") == LinComb(
        {("", "abc"): 1, ("a", "bc"): 1, ("ab", "c"): 1, ("abc", ""): 1}
    )


def test_shuffle_antipode():
    assert cl.shuffle_antipode_closed("abc") == LinComb.term("cba", -1)
    words = [""]
    for _ in range(4):
        words += ["".join(w) + c for w in map(tuple, words) for c in "ab"]
    for w in set(words):
        assert SHUFFLE.antipode(w) == cl.shuffle_antipode_closed(w)
    for w in ["abcd", "dcab", "bacde"]:
        assert SHUFFLE.antipode(w) == cl.shuffle_antipode_closed(w)


def test_qsym_m_product():
    assert QSYM_M.product((2,), (3,)) == LinComb(
        {(2, 3): 1, (3, 2): 1, (5,): 1}
    )
    assert QSYM_M.product((1,), (1,)) == LinComb({(1, 1): 2, (2,): 1})


def test_qsym_m_closed_antipode():
    assert cl.qsym_m_antipode_closed(()) == LinComb.term(())
    assert cl.qsym_m_antipode_closed((1, 2)) == LinComb(
        {(2, 1): 1, (3,): 1}
    )
    assert cl.qsym_m_antipode_closed((2,)) == LinComb.term((2,), -1)


def test_qsym_m_takeuchi_agreement():
    for n in range(6):
        for alpha in compositions_of(n):
            assert QSYM_M.antipode(alpha) == cl.qsym_m_antipode_closed(alpha)


def test_qsym_f_coproduct_display():
    assert QSYM_F.coproduct((3, 1)) == LinComb(
        {
            ((), (3, 1)): 1,
            ((1,), (2, 1)): 1,
            ((2,), (1, 1)): 1,
            ((3,), (1,)): 1,
            ((3, 1), ()): 1,
        }
    )


def test_qsym_f_antipode():
    assert QSYM_F.antipode((2, 1)) == LinComb.term((2, 1), -1)
    assert QSYM_F.antipode((3, 1, 2)) == LinComb.term((1, 3, 1, 1), 1)
    assert cl.qsym_f_antipode_closed((4,)) == LinComb.term((1, 1, 1, 1), 1)
    for n in range(6):
        for alpha in compositions_of(n):
            assert QSYM_F.antipode(alpha) == cl.qsym_f_antipode_closed(alpha)


def test_qsym_bases_intertwine():
    # expanding fundamentals into monomials commutes with the antipodes
    def to_monomials(alpha):
        return LinComb((beta, 1) for beta in refinements(alpha))

    for n in range(6):
        for alpha in compositions_of(n):
            lhs = linear_extend(QSYM_M.antipode, to_monomials(alpha))
            rhs = linear_extend(to_monomials, QSYM_F.antipode(alpha))
            assert lhs == rhs


def test_mqsym_coproduct_display():
    algebra = cl.MultiQSym(6)
    assert algebra.coproduct((3, 1)) == LinComb(
        {
            ((), (3, 1)): 1,
            ((1,), (3, 1)): 1,
            ((1,), (2, 1)): 1,
            ((2,), (2, 1)): 1,
            ((2,), (1, 1)): 1,
            ((3,), (1, 1)): 1,
            ((3,), (1,)): 1,
            ((3, 1), (1,)): 1,
            ((3, 1), ()): 1,
        }
    )


def test_mqsym_product_display():
    algebra = cl.MultiQSym(4)
    assert algebra.product((1, 1), (1,)) == LinComb(
        {
            (1, 2): 1,
            (2, 1): 1,
            (1, 1, 1): 1,
            (2, 1, 1): 1,
            (1, 2, 1): 2,
            (2, 2): 1,
            (1, 1, 2): 1,
        }
    )


def test_mqsym_closed_antipode_values():
    assert cl.mqsym_antipode_closed((2, 1), 5).coefficient((3, 1, 1)) == -4
    assert cl.mqsym_antipode_closed((), 3) == LinComb.term(())
    with pytest.raises(ValueError):
        cl.mqsym_antipode_closed((2, 1), 2)


def test_mqsym_takeuchi_agreement():
    for n in range(4):
        for alpha in compositions_of(n):
            cap = n + 2
            algebra = cl.MultiQSym(cap)
            assert algebra.antipode(alpha) == cl.mqsym_antipode_closed(alpha, cap)


def test_mqsym_low_degree_window_is_qsym_f():
    for n in range(5):
        for alpha in compositions_of(n):
            closed = cl.mqsym_antipode_closed(alpha, n + 2)
            window = LinComb(
                (key, c) for key, c in closed if sum(key) == n
            )
            assert window == cl.qsym_f_antipode_closed(alpha)


def test_graph_product():
    k2 = gr.graph(2, [(1, 2)])
    doubled = GRAPHS.product(k2, k2)
    assert doubled == LinComb.term(
        gr.canonical_form(gr.graph(4, [(1, 2), (3, 4)]))
    )
    assert GRAPHS.product(GRAPHS.unit_key, k2) == LinComb.term(k2)


def test_graph_coproduct():
    k2 = gr.graph(2, [(1, 2)])
    k1 = gr.graph(1)
    empty = gr.graph(0)
    assert GRAPHS.coproduct(k2) == LinComb(
        {(empty, k2): 1, (k1, k1): 2, (k2, empty): 1}
    )


def test_graph_closed_antipode_examples():
    k2 = gr.graph(2, [(1, 2)])
    assert cl.graph_antipode_closed(k2) == LinComb(
        {gr.graph(2): 2, k2: -1}
    )
    for n in range(5):
        edgeless = gr.graph(n)
        assert cl.graph_antipode_closed(edgeless) == LinComb.term(
            edgeless, (-1) ** n
        )


def test_graph_takeuchi_agreement_small():
    for n in range(4):
        for g in gr.all_graphs(n):
            assert GRAPHS.antipode(g) == cl.graph_antipode_closed(g)


def test_graph_orientation_signed_set():
    k3 = gr.graph(3, [(1, 2), (1, 3), (2, 3)])
    report = verify_involution(cl.graph_orientation_signed_set(k3, ()))
    assert report.ok
    assert len(report.fixed_points) == 6
    assert report.signed_sum == -6
    full = verify_involution(cl.graph_orientation_signed_set(k3, k3.edges))
    assert full.ok
    assert len(full.fixed_points) == 1
    assert full.signed_sum == -1


def test_axiom_checks_sampled():
    assert antipode_axiom_check(QSYM_M, (2, 1))
    assert antipode_axiom_check(QSYM_F, (1, 3))
    assert antipode_axiom_check(GRAPHS, gr.canonical_form(gr.graph(3, [(1, 2)])))
    mq = cl.MultiQSym(4)
    assert antipode_axiom_check(mq, (2,))
    assert antipode_axiom_check(mq, (1, 1))


@given(comps, comps)
@settings(max_examples=40, deadline=None)
def test_qsym_grading(alpha, beta):
    n = sum(alpha)
    for algebra in (QSYM_M, QSYM_F):
        for key, _ in algebra.product(alpha, beta):
            assert sum(key) == n + sum(beta)
        for (x, y), _ in algebra.coproduct(alpha):
            assert sum(x) + sum(y) == n
    mq = cl.MultiQSym(sum(alpha) + sum(beta))
    for (x, y), _ in mq.coproduct(alpha):
        assert sum(x) + sum(y) in (n, n + 1)
    for key, _ in mq.product(alpha, beta):
        assert n + sum(beta) <= sum(key) <= mq.degree_cap
