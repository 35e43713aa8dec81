"""Hopf algebras on polynomials, words, compositions, and graphs.

Six instances: the binomial algebra on one variable, the shuffle algebra,
quasisymmetric functions in the monomial and fundamental bases, their
multi-analogue (degree-capped), and the incidence algebra of simple graphs.
Each instance comes with a closed-form antipode to check the alternating-sum
evaluation against, and the two executable split/merge involutions live here
as SignedSet builders.
"""

from math import comb

from . import graphs as gr
from .combinat import (
    coarsenings,
    compositions_of,
    descent_composition,
    multishuffles,
    ordered_set_partitions,
    quasishuffles,
    reversal,
    shift,
    shuffles,
)
from .hopf import HopfAlgebra, SignedSet
from .lincomb import LinComb
from .tableaux import (
    collapse_count,
    cut_cell_splits,
    cut_edge_splits,
    ribbon_word,
    transpose,
)


class PolynomialAlgebra(HopfAlgebra):
    """One-variable binomial Hopf algebra; a key is the exponent."""

    name = "poly"
    unit_key = 0

    def degree(self, key):
        return key

    def product(self, a, b):
        return LinComb.term(a + b)

    def coproduct(self, key):
        return LinComb(((i, key - i), comb(key, i)) for i in range(key + 1))


def poly_antipode_closed(n: int) -> LinComb:
    return LinComb.term(n, (-1) ** n)


def poly_involution_step(pi):
    """One split or merge move on an ordered set partition.

    Scan for the least index whose block either has two or more elements
    (split off the minimum as its own block, placed first) or is a singleton
    smaller than the minimum of the following block (merge the two).  With no
    such index the partition is strictly decreasing singletons and is fixed.
    """
    for l, block in enumerate(pi):
        if len(block) >= 2:
            return pi[:l] + ((block[0],), block[1:]) + pi[l + 1:]
        if l + 1 < len(pi) and block[0] < pi[l + 1][0]:
            merged = tuple(sorted(block + pi[l + 1]))
            return pi[:l] + (merged,) + pi[l + 2:]
    return pi


def poly_signed_set(n: int) -> SignedSet:
    return SignedSet(
        elements=tuple(ordered_set_partitions(n)),
        sign=lambda pi: (-1) ** len(pi),
        involution=poly_involution_step,
    )


class ShuffleAlgebra(HopfAlgebra):
    """Words under shuffle product and deconcatenation; a key is a string."""

    name = "shuffle"
    unit_key = ""

    def degree(self, key):
        return len(key)

    def product(self, a, b):
        return LinComb(
            ("".join(w), 1) for w in shuffles(tuple(a), tuple(b))
        )

    def coproduct(self, key):
        return LinComb(
            ((key[:i], key[i:]), 1) for i in range(len(key) + 1)
        )


def shuffle_antipode_closed(w: str) -> LinComb:
    return LinComb.term(w[::-1], (-1) ** len(w))


class QSymMonomial(HopfAlgebra):
    """Quasisymmetric functions, monomial basis; keys are compositions."""

    name = "qsym-m"
    unit_key = ()

    def degree(self, key):
        return sum(key)

    def product(self, a, b):
        # quasishuffle the parts; components holding one part from each side
        # stand for a variable collision and contribute the sum of the parts
        return LinComb(
            (tuple(sum(part) for part in vector), 1)
            for vector in quasishuffles(a, b)
        )

    def coproduct(self, key):
        return LinComb(
            ((key[:i], key[i:]), 1) for i in range(len(key) + 1)
        )


def qsym_m_antipode_closed(alpha) -> LinComb:
    sign = (-1) ** len(alpha)
    return LinComb((beta, sign) for beta in coarsenings(reversal(alpha)))


class QSymFundamental(HopfAlgebra):
    """Quasisymmetric functions, fundamental basis; keys are compositions."""

    name = "qsym-f"
    unit_key = ()

    def degree(self, key):
        return sum(key)

    def product(self, a, b):
        if not a:
            return LinComb.term(b)
        if not b:
            return LinComb.term(a)
        left = ribbon_word(a)
        right = shift(ribbon_word(b), sum(a))
        return LinComb(
            (descent_composition(w), 1) for w in shuffles(left, right)
        )

    def coproduct(self, key):
        if not key:
            return LinComb.term(((), ()))
        return LinComb((pair, 1) for pair in cut_edge_splits(key))


def qsym_f_antipode_closed(alpha) -> LinComb:
    return LinComb.term(transpose(alpha), (-1) ** sum(alpha))


class MultiQSym(HopfAlgebra):
    """Multi-quasisymmetric functions, fundamental basis, modulo high degree.

    Keys are compositions of size at most the cap.  The coproduct adds
    cut-cell splits to the cut-edge ones, so tensor degrees may exceed the
    key's; products only raise degree, which keeps the cap an ideal bound.
    """

    name = "mqsym"
    unit_key = ()

    def __init__(self, degree_cap: int):
        super().__init__()
        if degree_cap < 0:
            raise ValueError("degree cap must be nonnegative")
        self.degree_cap = degree_cap

    def degree(self, key):
        return sum(key)

    def product(self, a, b):
        if not a:
            return LinComb.term(b)
        if not b:
            return LinComb.term(a)
        left = ribbon_word(a)
        right = shift(ribbon_word(b), sum(a))
        return LinComb(
            (descent_composition(w), 1)
            for w in multishuffles(left, right, self.degree_cap)
        )

    def coproduct(self, key):
        if not key:
            return LinComb.term(((), ()))
        pairs = cut_edge_splits(key) + cut_cell_splits(key)
        return LinComb((pair, 1) for pair in pairs)


def mqsym_antipode_closed(alpha, degree_cap: int) -> LinComb:
    """Signed collapse counts onto the transpose, up to the degree cap."""
    if degree_cap < sum(alpha):
        raise ValueError("degree cap is below the size of the composition")
    if not alpha:
        return LinComb.term(())
    target = transpose(alpha)
    out = LinComb.zero()
    for size in range(sum(alpha), degree_cap + 1):
        sign = (-1) ** size
        for beta in compositions_of(size):
            count = collapse_count(beta, target)
            if count:
                out = out + LinComb.term(beta, sign * count)
    return out


class GraphAlgebra(HopfAlgebra):
    """Simple graphs up to isomorphism; keys are canonical Graph values."""

    name = "graph"
    unit_key = gr.graph(0)

    def degree(self, key):
        return key.n

    def product(self, a, b):
        shifted = ((u + a.n, v + a.n) for u, v in b.edges)
        union = gr.graph(a.n + b.n, tuple(a.edges) + tuple(shifted))
        return LinComb.term(gr.canonical_form(union))

    def coproduct(self, key):
        vertices = range(1, key.n + 1)
        out = LinComb.zero()
        for mask in range(2 ** key.n):
            first = [v for v in vertices if mask >> (v - 1) & 1]
            second = [v for v in vertices if not mask >> (v - 1) & 1]
            pair = (_induced(key, first), _induced(key, second))
            out = out + LinComb.term(pair)
        return out


def _induced(g: gr.Graph, chosen) -> gr.Graph:
    relabel = {v: i for i, v in enumerate(sorted(chosen), start=1)}
    edges = [
        (relabel[u], relabel[v])
        for u, v in g.edges
        if u in relabel and v in relabel
    ]
    return gr.canonical_form(gr.graph(len(chosen), edges))


def graph_antipode_closed(g: gr.Graph) -> LinComb:
    """Flats weighted by acyclic orientation counts of the contraction."""
    out = LinComb.zero()
    for flat_edges in gr.flats(g):
        c = len(gr.components(g.n, flat_edges))
        a = gr.acyclic_orientation_count(gr.contract(g, flat_edges))
        key = gr.canonical_form(gr.Graph(g.n, flat_edges))
        out = out + LinComb.term(key, (-1) ** c * a)
    return out


def graph_orientation_signed_set(g: gr.Graph, flat_edges) -> SignedSet:
    target = tuple(sorted((min(u, v), max(u, v)) for u, v in flat_edges))
    return SignedSet(
        elements=tuple(gr.partitions_inducing_flat(g, target)),
        sign=lambda pi: (-1) ** len(pi),
        involution=lambda pi: gr.graph_involution_step(g, target, pi),
    )
