"""The graded connected Hopf algebra contract and the alternating-sum antipode.

A HopfAlgebra subclass supplies a hashable basis key type, a grading, a
product, and a coproduct.  The antipode is evaluated as the alternating sum
over iterated coproducts with all tensor factors of positive degree; for a
graded algebra the sum stops at the degree, and under a degree cap every
value is taken modulo the span of keys above the cap (products only raise
degree, so that span is an ideal).

Also here: the signed-set involution verifier used by the executable
split/merge involutions.
"""

from dataclasses import dataclass
from typing import Any, Callable

from .lincomb import LinComb


class HopfAlgebra:
    """Subclasses define name, unit_key, degree, product, and coproduct.

    coproduct(key) returns a LinComb over ordered pairs of keys.  The unit is
    the unique degree-0 key.  Caches for pairwise products and antipodes are
    per instance; identical inputs always produce identical values, so
    concurrent use is safe up to redundant recomputation.
    """

    name = "hopf"
    unit_key: Any = None
    degree_cap: int | None = None

    def __init__(self):
        self._product_cache: dict[tuple[Any, Any], LinComb] = {}
        self._antipode_cache: dict[Any, LinComb] = {}

    def degree(self, key) -> int:
        raise NotImplementedError

    def product(self, a, b) -> LinComb:
        raise NotImplementedError

    def coproduct(self, key) -> LinComb:
        raise NotImplementedError

    def counit(self, key) -> int:
        return 1 if self.degree(key) == 0 else 0

    def one(self) -> LinComb:
        return LinComb.term(self.unit_key)

    def key_product(self, a, b) -> LinComb:
        try:
            return self._product_cache[a, b]
        except KeyError:
            value = self.product(a, b)
            if self.degree_cap is not None:
                value = LinComb(
                    (k, c) for k, c in value.items()
                    if self.degree(k) <= self.degree_cap
                )
            self._product_cache[a, b] = value
            return value

    def multiply(self, u: LinComb, v: LinComb) -> LinComb:
        out = LinComb.zero()
        for a, ca in u:
            for b, cb in v:
                out = out + (ca * cb) * self.key_product(a, b)
        return out

    def antipode(self, key) -> LinComb:
        if key not in self._antipode_cache:
            self._antipode_cache[key] = takeuchi_antipode(self, key)
        return self._antipode_cache[key]


def iterated_coproduct(H: HopfAlgebra, key, k: int) -> LinComb:
    """The (k-1)-fold coproduct as a LinComb over k-tuples of keys."""
    if k < 1:
        raise ValueError("tensor arity must be at least 1")
    layer = LinComb.term((key,))
    for _ in range(k - 1):
        nxt = LinComb.zero()
        for tensor, c in layer:
            for (x, y), d in H.coproduct(tensor[-1]):
                nxt = nxt + LinComb.term(tensor[:-1] + (x, y), c * d)
        layer = nxt
    return layer


def takeuchi_antipode(H: HopfAlgebra, key) -> LinComb:
    """Alternating sum over all-positive tensor layers of iterated coproducts.

    Layer k holds the degree-positive part of the (k-1)-fold coproduct; it is
    grown by splitting the last factor and keeping splits with both parts of
    positive degree.  Each layer contributes (-1)^k times the left-to-right
    product of its tensors.
    """
    if H.degree(key) == 0:
        return H.one()
    cap = H.degree_cap
    kmax = cap if cap is not None else H.degree(key)
    result = LinComb.zero()
    layer: dict[tuple, int] = {(key,): 1}
    for k in range(1, kmax + 1):
        if not layer:
            break
        sign = -1 if k % 2 else 1
        for tensor, coeff in layer.items():
            value = LinComb.term(tensor[0])
            for factor in tensor[1:]:
                acc = LinComb.zero()
                for a, ca in value:
                    acc = acc + ca * H.key_product(a, factor)
                value = acc
            result = result + (sign * coeff) * value
        if k == kmax:
            break
        nxt: dict[tuple, int] = {}
        for tensor, coeff in layer.items():
            head = tensor[:-1]
            head_degree = sum(H.degree(x) for x in head)
            for (x, y), c in H.coproduct(tensor[-1]):
                dx, dy = H.degree(x), H.degree(y)
                if dx == 0 or dy == 0:
                    continue
                if cap is not None and head_degree + dx + dy > cap:
                    continue
                grown = head + (x, y)
                nxt[grown] = nxt.get(grown, 0) + coeff * c
        layer = {t: c for t, c in nxt.items() if c}
    return result


def antipode_axiom_check(H: HopfAlgebra, key, S=None) -> bool:
    """m(S ⊗ id)Δ = unit·counit, evaluated on one basis key."""
    S = S if S is not None else H.antipode
    total = LinComb.zero()
    for (x, y), c in H.coproduct(key):
        total = total + c * H.multiply(S(x), LinComb.term(y))
    return total == H.counit(key) * H.one()


@dataclass(frozen=True)
class SignedSet:
    """A finite set with a sign per element and a candidate involution."""

    elements: tuple
    sign: Callable[[Any], int]
    involution: Callable[[Any], Any]


@dataclass(frozen=True)
class InvolutionReport:
    ok: bool
    fixed_points: tuple
    signed_sum: int
    violation: Any = None
    reason: str | None = None


def verify_involution(s: SignedSet) -> InvolutionReport:
    """Check self-inverseness and sign reversal on two-cycles.

    Returns all fixed points and the total signed sum.  On failure the first
    violating element and the reason are reported.
    """
    universe = set(s.elements)
    fixed = []
    signed_sum = sum(s.sign(a) for a in s.elements)
    for a in s.elements:
        b = s.involution(a)
        if b == a:
            fixed.append(a)
            continue
        if b not in universe:
            return InvolutionReport(False, (), signed_sum, a, "image outside the set")
        if s.involution(b) != a:
            return InvolutionReport(False, (), signed_sum, a, "not an involution")
        if s.sign(b) != -s.sign(a):
            return InvolutionReport(False, (), signed_sum, a, "sign not reversed")
    return InvolutionReport(True, tuple(fixed), signed_sum)
