"""Noncommutative Hopf algebras on compositions, permutations, and tableaux.

Noncommutative symmetric functions are handled in the complete homogeneous
basis (keys are compositions); the immaculate basis is reached through a
noncommutative Jacobi-Trudi determinant and its triangular inverse.  The
permutation algebra uses shifted shuffles and standardized splits, and the
tableau algebra sits inside it by summing Knuth classes.

Closed antipode forms live alongside each algebra: one-row, hook, and
two-row immaculate keys; identity, reverse, hook, and peak permutations.
The open antipode expansions are exposed as conjecture checkers that report
per-case evidence instead of asserting truth.
"""

from dataclasses import dataclass
from itertools import permutations

from .combinat import (
    ascending_run,
    descending_run,
    permutations_of,
    reversal,
    shift,
    shuffle,
    shuffles,
    standardize,
)
from .hopf import HopfAlgebra
from .lincomb import LinComb
from .tableaux import (
    FrozenSpec,
    all_standard_tableaux,
    column_superstandard,
    dual_immaculate_tableaux,
    frozen_set,
    is_row_word,
    jdt_rectify,
    knuth_class,
    partition_transpose,
    rsk_insert,
    shape_of,
    tableau_standardize,
)


@dataclass(frozen=True)
class ConjectureCase:
    label: str
    ok: bool


@dataclass(frozen=True)
class ConjectureReport:
    """Per-instance evidence for an open formula; never a proof."""

    name: str
    cases: tuple[ConjectureCase, ...]

    @property
    def ok(self) -> bool:
        return all(case.ok for case in self.cases)


# ----------------------------------------------------- complete homogeneous

class NSymComplete(HopfAlgebra):
    """Noncommutative symmetric functions, complete homogeneous basis.

    A key is a composition standing for the product of the generators
    indexed by its parts.  The product concatenates; the coproduct splits
    each generator into all two-part sums and multiplies the results.
    """

    name = "nsym-h"
    unit_key = ()

    def degree(self, key):
        return sum(key)

    def product(self, a, b):
        return LinComb.term(a + b)

    def coproduct(self, key):
        out = LinComb.term(((), ()))
        for p in key:
            split = LinComb(
                (((i,) if i else (), (p - i,) if p - i else ()), 1)
                for i in range(p + 1)
            )
            out = LinComb(
                ((lx + ly, rx + ry), c * d)
                for (lx, rx), c in out
                for (ly, ry), d in split
            )
        return out


NSYM_H = NSymComplete()


def _permutation_sign(sigma) -> int:
    sign = 1
    for i in range(len(sigma)):
        for j in range(i + 1, len(sigma)):
            if sigma[i] > sigma[j]:
                sign = -sign
    return sign


def immaculate_to_h(alpha) -> LinComb:
    """Expand an immaculate key as a signed sum of homogeneous keys.

    Noncommutative determinant of the matrix whose (i, j) entry is the
    generator with subscript alpha_i + j - i, expanded over column
    permutations with factors kept in row order.  A negative subscript
    kills the term; zero subscripts are dropped.
    """
    k = len(alpha)
    out = LinComb.zero()
    for sigma in permutations(range(k)):
        subs = [alpha[i] + sigma[i] - i for i in range(k)]
        if any(s < 0 for s in subs):
            continue
        key = tuple(s for s in subs if s)
        out = out + LinComb.term(key, _permutation_sign(sigma))
    return out


def h_to_immaculate(v: LinComb) -> LinComb:
    """Rewrite a combination of homogeneous keys in the immaculate basis.

    Eliminates the (degree, lex)-least remaining key; its immaculate
    expansion starts at that key and otherwise contains only lex-greater
    keys of the same degree, so the loop terminates.
    """
    rest = v
    out = LinComb.zero()
    while rest:
        key = min(rest.support(), key=lambda a: (sum(a), a))
        c = rest.coefficient(key)
        out = out + LinComb.term(key, c)
        rest = rest - c * immaculate_to_h(key)
    return out


def nsym_immaculate_antipode(alpha, algebra: NSymComplete | None = None) -> LinComb:
    """Antipode of an immaculate key via the homogeneous basis round trip."""
    H = algebra if algebra is not None else NSYM_H
    out = LinComb.zero()
    for key, c in immaculate_to_h(alpha):
        out = out + c * H.antipode(key)
    return h_to_immaculate(out)


def nsym_s_of_h_closed(alpha) -> LinComb:
    """Antipode of a homogeneous key as a signed immaculate sum.

    Sums the shapes of all dual immaculate tableaux whose content is the
    reversed composition, signed by the degree.
    """
    if not alpha:
        return LinComb.term(())
    sign = (-1) ** sum(alpha)
    return LinComb(
        (shape_of(T), sign) for T in dual_immaculate_tableaux(reversal(alpha))
    )


def nsym_antipode_hook(n: int, k: int) -> LinComb:
    """Antipode of the hook immaculate key (n, 1^k): one signed hook."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    return LinComb.term((k + 1,) + (1,) * (n - 1), (-1) ** (n + k))


def nsym_antipode_tworow(m: int, n: int) -> LinComb:
    """Antipode of the two-row immaculate key (m, n).

    Two pinned families of dual immaculate tableaux: one pins a column of
    n ones with a single two beside the lowest, the other pins a column of
    n - 1 ones and forbids further rows.  Their shapes enter with opposite
    signs.
    """
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    sign = (-1) ** (m + n)
    beside = FrozenSpec(rows=((1,),) * (n - 1) + ((1, 2),), content=(n, m))
    capped = FrozenSpec(
        rows=((1,),) * (n - 1), content=(n - 1, m + 1), max_rows=n - 1
    )
    out = LinComb((shape_of(T), sign) for T in frozen_set(beside))
    return out + LinComb((shape_of(T), -sign) for T in frozen_set(capped))


# ------------------------------------------------------------- permutations

class PermutationAlgebra(HopfAlgebra):
    """Permutations under shifted shuffle and standardized deconcatenation."""

    name = "ssym"
    unit_key = ()

    def degree(self, key):
        return len(key)

    def product(self, a, b):
        return shuffle(a, shift(b, len(a)))

    def coproduct(self, key):
        return LinComb(
            ((standardize(key[:i]), standardize(key[i:])), 1)
            for i in range(len(key) + 1)
        )


SSYM = PermutationAlgebra()


def down_up_permutation(subset, n: int):
    """The elements of subset in decreasing order, then the rest increasing."""
    chosen = sorted(set(subset), reverse=True)
    if chosen and (chosen[-1] < 1 or chosen[0] > n):
        raise ValueError("subset must lie in 1..n")
    rest = tuple(x for x in range(1, n + 1) if x not in set(chosen))
    return tuple(chosen) + rest


def hook_permutation(k: int, n: int):
    """The permutation k, k-1, ..., 1, k+1, k+2, ..., n."""
    return down_up_permutation(range(1, k + 1), n)


def up_down_permutation(k: int, n: int):
    """The permutation 1, 2, ..., k, n, n-1, ..., k+1."""
    return ascending_run(1, k) + descending_run(n, k + 1)


def ssym_antipode_identity(n: int) -> LinComb:
    """Antipode of the identity permutation: the signed reverse."""
    return LinComb.term(descending_run(n, 1), (-1) ** n)


def ssym_antipode_reverse(n: int) -> LinComb:
    """Antipode of the reverse permutation: the signed identity."""
    return LinComb.term(ascending_run(1, n), (-1) ** n)


def ssym_antipode_hookperm_summands(k: int, n: int) -> list[LinComb]:
    """The j-indexed signed summands of the hook permutation antipode.

    Summand j shuffles the run 1..j-1 into every word obtained by shuffling
    k..j+1 with n..k+2 and closing with k+1, then appends j.  Terms within a
    summand never repeat and all summands of one j end in j, so the total is
    cancellation-free.
    """
    if not 1 <= k < n:
        raise ValueError("need 1 <= k < n")
    summands = []
    for j in range(1, k + 1):
        sign = (-1) ** (n + k + j)
        part = LinComb.zero()
        for w in shuffles(descending_run(k, j + 1), descending_run(n, k + 2)):
            for u in shuffles(ascending_run(1, j - 1), w + (k + 1,)):
                part = part + LinComb.term(u + (j,), sign)
        summands.append(part)
    return summands


def ssym_antipode_hookperm(k: int, n: int) -> LinComb:
    """Antipode of hook_permutation(k, n) as a cancellation-free sum."""
    out = LinComb.zero()
    for part in ssym_antipode_hookperm_summands(k, n):
        out = out + part
    return out


def ssym_antipode_hookperm_corollary(k: int, n: int) -> LinComb:
    """Antipode of up_down_permutation(k, n).

    Mirror image of the hook permutation expansion: for j = k+1..n shuffle
    k..1 headed words into j-1..k+1, close with the run j+1..n, and prefix j.
    """
    if not 1 <= k < n:
        raise ValueError("need 1 <= k < n")
    out = LinComb.zero()
    for j in range(k + 1, n + 1):
        sign = (-1) ** (n + k + j + 1)
        for w in shuffles(descending_run(k - 1, 1), descending_run(j - 1, k + 1)):
            for u in shuffles((k,) + w, ascending_run(j + 1, n)):
                out = out + LinComb.term((j,) + u, sign)
    return out


def ssym_alternating_shuffle_sum(n: int) -> LinComb:
    """Alternating sum over k of (1..k) shuffled with (n..k+1); always zero."""
    out = LinComb.zero()
    for k in range(n + 1):
        sign = (-1) ** k
        for w in shuffles(ascending_run(1, k), descending_run(n, k + 1)):
            out = out + LinComb.term(w, sign)
    return out


def _inverse(pi):
    out = [0] * len(pi)
    for i, x in enumerate(pi):
        out[x - 1] = i + 1
    return tuple(out)


def ssym_duality_check(n: int, algebra: PermutationAlgebra | None = None) -> bool:
    """Check that the antipode coefficient matrix survives inverse-transpose.

    The coefficient of pi in S(sigma) must match the coefficient of
    sigma^{-1} in S(pi^{-1}), for every pair in the symmetric group.
    """
    H = algebra if algebra is not None else SSYM
    table = {pi: H.antipode(pi) for pi in permutations_of(n)}
    for sigma, image in table.items():
        for pi in table:
            if image.coefficient(pi) != table[_inverse(pi)].coefficient(
                _inverse(sigma)
            ):
                return False
    return True


def ssym_conjectured_singleton(a: int, n: int) -> LinComb:
    """Conjectured antipode of down_up_permutation({a}, n), 1 < a <= n.

    A summand whose explicitly written letters exceed n is dropped; run
    words with inverted ranges are empty.
    """
    if not 1 < a <= n:
        raise ValueError("need 1 < a <= n")
    out = LinComb.zero()
    if n >= 3:
        for w in shuffles((2,), descending_run(n, 4)):
            out = out + LinComb.term(w + (3, 1), (-1) ** (n - 1))
    for w in shuffles((a - 1,) + ascending_run(1, a - 2), descending_run(n, a + 1)):
        out = out + LinComb.term(w + (a,), (-1) ** (n + a))
    for j in range(2, a):
        sign = (-1) ** (n + j)
        for w in shuffles((j - 1,) + ascending_run(1, j - 2), descending_run(n, j + 1)):
            out = out + LinComb.term(w + (j,), sign)
        for w in shuffles((j + 1,) + ascending_run(1, j - 1), descending_run(n, j + 2)):
            out = out + LinComb.term(w + (j,), sign)
    return out


def ssym_conjectured_pair(a: int, n: int) -> LinComb:
    """Conjectured antipode of down_up_permutation({a, 2}, n), 2 < a <= n."""
    if not 2 < a <= n:
        raise ValueError("need 2 < a <= n")
    out = LinComb.zero()
    head = (-1) ** n
    if n >= 4:
        for w in shuffles((3, 2), descending_run(n, 5)):
            out = out + LinComb.term(w + (4, 1), head)
    if n >= 3:
        for w in shuffles((1, 2), descending_run(n, 4)):
            out = out + LinComb.term(w + (3,), head)
    if n >= 4:
        for w in shuffles((3,), descending_run(n, 5)):
            for u in shuffles((1,), w + (4,)):
                out = out + LinComb.term(u + (2,), -head)
    for j in range(3, a):
        sign = (-1) ** (n + j)
        for w in shuffles((j + 1, 2, 1) + ascending_run(3, j - 1), descending_run(n, j + 2)):
            out = out + LinComb.term(w + (j,), sign)
        for w in shuffles((j, 2, 1) + ascending_run(3, j - 1), descending_run(n, j + 2)):
            out = out + LinComb.term(w + (j + 1,), -sign)
    return out


def ssym_conjecture_check(name: str, n: int) -> ConjectureReport:
    """Compare a conjectured expansion with the alternating-sum antipode."""
    cases = []
    if name == "singleton":
        for a in range(2, n + 1):
            sigma = down_up_permutation((a,), n)
            ok = ssym_conjectured_singleton(a, n) == SSYM.antipode(sigma)
            cases.append(ConjectureCase(f"n={n} A={{{a}}}", ok))
        return ConjectureReport("ssym-singleton", tuple(cases))
    if name == "pair-with-2":
        for a in range(3, n + 1):
            sigma = down_up_permutation((a, 2), n)
            ok = ssym_conjectured_pair(a, n) == SSYM.antipode(sigma)
            cases.append(ConjectureCase(f"n={n} A={{{a},2}}", ok))
        return ConjectureReport("ssym-pair2", tuple(cases))
    raise ValueError(f"unknown conjecture {name!r}")


# ----------------------------------------------------------------- tableaux

def psym_basis_embed(P) -> LinComb:
    """The permutation sum of a tableau key: its full Knuth class."""
    return LinComb((w, 1) for w in knuth_class(P))


def psym_product(P, Q) -> LinComb:
    """Tableaux whose small entries form P and whose rest slides to Q."""
    m = sum(len(row) for row in P)
    total = m + sum(len(row) for row in Q)
    out = LinComb.zero()
    for R in all_standard_tableaux(total):
        prefix = tuple(tuple(x for x in row if x <= m) for row in R)
        if tuple(row for row in prefix if row) != P:
            continue
        skew = tuple(row[len(pre):] for row, pre in zip(R, prefix))
        inner = tuple(len(pre) for pre in prefix)
        if tableau_standardize(jdt_rectify(skew, inner)) == Q:
            out = out + LinComb.term(R)
    return out


def psym_coproduct(R) -> LinComb:
    """Standardized pairs from splitting class words into two row words.

    Every word Knuth equivalent to the reading word of R is cut at each
    position where both halves are row words of tableaux; each distinct cut
    contributes once.
    """
    out = LinComb.zero()
    for w in knuth_class(R):
        for i in range(len(w) + 1):
            head, tail = w[:i], w[i:]
            if is_row_word(head) and is_row_word(tail):
                pair = (
                    tableau_standardize(rsk_insert(head)),
                    tableau_standardize(rsk_insert(tail)),
                )
                out = out + LinComb.term(pair)
    return out


class TableauAlgebra(HopfAlgebra):
    """Standard Young tableaux as a subalgebra of the permutation algebra."""

    name = "psym"
    unit_key = ()

    def degree(self, key):
        return sum(len(row) for row in key)

    def product(self, a, b):
        return psym_product(a, b)

    def coproduct(self, key):
        return psym_coproduct(key)


PSYM = TableauAlgebra()


def psym_antipode(P, algebra: PermutationAlgebra | None = None) -> LinComb:
    """Antipode of a tableau key, computed in the permutation algebra.

    Applies the permutation antipode across the Knuth class and regroups by
    insertion tableau.  Raises if any class carries unequal coefficients,
    which would disprove closure of the tableau span under the antipode.
    """
    H = algebra if algebra is not None else SSYM
    total = LinComb.zero()
    for w in knuth_class(P):
        total = total + H.antipode(w)
    remaining = dict(total.items())
    out = LinComb.zero()
    while remaining:
        T = rsk_insert(min(remaining))
        coeffs = {remaining.pop(u, 0) for u in knuth_class(T)}
        if len(coeffs) != 1:
            raise ValueError(
                f"antipode image is not constant on the class of {T!r}"
            )
        out = out + LinComb.term(T, coeffs.pop())
    return out


def psym_conjecture_check(max_size: int = 6) -> ConjectureReport:
    """Evidence that hook column tableaux flip to their transposes under S."""
    cases = []
    for n in range(1, max_size + 1):
        for arm in range(1, n + 1):
            lam = (arm,) + (1,) * (n - arm)
            expected = LinComb.term(
                column_superstandard(partition_transpose(lam)), (-1) ** n
            )
            ok = psym_antipode(column_superstandard(lam)) == expected
            cases.append(ConjectureCase(f"hook {lam}", ok))
    return ConjectureReport("psym-hook", tuple(cases))
