"""Sparse exact linear combinations over ordered basis keys."""

from __future__ import annotations

from typing import Any, Callable, Iterable, Iterator

Key = Any


class LinComb:
    """An integer linear combination of basis keys, stored sparsely.

    Keys must be hashable and mutually comparable. Coefficients are Python
    ints, so all arithmetic is exact at any size. A zero coefficient is never
    stored: two combinations are equal iff their term dicts are equal, and
    ``items()`` lists terms in key order for reproducible output.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[Key, int]] | dict[Key, int] | None = None):
        data: dict[Key, int] = {}
        if terms is not None:
            pairs = terms.items() if isinstance(terms, dict) else terms
            for key, coeff in pairs:
                new = data.get(key, 0) + coeff
                if new:
                    data[key] = new
                else:
                    data.pop(key, None)
        self._terms = data

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    @classmethod
    def term(cls, key: Key, coeff: int = 1) -> "LinComb":
        out = cls()
        if coeff:
            out._terms[key] = coeff
        return out

    def coefficient(self, key: Key) -> int:
        return self._terms.get(key, 0)

    def items(self) -> list[tuple[Key, int]]:
        """Terms sorted by key."""
        return sorted(self._terms.items())

    def support(self) -> list[Key]:
        return sorted(self._terms)

    def __iter__(self) -> Iterator[tuple[Key, int]]:
        # unsorted fast path for inner loops
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        return NotImplemented

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        big, small = self._terms, other._terms
        if len(big) < len(small):
            big, small = small, big
        data = dict(big)
        for key, coeff in small.items():
            new = data.get(key, 0) + coeff
            if new:
                data[key] = new
            else:
                del data[key]
        out = LinComb()
        out._terms = data
        return out

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def __neg__(self) -> "LinComb":
        out = LinComb()
        out._terms = {k: -c for k, c in self._terms.items()}
        return out

    def __mul__(self, scalar: int) -> "LinComb":
        if not isinstance(scalar, int):
            return NotImplemented
        out = LinComb()
        if scalar:
            out._terms = {k: c * scalar for k, c in self._terms.items()}
        return out

    __rmul__ = __mul__

    def map_keys(self, f: Callable[[Key], Key]) -> "LinComb":
        """Relabel keys through f, merging any collisions."""
        return LinComb((f(k), c) for k, c in self._terms.items())

    def __repr__(self) -> str:
        if not self._terms:
            return "LinComb()"
        inside = ", ".join(f"{k!r}: {c}" for k, c in self.items())
        return f"LinComb({{{inside}}})"


def linear_extend(f: Callable[[Key], LinComb], v: LinComb) -> LinComb:
    """Apply a basis-keys-to-combinations map linearly to v."""
    out = LinComb.zero()
    for key, coeff in v:
        out = out + coeff * f(key)
    return out
