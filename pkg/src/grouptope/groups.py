"""Exact arithmetic for finite abelian groups given as products of cyclic factors.

A group is a fixed ordered tuple of cyclic factor orders, e.g. ``(9, 3)`` for
Z9 x Z3.  Elements are canonical residue tuples of the same length.  Two specs
with the same underlying isomorphism class but different factor lists (Z27 vs
Z9 x Z3) are deliberately distinct objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import gcd, prod

Element = tuple[int, ...]


class GroupError(ValueError):
    """Invalid group spec or element outside the group."""


class DivisibilityError(GroupError):
    """Division by an integer that is not invertible on the group."""


@dataclass(frozen=True)
class GroupSpec:
    """Finite abelian group ``Z_{orders[0]} x ... x Z_{orders[-1]}``."""

    orders: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.orders:
            raise GroupError("group needs at least one cyclic factor")
        if any(m < 2 for m in self.orders):
            raise GroupError(f"cyclic factor orders must be >= 2, got {self.orders}")

    @property
    def order(self) -> int:
        return prod(self.orders)

    @property
    def label(self) -> str:
        return "x".join(f"Z{m}" for m in self.orders)

    def check(self, a: Element) -> Element:
        """Validate that ``a`` is a canonical residue tuple of this group."""
        if len(a) != len(self.orders) or any(
            not (0 <= r < m) for r, m in zip(a, self.orders)
        ):
            raise GroupError(f"{a!r} is not an element of {self.label}")
        return a

    def zero(self) -> Element:
        return (0,) * len(self.orders)

    def add(self, a: Element, b: Element) -> Element:
        self.check(a)
        self.check(b)
        return tuple((x + y) % m for x, y, m in zip(a, b, self.orders))

    def neg(self, a: Element) -> Element:
        self.check(a)
        return tuple((-x) % m for x, m in zip(a, self.orders))

    def sub(self, a: Element, b: Element) -> Element:
        return self.add(a, self.neg(b))

    def scale(self, k: int, a: Element) -> Element:
        self.check(a)
        return tuple((k * x) % m for x, m in zip(a, self.orders))

    def is_divisible(self, l: int) -> bool:
        """True iff multiplication by ``l`` is a bijection on the group."""
        if l < 1:
            raise GroupError(f"divisor must be >= 1, got {l}")
        return gcd(l, self.order) == 1

    def divide(self, a: Element, l: int) -> Element:
        """The unique ``h`` with ``scale(l, h) == a``; needs gcd(l, |G|) == 1."""
        self.check(a)
        if not self.is_divisible(l):
            raise DivisibilityError(
                f"{self.label} is not {l}-divisible (gcd({l}, {self.order}) != 1)"
            )
        return tuple((x * pow(l, -1, m)) % m for x, m in zip(a, self.orders))

    @cached_property
    def _elements(self) -> tuple[Element, ...]:
        return tuple(product(*(range(m) for m in self.orders)))

    def elements(self) -> tuple[Element, ...]:
        """All elements in lexicographic residue order (stable across runs)."""
        return self._elements

    def index(self, a: Element) -> int:
        """Position of ``a`` in ``elements()`` (mixed-radix value)."""
        self.check(a)
        idx = 0
        for r, m in zip(a, self.orders):
            idx = idx * m + r
        return idx

    def element(self, idx: int) -> Element:
        return self._elements[idx]


def make_group(orders: list[int] | tuple[int, ...]) -> GroupSpec:
    return GroupSpec(tuple(int(m) for m in orders))


def abelian_groups_of_order(m: int) -> list[GroupSpec]:
    """All abelian groups of order ``m``, one spec per isomorphism class.

    Factors are listed in invariant-factor-free form: for each prime p | m,
    one cyclic factor p^e per part of a partition of the p-exponent, largest
    parts first, primes ascending.
    """
    if m < 2:
        raise GroupError("order must be >= 2")

    def partitions(n: int, cap: int) -> list[list[int]]:
        if n == 0:
            return [[]]
        out = []
        for first in range(min(n, cap), 0, -1):
            out.extend([first] + rest for rest in partitions(n - first, first))
        return out

    factorization = []
    rest, p = m, 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factorization.append((p, e))
        p += 1
    if rest > 1:
        factorization.append((rest, 1))

    specs = [[]]
    for p, e in factorization:
        specs = [
            base + [p**part for part in parts]
            for base in specs
            for parts in partitions(e, e)
        ]
    return [make_group(orders) for orders in specs]
