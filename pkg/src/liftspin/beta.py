"""Subset-sum multiplicities behind the spinor factorizations.

alpha(r, m, n) counts the m-element subsets of the 2n symmetric odd numbers
{1-2n, 3-2n, ..., 2n-1} whose elements sum to r; beta(r, m, n) is the
difference alpha(r, m, n) - alpha(r, m-2, n).  The beta values are the
exponents with which the shifted symmetric-power and tensor factors occur
in the lift factorizations, so everything downstream leans on this module.

alpha is computed once per n by dynamic programming over the 2n elements
(subset-sum counting) and memoized; a literal itertools enumeration is kept
alongside as an independent oracle for the test suite.
"""

from __future__ import annotations

from itertools import combinations
from typing import Dict, Iterator, Tuple


class BetaTable:
    """All alpha / beta values for one n, built eagerly, then read-only."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        self.n = n
        elements = symmetric_odd_set(n)
        # alpha[m] maps sum r -> count over m-element subsets
        alpha: list = [dict() for _ in range(2 * n + 1)]
        alpha[0][0] = 1
        for x in elements:
            for m in range(2 * n, 0, -1):
                lower = alpha[m - 1]
                target = alpha[m]
                for s, cnt in lower.items():
                    target[s + x] = target.get(s + x, 0) + cnt
        self._alpha = alpha

    def alpha(self, r: int, m: int) -> int:
        if m < 0 or m > 2 * self.n:
            return 0
        return self._alpha[m].get(r, 0)

    def beta(self, r: int, m: int) -> int:
        return self.alpha(r, m) - self.alpha(r, m - 2)

    def entries(self) -> Iterator[Tuple[int, int, int, int]]:
        """Yield (m, r, alpha, beta) over the full support, ordered."""
        n = self.n
        for m in range(0, 2 * n + 1):
            bound = m * (2 * n - m)
            for r in range(-bound, bound + 1, 2):
                yield (m, r, self.alpha(r, m), self.beta(r, m))


def symmetric_odd_set(n: int) -> Tuple[int, ...]:
    """The 2n odd numbers 1-2n, 3-2n, ..., 2n-1."""
    return tuple(range(1 - 2 * n, 2 * n, 2))


_tables: Dict[int, BetaTable] = {}


def table(n: int) -> BetaTable:
    tab = _tables.get(n)
    if tab is None:
        tab = _tables[n] = BetaTable(n)
    return tab


def alpha_count(r: int, m: int, n: int) -> int:
    """Number of m-subsets of the symmetric odd set with element sum r.

    Out-of-range arguments (negative m, m > 2n, unreachable r) return 0;
    the empty subset gives alpha(0, 0, n) = 1.
    """
    return table(n).alpha(r, m)


def alpha_count_bruteforce(r: int, m: int, n: int) -> int:
    """Literal enumeration over combinations; oracle for alpha_count."""
    if m < 0 or m > 2 * n:
        return 0
    return sum(1 for c in combinations(symmetric_odd_set(n), m) if sum(c) == r)


def beta_value(r: int, m: int, n: int) -> int:
    """alpha(r, m, n) - alpha(r, m-2, n), with alpha at negative m taken as 0."""
    return table(n).beta(r, m)


def degree_audit_ikeda(n: int) -> bool:
    """Check that the beta-weighted symmetric-power degrees add up to 2^(2n).

    Each factor attached to (r, m) has degree n - m + 1, so the total degree
    of the factored side must equal the genus-2n spinor degree.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    total = 0
    tab = table(n)
    for m in range(0, n + 1):
        bound = m * (2 * n - m)
        for r in range(-bound, bound + 1, 2):
            total += tab.beta(r, m) * (n - m + 1)
    return total == 4 ** n


def degree_audit_miyawaki(n: int) -> bool:
    """Check that the tensor-factor degrees add up to 2^(2n-1).

    The leading tensor factor has degree 2n; the (r, m) factor for
    1 <= m <= n-1 has degree 2(n - m) and exponent beta(r, m, n-1).
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    total = 2 * n
    tab = table(n - 1)
    for m in range(1, n):
        bound = m * (2 * n - m - 2)
        for r in range(-bound, bound + 1, 2):
            total += tab.beta(r, m) * 2 * (n - m)
    return total == 2 ** (2 * n - 1)
