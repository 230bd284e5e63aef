"""Exact q-expansions of level-one modular forms and Hecke eigenvalue data.

Everything here is rational arithmetic on truncated power series in
q = e^(2 pi i tau): Eisenstein series from the divisor-sum formula, the
discriminant cusp form both as (E4^3 - E6^2)/1728 and as the eta product
(the two constructions cross-check each other), and the echelonized
Victor Miller basis of cusp forms from monomials in E4 and E6.

Eigenforms are supported at the weights whose cuspidal eigenspace is
rational: in practice the one-dimensional weights 12, 16, 18, 20, 22, 26.
Higher-dimensional spaces are handled generically by splitting the T_2
matrix over the rationals and rejected with IrrationalEigenspace when the
characteristic polynomial does not split (which is what actually happens
at level one from weight 24 on).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, isqrt
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    EmptySpace,
    InsufficientPrecision,
    IrrationalEigenspace,
    NonPrime,
    UnsupportedWeight,
)

#: weights of the one-dimensional cuspidal eigenspaces on SL2(Z)
SUPPORTED_WEIGHTS = (12, 16, 18, 20, 22, 26)

DEFAULT_PRECISION = 200


# -- primes ---------------------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_up_to(bound: int) -> List[int]:
    return [p for p in range(2, bound + 1) if is_prime(p)]


# -- Bernoulli numbers ----------------------------------------------------

_bernoulli_cache: List[Fraction] = [Fraction(1)]


def bernoulli(m: int) -> Fraction:
    """B_m with B_1 = -1/2, via the standard recurrence."""
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    while len(_bernoulli_cache) <= m:
        j = len(_bernoulli_cache)
        acc = sum(comb(j + 1, i) * _bernoulli_cache[i] for i in range(j))
        _bernoulli_cache.append(Fraction(-acc, j + 1))
    return _bernoulli_cache[m]


# -- q-expansions ---------------------------------------------------------

class QExpansion:
    """Truncated rational q-expansion of a modular form of a fixed weight.

    coeffs[n] is the coefficient of q^n; precision is the last stored index.
    """

    __slots__ = ("weight", "coeffs")

    def __init__(self, weight: int, coeffs: Sequence):
        self.weight = weight
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    @property
    def precision(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        if n < 0 or n > self.precision:
            raise InsufficientPrecision(
                f"coefficient {n} requested but expansion stops at {self.precision}")
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, QExpansion):
            return NotImplemented
        return self.weight == other.weight and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.weight, self.coeffs))

    def __add__(self, other: "QExpansion") -> "QExpansion":
        if self.weight != other.weight:
            raise ValueError("cannot add expansions of different weights")
        n = min(len(self.coeffs), len(other.coeffs))
        return QExpansion(self.weight,
                          [self.coeffs[i] + other.coeffs[i] for i in range(n)])

    def __sub__(self, other: "QExpansion") -> "QExpansion":
        if self.weight != other.weight:
            raise ValueError("cannot subtract expansions of different weights")
        n = min(len(self.coeffs), len(other.coeffs))
        return QExpansion(self.weight,
                          [self.coeffs[i] - other.coeffs[i] for i in range(n)])

    def __mul__(self, other):
        if isinstance(other, QExpansion):
            n = min(len(self.coeffs), len(other.coeffs))
            out = [Fraction(0)] * n
            for i, ci in enumerate(self.coeffs[:n]):
                if not ci:
                    continue
                for j in range(n - i):
                    cj = other.coeffs[j]
                    if cj:
                        out[i + j] += ci * cj
            return QExpansion(self.weight + other.weight, out)
        return QExpansion(self.weight, [c * Fraction(other) for c in self.coeffs])

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "QExpansion":
        s = Fraction(scalar)
        return QExpansion(self.weight, [c / s for c in self.coeffs])

    def __pow__(self, exponent: int) -> "QExpansion":
        if exponent < 0:
            raise ValueError("negative powers of q-expansions are not supported")
        result = QExpansion(0, [Fraction(1)] + [Fraction(0)] * self.precision)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:6])
        return f"QExpansion(weight={self.weight}, coeffs=[{shown}, ...])"


def eisenstein(weight: int, precision: int) -> QExpansion:
    """Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_(k-1)(n) q^n."""
    if weight < 4 or weight % 2:
        raise UnsupportedWeight(f"Eisenstein series needs even weight >= 4, got {weight}")
    sigma = [0] * (precision + 1)
    for d in range(1, precision + 1):
        dk = d ** (weight - 1)
        for n in range(d, precision + 1, d):
            sigma[n] += dk
    factor = Fraction(-2 * weight) / bernoulli(weight)
    coeffs = [Fraction(1)] + [factor * s for s in sigma[1:]]
    return QExpansion(weight, coeffs)


def delta(precision: int) -> QExpansion:
    """The weight-12 cusp eigenform, built as (E4^3 - E6^2)/1728."""
    if precision < 1:
        raise ValueError("precision must be at least 1")
    e4 = eisenstein(4, precision)
    e6 = eisenstein(6, precision)
    return (e4 ** 3 - e6 ** 2) / 1728


def delta_eta_product(precision: int) -> QExpansion:
    """Independent construction of delta: q times the 24th power of
    prod (1 - q^n), the latter expanded by the pentagonal number theorem."""
    if precision < 1:
        raise ValueError("precision must be at least 1")
    euler = [0] * precision
    euler[0] = 1
    j = 1
    while True:
        placed = False
        for e in (j * (3 * j - 1) // 2, j * (3 * j + 1) // 2):
            if e < precision:
                euler[e] += (-1) ** j
                placed = True
        if not placed:
            break
        j += 1
    p24 = QExpansion(0, euler) ** 24
    return QExpansion(12, (Fraction(0),) + p24.coeffs[:precision])


def dim_modular_forms(weight: int) -> int:
    if weight < 0 or weight % 2:
        return 0
    return weight // 12 + (0 if weight % 12 == 2 else 1)


def dim_cusp_forms(weight: int) -> int:
    if weight < 4:
        return 0
    return max(dim_modular_forms(weight) - 1, 0)


def _echelonize(rows: List[List[Fraction]]) -> List[List[Fraction]]:
    """Reduced row echelon form over the rationals, in place."""
    pivot_row = 0
    ncols = len(rows[0])
    for col in range(ncols):
        if pivot_row == len(rows):
            break
        src = next((r for r in range(pivot_row, len(rows)) if rows[r][col]), None)
        if src is None:
            continue
        rows[pivot_row], rows[src] = rows[src], rows[pivot_row]
        inv = 1 / rows[pivot_row][col]
        rows[pivot_row] = [c * inv for c in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
    return rows


def victor_miller_basis(weight: int, precision: int) -> List[QExpansion]:
    """Echelonized basis of cusp forms: element i has coeffs[j] = delta_ij
    for 1 <= j <= dim, obtained by row-reducing the E4^a E6^b monomials."""
    if weight < 4 or weight % 2:
        raise UnsupportedWeight(f"no cusp forms in weight {weight}")
    d = dim_cusp_forms(weight)
    if d == 0:
        raise EmptySpace(f"S_{weight} is zero-dimensional")
    if precision < d:
        raise ValueError(f"precision {precision} below dimension {d}")
    e4 = eisenstein(4, precision)
    e6 = eisenstein(6, precision)
    rows = []
    for b in range(weight // 6 + 1):
        rem = weight - 6 * b
        if rem >= 0 and rem % 4 == 0:
            rows.append(list((e4 ** (rem // 4) * e6 ** b).coeffs))
    assert len(rows) == d + 1, "monomial count must match dim M_k"
    rows = _echelonize(rows)
    basis = [QExpansion(weight, row) for row in rows[1:]]
    for i, form in enumerate(basis, start=1):
        assert form.coeffs[0] == 0
        assert all(form.coeffs[j] == (1 if j == i else 0) for j in range(1, d + 1))
    return basis


# -- Hecke action and eigenforms -------------------------------------------

def hecke_operator(form: QExpansion, p: int) -> QExpansion:
    """T_p on a level-one form of weight k: b(n) = a(np) + p^(k-1) a(n/p)."""
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    limit = form.precision // p
    pk = p ** (form.weight - 1)
    out = []
    for n in range(limit + 1):
        c = form.coeffs[n * p]
        if n % p == 0:
            c += pk * form.coeffs[n // p]
        out.append(c)
    return QExpansion(form.weight, out)


class EigenformData:
    """A normalized Hecke eigenform: weight, exact q-expansion, and a
    write-once cache of eigenvalues (which equal the q-coefficients).

    The cache is a plain dict: entries are deterministic, so concurrent
    recomputation under the lock-free fast path would be benign; a lock
    still guards the insert to keep the write-once contract literal.
    """

    def __init__(self, weight: int, qexp: Optional[QExpansion],
                 eigenvalues: Optional[Dict[int, Fraction]] = None):
        self.weight = weight
        self.qexp = qexp
        self.eigenvalues: Dict[int, Fraction] = dict(eigenvalues or {})
        self._lock = threading.Lock()

    @classmethod
    def from_eigenvalue_table(cls, weight: int, table: Dict[int, Fraction]) -> "EigenformData":
        """Wrap an externally supplied prime -> eigenvalue table (no q-expansion)."""
        return cls(weight, None, table)

    def __repr__(self) -> str:
        src = "table" if self.qexp is None else f"qexp<= {self.qexp.precision}"
        return f"EigenformData(weight={self.weight}, {src})"


def hecke_eigenvalue(form: EigenformData, p: int) -> Fraction:
    """lambda(p) = p-th q-coefficient of the normalized eigenform."""
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    cached = form.eigenvalues.get(p)
    if cached is not None:
        return cached
    if form.qexp is None:
        raise InsufficientPrecision(f"eigenvalue table has no entry for p={p}")
    if p > form.qexp.precision:
        raise InsufficientPrecision(
            f"p={p} exceeds q-expansion precision {form.qexp.precision}")
    value = form.qexp.coeffs[p]
    with form._lock:
        form.eigenvalues.setdefault(p, value)
    return value


def _rational_roots(poly: List[Fraction]) -> List[Fraction]:
    """Rational roots (with multiplicity) of a monic integer polynomial,
    given as [c_0, ..., c_d] with c_d = 1.  Raises IrrationalEigenspace
    if the polynomial does not split completely over Q."""
    if any(c.denominator != 1 for c in poly):
        raise UnsupportedWeight("Hecke matrix is not integral on this basis")
    coeffs = [int(c) for c in poly]
    roots: List[Fraction] = []
    while len(coeffs) > 1:
        c0 = coeffs[0]
        if c0 == 0:
            root = 0
        else:
            root = None
            for cand in _divisors_signed(abs(c0)):
                if sum(c * cand ** i for i, c in enumerate(coeffs)) == 0:
                    root = cand
                    break
            if root is None:
                raise IrrationalEigenspace(
                    "T_2 characteristic polynomial has an irrational factor")
        roots.append(Fraction(root))
        # synthetic division by (x - root)
        new = [0] * (len(coeffs) - 1)
        carry = coeffs[-1]
        for i in range(len(coeffs) - 2, -1, -1):
            new[i] = carry
            carry = coeffs[i] + carry * root
        assert carry == 0
        coeffs = new
    return roots


def _divisors_signed(n: int) -> List[int]:
    divs = set()
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            divs.update((d, n // d, -d, -(n // d)))
    return sorted(divs, key=abs)


def eigenforms(weight: int, precision: int = DEFAULT_PRECISION) -> List[EigenformData]:
    """All normalized eigenforms of the given weight with rational eigenvalues.

    The T_2 matrix on the Victor Miller basis is split over Q; any
    irrational factor rejects the whole weight.
    """
    basis = victor_miller_basis(weight, precision)
    d = len(basis)
    if d == 1:
        return [EigenformData(weight, basis[0])]
    # matrix of T_2: row i lists the first d coefficients of T_2(basis_i)
    mat = [[hecke_operator(basis[i], 2).coeffs[j] for j in range(1, d + 1)]
           for i in range(d)]
    charpoly = _charpoly(mat)
    roots = _rational_roots(charpoly)
    forms = []
    for lam in sorted(set(roots)):
        x = _left_kernel_vector(mat, lam)
        if x[0] == 0:
            raise IrrationalEigenspace(
                f"eigenvector for lambda={lam} is not a normalized eigenform")
        x = [xi / x[0] for xi in x]
        coeffs = [sum(x[i] * basis[i].coeffs[n] for i in range(d))
                  for n in range(precision + 1)]
        forms.append(EigenformData(weight, QExpansion(weight, coeffs)))
    return forms


def eigenform(weight: int, precision: int = DEFAULT_PRECISION) -> EigenformData:
    """The unique normalized eigenform of a one-dimensional cuspidal weight."""
    if dim_cusp_forms(weight) != 1:
        if dim_cusp_forms(weight) == 0:
            raise EmptySpace(f"S_{weight} is zero-dimensional")
        raise UnsupportedWeight(
            f"S_{weight} has dimension {dim_cusp_forms(weight)}; use eigenforms()")
    return eigenforms(weight, precision)[0]


def _charpoly(mat: List[List[Fraction]]) -> List[Fraction]:
    """det(xI - M) coefficients [c_0, ..., c_d] via Faddeev-LeVerrier."""
    d = len(mat)
    coeffs = [Fraction(0)] * (d + 1)
    coeffs[d] = Fraction(1)
    m = [[Fraction(0)] * d for _ in range(d)]
    for k in range(1, d + 1):
        # M_k = M (M_{k-1} + c_{d-k+1} I)
        shifted = [row[:] for row in m]
        if k > 1:
            for i in range(d):
                shifted[i][i] += coeffs[d - k + 1]
        m = [[sum(mat[i][l] * shifted[l][j] for l in range(d)) if k > 1 else mat[i][j]
              for j in range(d)] for i in range(d)]
        coeffs[d - k] = -Fraction(sum(m[i][i] for i in range(d)), k)
    return coeffs


def _left_kernel_vector(mat: List[List[Fraction]], lam: Fraction) -> List[Fraction]:
    """A nonzero x with x^T (M - lam I) = 0, i.e. kernel of the transpose."""
    d = len(mat)
    a = [[mat[j][i] - (lam if i == j else 0) for j in range(d)] for i in range(d)]
    pivots = {}
    row = 0
    for col in range(d):
        src = next((r for r in range(row, d) if a[r][col]), None)
        if src is None:
            continue
        a[row], a[src] = a[src], a[row]
        inv = 1 / a[row][col]
        a[row] = [c * inv for c in a[row]]
        for r in range(d):
            if r != row and a[r][col]:
                f = a[r][col]
                a[r] = [u - f * v for u, v in zip(a[r], a[row])]
        pivots[col] = row
        row += 1
    free = next(c for c in range(d) if c not in pivots)
    x = [Fraction(0)] * d
    x[free] = Fraction(1)
    for col, r in pivots.items():
        x[col] = -a[r][free]
    return x


# -- numeric Satake parameters ---------------------------------------------

def numeric_satake(lam, weight: int, p: int) -> Tuple[complex, complex]:
    """Roots of X^2 - lam p^(-(weight-1)/2) X + 1, as an exact-reciprocal pair.

    The first root has nonnegative imaginary part (ties broken by larger
    real part) and the second is literally 1/first, so the pair multiplies
    to 1 by construction.
    """
    if weight % 2:
        raise UnsupportedWeight(f"weight must be even, got {weight}")
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    import cmath
    normalized = float(Fraction(lam) / p ** ((weight - 2) // 2)) / p ** 0.5
    disc = cmath.sqrt(complex(normalized * normalized - 4))
    r1 = (normalized + disc) / 2
    r2 = (normalized - disc) / 2
    first = max(r1, r2, key=lambda z: (z.imag, z.real))
    return first, 1 / first


# -- external eigenvalue tables ---------------------------------------------

def load_eigenvalue_table(path: str) -> Dict[int, Fraction]:
    """Parse a '<p> <numerator>[/<denominator>]' file, one prime per line.

    Blank lines and lines starting with '#' are ignored.
    """
    table: Dict[int, Fraction] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 2:
                raise ValueError(f"{path}:{lineno}: expected '<p> <value>', got {line!r}")
            p = int(fields[0])
            if not is_prime(p):
                raise NonPrime(f"{path}:{lineno}: {p} is not prime")
            table[p] = Fraction(fields[1])
    return table
