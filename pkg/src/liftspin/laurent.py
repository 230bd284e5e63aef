"""Exact Laurent-polynomial arithmetic in the four formal variables a, b, q, T.

A polynomial is a finite map from exponent vectors (e_a, e_b, e_q, e_T) to
nonzero arbitrary-precision integer coefficients.  The variables stand for,
in this order: the two unit parameters a and b attached to the elliptic
eigenforms, q (a formal square root of the prime p, so half-integer powers
of p never appear), and T (shorthand for p^-s).

a, b and q are Laurent variables and may carry negative exponents.  T may
not: Euler factors are honest polynomials in p^-s, so a negative T-exponent
always signals an upstream bug and is rejected at construction time.

Polynomials are canonical: zero coefficients are never stored, so equal
polynomials have equal term maps.  For serialization and printing, terms
are ordered lexicographically on (e_T, e_a, e_b, e_q), which makes the JSON
encoding deterministic byte for byte.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Tuple, Union

Exponents = Tuple[int, int, int, int]

VARIABLE_NAMES = ("a", "b", "q", "T")


def _canonical_key(exponents: Exponents) -> Tuple[int, int, int, int]:
    e_a, e_b, e_q, e_T = exponents
    return (e_T, e_a, e_b, e_q)


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients.

    All arithmetic returns new canonical instances; values are safe to
    share across threads and to use as dict keys.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[Exponents, int], Iterable] = ()):
        data: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exponents, coeff in items:
            e = tuple(exponents)
            if len(e) != 4 or not all(isinstance(x, int) for x in e):
                raise ValueError(f"expected an integer 4-vector of exponents, got {exponents!r}")
            if e[3] < 0:
                raise ValueError(
                    f"negative T-exponent in {e!r}: Euler factors are polynomials in T"
                )
            if not isinstance(coeff, int):
                raise TypeError(f"coefficients must be integers, got {coeff!r}")
            c = data.get(e, 0) + coeff
            if c:
                data[e] = c
            elif e in data:
                del data[e]
        self._terms = data

    # -- constructors ---------------------------------------------------

    @classmethod
    def monomial(cls, e_a: int = 0, e_b: int = 0, e_q: int = 0, e_T: int = 0,
                 coeff: int = 1) -> "LaurentPoly":
        return cls((((e_a, e_b, e_q, e_T), coeff),))

    @classmethod
    def constant(cls, value: int) -> "LaurentPoly":
        return cls((((0, 0, 0, 0), value),))

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return _ZERO

    @classmethod
    def one(cls) -> "LaurentPoly":
        return _ONE

    # -- inspection -----------------------------------------------------

    @property
    def terms(self) -> Tuple[Tuple[Exponents, int], ...]:
        """Terms in canonical order, lexicographic on (e_T, e_a, e_b, e_q)."""
        return tuple(sorted(self._terms.items(), key=lambda kv: _canonical_key(kv[0])))

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0, 0, 0, 0): 1}

    def is_monomial(self) -> bool:
        """True for a single-term polynomial (any nonzero coefficient)."""
        return len(self._terms) == 1

    def single_term(self) -> Tuple[Exponents, int]:
        if len(self._terms) != 1:
            raise ValueError(f"not a monomial: {self}")
        return next(iter(self._terms.items()))

    def t_degree(self) -> int:
        """Largest T-exponent, -1 for the zero polynomial."""
        return max((e[3] for e in self._terms), default=-1)

    # -- ring operations ------------------------------------------------

    @staticmethod
    def _coerce(value) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return LaurentPoly.constant(value) if value else _ZERO
        raise TypeError(f"cannot interpret {value!r} as a LaurentPoly")

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if not self._terms:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return _raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return _raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if not self._terms or not other._terms:
            return _ZERO
        # iterate over the smaller factor for fewer dict rebuilds
        small, large = self._terms, other._terms
        if len(small) > len(large):
            small, large = large, small
        out: dict = {}
        for e1, c1 in small.items():
            for e2, c2 in large.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {exponent!r}")
        result = _ONE
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def monomial_inverse(self) -> "LaurentPoly":
        """Inverse of a unit monomial (coefficient +-1, no T part)."""
        (e, c) = self.single_term()
        if abs(c) != 1:
            raise ValueError(f"monomial with coefficient {c} is not invertible over Z")
        if e[3] != 0:
            raise ValueError("cannot invert a monomial containing T")
        return LaurentPoly.monomial(-e[0], -e[1], -e[2], 0, coeff=c)

    # -- specialisations ------------------------------------------------

    def substitute_T_scale(self, c: int) -> "LaurentPoly":
        """Replace T by q^c * T; realizes the half-integer shift s -> s - c/2."""
        if not isinstance(c, int):
            raise ValueError(f"scale exponent must be an integer, got {c!r}")
        if c == 0:
            return self
        return _raw({(e[0], e[1], e[2] + c * e[3], e[3]): v
                     for e, v in self._terms.items()})

    def eval_complex(self, a: complex, b: complex, q: complex, t: complex) -> complex:
        """Evaluate at complex arguments, Horner in T.

        Raises ZeroDivisionError when a, b or q is zero and occurs with a
        negative exponent.
        """
        by_degree: dict = {}
        for e, c in self._terms.items():
            by_degree.setdefault(e[3], []).append((e, c))
        if not by_degree:
            return 0j
        cache: dict = {}

        def power(base: complex, exponent: int, tag: str) -> complex:
            if exponent == 0:
                return 1.0 + 0j
            key = (tag, exponent)
            value = cache.get(key)
            if value is None:
                value = complex(base) ** exponent
                cache[key] = value
            return value

        acc = 0j
        for d in range(max(by_degree), -1, -1):
            acc *= t
            for e, c in by_degree.get(d, ()):
                acc += c * power(a, e[0], "a") * power(b, e[1], "b") * power(q, e[2], "q")
        return acc

    # -- serialization --------------------------------------------------

    def to_json_dict(self) -> dict:
        """Spec wire format; coefficients go out as decimal strings."""
        return {"terms": [{"e": list(e), "c": str(c)} for e, c in self.terms]}

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "LaurentPoly":
        return cls((tuple(item["e"]), int(item["c"])) for item in data["terms"])

    # -- dunder plumbing ------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self._coerce(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.terms:
            factors = [f"{name}^{exp}" if exp != 1 else name
                       for name, exp in zip(VARIABLE_NAMES, e) if exp != 0]
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            parts.append(("- " if c < 0 else "+ ") + body)
        head = ("-" + parts[0][2:]) if parts[0].startswith("- ") else parts[0][2:]
        return " ".join([head] + parts[1:])

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def _raw(data: dict) -> LaurentPoly:
    """Wrap an already-canonical term dict without re-validation."""
    poly = LaurentPoly.__new__(LaurentPoly)
    poly._terms = data
    return poly


_ZERO = _raw({})
_ONE = _raw({(0, 0, 0, 0): 1})

# the four generators
A = LaurentPoly.monomial(e_a=1)
B = LaurentPoly.monomial(e_b=1)
Q = LaurentPoly.monomial(e_q=1)
T = LaurentPoly.monomial(e_T=1)
