"""Sparse multivariate polynomials with exact Fraction coefficients.

Just enough machinery for the vorticity constraint catalog: construction
from variables, ring operations, evaluation over any scalar backend,
variable relabelling under permutations, and a sign-canonical hashable form
used to deduplicate relabelled constraint instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = ["Poly"]


def _clean(terms: dict) -> tuple:
    items = [(mono, coeff) for mono, coeff in terms.items() if coeff != 0]
    items.sort(key=lambda t: t[0], reverse=True)  # leading variable first
    return tuple(items)


@dataclass(frozen=True)
class Poly:
    """Polynomial in a fixed number of variables, exact coefficients.

    ``terms`` maps exponent tuples to Fraction coefficients; zero
    coefficients are never stored, so equality and hashing are structural.
    """

    nvars: int
    terms: tuple  # sorted tuple of (exponent-tuple, Fraction)

    # -- constructors -------------------------------------------------------

    @staticmethod
    def constant(c, nvars: int) -> "Poly":
        c = Fraction(c)
        zero = (0,) * nvars
        return Poly(nvars, _clean({zero: c}))

    @staticmethod
    def variable(index: int, nvars: int) -> "Poly":
        if not 0 <= index < nvars:
            raise ValueError("variable index out of range")
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return Poly(nvars, ((mono, Fraction(1)),))

    # -- ring operations -----------------------------------------------------

    def _binop(self, other, sign: int) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("variable-count mismatch")
            acc = dict(self.terms)
            for mono, coeff in other.terms:
                acc[mono] = acc.get(mono, Fraction(0)) + sign * coeff
            return Poly(self.nvars, _clean(acc))
        return self._binop(Poly.constant(other, self.nvars), sign)

    def __add__(self, other) -> "Poly":
        return self._binop(other, 1)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        return self._binop(other, -1)

    def __rsub__(self, other) -> "Poly":
        return Poly.constant(other, self.nvars) - self

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, tuple((m, -c) for m, c in self.terms))

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.constant(other, self.nvars)
        if other.nvars != self.nvars:
            raise ValueError("variable-count mismatch")
        acc: dict = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                mono = tuple(a + b for a, b in zip(m1, m2))
                acc[mono] = acc.get(mono, Fraction(0)) + c1 * c2
        return Poly(self.nvars, _clean(acc))

    __rmul__ = __mul__

    # -- queries -------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, values: Sequence):
        """Evaluate at `values`; exact iff the inputs are exact scalars."""
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        total = None
        for mono, coeff in self.terms:
            term = coeff
            for idx, exp in enumerate(mono):
                for _ in range(exp):
                    term = term * values[idx]
            total = term if total is None else total + term
        if total is None:
            return Fraction(0)
        return total

    def permuted(self, sigma: Sequence[int]) -> "Poly":
        """Relabel variables: variable i becomes variable sigma[i] (0-based).

        Evaluating ``p.permuted(sigma)`` at x equals evaluating ``p`` at the
        pulled-back tuple (x[sigma[0]], ..., x[sigma[n-1]]).
        """
        if sorted(sigma) != list(range(self.nvars)):
            raise ValueError("sigma must be a permutation of the variables")
        acc: dict = {}
        for mono, coeff in self.terms:
            new = [0] * self.nvars
            for i, exp in enumerate(mono):
                new[sigma[i]] += exp
            key = tuple(new)
            acc[key] = acc.get(key, Fraction(0)) + coeff
        return Poly(self.nvars, _clean(acc))

    def sign_canonical(self) -> "Poly":
        """Scale by ±1 so the leading coefficient is positive (p and -p collapse)."""
        if not self.terms:
            return self
        if self.terms[0][1] < 0:
            return -self
        return self

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self.terms:
            names = "*".join(
                f"g{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(mono)
                if e
            )
            if not names:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(names)
            elif coeff == -1:
                parts.append(f"-{names}")
            else:
                parts.append(f"{coeff}*{names}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")
