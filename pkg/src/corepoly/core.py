"""Core polynomials and the bracket notation [t1,...,tk].

A vector of integers t = (t_1,...,t_k) simultaneously determines

* the monic polynomial  C(X) = X^k - t_1 X^(k-1) - ... - t_k,
* the k-order linear recursion  f_n = t_1 f_(n-1) + ... + t_k f_(n-k),
* (mod a prime p) the finite ring  F_p[x]/(C(x)).

Everything else in this package is derived from a :class:`CorePolynomial`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

_BRACKET_RE = re.compile(r"^\s*\[\s*(-?\d+\s*(?:,\s*-?\d+\s*)*)\]\s*$")


@dataclass(frozen=True)
class CorePolynomial:
    """The bracket [t_1,...,t_k]; immutable and hashable."""

    t: tuple[int, ...]

    def __post_init__(self):
        if len(self.t) == 0:
            raise ValueError("core polynomial needs at least one coefficient")
        if not all(isinstance(c, int) for c in self.t):
            raise TypeError("core coefficients must be integers")
        object.__setattr__(self, "t", tuple(int(c) for c in self.t))

    @property
    def k(self) -> int:
        return len(self.t)

    @property
    def tk(self) -> int:
        """Trailing coefficient t_k; the matrix A is singular iff t_k = 0."""
        return self.t[-1]

    @classmethod
    def parse(cls, text: str) -> "CorePolynomial":
        """Parse bracket notation such as "[0,2,1]" or "[2, -1]"."""
        m = _BRACKET_RE.match(text)
        if not m:
            raise ValueError(f"not a core bracket: {text!r}")
        return cls(tuple(int(part) for part in m.group(1).split(",")))

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.t) + "]"


def core(*t: int) -> CorePolynomial:
    """Shorthand constructor: core(1, 1) == CorePolynomial((1, 1))."""
    return CorePolynomial(tuple(t))
