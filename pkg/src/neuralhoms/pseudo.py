"""Pseudomonomials over GF(2) and a multilinear polynomial oracle.

A pseudomonomial ``prod_{i in sigma} x_i * prod_{j in tau} (1 - x_j)`` is
stored as two integer bitmasks: bit ``i - 1`` of ``sigma`` is set when the
plain factor ``x_i`` is present, likewise ``tau`` for ``(1 - x_i)``.
Codewords use the same convention, so a codeword ``v`` is an int whose bit
``i - 1`` is the value of ``x_i``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

from .errors import (
    AmbientMismatch,
    AmbientTooLarge,
    IndexOutOfRange,
    LengthMismatch,
    OverlappingFactors,
    ParseError,
)

MLP_MAX_N = 16


def mask_of(indices: Iterable[int], n: int) -> int:
    """Bitmask of 1-based ``indices``; raises if any falls outside 1..n."""
    mask = 0
    for i in indices:
        if not 1 <= i <= n:
            raise IndexOutOfRange(f"index {i} outside 1..{n}")
        mask |= 1 << (i - 1)
    return mask


def indices_of(mask: int) -> tuple[int, ...]:
    """Sorted 1-based indices of the set bits of ``mask``."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True, order=False)
class Pseudomonomial:
    n: int
    sigma: int = 0
    tau: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise IndexOutOfRange("ambient variable count must be positive")
        full = (1 << self.n) - 1
        if (self.sigma | self.tau) & ~full:
            raise IndexOutOfRange(f"factor index outside 1..{self.n}")
        if self.sigma & self.tau:
            clash = ", ".join(f"x{i}" for i in indices_of(self.sigma & self.tau))
            raise OverlappingFactors(f"both x and (1-x) present for {clash}")

    @property
    def degree(self) -> int:
        return (self.sigma | self.tau).bit_count()

    @property
    def support(self) -> int:
        """Mask of the variables this pseudomonomial depends on."""
        return self.sigma | self.tau

    @property
    def sigma_indices(self) -> tuple[int, ...]:
        return indices_of(self.sigma)

    @property
    def tau_indices(self) -> tuple[int, ...]:
        return indices_of(self.tau)

    def is_one(self) -> bool:
        return not (self.sigma or self.tau)

    def sort_key(self):
        """Enumeration order: degree, then sigma, then tau (as sorted tuples)."""
        return (self.degree, self.sigma_indices, self.tau_indices)

    def __call__(self, v: int) -> int:
        return 1 if (v & self.sigma) == self.sigma and not (v & self.tau) else 0

    def __str__(self):
        if self.is_one():
            return "1"
        parts = []
        for i in range(1, self.n + 1):
            bit = 1 << (i - 1)
            if self.sigma & bit:
                parts.append(f"x{i}")
            elif self.tau & bit:
                parts.append(f"(1-x{i})")
        return "*".join(parts)

    def __repr__(self):
        return f"Pseudomonomial(n={self.n}, {self})"


class _Zero:
    """The zero polynomial, as produced by homomorphism images."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"

    def __str__(self):
        return "0"

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()


def is_zero(value) -> bool:
    return value is ZERO


def pm_make(n: int, sigma: Iterable[int] = (), tau: Iterable[int] = ()) -> Pseudomonomial:
    """Build ``prod_{sigma} x_i prod_{tau} (1 - x_j)`` from 1-based index sets."""
    return Pseudomonomial(n, mask_of(sigma, n), mask_of(tau, n))


def _check_word(f: Pseudomonomial, v) -> int:
    if isinstance(v, str):
        if len(v) != f.n or set(v) - {"0", "1"}:
            raise LengthMismatch(f"codeword {v!r} is not a {f.n}-bit 0/1 string")
        return sum(1 << k for k, ch in enumerate(v) if ch == "1")
    if v < 0 or v >> f.n:
        raise LengthMismatch(f"codeword does not fit in {f.n} bits")
    return v


def pm_eval(f: Pseudomonomial, v) -> int:
    """Evaluate at a codeword given as an int mask or a 0/1 string."""
    return f(_check_word(f, v))


def pm_divides(f: Pseudomonomial, g: Pseudomonomial) -> bool:
    if f.n != g.n:
        raise AmbientMismatch(f"ambient sizes differ: {f.n} vs {g.n}")
    return (f.sigma & ~g.sigma) == 0 and (f.tau & ~g.tau) == 0


def indicator(v: int, n: int) -> Pseudomonomial:
    """The degree-``n`` pseudomonomial that is 1 exactly at ``v``."""
    full = (1 << n) - 1
    return Pseudomonomial(n, v, full & ~v)


def cube_points(f: Pseudomonomial) -> Iterator[int]:
    """Codewords at which ``f`` evaluates to 1, in increasing mask order."""
    free = ((1 << f.n) - 1) & ~f.support
    for s in sorted(submasks(free)):
        yield f.sigma | s


def pm_expand_indicators(f: Pseudomonomial) -> frozenset[int]:
    """Codewords ``V`` with ``f = sum_{v in V} rho_v``.

    Built by the splitting recursion ``f = x_i f + (1 - x_i) f`` on each
    variable ``f`` does not mention.
    """
    pending = [f]
    out = set()
    while pending:
        g = pending.pop()
        free = ((1 << g.n) - 1) & ~g.support
        if not free:
            out.add(g.sigma)
            continue
        bit = free & -free
        pending.append(Pseudomonomial(g.n, g.sigma | bit, g.tau))
        pending.append(Pseudomonomial(g.n, g.sigma, g.tau | bit))
    return frozenset(out)


def enumerate_pseudomonomials(n: int) -> list[Pseudomonomial]:
    """All ``3**n`` pseudomonomials on ``n`` variables in enumeration order."""
    out = []
    for digits in product((0, 1, 2), repeat=n):
        sigma = tau = 0
        for k, d in enumerate(digits):
            if d == 1:
                sigma |= 1 << k
            elif d == 2:
                tau |= 1 << k
        out.append(Pseudomonomial(n, sigma, tau))
    out.sort(key=Pseudomonomial.sort_key)
    return out


@dataclass(frozen=True)
class MultilinearPoly:
    """Polynomial over GF(2) in which no variable appears squared.

    ``terms`` holds the monomials with coefficient 1, each as a variable mask.
    """

    n: int
    terms: frozenset = frozenset()

    @classmethod
    def constant(cls, n, c=1):
        return cls(n, frozenset({0}) if c % 2 else frozenset())

    @property
    def coeffs(self) -> dict[tuple[int, ...], int]:
        return {indices_of(s): 1 for s in self.terms}

    def variables(self) -> int:
        mask = 0
        for s in self.terms:
            mask |= s
        return mask

    def __add__(self, other: MultilinearPoly) -> MultilinearPoly:
        if self.n != other.n:
            raise AmbientMismatch(f"ambient sizes differ: {self.n} vs {other.n}")
        return MultilinearPoly(self.n, self.terms ^ other.terms)

    def __mul__(self, other: MultilinearPoly) -> MultilinearPoly:
        # x_i * x_i would leave the multilinear world, so factors must not share variables
        if self.n != other.n:
            raise AmbientMismatch(f"ambient sizes differ: {self.n} vs {other.n}")
        if self.variables() & other.variables():
            raise ValueError("multilinear product needs disjoint variable sets")
        acc: set[int] = set()
        for a in self.terms:
            for b in other.terms:
                acc ^= {a | b}
        return MultilinearPoly(self.n, frozenset(acc))

    def __call__(self, v: int) -> int:
        return sum(1 for s in self.terms if (s & v) == s) % 2

    def is_zero(self) -> bool:
        return not self.terms


def mlp_expand(f: Pseudomonomial, max_n: int = MLP_MAX_N) -> MultilinearPoly:
    """Expand ``prod x_i prod (1 + x_j)`` into its monomials."""
    if f.n > max_n:
        raise AmbientTooLarge(f"n={f.n} exceeds oracle bound {max_n}")
    return MultilinearPoly(f.n, frozenset(f.sigma | t for t in submasks(f.tau)))


def mlp_sum(polys: Iterable[MultilinearPoly], n: int) -> MultilinearPoly:
    total = MultilinearPoly(n)
    for p in polys:
        total = total + p
    return total


_FACTOR = re.compile(r"x(\d+)|\(1-x(\d+)\)")


def parse_pm(text: str, n: int, line: int | None = None) -> Pseudomonomial:
    """Parse ``1`` or ``factor*factor*...`` with factors ``x<k>`` / ``(1-x<k>)``."""
    s = "".join(text.split())
    if s == "1":
        return Pseudomonomial(n)
    if not s:
        raise ParseError("empty pseudomonomial", line)
    sigma = tau = 0
    seen: set[int] = set()
    for chunk in s.split("*"):
        m = _FACTOR.fullmatch(chunk)
        if m is None:
            raise ParseError(f"bad factor {chunk!r} in {text.strip()!r}", line)
        plain = m.group(1) is not None
        k = int(m.group(1) if plain else m.group(2))
        if not 1 <= k <= n:
            raise ParseError(f"variable x{k} outside 1..{n}", line)
        if k in seen:
            if (plain and tau >> (k - 1) & 1) or (not plain and sigma >> (k - 1) & 1):
                raise OverlappingFactors(f"both x{k} and (1-x{k}) present")
            raise ParseError(f"repeated factor for x{k}", line)
        seen.add(k)
        if plain:
            sigma |= 1 << (k - 1)
        else:
            tau |= 1 << (k - 1)
    return Pseudomonomial(n, sigma, tau)
