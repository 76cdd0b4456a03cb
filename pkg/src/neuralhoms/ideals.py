"""Neural ideals, membership certificates and canonical forms.

A neural ideal is stored through its code: ``J_C`` is determined by ``C`` and
every question about the ideal reduces to a question about ``C``. A
pseudomonomial lies in ``J_C`` exactly when it vanishes on every codeword of
``C``, that is when its subcube of ``F_2^n`` avoids ``C``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .codes import Code, word_to_str
from .errors import AmbientMismatch, AmbientTooLarge, NotAMember
from .pseudo import (
    MultilinearPoly,
    Pseudomonomial,
    cube_points,
    indicator,
    mlp_expand,
    pm_divides,
    pm_expand_indicators,
)

CF_MAX_N = 12


@dataclass(frozen=True)
class GeneratorSet:
    n: int
    gens: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))
        for g in self.gens:
            if g.n != self.n:
                raise AmbientMismatch(f"generator {g} lives in n={g.n}, expected {self.n}")

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)


@dataclass(frozen=True)
class NeuralIdeal:
    n: int
    code: Code

    def __post_init__(self):
        if self.code.n != self.n:
            raise AmbientMismatch(f"code has {self.code.n} bits, ideal has n={self.n}")

    def generator_set(self) -> GeneratorSet:
        """Indicators of the non-codewords, in codeword order."""
        return GeneratorSet(self.n, tuple(indicator(v, self.n) for v in self.code.complement()))

    def is_zero(self) -> bool:
        return len(self.code) == 1 << self.n

    def is_unit(self) -> bool:
        return not self.code.words

    def __contains__(self, f: Pseudomonomial) -> bool:
        return pm_in_ideal(self, f)


@dataclass(frozen=True)
class CanonicalForm:
    n: int
    elements: tuple = ()

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def as_set(self) -> frozenset:
        return frozenset(self.elements)


@dataclass(frozen=True)
class MembershipCertificate:
    """``target = sum cofactor * generator`` with every generator an indicator outside the code."""

    target: Pseudomonomial
    terms: tuple

    def verify(self, J: NeuralIdeal | None = None) -> bool:
        n = self.target.n
        total = MultilinearPoly(n)
        for cofactor, gen in self.terms:
            if J is not None and (gen.degree != n or gen.sigma in J.code.words):
                return False
            total = total + mlp_expand(cofactor) * mlp_expand(gen)
        return total == mlp_expand(self.target)

    def __str__(self):
        parts = []
        for cofactor, gen in self.terms:
            parts.append(str(gen) if cofactor.is_one() else f"{cofactor}*{gen}")
        return " + ".join(parts) if parts else "0"


def ideal_of_code(C: Code) -> NeuralIdeal:
    return NeuralIdeal(C.n, C)


def code_of_generators(G: GeneratorSet | Iterable[Pseudomonomial], n: int | None = None) -> Code:
    """Common zero set of the generators in ``F_2^n``."""
    if not isinstance(G, GeneratorSet):
        gens = tuple(G)
        if n is None:
            if not gens:
                raise AmbientMismatch("ambient size needed for an empty generator list")
            n = gens[0].n
        G = GeneratorSet(n, gens)
    dead = set()
    for g in G.gens:
        dead.update(cube_points(g))
    return Code(G.n, frozenset(range(1 << G.n)) - dead)


def ideal_of_generators(G: GeneratorSet) -> NeuralIdeal:
    return ideal_of_code(code_of_generators(G))


def _check_ambient(J: NeuralIdeal, f: Pseudomonomial) -> None:
    if f.n != J.n:
        raise AmbientMismatch(f"pseudomonomial has n={f.n}, ideal has n={J.n}")


def pm_in_ideal(J: NeuralIdeal, f: Pseudomonomial) -> bool:
    _check_ambient(J, f)
    return not any(f(c) for c in J.code.words)


def nonmember_witness(J: NeuralIdeal, f: Pseudomonomial) -> int | None:
    """Smallest codeword (in display order) where ``f`` is 1, or None if ``f`` is a member."""
    _check_ambient(J, f)
    for c in J.code:
        if f(c):
            return c
    return None


def membership_certificate(J: NeuralIdeal, f: Pseudomonomial) -> MembershipCertificate:
    """Write ``f`` as a sum of indicators ``rho_v`` with ``v`` outside the code."""
    witness = nonmember_witness(J, f)
    if witness is not None:
        raise NotAMember(f"{f} is 1 at codeword {word_to_str(witness, J.n)}")
    one = Pseudomonomial(J.n)
    points = sorted(pm_expand_indicators(f), key=lambda v: word_to_str(v, J.n))
    return MembershipCertificate(f, tuple((one, indicator(v, J.n)) for v in points))


def _vanishing_cubes(C: Code) -> np.ndarray:
    """Boolean array over ternary digits: True where the pseudomonomial lies in ``J_C``.

    Axis ``k`` is variable ``x_{k+1}``; digit 0 is the factor ``(1-x)``, digit 1
    is ``x`` and digit 2 means the variable is absent.
    """
    n = C.n
    in_code = np.zeros((2,) * n, dtype=bool)
    for c in C.words:
        in_code[tuple((c >> k) & 1 for k in range(n))] = True
    empty = np.zeros((3,) * n, dtype=bool)
    empty[(slice(0, 2),) * n] = ~in_code
    for k in range(n):
        head = (slice(None),) * k
        tail = (slice(0, 2),) * (n - k - 1)
        empty[head + (2,) + tail] = empty[head + (0,) + tail] & empty[head + (1,) + tail]
    return empty


def _digits_to_pm(digits, n: int) -> Pseudomonomial:
    sigma = tau = 0
    for k, d in enumerate(digits):
        if d == 1:
            sigma |= 1 << k
        elif d == 0:
            tau |= 1 << k
    return Pseudomonomial(n, sigma, tau)


def minimal_elements(pms: Iterable[Pseudomonomial]) -> list[Pseudomonomial]:
    """Division-minimal members of a set of pseudomonomials, deduplicated and sorted."""
    uniq = sorted(set(pms), key=Pseudomonomial.sort_key)
    keep = []
    for f in uniq:
        # sorted by degree, so any proper divisor of f is already decided
        if not any(pm_divides(g, f) for g in keep):
            keep.append(f)
    return keep


def canonical_form(J: NeuralIdeal, max_n: int = CF_MAX_N) -> CanonicalForm:
    """Division-minimal pseudomonomials of ``J`` by a scan over all ``3**n`` of them."""
    n = J.n
    if n > max_n:
        raise AmbientTooLarge(f"n={n} exceeds canonical-form enumeration bound {max_n}")
    empty = _vanishing_cubes(J.code)
    dominated = np.zeros_like(empty)
    for k in range(n):
        freed = np.take(empty, [2], axis=k)
        fixed = np.ones((3,) * n, dtype=bool)
        fixed[(slice(None),) * k + (2,)] = False
        dominated |= fixed & freed
    minimal = empty & ~dominated
    elements = [_digits_to_pm(idx, n) for idx in np.argwhere(minimal)]
    elements.sort(key=Pseudomonomial.sort_key)
    return CanonicalForm(n, tuple(elements))


def ideal_equal(J1: NeuralIdeal, J2: NeuralIdeal) -> bool:
    if J1.n != J2.n:
        raise AmbientMismatch(f"ideals live in n={J1.n} and n={J2.n}")
    return J1.code.words == J2.code.words
