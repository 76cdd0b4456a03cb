"""Binary codes and the permutation, bit-flip and restriction transformations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import BadParameters, IndexOutOfRange, LengthMismatch, SizeMismatch


def word_from_str(s: str) -> int:
    """``'110'`` -> mask with x1 and x2 set."""
    if not s or set(s) - {"0", "1"}:
        raise LengthMismatch(f"not a 0/1 codeword: {s!r}")
    return sum(1 << k for k, ch in enumerate(s) if ch == "1")


def word_to_str(v: int, n: int) -> str:
    return "".join("1" if v >> k & 1 else "0" for k in range(n))


def word_sort_key(v: int, n: int) -> str:
    # equal-length strings compare like binary numbers with bit 1 most significant
    return word_to_str(v, n)


@dataclass(frozen=True)
class Code:
    n: int
    words: frozenset = frozenset()

    def __post_init__(self):
        if self.n < 1:
            raise LengthMismatch("codes need at least one bit")
        object.__setattr__(self, "words", frozenset(self.words))
        limit = 1 << self.n
        for w in self.words:
            if not 0 <= w < limit:
                raise LengthMismatch(f"codeword {w} does not fit in {self.n} bits")

    @classmethod
    def from_strings(cls, strings: Iterable[str], n: int | None = None) -> Code:
        strings = list(strings)
        if n is None:
            if not strings:
                raise LengthMismatch("cannot infer n from an empty code")
            n = len(strings[0])
        for s in strings:
            if len(s) != n:
                raise LengthMismatch(f"codeword {s!r} has length {len(s)}, expected {n}")
        return cls(n, frozenset(word_from_str(s) for s in strings))

    @classmethod
    def full(cls, n: int) -> Code:
        return cls(n, frozenset(range(1 << n)))

    @classmethod
    def empty(cls, n: int) -> Code:
        return cls(n)

    def sorted_words(self) -> list[int]:
        return sorted(self.words, key=lambda v: word_sort_key(v, self.n))

    def strings(self) -> list[str]:
        return [word_to_str(v, self.n) for v in self.sorted_words()]

    def complement(self) -> Code:
        return Code(self.n, frozenset(range(1 << self.n)) - self.words)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sorted_words())

    def __len__(self):
        return len(self.words)

    def __contains__(self, v):
        if isinstance(v, str):
            v = word_from_str(v)
        return v in self.words

    def __repr__(self):
        return f"Code(n={self.n}, {{{', '.join(self.strings())}}})"


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``1..n``; ``images[i - 1]`` is the image of ``i``."""

    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise BadParameters(f"{list(images)} is not a permutation of 1..{len(images)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_mapping(cls, n: int, mapping: dict[int, int]) -> Permutation:
        return cls(tuple(mapping.get(i, i) for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def after(self, other: Permutation) -> Permutation:
        """``self o other``: apply ``other`` first."""
        if other.n != self.n:
            raise SizeMismatch(f"permutation sizes differ: {self.n} vs {other.n}")
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def apply_mask(self, mask: int) -> int:
        out = 0
        for i, j in enumerate(self.images, start=1):
            if mask >> (i - 1) & 1:
                out |= 1 << (j - 1)
        return out

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))


def permute_code(C: Code, lam: Permutation) -> Code:
    """``{u : supp(u) = lam(supp(c)), c in C}``."""
    if lam.n != C.n:
        raise SizeMismatch(f"permutation of size {lam.n} applied to a {C.n}-bit code")
    return Code(C.n, frozenset(lam.apply_mask(c) for c in C.words))


def bitflip_code(C: Code, i: int) -> Code:
    if not 1 <= i <= C.n:
        raise IndexOutOfRange(f"bit {i} outside 1..{C.n}")
    bit = 1 << (i - 1)
    return Code(C.n, frozenset(c ^ bit for c in C.words))


def bitflips_code(C: Code, flips: Iterable[int]) -> Code:
    mask = 0
    for i in flips:
        if not 1 <= i <= C.n:
            raise IndexOutOfRange(f"bit {i} outside 1..{C.n}")
        mask ^= 1 << (i - 1)
    return Code(C.n, frozenset(c ^ mask for c in C.words))


def check_restriction(n: int, m: int, mp: int) -> None:
    if not 1 <= m <= mp <= n:
        raise BadParameters(f"restriction needs 1 <= m <= m' <= n, got m={m}, m'={mp}, n={n}")


def restrict_code(C: Code, m: int, mp: int) -> Code:
    """Keep codewords that are 0 on ``(m, mp]`` and 1 on ``(mp, n]``; truncate to ``m`` bits."""
    check_restriction(C.n, m, mp)
    low = (1 << m) - 1
    ones = ((1 << C.n) - 1) & ~((1 << mp) - 1)
    fixed = ((1 << C.n) - 1) & ~low
    return Code(m, frozenset(c & low for c in C.words if c & fixed == ones))


@dataclass(frozen=True)
class Permute:
    perm: Permutation


@dataclass(frozen=True)
class Flip:
    i: int


@dataclass(frozen=True)
class Restrict:
    m: int
    mp: int


Transform = Permute | Flip | Restrict


def transform_code(C: Code, t: Transform) -> Code:
    if isinstance(t, Permute):
        return permute_code(C, t.perm)
    if isinstance(t, Flip):
        return bitflip_code(C, t.i)
    if isinstance(t, Restrict):
        return restrict_code(C, t.m, t.mp)
    raise TypeError(f"unknown transformation {t!r}")


def parse_permutation(text: str | Sequence[int]) -> Permutation:
    """``"2 3 1"`` (images of 1, 2, 3) -> Permutation."""
    if isinstance(text, str):
        try:
            images = [int(tok) for tok in text.replace(",", " ").split()]
        except ValueError as exc:
            raise BadParameters(f"bad permutation {text!r}") from exc
    else:
        images = list(text)
    return Permutation(tuple(images))
