"""Neural-ideal-preserving homomorphisms ``F_2[n] -> F_2[m]``.

Such a map is fixed by the images of the variables. Each image is one of
``0``, ``1``, ``x_j`` or ``1 - x_j``, and every target variable ``x_j`` is hit
by exactly one source variable. Any such map factors as
``omega o lambda o delta``: a bit flip, then a permutation, then a restriction.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .codes import Code, Permutation, bitflips_code, permute_code, restrict_code
from .errors import (
    AmbientMismatch,
    ArityMismatch,
    DuplicateTarget,
    IndexOutOfRange,
    MissedTarget,
    NonLinearImage,
    ParseError,
)
from .ideals import (
    CanonicalForm,
    GeneratorSet,
    NeuralIdeal,
    code_of_generators,
    ideal_of_code,
    minimal_elements,
)
from .pseudo import ZERO, Pseudomonomial, indicator


class ImageKind(enum.Enum):
    ZERO = "0"
    ONE = "1"
    VAR = "x"
    NEG = "1-x"


@dataclass(frozen=True)
class VarImage:
    kind: ImageKind
    j: int = 0

    @classmethod
    def zero(cls):
        return cls(ImageKind.ZERO)

    @classmethod
    def one(cls):
        return cls(ImageKind.ONE)

    @classmethod
    def var(cls, j):
        return cls(ImageKind.VAR, j)

    @classmethod
    def neg(cls, j):
        return cls(ImageKind.NEG, j)

    @property
    def is_constant(self) -> bool:
        return self.kind in (ImageKind.ZERO, ImageKind.ONE)

    def complement(self) -> VarImage:
        flip = {
            ImageKind.ZERO: ImageKind.ONE,
            ImageKind.ONE: ImageKind.ZERO,
            ImageKind.VAR: ImageKind.NEG,
            ImageKind.NEG: ImageKind.VAR,
        }
        return VarImage(flip[self.kind], self.j)

    def __str__(self):
        if self.is_constant:
            return self.kind.value
        return f"{self.kind.value}{self.j}"


_LINEAR = re.compile(r"(0|1)|x(\d+)|\(?1-x(\d+)\)?")
_POLY_TOKENS = re.compile(r"(?:x\d+|\d+|[-+*()])+")


def parse_image(text: str, m: int | None = None) -> VarImage:
    """Parse one of the four linear forms; other polynomials raise NonLinearImage."""
    s = "".join(text.split())
    mt = _LINEAR.fullmatch(s)
    if mt is not None and (s.count("(") == s.count(")")):
        if mt.group(1) is not None:
            return VarImage.one() if s == "1" else VarImage.zero()
        if mt.group(2) is not None:
            img = VarImage.var(int(mt.group(2)))
        else:
            img = VarImage.neg(int(mt.group(3)))
        if m is not None and not 1 <= img.j <= m:
            raise IndexOutOfRange(f"image variable x{img.j} outside 1..{m}")
        return img
    if s and _POLY_TOKENS.fullmatch(s):
        raise NonLinearImage(f"{s} is not one of 0, 1, x_j, 1-x_j")
    raise ParseError(f"cannot parse image expression {text.strip()!r}")


@dataclass(frozen=True)
class NipHom:
    """A validated homomorphism; ``images[i - 1]`` is the image of ``x_i``."""

    n: int
    m: int
    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if self.n < 1 or self.m < 1:
            raise ArityMismatch("source and target need at least one variable")
        if len(self.images) != self.n:
            raise ArityMismatch(f"{len(self.images)} images given for n={self.n}")
        hits: dict[int, list[int]] = {}
        for i, img in enumerate(self.images, start=1):
            if not isinstance(img, VarImage):
                raise NonLinearImage(f"at x{i}", variables=(i,))
            if not img.is_constant:
                if not 1 <= img.j <= self.m:
                    raise IndexOutOfRange(f"x{i} maps to x{img.j}, outside 1..{self.m}")
                hits.setdefault(img.j, []).append(i)
        for j in sorted(hits):
            if len(hits[j]) > 1:
                srcs = ", ".join(f"x{i}" for i in hits[j])
                raise DuplicateTarget(f"x{j} hit by {srcs}", variables=hits[j])
        missed = [j for j in range(1, self.m + 1) if j not in hits]
        if missed:
            names = ", ".join(f"x{j}" for j in missed)
            raise MissedTarget(f"{names} not hit by any source", variables=missed)

    def image(self, i: int) -> VarImage:
        return self.images[i - 1]

    def source_of(self, j: int) -> int:
        for i, img in enumerate(self.images, start=1):
            if not img.is_constant and img.j == j:
                return i
        raise IndexOutOfRange(f"x{j} outside 1..{self.m}")

    def to_text(self) -> str:
        lines = [f"n={self.n} m={self.m}"]
        lines += [f"x{i} -> {img}" for i, img in enumerate(self.images, start=1)]
        return "\n".join(lines) + "\n"


def hom_validate(n: int, m: int, raw: Sequence) -> NipHom:
    """Build a NipHom from ``n`` image expressions (strings or VarImages)."""
    if len(raw) != n:
        raise ArityMismatch(f"expected {n} images, got {len(raw)}")
    images = []
    bad = []
    for i, expr in enumerate(raw, start=1):
        if isinstance(expr, VarImage):
            images.append(expr)
            continue
        try:
            images.append(parse_image(expr, m))
        except NonLinearImage:
            bad.append(i)
    if bad:
        names = ", ".join(f"x{i}" for i in bad)
        raise NonLinearImage(f"at {names}", variables=bad)
    return NipHom(n, m, tuple(images))


def identity_hom(n: int) -> NipHom:
    return NipHom(n, n, tuple(VarImage.var(i) for i in range(1, n + 1)))


def bitflip_hom(n: int, flips: Iterable[int]) -> NipHom:
    flips = set(flips)
    return NipHom(
        n, n, tuple(VarImage.neg(i) if i in flips else VarImage.var(i) for i in range(1, n + 1))
    )


def permutation_hom(perm: Permutation) -> NipHom:
    return NipHom(perm.n, perm.n, tuple(VarImage.var(perm(i)) for i in range(1, perm.n + 1)))


def restriction_hom(n: int, m: int, mp: int) -> NipHom:
    if not 1 <= m <= mp <= n:
        raise ArityMismatch(f"restriction needs 1 <= m <= m' <= n, got {m}, {mp}, {n}")
    images = []
    for i in range(1, n + 1):
        if i <= m:
            images.append(VarImage.var(i))
        elif i <= mp:
            images.append(VarImage.zero())
        else:
            images.append(VarImage.one())
    return NipHom(n, m, tuple(images))


def _compose_image(phi2: NipHom, img: VarImage) -> VarImage:
    if img.is_constant:
        return img
    out = phi2.image(img.j)
    return out if img.kind is ImageKind.VAR else out.complement()


def hom_compose(phi2: NipHom, phi1: NipHom) -> NipHom:
    """``phi2 o phi1`` (``phi1`` applied first)."""
    if phi1.m != phi2.n:
        raise ArityMismatch(f"cannot compose {phi1.n}->{phi1.m} with {phi2.n}->{phi2.m}")
    return NipHom(phi1.n, phi2.m, tuple(_compose_image(phi2, img) for img in phi1.images))


def hom_apply_pm(phi: NipHom, f: Pseudomonomial):
    """Image of ``f``: a Pseudomonomial in ``m`` variables, or ``ZERO``."""
    if f.n != phi.n:
        raise AmbientMismatch(f"pseudomonomial has n={f.n}, map has n={phi.n}")
    sigma = tau = 0
    for i in range(1, f.n + 1):
        bit = 1 << (i - 1)
        if f.sigma & bit:
            img = phi.image(i)
        elif f.tau & bit:
            img = phi.image(i).complement()
        else:
            continue
        if img.kind is ImageKind.ZERO:
            return ZERO
        if img.kind is ImageKind.VAR:
            sigma |= 1 << (img.j - 1)
        elif img.kind is ImageKind.NEG:
            tau |= 1 << (img.j - 1)
    return Pseudomonomial(phi.m, sigma, tau)


def hom_apply_generators(phi: NipHom, G: GeneratorSet | Iterable[Pseudomonomial]) -> list:
    """Images of each generator in order; entries may be ``ZERO``."""
    return [hom_apply_pm(phi, g) for g in G]


@dataclass(frozen=True)
class Decomposition:
    """``phi = omega o lambda o delta`` with ``delta`` flipping ``flips``."""

    n: int
    m: int
    flips: frozenset
    perm: Permutation
    restr: tuple

    @property
    def flip_mask(self) -> int:
        mask = 0
        for i in self.flips:
            mask |= 1 << (i - 1)
        return mask

    def delta(self) -> NipHom:
        return bitflip_hom(self.n, self.flips)

    def lam(self) -> NipHom:
        return permutation_hom(self.perm)

    def omega(self) -> NipHom:
        return restriction_hom(self.n, *self.restr)

    def recompose(self) -> NipHom:
        return hom_compose(self.omega(), hom_compose(self.lam(), self.delta()))

    def is_automorphism(self) -> bool:
        return self.restr == (self.n, self.n)


def hom_decompose(phi: NipHom) -> Decomposition:
    zeros = [i for i, img in enumerate(phi.images, 1) if img.kind is ImageKind.ZERO]
    ones = [i for i, img in enumerate(phi.images, 1) if img.kind is ImageKind.ONE]
    flips = frozenset(i for i, img in enumerate(phi.images, 1) if img.kind is ImageKind.NEG)
    mapping = {}
    for i, img in enumerate(phi.images, 1):
        if not img.is_constant:
            mapping[i] = img.j
    for k, i in enumerate(zeros):
        mapping[i] = phi.m + 1 + k
    for k, i in enumerate(ones):
        mapping[i] = phi.m + len(zeros) + 1 + k
    perm = Permutation(tuple(mapping[i] for i in range(1, phi.n + 1)))
    return Decomposition(phi.n, phi.m, flips, perm, (phi.m, phi.m + len(zeros)))


def hom_apply_code(phi: NipHom, C: Code) -> Code:
    """Transformed code, via ``restrict(permute(flip(C)))`` along the decomposition."""
    if C.n != phi.n:
        raise AmbientMismatch(f"code has {C.n} bits, map has n={phi.n}")
    d = hom_decompose(phi)
    return restrict_code(permute_code(bitflips_code(C, d.flips), d.perm), *d.restr)


def _image_code_via_generators(phi: NipHom, C: Code) -> Code:
    images = [hom_apply_pm(phi, indicator(v, phi.n)) for v in C.complement().words]
    return code_of_generators([g for g in images if g is not ZERO], phi.m)


def hom_apply_ideal(phi: NipHom, J: NeuralIdeal, crosscheck: bool = False) -> NeuralIdeal:
    if J.n != phi.n:
        raise AmbientMismatch(f"ideal has n={J.n}, map has n={phi.n}")
    D = hom_apply_code(phi, J.code)
    if crosscheck:
        slow = _image_code_via_generators(phi, J.code)
        if slow.words != D.words:
            raise AssertionError(f"image code mismatch for {phi}: {D} vs {slow}")
    return ideal_of_code(D)


def pm_preimage(phi: NipHom, f: Pseudomonomial, d: Decomposition | None = None) -> Pseudomonomial:
    """A pseudomonomial mapping onto ``f``, pulled back through omega, lambda, delta."""
    if f.n != phi.m:
        raise AmbientMismatch(f"pseudomonomial has n={f.n}, map has m={phi.m}")
    d = d or hom_decompose(phi)
    # omega fixes x_1..x_m, so f is its own preimage there
    inv = d.perm.inverse()
    sigma, tau = inv.apply_mask(f.sigma), inv.apply_mask(f.tau)
    fm = d.flip_mask
    sigma, tau = (sigma & ~fm) | (tau & fm), (tau & ~fm) | (sigma & fm)
    return Pseudomonomial(phi.n, sigma, tau)


def hom_preimage_ideal(phi: NipHom, JD: NeuralIdeal) -> NeuralIdeal:
    if JD.n != phi.m:
        raise AmbientMismatch(f"ideal has n={JD.n}, map has m={phi.m}")
    d = hom_decompose(phi)
    lifted = [pm_preimage(phi, g, d) for g in JD.generator_set()]
    return ideal_of_code(code_of_generators(lifted, phi.n))


def cf_transport(phi: NipHom, cf: CanonicalForm) -> CanonicalForm:
    """Map every canonical-form element, drop zeros, keep the division-minimal ones."""
    if cf.n != phi.n:
        raise AmbientMismatch(f"canonical form has n={cf.n}, map has n={phi.n}")
    images = [hom_apply_pm(phi, g) for g in cf]
    return CanonicalForm(phi.m, tuple(minimal_elements(g for g in images if g is not ZERO)))


def format_flips(flips: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(flips)) + "}"


def format_decomposition(d: Decomposition) -> str:
    by_target = sorted(range(1, d.n + 1), key=d.perm)
    arrows = " ".join(f"{i}->{d.perm(i)}" for i in by_target)
    return (
        f"delta: flips {format_flips(d.flips)}\n"
        f"lambda: {arrows}\n"
        f"omega: m={d.restr[0]} m'={d.restr[1]}\n"
    )

